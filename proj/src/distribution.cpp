#include "plindley/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "plindley/errors.hpp"
#include "plindley/numerics.hpp"

namespace plindley {

namespace {

bool positive_finite(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

PLParams::PLParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!positive_finite(alpha) || !positive_finite(beta)) {
    throw DomainError("power Lindley parameters must be finite and positive");
  }
}

WeibullParams::WeibullParams(double shape, double scale) : shape_(shape), scale_(scale) {
  if (!positive_finite(shape) || !positive_finite(scale)) {
    throw DomainError("Weibull parameters must be finite and positive");
  }
}

double RandomSource::uniform() {
  // (k + 0.5) / 2^53 never hits 0 or 1.
  const auto bits = engine_() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double RandomSource::exponential(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw DomainError("exponential rate must be positive");
  }
  return -std::log(uniform()) / rate;
}

double pdf(const PLParams& p, double x) {
  if (!(x > 0.0)) {
    return 0.0;
  }
  const double a = p.alpha();
  const double b = p.beta();
  const double y = std::pow(x, a);
  return a * b * b / (b + 1.0) * (1.0 + y) * std::pow(x, a - 1.0) * std::exp(-b * y);
}

double log_pdf(const PLParams& p, double x) {
  if (!(x > 0.0)) {
    throw DomainError("log_pdf requires x > 0");
  }
  const double a = p.alpha();
  const double b = p.beta();
  const double lx = std::log(x);
  const double y = std::exp(a * lx);
  // log1p(y) = a ln x + log1p(1/y) for huge y keeps full precision
  const double log1p_y = y > 1.0 ? a * lx + std::log1p(1.0 / y) : std::log1p(y);
  return std::log(a) + 2.0 * std::log(b) - std::log1p(b) + log1p_y + (a - 1.0) * lx - b * y;
}

double survival(const PLParams& p, double x) {
  if (!(x > 0.0)) {
    return 1.0;
  }
  const double b = p.beta();
  const double y = std::pow(x, p.alpha());
  if (b * y < 0.5) {
    // Near 1 the product form is not monotone at rounding level.
    return 1.0 - cdf(p, x);
  }
  return (1.0 + b * y / (b + 1.0)) * std::exp(-b * y);
}

double log_survival(const PLParams& p, double x) {
  if (!(x > 0.0)) {
    return 0.0;
  }
  const double b = p.beta();
  const double y = std::pow(x, p.alpha());
  return std::log1p(b * y / (b + 1.0)) - b * y;
}

double cdf(const PLParams& p, double x) {
  if (!(x > 0.0)) {
    return 0.0;
  }
  const double b = p.beta();
  const double y = std::pow(x, p.alpha());
  // 1 - (1 + c y) e^{-b y} without cancellation at small y
  return -std::expm1(-b * y) - b * y / (b + 1.0) * std::exp(-b * y);
}

double hazard(const PLParams& p, double x) {
  if (!(x > 0.0)) {
    throw DomainError("hazard requires x > 0");
  }
  // The e^{-βx^α} factors cancel: h = αβ²(1+y)x^{α-1} / (β+1+βy).
  const double a = p.alpha();
  const double b = p.beta();
  const double lx = std::log(x);
  const double y = std::exp(a * lx);
  return std::exp(std::log(a) + 2.0 * std::log(b) + std::log1p(y) + (a - 1.0) * lx -
                  std::log(b + 1.0 + b * y));
}

double quantile(const PLParams& p, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw DomainError("quantile requires 0 < u < 1");
  }
  const double target = 1.0 - u;
  auto excess = [&](double x) { return survival(p, x) - target; };

  // Geometric search for [lo, 2 lo] with S(lo) > 1-u >= S(2 lo).
  double lo = 1.0;
  if (excess(lo) > 0.0) {
    while (excess(2.0 * lo) > 0.0) {
      lo *= 2.0;
      if (!std::isfinite(2.0 * lo)) {
        throw DomainError("quantile bracket search overflowed");
      }
    }
  } else {
    while (!(excess(lo) > 0.0)) {
      lo *= 0.5;
      if (lo == 0.0) {
        return 0.0;
      }
    }
  }
  const double hi = 2.0 * lo;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  const double tol = std::max(1e-12 * std::min(1.0, hi), 4.0 * kEps * hi);
  return numerics::find_root(excess, {lo, hi, tol});
}

double log_moment(const PLParams& p, int k) {
  if (k < 1) {
    throw DomainError("moment order must be >= 1");
  }
  const double a = p.alpha();
  const double b = p.beta();
  const double kd = static_cast<double>(k);
  return std::log(kd) + numerics::log_gamma(kd / a) + std::log(a * (b + 1.0) + kd) -
         2.0 * std::log(a) - (kd / a) * std::log(b) - std::log1p(b);
}

double moment(const PLParams& p, int k) {
  const double lm = log_moment(p, k);
  const double m = std::exp(lm);
  if (!std::isfinite(m)) {
    throw OverflowError("moment m_" + std::to_string(k) +
                        " overflows double precision; use log_moment");
  }
  return m;
}

double mean(const PLParams& p) { return moment(p, 1); }

double variance(const PLParams& p) {
  const double m1 = moment(p, 1);
  return moment(p, 2) - m1 * m1;
}

double sample_one(const PLParams& p, RandomSource& rng) {
  const double b = p.beta();
  double lindley = rng.exponential(b);
  if (rng.uniform() >= b / (b + 1.0)) {
    lindley += rng.exponential(b);
  }
  return std::pow(lindley, 1.0 / p.alpha());
}

std::vector<double> sample(const PLParams& p, std::size_t n, RandomSource& rng) {
  if (n == 0) {
    throw DomainError("sample size must be >= 1");
  }
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(sample_one(p, rng));
  }
  return out;
}

double pdf(const WeibullParams& w, double x) {
  if (!(x > 0.0)) {
    return 0.0;
  }
  const double k = w.shape();
  const double z = x / w.scale();
  return k / w.scale() * std::pow(z, k - 1.0) * std::exp(-std::pow(z, k));
}

double survival(const WeibullParams& w, double x) {
  if (!(x > 0.0)) {
    return 1.0;
  }
  return std::exp(-std::pow(x / w.scale(), w.shape()));
}

double cdf(const WeibullParams& w, double x) {
  if (!(x > 0.0)) {
    return 0.0;
  }
  return -std::expm1(-std::pow(x / w.scale(), w.shape()));
}

double quantile(const WeibullParams& w, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw DomainError("quantile requires 0 < u < 1");
  }
  return w.scale() * std::pow(-std::log1p(-u), 1.0 / w.shape());
}

double mean(const WeibullParams& w) {
  return w.scale() * std::exp(numerics::log_gamma(1.0 + 1.0 / w.shape()));
}

double median(const WeibullParams& w) {
  return w.scale() * std::pow(std::numbers::ln2, 1.0 / w.shape());
}

}  // namespace plindley
