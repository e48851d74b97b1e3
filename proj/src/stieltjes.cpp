#include "plindley/stieltjes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "plindley/errors.hpp"

namespace plindley::stieltjes {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeflation = 1.0 - 1e-9;
constexpr double kGridLo = 1e-12;
constexpr int kGridPoints = 1'000'000;
const double kLogEnvelopeFloor = std::log(1e-300);

double log_abs_unnormalized(const PerturbationSpec& s, double x) {
  const double osc = std::fabs(s.oscillation(x));
  if (osc == 0.0) {
    return -std::numeric_limits<double>::infinity();
  }
  return s.log_envelope(x) + std::log(osc);
}

// Largest x worth scanning: first power of two past the envelope peak where
// the envelope has dropped below 1e-300.
double scan_limit(const PerturbationSpec& s) {
  if (s.which() == Family::H3) {
    return 1e300;
  }
  double prev = s.log_envelope(1.0);
  for (int j = 1; j < 1000; ++j) {
    const double x = std::ldexp(1.0, j);
    const double cur = s.log_envelope(x);
    if (cur < kLogEnvelopeFloor && cur < prev) {
      return x;
    }
    prev = cur;
  }
  return 1e300;
}

}  // namespace

PerturbationSpec::PerturbationSpec(Family which, PLParams params, double b, double gamma,
                                   H2Argument h2_argument)
    : which_(which), params_(params), b_(b), gamma_(gamma), h2_argument_(h2_argument) {
  const double a = params_.alpha();
  if (!(a < 0.5)) {
    throw DomainError(
        "perturbations exist only for alpha < 1/2; PL(alpha, beta) is moment-determinate for "
        "alpha >= 1/2");
  }
  if (which_ == Family::H2) {
    if (!(gamma_ > 0.0)) {
      gamma_ = 0.5 * (a + 0.5);
    }
    if (!(b_ > 0.0) || !std::isfinite(b_)) {
      throw DomainError("H2 requires b > 0");
    }
    if (!(gamma_ > a && gamma_ < 0.5)) {
      throw DomainError("H2 requires alpha < gamma < 1/2");
    }
  }
}

double PerturbationSpec::log_envelope(double x) const {
  const double a = params_.alpha();
  const double beta = params_.beta();
  const double lx = std::log(x);
  const double y = std::exp(a * lx);
  switch (which_) {
    case Family::H1:
      return (1.0 - a) * lx - std::log1p(y) - beta * y;
    case Family::H2:
      return (1.0 - a) * lx - std::log1p(y) + beta * y - b_ * std::exp(gamma_ * lx);
    case Family::H3:
      return 0.0;
  }
  return 0.0;
}

double PerturbationSpec::oscillation(double x) const {
  const double a = params_.alpha();
  const double beta = params_.beta();
  const double y = std::pow(x, a);
  switch (which_) {
    case Family::H1:
      return std::sin(2.0 * beta * y * std::tan(kPi * a));
    case Family::H2: {
      const double t = h2_argument_ == H2Argument::TanPiGamma ? std::tan(kPi * gamma_)
                                                              : std::tan(kPi * a);
      return std::sin(b_ * std::pow(x, gamma_) * t);
    }
    case Family::H3: {
      const double theta = beta * y * std::tan(kPi * a);
      const double w = 1.0 / (1.0 + y);
      return w * std::sin(theta - kPi * a) + (y * w) * std::sin(theta - 2.0 * kPi * a);
    }
  }
  return 0.0;
}

double PerturbationSpec::unnormalized(double x) const {
  if (!(x > 0.0)) {
    return 0.0;
  }
  if (which_ == Family::H3) {
    return oscillation(x);
  }
  return std::exp(log_envelope(x)) * oscillation(x);
}

double PerturbationSpec::substitution_exponent() const {
  return which_ == Family::H2 ? gamma_ : params_.alpha();
}

numerics::Oscillation PerturbationSpec::oscillation_in_substituted() const {
  const double a = params_.alpha();
  const double beta = params_.beta();
  double omega = 0.0;
  double phase = 0.0;
  switch (which_) {
    case Family::H1:
      omega = 2.0 * beta * std::tan(kPi * a);
      break;
    case Family::H2:
      omega = b_ * (h2_argument_ == H2Argument::TanPiGamma ? std::tan(kPi * gamma_)
                                                           : std::tan(kPi * a));
      break;
    case Family::H3:
      // Zeros of the dominant x^α term.
      omega = beta * std::tan(kPi * a);
      phase = 2.0 * kPi * a;
      break;
  }
  return {2.0 * kPi / omega, phase / omega};
}

double PerturbationSpec::boundary_sup() const {
  if (which_ == Family::H3) {
    // |H3| -> sin(πα) at 0⁺; the amplitude sqrt(1 + y² + 2y cos πα)/(1+y)
    // tends to 1 as y -> ∞ while the phase sweeps every value.
    return std::max(std::sin(kPi * params_.alpha()), 1.0);
  }
  return 0.0;
}

Perturbation::Perturbation(PerturbationSpec spec, double log_constant)
    : spec_(std::move(spec)), log_constant_(log_constant), constant_(std::exp(log_constant)) {}

double Perturbation::operator()(double x) const {
  if (!(x > 0.0)) {
    return 0.0;
  }
  if (spec_.which() == Family::H3) {
    return constant_ * spec_.oscillation(x);
  }
  return std::exp(log_constant_ + spec_.log_envelope(x)) * spec_.oscillation(x);
}

Perturbation normalize(const PerturbationSpec& spec) {
  const double x_max = scan_limit(spec);
  const double log_lo = std::log(kGridLo);
  const double step = (std::log(x_max) - log_lo) / (kGridPoints - 1);

  double best_log = -std::numeric_limits<double>::infinity();
  int best_index = -1;
  for (int i = 0; i < kGridPoints; ++i) {
    const double v = log_abs_unnormalized(spec, std::exp(log_lo + step * i));
    if (v > best_log) {
      best_log = v;
      best_index = i;
    }
  }

  if (best_index >= 0 && std::isfinite(best_log)) {
    // Golden section on ln|H| over the neighbouring grid cells, in ln x.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = log_lo + step * std::max(best_index - 1, 0);
    double hi = log_lo + step * std::min(best_index + 1, kGridPoints - 1);
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = log_abs_unnormalized(spec, std::exp(c));
    double fd = log_abs_unnormalized(spec, std::exp(d));
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::fabs(hi)); ++it) {
      if (fc > fd) {
        hi = d;
        d = c;
        fd = fc;
        c = hi - inv_phi * (hi - lo);
        fc = log_abs_unnormalized(spec, std::exp(c));
      } else {
        lo = c;
        c = d;
        fc = fd;
        d = lo + inv_phi * (hi - lo);
        fd = log_abs_unnormalized(spec, std::exp(d));
      }
    }
    best_log = std::max({best_log, fc, fd});
  }

  const double boundary = spec.boundary_sup();
  if (boundary > 0.0) {
    best_log = std::max(best_log, std::log(boundary));
  }
  if (!std::isfinite(best_log)) {
    throw NormalizationError("perturbation vanishes numerically on the whole scan range");
  }
  const double log_constant = std::log(kDeflation) - best_log;
  const double constant = std::exp(log_constant);
  if (!(constant > 0.0) || !std::isfinite(constant)) {
    throw NormalizationError("normalization constant is not representable");
  }
  return Perturbation(spec, log_constant);
}

StieltjesMember::StieltjesMember(Perturbation h, double epsilon)
    : h_(std::move(h)), epsilon_(epsilon) {
  if (!(std::fabs(epsilon) <= 1.0)) {
    throw DomainError("Stieltjes class members require |epsilon| <= 1");
  }
}

double StieltjesMember::density(double x) const {
  const double f = pdf(h_.spec().params(), x);
  if (epsilon_ == 0.0) {
    return f;
  }
  return f * (1.0 + epsilon_ * h_(x));
}

std::vector<MomentResidual> verify_vanishing_moments(const Perturbation& h, int k_max,
                                                     const numerics::QuadratureSpec& spec) {
  if (k_max < 0) {
    throw DomainError("k_max must be >= 0");
  }
  const PLParams& params = h.spec().params();
  const double s = h.spec().substitution_exponent();
  const double inv_s = 1.0 / s;
  const auto oscillation = h.spec().oscillation_in_substituted();

  std::vector<MomentResidual> out;
  out.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) {
    // x = u^{1/s}, dx = (1/s) u^{1/s - 1} du
    auto integrand = [&](double u) {
      if (!(u > 0.0)) {
        return 0.0;
      }
      const double x = std::pow(u, inv_s);
      const double jacobian = inv_s * std::pow(u, inv_s - 1.0);
      const double hx = h(x);
      if (hx == 0.0) {
        return 0.0;
      }
      return std::pow(x, k) * pdf(params, x) * hx * jacobian;
    };
    const double m_k = k == 0 ? 1.0 : moment(params, k);
    MomentResidual r;
    r.k = k;
    try {
      const auto q = numerics::integrate_semi_infinite(integrand, spec, oscillation);
      r.residual = std::fabs(q.value) / m_k;
      r.error_bound = q.error / m_k;
    } catch (const AccuracyError& e) {
      r.residual = std::fabs(e.estimate()) / m_k;
      r.error_bound = e.error_bound() / m_k;
      r.converged = false;
    }
    out.push_back(r);
  }
  return out;
}

namespace {

void check_gr_arguments(double p, double q, double t) {
  if (!(p > 0.0) || !(q > 0.0) || !(std::fabs(t) < kPi / 2.0)) {
    throw DomainError("closed-form integral requires p, q > 0 and |t| < pi/2");
  }
}

double gr_magnitude(double p, double q, double t) {
  return std::exp(numerics::log_gamma(p) - p * std::log(q) + p * std::log(std::cos(t)));
}

}  // namespace

double gr_sine_integral(double p, double q, double t) {
  check_gr_arguments(p, q, t);
  return gr_magnitude(p, q, t) * std::sin(p * t);
}

double gr_cosine_integral(double p, double q, double t) {
  check_gr_arguments(p, q, t);
  return gr_magnitude(p, q, t) * std::cos(p * t);
}

}  // namespace plindley::stieltjes
