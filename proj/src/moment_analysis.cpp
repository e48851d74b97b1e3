#include "plindley/moment_analysis.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "plindley/errors.hpp"

namespace plindley::analysis {

std::string to_string(CfClass c) {
  switch (c) {
    case CfClass::Entire:
      return "entire";
    case CfClass::AnalyticOnInterval:
      return "analytic-on-interval";
    case CfClass::NotAnalyticAtZero:
      return "not-analytic-at-0";
  }
  return "unknown";
}

AnalyticityReport analyze(const PLParams& p) {
  const double a = p.alpha();
  const double b = p.beta();
  constexpr double kInf = std::numeric_limits<double>::infinity();

  AnalyticityReport r;
  if (a > 1.0) {
    r.cf_class = CfClass::Entire;
    r.order = a / (a - 1.0);
    r.type = (a - 1.0) / a * std::pow(a * b, -1.0 / (a - 1.0));
    r.mgf = {-kInf, kInf, false};
  } else if (a == 1.0) {
    r.cf_class = CfClass::AnalyticOnInterval;
    r.mgf = {-b, b, false};
  } else {
    r.cf_class = CfClass::NotAnalyticAtZero;
    r.mgf = {};
    r.heavy_tailed = true;
  }
  r.determinate = !(a < 0.5);
  return r;
}

std::complex<double> lindley_cf(double beta, double t) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw DomainError("lindley_cf requires beta > 0");
  }
  using C = std::complex<double>;
  const C it{0.0, t};
  const C denom = beta - it;
  return beta * beta * (beta + 1.0 - it) / ((beta + 1.0) * denom * denom);
}

double lin_function(const PLParams& p, double x) {
  if (!(x > 0.0)) {
    throw DomainError("lin_function requires x > 0");
  }
  const double a = p.alpha();
  const double y = std::pow(x, a);
  return (1.0 - a) - a * y / (1.0 + y) + a * p.beta() * y;
}

double lin_derivative(const PLParams& p, double x) {
  if (!(x > 0.0)) {
    throw DomainError("lin_derivative requires x > 0");
  }
  const double a = p.alpha();
  const double y = std::pow(x, a);
  const double s = 1.0 + y;
  // β - s^{-2} = (β - 1) + y(2 + y)/s², exact near y = 0 when β = 1.
  return a * a * std::pow(x, a - 1.0) * ((p.beta() - 1.0) + y * (2.0 + y) / (s * s));
}

double moment_growth_exponent(const PLParams& p, int max_order) {
  if (max_order < 10) {
    throw DomainError("moment_growth_exponent requires K >= 10");
  }
  // Normal equations for y = c0 + c1 (k ln k) + c2 k, centred for conditioning.
  const int lo = max_order / 2;
  const int n = max_order - lo + 1;
  double mu_u = 0.0;
  double mu_v = 0.0;
  double mu_y = 0.0;
  for (int k = lo; k <= max_order; ++k) {
    const double kd = k;
    mu_u += kd * std::log(kd);
    mu_v += kd;
    mu_y += log_moment(p, k);
  }
  mu_u /= n;
  mu_v /= n;
  mu_y /= n;
  double suu = 0.0;
  double svv = 0.0;
  double suv = 0.0;
  double suy = 0.0;
  double svy = 0.0;
  for (int k = lo; k <= max_order; ++k) {
    const double kd = k;
    const double u = kd * std::log(kd) - mu_u;
    const double v = kd - mu_v;
    const double y = log_moment(p, k) - mu_y;
    suu += u * u;
    svv += v * v;
    suv += u * v;
    suy += u * y;
    svy += v * y;
  }
  return (suy * svv - svy * suv) / (suu * svv - suv * suv);
}

RatioScan moment_ratio_scan(const PLParams& p, int max_order) {
  if (max_order < 1) {
    throw DomainError("moment_ratio_scan requires max_order >= 1");
  }
  RatioScan scan;
  for (int k = 1; k <= max_order; ++k) {
    const double kd = k;
    const double ratio = std::exp(log_moment(p, k + 1) - log_moment(p, k) - 2.0 * std::log(kd));
    if (ratio > scan.max_ratio) {
      scan.max_ratio = ratio;
      scan.argmax = k;
    }
  }
  return scan;
}

}  // namespace plindley::analysis
