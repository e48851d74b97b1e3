#pragma once

#include <complex>
#include <optional>
#include <string>

#include "plindley/distribution.hpp"

namespace plindley::analysis {

enum class CfClass { Entire, AnalyticOnInterval, NotAnalyticAtZero };

std::string to_string(CfClass c);

/// Open interval (lo, hi) on which E[e^{tX}] is finite; lo/hi may be ±inf.
struct MgfInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool empty = true;
};

struct AnalyticityReport {
  CfClass cf_class = CfClass::NotAnalyticAtZero;
  std::optional<double> order;  // ρ, present iff entire
  std::optional<double> type;   // σ, present iff entire
  MgfInterval mgf;
  bool determinate = true;
  bool heavy_tailed = false;
};

/// Characteristic-function class, MGF domain and moment determinacy of
/// PL(α, β):
///   α > 1     entire, ρ = α/(α-1), σ = ((α-1)/α)(αβ)^{-1/(α-1)}, MGF on ℝ
///   α = 1     analytic on (-β, β), MGF on (-β, β)
///   α < 1     not analytic at 0, no MGF, heavy tailed
/// The distribution is moment-indeterminate iff α < 1/2.
AnalyticityReport analyze(const PLParams& p);

/// φ(t) = β²(β+1-it) / ((β+1)(β-it)²) of Lindley(β).
std::complex<double> lindley_cf(double beta, double t);

/// L_f(x) = -x f'(x)/f(x) = (1-α) - α x^α/(1+x^α) + αβ x^α.
double lin_function(const PLParams& p, double x);
/// L_f'(x) = α² x^{α-1} (β - (1+x^α)^{-2}).
double lin_derivative(const PLParams& p, double x);

/// Coefficient of k ln k in a least-squares fit of ln m_k on {1, k ln k, k}
/// over k in [K/2, K]. Tends to 1/α. Requires K >= 10.
double moment_growth_exponent(const PLParams& p, int max_order);

/// max over 1 <= k <= max_order of m_{k+1} / (m_k k²), from log moments,
/// together with the k attaining it.
struct RatioScan {
  double max_ratio = 0.0;
  int argmax = 0;
};
RatioScan moment_ratio_scan(const PLParams& p, int max_order);

}  // namespace plindley::analysis
