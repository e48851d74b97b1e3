#pragma once

#include <array>
#include <functional>
#include <optional>

namespace plindley::numerics {

/// ln Γ(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// Settings for the adaptive Gauss–Kronrod integrator.
struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 10000;
  // Semi-infinite integration stops once panel contributions have fallen
  // below this fraction of the largest panel seen.
  double tail_cutoff = 1e-300;

  void validate() const;
};

/// Zero-crossing structure of an oscillatory integrand: sign changes at
/// offset + j * period / 2.
struct Oscillation {
  double period = 0.0;
  double offset = 0.0;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;         // estimated absolute error
  double abs_integral = 0.0;  // estimate of ∫|f|
  int panels = 0;
  int subdivisions = 0;
  bool extrapolated = false;  // limit taken from the ε-algorithm
};

using Integrand = std::function<double(double)>;

/// Adaptive G7K15 on the finite interval [a, b].
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureSpec& spec = {});

/// ∫_0^∞ f(x) dx. The half-line is cut into panels (doubling widths, or
/// half-periods aligned to the sign changes when `oscillation` is given),
/// each integrated adaptively. Panel partial sums are extrapolated with
/// Wynn's ε-algorithm when the tail cutoff is not reached.
///
/// Throws AccuracyError (carrying the best estimate) when the error estimate
/// exceeds max(abs_tol, rel_tol * ∫|f|).
QuadratureResult integrate_semi_infinite(
    const Integrand& f, const QuadratureSpec& spec = {},
    std::optional<Oscillation> oscillation = std::nullopt);

struct RootBracket {
  double lo = 0.0;
  double hi = 0.0;
  double tol = 1e-12;
};

/// Bisection/secant hybrid. Returns a point whose bracket has width
/// <= tol (or an exact zero). Throws BracketError without a sign change and
/// DomainError for a malformed bracket.
double find_root(const std::function<double(double)>& f, RootBracket bracket);

struct MinimizeOptions {
  int max_iterations = 5000;
  double log_diameter_tol = 1e-10;
  double initial_step = 0.25;  // log units
};

struct MinimizeResult {
  std::array<double, 2> point{};
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;  // simplex diameter criterion met
  bool improved = false;   // best value strictly below the start value
};

/// Nelder–Mead over (ln a, ln b) for an objective of two positive reals.
/// Non-finite objective values are treated as +inf.
MinimizeResult minimize_2d(const std::function<double(double, double)>& objective,
                           std::array<double, 2> start, const MinimizeOptions& options = {});

}  // namespace plindley::numerics
