#pragma once

#include <vector>

#include "plindley/distribution.hpp"
#include "plindley/numerics.hpp"

namespace plindley::stieltjes {

enum class Family { H1, H2, H3 };

// Argument of the sine in H2. The vanishing-moment identity holds for
// tan(πγ); tan(πα) is kept only as a negative control.
enum class H2Argument { TanPiGamma, TanPiAlpha };

/// Unnormalized perturbation of the PL(α, β) density, α < 1/2:
///   H1 ∝ x^{1-α}/(1+x^α) e^{-βx^α} sin(2βx^α tan πα)
///   H2 ∝ x^{1-α}/(1+x^α) e^{βx^α - b x^γ} sin(b x^γ tan πγ),  α < γ < 1/2
///   H3 ∝ [sin(βx^α tan πα - πα) + x^α sin(βx^α tan πα - 2πα)] / (1+x^α)
/// All vanish for x <= 0.
class PerturbationSpec {
 public:
  /// `b` and `gamma` only apply to H2; gamma <= 0 selects the midpoint
  /// (α + 1/2)/2. Throws DomainError for α >= 1/2 or bad H2 parameters.
  PerturbationSpec(Family which, PLParams params, double b = 1.0, double gamma = 0.0,
                   H2Argument h2_argument = H2Argument::TanPiGamma);

  Family which() const noexcept { return which_; }
  const PLParams& params() const noexcept { return params_; }
  double b() const noexcept { return b_; }
  double gamma() const noexcept { return gamma_; }
  H2Argument h2_argument() const noexcept { return h2_argument_; }

  /// ln of the non-oscillating magnitude bound at x > 0.
  double log_envelope(double x) const;
  /// Oscillating factor at x > 0 (the full value for H3).
  double oscillation(double x) const;
  double unnormalized(double x) const;

  /// Exponent s of the substitution u = x^s that turns x^k f H into a
  /// damped sinusoid in u (α for H1/H3, γ for H2).
  double substitution_exponent() const;
  /// Sign-change structure of that sinusoid in u.
  numerics::Oscillation oscillation_in_substituted() const;
  /// lim |H| at 0⁺ and at ∞ of the unnormalized function.
  double boundary_sup() const;

 private:
  Family which_;
  PLParams params_;
  double b_;
  double gamma_;
  H2Argument h2_argument_;
};

/// A perturbation scaled to sup |H| = 1 - 1e-9.
class Perturbation {
 public:
  const PerturbationSpec& spec() const noexcept { return spec_; }
  double constant() const noexcept { return constant_; }
  double log_constant() const noexcept { return log_constant_; }

  /// Normalized value, in [-1, 1]; 0 for x <= 0.
  double operator()(double x) const;

 private:
  friend Perturbation normalize(const PerturbationSpec& spec);
  Perturbation(PerturbationSpec spec, double log_constant);

  PerturbationSpec spec_;
  double log_constant_;
  double constant_;
};

/// Estimates sup_{x>0} |H| on a 10^6-point log grid over [1e-12, X_max]
/// (X_max where the envelope drops below 1e-300), refined by golden
/// section, combined with the boundary limits; sets M = (1 - 1e-9)/sup.
/// Throws NormalizationError when the sup is not usable.
Perturbation normalize(const PerturbationSpec& spec);

/// Member f_ε = f (1 + ε H) of the Stieltjes class, |ε| <= 1.
class StieltjesMember {
 public:
  StieltjesMember(Perturbation h, double epsilon);

  const Perturbation& perturbation() const noexcept { return h_; }
  double epsilon() const noexcept { return epsilon_; }
  double density(double x) const;

 private:
  Perturbation h_;
  double epsilon_;
};

struct MomentResidual {
  int k = 0;
  double residual = 0.0;     // |∫ x^k f H dx| / m_k  (m_0 = 1)
  double error_bound = 0.0;  // quadrature error estimate / m_k
  bool converged = true;     // false when the quadrature failed
};

/// Residuals of the vanishing moments for k = 0..k_max, integrated in the
/// substituted variable u = x^s with panels aligned to the sign changes.
std::vector<MomentResidual> verify_vanishing_moments(const Perturbation& h, int k_max,
                                                     const numerics::QuadratureSpec& spec = {});

/// ∫_0^∞ x^{p-1} e^{-qx} sin(qx tan t) dx = Γ(p) q^{-p} cos^p t sin(pt).
double gr_sine_integral(double p, double q, double t);
/// Cosine analogue, with cos(pt).
double gr_cosine_integral(double p, double q, double t);

}  // namespace plindley::stieltjes
