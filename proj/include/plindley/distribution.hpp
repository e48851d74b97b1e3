#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace plindley {

/// Shape α > 0 and rate β > 0 of the power Lindley distribution PL(α, β).
/// PL(1, β) is the Lindley distribution.
class PLParams {
 public:
  PLParams(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  friend bool operator==(const PLParams&, const PLParams&) = default;

 private:
  double alpha_;
  double beta_;
};

/// Shape–scale Weibull: cdf 1 - exp(-(x/scale)^shape).
class WeibullParams {
 public:
  WeibullParams(double shape, double scale);

  double shape() const noexcept { return shape_; }
  double scale() const noexcept { return scale_; }

  friend bool operator==(const WeibullParams&, const WeibullParams&) = default;

 private:
  double shape_;
  double scale_;
};

/// Deterministic 64-bit seeded generator. Not safe to share across threads.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on the open interval (0, 1), 53 random bits.
  double uniform();
  double exponential(double rate);

 private:
  std::mt19937_64 engine_;
};

// Power Lindley. Densities are 0 for x <= 0 (also at 0 when α < 1, where the
// density is unbounded; use log_pdf near the origin).
double pdf(const PLParams& p, double x);
double log_pdf(const PLParams& p, double x);
double survival(const PLParams& p, double x);
double log_survival(const PLParams& p, double x);
double cdf(const PLParams& p, double x);
double hazard(const PLParams& p, double x);
double quantile(const PLParams& p, double u);

/// m_k = k Γ(k/α) [α(β+1) + k] / (α² β^{k/α} (β+1)), k >= 1.
/// Throws OverflowError when m_k is not representable; log_moment still is.
double moment(const PLParams& p, int k);
double log_moment(const PLParams& p, int k);
double mean(const PLParams& p);
double variance(const PLParams& p);

/// Draws Lindley(β) as the exponential / two-stage Erlang mixture with
/// weight β/(β+1) and returns draw^{1/α}.
std::vector<double> sample(const PLParams& p, std::size_t n, RandomSource& rng);
double sample_one(const PLParams& p, RandomSource& rng);

// Weibull baseline.
double pdf(const WeibullParams& w, double x);
double cdf(const WeibullParams& w, double x);
double survival(const WeibullParams& w, double x);
double quantile(const WeibullParams& w, double u);
double mean(const WeibullParams& w);
double median(const WeibullParams& w);

}  // namespace plindley
