#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "gtest/gtest.h"
#include "plindley/distribution.hpp"
#include "plindley/errors.hpp"
#include "plindley/numerics.hpp"

namespace plindley {
namespace {

const double kAlphas[] = {0.25, 0.5, 1.0, 2.0};
const double kBetas[] = {0.5, 1.0, 3.65};

// Two-sample Kolmogorov–Smirnov statistic.
double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / a.size() -
                              static_cast<double>(j) / b.size()));
  }
  return d;
}

double ks_critical_1pct(std::size_t n, std::size_t m) {
  return 1.628 * std::sqrt(static_cast<double>(n + m) / (static_cast<double>(n) * m));
}

TEST(Params, Validation) {
  EXPECT_THROW(PLParams(0.0, 1.0), DomainError);
  EXPECT_THROW(PLParams(1.0, -1.0), DomainError);
  EXPECT_THROW(PLParams(std::nan(""), 1.0), DomainError);
  EXPECT_THROW(PLParams(std::numeric_limits<double>::infinity(), 1.0), DomainError);
  EXPECT_THROW(WeibullParams(1.0, 0.0), DomainError);
  EXPECT_THROW(WeibullParams(-1.0, 1.0), DomainError);
  EXPECT_NO_THROW(PLParams(0.1, 10.0));
}

TEST(Pdf, Examples) {
  EXPECT_NEAR(pdf(PLParams(1, 1), 1.0), std::exp(-1.0), 1e-15);
  EXPECT_EQ(pdf(PLParams(1, 1), -1.0), 0.0);
  EXPECT_EQ(pdf(PLParams(0.3, 2), -1.0), 0.0);
  EXPECT_EQ(pdf(PLParams(0.3, 2), 0.0), 0.0);
}

TEST(Pdf, NormalizationGrid) {
  for (double a : kAlphas) {
    for (double b : kBetas) {
      const PLParams p(a, b);
      const auto r = numerics::integrate_semi_infinite([&](double x) { return pdf(p, x); });
      EXPECT_NEAR(r.value, 1.0, 1e-9) << "alpha=" << a << " beta=" << b;
    }
  }
}

TEST(Pdf, NormalizationAtNocFit) {
  const PLParams p(0.275, 3.6502);
  const auto r = numerics::integrate_semi_infinite([&](double x) { return pdf(p, x); });
  EXPECT_NEAR(r.value, 1.0, 1e-9);
  EXPECT_GT(pdf(p, 1.0), 0.0);
}

TEST(LogPdf, Examples) {
  EXPECT_NEAR(log_pdf(PLParams(1, 1), 1.0), -1.0, 1e-15);
  // ln 2501 + ln 50 - 2500 for PL(2, 1), from mpmath at 40 digits.
  EXPECT_NEAR(log_pdf(PLParams(2, 1), 50.0), -2488.2635310636942349, 1e-11);
  EXPECT_EQ(pdf(PLParams(2, 1), 50.0), 0.0);
  EXPECT_THROW(log_pdf(PLParams(1, 1), 0.0), DomainError);
  EXPECT_THROW(log_pdf(PLParams(1, 1), -2.0), DomainError);
}

TEST(LogPdf, AgreesWithPdf) {
  for (double a : kAlphas) {
    for (double b : kBetas) {
      const PLParams p(a, b);
      for (double x : {0.1, 1.0, 5.0}) {
        const double f = pdf(p, x);
        EXPECT_NEAR(std::exp(log_pdf(p, x)), f, 1e-12 * f) << a << " " << b << " " << x;
      }
    }
  }
}

TEST(Survival, Examples) {
  const double s11 = 1.5 * std::exp(-1.0);
  EXPECT_EQ(survival(PLParams(0.7, 2), 0.0), 1.0);
  EXPECT_EQ(survival(PLParams(0.7, 2), -4.0), 1.0);
  EXPECT_NEAR(survival(PLParams(1, 1), 1.0), s11, 1e-15);
  EXPECT_NEAR(survival(PLParams(2, 1), 1.0), s11, 1e-15);
}

TEST(Survival, MonotoneNonincreasing) {
  for (double a : kAlphas) {
    for (double b : kBetas) {
      const PLParams p(a, b);
      double prev = 1.0;
      for (double lx = -8.0; lx <= 4.0; lx += 0.05) {
        const double s = survival(p, std::pow(10.0, lx));
        EXPECT_LE(s, prev);
        prev = s;
      }
    }
  }
}

TEST(Survival, DerivativeIsMinusPdf) {
  for (double a : kAlphas) {
    for (double b : kBetas) {
      const PLParams p(a, b);
      for (double x : {0.5, 1.0, 2.0}) {
        const double h = 1e-5 * x;
        const double fd = -(survival(p, x + h) - survival(p, x - h)) / (2.0 * h);
        EXPECT_NEAR(fd, pdf(p, x), 1e-6 * pdf(p, x)) << a << " " << b << " " << x;
      }
    }
  }
}

TEST(Cdf, Examples) {
  EXPECT_EQ(cdf(PLParams(1, 1), 0.0), 0.0);
  EXPECT_NEAR(cdf(PLParams(1, 1), 1.0), 1.0 - 1.5 * std::exp(-1.0), 1e-15);
  EXPECT_NEAR(cdf(PLParams(1, 1), 760.0), 1.0, 1e-12);
  EXPECT_NEAR(cdf(PLParams(0.5, 2), 400.0 * 400.0), 1.0, 1e-12);
  // Complement form keeps precision for small x.
  const PLParams p(2, 1);
  const double x = 1e-6;
  EXPECT_NEAR(cdf(p, x), 0.5 * x * x, 1e-6 * 0.5 * x * x);
}

TEST(Hazard, Examples) {
  EXPECT_NEAR(hazard(PLParams(1, 1), 1.0), 2.0 / 3.0, 1e-14);
  EXPECT_THROW(hazard(PLParams(1, 1), 0.0), DomainError);
  for (double b : kBetas) {
    // β²(1+x)/(β+1+βx) → β.
    EXPECT_NEAR(hazard(PLParams(1, b), 1e8), b, 1e-7 * b);
    EXPECT_NEAR(hazard(PLParams(1, b), 2000.0 / b), b * b * (1 + 2000.0 / b) / (b + 1 + 2000.0),
                1e-10);
  }
  for (double a : kAlphas) {
    for (double b : kBetas) {
      for (double lx = -6.0; lx <= 6.0; lx += 0.5) {
        const double h = hazard(PLParams(a, b), std::pow(10.0, lx));
        EXPECT_GE(h, 0.0);
        EXPECT_TRUE(std::isfinite(h));
      }
    }
  }
}

TEST(Quantile, PublishedMedians) {
  EXPECT_NEAR(quantile(PLParams(1.1913, 1.6979), 0.5), 0.6475, 5e-4);
  EXPECT_NEAR(quantile(PLParams(0.2750, 3.6502), 0.5), 0.0053, 2e-4);
}

TEST(Quantile, RoundTrip) {
  for (double a : kAlphas) {
    for (double b : kBetas) {
      const PLParams p(a, b);
      for (double u : {0.01, 0.5, 0.99}) {
        EXPECT_NEAR(cdf(p, quantile(p, u)), u, 1e-9) << a << " " << b << " " << u;
      }
    }
  }
}

TEST(Quantile, Domain) {
  const PLParams p(1, 1);
  EXPECT_THROW(quantile(p, 0.0), DomainError);
  EXPECT_THROW(quantile(p, 1.0), DomainError);
  EXPECT_THROW(quantile(p, -0.2), DomainError);
  EXPECT_THROW(quantile(p, std::nan("")), DomainError);
}

TEST(Moment, Examples) {
  EXPECT_NEAR(moment(PLParams(1, 1), 1), 1.5, 1e-14);
  EXPECT_NEAR(moment(PLParams(1, 1), 2), 4.0, 1e-13);
  EXPECT_NEAR(moment(PLParams(1.1913, 1.6979), 1), 0.7923, 1e-3);
  EXPECT_NEAR(mean(PLParams(0.2750, 3.6502)), 0.2265, 1e-3);
  EXPECT_THROW(moment(PLParams(1, 1), 0), DomainError);
}

TEST(Moment, LindleyClosedForm) {
  // At α = 1: m_k = k! (β + k + 1) / (β^k (β + 1)).
  for (double b : kBetas) {
    double fact = 1.0;
    for (int k = 1; k <= 8; ++k) {
      fact *= k;
      const double expected = fact * (b + k + 1.0) / (std::pow(b, k) * (b + 1.0));
      EXPECT_NEAR(moment(PLParams(1, b), k), expected, 1e-12 * expected);
    }
  }
}

TEST(Moment, MatchesQuadrature) {
  for (double a : kAlphas) {
    for (double b : kBetas) {
      const PLParams p(a, b);
      for (int k = 1; k <= 6; ++k) {
        const auto r = numerics::integrate_semi_infinite(
            [&](double x) { return std::pow(x, k) * pdf(p, x); });
        const double m = moment(p, k);
        EXPECT_NEAR(r.value, m, 1e-6 * m) << a << " " << b << " k=" << k;
      }
    }
  }
}

TEST(Moment, OverflowDirectsToLogForm) {
  const PLParams p(0.1, 1.0);
  EXPECT_THROW(moment(p, 200), OverflowError);
  const double lm = log_moment(p, 200);
  EXPECT_TRUE(std::isfinite(lm));
  EXPECT_GT(lm, std::log(std::numeric_limits<double>::max()));
}

TEST(Moment, VarianceExamples) {
  EXPECT_NEAR(variance(PLParams(1, 1)), 1.75, 1e-13);
  for (double a : kAlphas) {
    for (double b : kBetas) {
      EXPECT_GT(variance(PLParams(a, b)), 0.0);
    }
  }
}

TEST(Weibull, Examples) {
  EXPECT_NEAR(mean(WeibullParams(1, 1)), 1.0, 1e-15);
  EXPECT_NEAR(mean(WeibullParams(1.3969, 1.0044)), 0.9158, 0.01);
  EXPECT_NEAR(mean(WeibullParams(0.9499, 1.0104)), 1.0341, 0.01);
  EXPECT_NEAR(median(WeibullParams(2, 3)), 3.0 * std::sqrt(std::log(2.0)), 1e-15);
  EXPECT_NEAR(cdf(WeibullParams(2, 3), median(WeibullParams(2, 3))), 0.5, 1e-15);
  EXPECT_NEAR(pdf(WeibullParams(1, 2), 1.0), 0.5 * std::exp(-0.5), 1e-16);
  EXPECT_EQ(pdf(WeibullParams(1, 2), -1.0), 0.0);
  EXPECT_EQ(cdf(WeibullParams(1, 2), 0.0), 0.0);
  EXPECT_NEAR(quantile(WeibullParams(1.5, 0.8), 0.3), 0.8 * std::pow(-std::log(0.7), 1 / 1.5),
              1e-15);
}

TEST(Weibull, Normalization) {
  for (double k : {0.5, 1.0, 2.5}) {
    const WeibullParams w(k, 1.3);
    const auto r = numerics::integrate_semi_infinite([&](double x) { return pdf(w, x); });
    EXPECT_NEAR(r.value, 1.0, 1e-9);
  }
}

TEST(Sample, RejectsEmpty) {
  RandomSource rng(1);
  EXPECT_THROW(sample(PLParams(1, 1), 0, rng), DomainError);
  const auto one = sample(PLParams(1, 1), 1, rng);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_GT(one[0], 0.0);
}

TEST(Sample, SeedDeterminism) {
  RandomSource a(42);
  RandomSource b(42);
  RandomSource c(43);
  const PLParams p(0.7, 2.0);
  const auto xa = sample(p, 1000, a);
  const auto xb = sample(p, 1000, b);
  const auto xc = sample(p, 1000, c);
  EXPECT_EQ(xa, xb);
  EXPECT_NE(xa, xc);
  for (double x : xa) {
    EXPECT_GT(x, 0.0);
  }
}

TEST(Sample, MeanWithinCltBand) {
  const PLParams p(1.1913, 1.6979);
  RandomSource rng(20240611);
  const std::size_t n = 1'000'000;
  const auto xs = sample(p, n, rng);
  double s = 0.0;
  for (double x : xs) s += x;
  const double band = 3.0 * std::sqrt(variance(p) / n);
  EXPECT_NEAR(s / n, mean(p), band);
}

TEST(Sample, PowerTransformLaw) {
  // Mixture draws vs. quantile inversion of the closed-form survival.
  const std::size_t n = 100'000;
  for (auto [a, b] : {std::pair{1.1913, 1.6979}, {0.3, 1.0}, {2.0, 0.5}}) {
    const PLParams p(a, b);
    RandomSource rng(7);
    const auto mixture = sample(p, n, rng);
    RandomSource rng2(8);
    std::vector<double> inverted(n);
    for (auto& x : inverted) x = quantile(p, rng2.uniform());
    EXPECT_LT(ks_statistic(mixture, inverted), ks_critical_1pct(n, n)) << a << " " << b;
  }
}

TEST(RandomSource, UniformOpenInterval) {
  RandomSource rng(3);
  double lo = 1.0;
  double hi = 0.0;
  double s = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    s += u;
  }
  EXPECT_GT(lo, 0.0);
  EXPECT_LT(hi, 1.0);
  EXPECT_NEAR(s / 100000, 0.5, 0.005);
  EXPECT_THROW(rng.exponential(0.0), DomainError);
}

}  // namespace
}  // namespace plindley
