#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "gtest/gtest.h"
#include "plindley/distribution.hpp"
#include "plindley/errors.hpp"
#include "plindley/numerics.hpp"
#include "plindley/stieltjes.hpp"

namespace plindley::stieltjes {
namespace {

constexpr double kPi = std::numbers::pi;
const Family kFamilies[] = {Family::H1, Family::H2, Family::H3};
const std::pair<double, double> kParams[] = {{0.3, 1.0}, {0.25, 2.0}};

Perturbation make(Family w, double a, double b) {
  return normalize(PerturbationSpec(w, PLParams(a, b)));
}

// Independent sup estimate: dense log grid plus, for H3, a fine sweep of
// one phase period at very large x^α where the amplitude approaches 1.
double scan_sup(const Perturbation& h) {
  double best = 0.0;
  for (int i = 0; i <= 400000; ++i) {
    const double x = std::pow(10.0, -12.0 + 52.0 * i / 400000.0);
    best = std::max(best, std::fabs(h(x)));
  }
  if (h.spec().which() == Family::H3) {
    const double a = h.spec().params().alpha();
    const double omega = h.spec().params().beta() * std::tan(kPi * a);
    const double y0 = 1e12;
    for (int i = 0; i <= 200000; ++i) {
      const double y = y0 + (2.0 * kPi / omega) * i / 200000.0;
      best = std::max(best, std::fabs(h(std::pow(y, 1.0 / a))));
    }
  }
  return best;
}

TEST(PerturbationSpec, RejectsDeterminateShapes) {
  for (Family w : kFamilies) {
    EXPECT_THROW(PerturbationSpec(w, PLParams(0.5, 1.0)), DomainError);
    EXPECT_THROW(PerturbationSpec(w, PLParams(0.6, 1.0)), DomainError);
    EXPECT_THROW(PerturbationSpec(w, PLParams(2.0, 1.0)), DomainError);
    EXPECT_NO_THROW(PerturbationSpec(w, PLParams(0.49, 1.0)));
  }
}

TEST(PerturbationSpec, H2ParameterChecks) {
  const PLParams p(0.3, 1.0);
  EXPECT_THROW(PerturbationSpec(Family::H2, p, 0.0), DomainError);
  EXPECT_THROW(PerturbationSpec(Family::H2, p, 1.0, 0.3), DomainError);
  EXPECT_THROW(PerturbationSpec(Family::H2, p, 1.0, 0.5), DomainError);
  EXPECT_THROW(PerturbationSpec(Family::H2, p, 1.0, 0.2), DomainError);
  const PerturbationSpec s(Family::H2, p);
  EXPECT_DOUBLE_EQ(s.gamma(), 0.4);
  EXPECT_EQ(s.b(), 1.0);
}

TEST(Perturbation, VanishesOffSupport) {
  for (Family w : kFamilies) {
    const auto h = make(w, 0.3, 1.0);
    EXPECT_EQ(h(-3.0), 0.0);
    EXPECT_EQ(h(0.0), 0.0);
  }
  EXPECT_NEAR(make(Family::H1, 0.3, 1.0)(1e-14), 0.0, 1e-9);
}

TEST(Perturbation, SupIsOne) {
  for (auto [a, b] : kParams) {
    for (Family w : kFamilies) {
      const auto h = make(w, a, b);
      const double sup = scan_sup(h);
      EXPECT_LE(sup, 1.0) << static_cast<int>(w) << " " << a;
      EXPECT_GE(sup, 1.0 - 1e-6) << static_cast<int>(w) << " " << a;
    }
  }
}

TEST(Perturbation, H3ConstantAtLeastHalf) {
  for (auto [a, b] : kParams) {
    EXPECT_GE(make(Family::H3, a, b).constant(), 0.5);
  }
}

TEST(Perturbation, H2SupAttainedAtFiniteX) {
  const auto h = make(Family::H2, 0.3, 1.0);
  double best = 0.0;
  double argmax = 0.0;
  for (int i = 0; i <= 100000; ++i) {
    const double x = std::pow(10.0, -12.0 + 30.0 * i / 100000.0);
    if (std::fabs(h(x)) > best) {
      best = std::fabs(h(x));
      argmax = x;
    }
  }
  EXPECT_GT(argmax, 1e-6);
  EXPECT_LT(argmax, 1e6);
  EXPECT_LT(std::fabs(h(1e-12)), 1e-6);
  EXPECT_LT(std::fabs(h(1e18)), 1e-6);
}

TEST(Normalize, Idempotent) {
  for (Family w : kFamilies) {
    const PerturbationSpec spec(w, PLParams(0.3, 1.0));
    const auto h = normalize(spec);
    EXPECT_EQ(normalize(spec).constant(), h.constant());
    // Renormalizing the normalized function: (1 - 1e-9) / sup|H| ≈ 1.
    const double renormalized = (1.0 - 1e-9) / scan_sup(h);
    EXPECT_NEAR(renormalized, 1.0, 1e-6);
  }
}

TEST(StieltjesMember, EpsilonRange) {
  const auto h = make(Family::H1, 0.3, 1.0);
  EXPECT_THROW(StieltjesMember(h, 1.5), DomainError);
  EXPECT_THROW(StieltjesMember(h, -1.0001), DomainError);
  EXPECT_NO_THROW(StieltjesMember(h, -1.0));
}

TEST(StieltjesMember, ZeroEpsilonIsThePdf) {
  for (Family w : kFamilies) {
    const StieltjesMember m(make(w, 0.3, 1.0), 0.0);
    for (double x : {-1.0, 1e-8, 0.3, 1.0, 7.5, 100.0}) {
      EXPECT_EQ(m.density(x), pdf(PLParams(0.3, 1.0), x));
    }
  }
}

TEST(StieltjesMember, NonnegativeOnStressGrid) {
  for (auto [a, b] : kParams) {
    for (Family w : kFamilies) {
      const auto h = make(w, a, b);
      for (double eps : {-1.0, -0.5, 0.5, 1.0}) {
        const StieltjesMember m(h, eps);
        for (int i = 0; i <= 20000; ++i) {
          const double x = std::pow(10.0, -10.0 + 50.0 * i / 20000.0);
          ASSERT_GE(m.density(x), 0.0) << static_cast<int>(w) << " eps=" << eps << " x=" << x;
        }
      }
    }
  }
}

TEST(StieltjesMember, Distinct) {
  for (Family w : kFamilies) {
    const auto h = make(w, 0.3, 1.0);
    double argmax = 1.0;
    double best = 0.0;
    for (int i = 0; i <= 20000; ++i) {
      const double x = std::pow(10.0, -6.0 + 12.0 * i / 20000.0);
      if (std::fabs(h(x)) > best) {
        best = std::fabs(h(x));
        argmax = x;
      }
    }
    const StieltjesMember a(h, 0.25);
    const StieltjesMember b(h, -0.75);
    EXPECT_GT(std::fabs(a.density(argmax) - b.density(argmax)), 0.0);
  }
}

// ∫ x^k f_ε dx in the substituted variable u = x^s.
double member_moment(const StieltjesMember& m, int k) {
  const auto& spec = m.perturbation().spec();
  const double inv_s = 1.0 / spec.substitution_exponent();
  return numerics::integrate_semi_infinite(
             [&](double u) {
               if (!(u > 0.0)) return 0.0;
               const double x = std::pow(u, inv_s);
               return std::pow(x, k) * m.density(x) * inv_s * std::pow(u, inv_s - 1.0);
             },
             {}, spec.oscillation_in_substituted())
      .value;
}

TEST(StieltjesMember, UnitMass) {
  const StieltjesMember m(make(Family::H1, 0.3, 1.0), 1.0);
  EXPECT_NEAR(member_moment(m, 0), 1.0, 1e-7);
}

TEST(StieltjesMember, MomentsMatchThePowerLindley) {
  const PLParams p(0.3, 1.0);
  for (Family w : kFamilies) {
    const auto h = make(w, 0.3, 1.0);
    for (double eps : {-1.0, 1.0}) {
      const StieltjesMember m(h, eps);
      for (int k = 1; k <= 6; ++k) {
        const double expected = moment(p, k);
        EXPECT_NEAR(member_moment(m, k), expected, 1e-6 * expected)
            << static_cast<int>(w) << " eps=" << eps << " k=" << k;
      }
    }
  }
}

TEST(VanishingMoments, AllFamiliesBothParameterSets) {
  for (auto [a, b] : kParams) {
    for (Family w : kFamilies) {
      const auto r = verify_vanishing_moments(make(w, a, b), 10);
      ASSERT_EQ(r.size(), 11u);
      for (const auto& m : r) {
        EXPECT_TRUE(m.converged);
        EXPECT_LE(m.residual, 1e-8) << static_cast<int>(w) << " a=" << a << " k=" << m.k;
      }
    }
  }
}

TEST(VanishingMoments, H2WithTanPiAlphaIsNotAPerturbation) {
  const PerturbationSpec spec(Family::H2, PLParams(0.3, 1.0), 1.0, 0.0, H2Argument::TanPiAlpha);
  const auto r = verify_vanishing_moments(normalize(spec), 4);
  double worst = 0.0;
  for (const auto& m : r) worst = std::max(worst, m.residual);
  EXPECT_GT(worst, 1e-3);
}

TEST(VanishingMoments, NegativeOrderRejected) {
  EXPECT_THROW(verify_vanishing_moments(make(Family::H1, 0.3, 1.0), -1), DomainError);
}

TEST(VanishingMoments, FailureIsFlaggedNotSilent) {
  numerics::QuadratureSpec tight;
  tight.max_subdivisions = 1;
  tight.rel_tol = 1e-15;
  tight.abs_tol = 1e-300;
  const auto r = verify_vanishing_moments(make(Family::H3, 0.3, 1.0), 2, tight);
  bool any_flagged = false;
  for (const auto& m : r) {
    if (!m.converged) {
      any_flagged = true;
      EXPECT_GT(m.error_bound, 0.0);
    }
  }
  EXPECT_TRUE(any_flagged);
}

TEST(GradshteynRyzhik, Examples) {
  EXPECT_NEAR(gr_sine_integral(2.0, 1.0, kPi / 4.0), 0.5, 1e-15);
  EXPECT_EQ(gr_sine_integral(1.7, 0.3, 0.0), 0.0);
  EXPECT_NEAR(gr_cosine_integral(1.0, 1.0, 0.0), 1.0, 1e-15);
  EXPECT_THROW(gr_sine_integral(1.0, 1.0, kPi / 2.0), DomainError);
  EXPECT_THROW(gr_cosine_integral(1.0, 0.0, 0.1), DomainError);
  EXPECT_THROW(gr_cosine_integral(-1.0, 1.0, 0.1), DomainError);
}

}  // namespace
}  // namespace plindley::stieltjes
