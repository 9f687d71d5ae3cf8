#include <gtest/gtest.h>

#include <cmath>

#include "sgholder/errors.hpp"
#include "sgholder/gamma.hpp"
#include "sgholder/models.hpp"
#include "sgholder/riesz_morrey.hpp"
#include "sgholder/sampling.hpp"

using namespace sgholder;

TEST(PowerLaw, ExactFit) {
  const auto fit = riesz::fit_power_law([](double t) { return 3.0 * std::pow(t, -1.5); }, 1e-3, 1e-1, 12);
  EXPECT_NEAR(fit.slope, -1.5, 1e-12);
  EXPECT_NEAR(fit.intercept, std::log(3.0), 1e-10);
  EXPECT_LT(fit.residual, 1e-12);
}

TEST(Ultracontractivity, DimensionOfTori) {
  EXPECT_NEAR(riesz::ultracontractivity_fit(*models::torus(1, 64)).dimension, 1.0, 0.05);
  EXPECT_NEAR(riesz::ultracontractivity_fit(*models::torus(2, 32)).dimension, 2.0, 0.1);
  EXPECT_THROW(riesz::ultracontractivity_fit(*models::torus(1, 8), 1e-6, 1e-5), WindowError);
}

TEST(PoissonNorms, CircleClosedForms) {
  for (double s : {0.05, 0.3, 1.0}) {
    // sum_k e^{-4 pi s |k|} = coth(2 pi s); the kernel peaks at coth(pi s).
    EXPECT_NEAR(riesz::poisson_p_to_inf_norm(1, s, 2.0), std::sqrt(1.0 / std::tanh(2.0 * kPi * s)), 1e-10);
    EXPECT_NEAR(riesz::poisson_p_to_inf_norm(1, s, 1.0), 1.0 / std::tanh(kPi * s), 1e-8);
  }
}

TEST(Morrey, RatioBoundedAndChainExact) {
  const auto t = models::torus(1, 16);
  const auto fs = random_test_functions(*t, 11, 20);
  const auto s = riesz::morrey_ratio(*t, fs, 2.0);
  EXPECT_EQ(s.used, 20);
  EXPECT_TRUE(std::isfinite(s.max));
  const auto rev = riesz::morrey_reverse_check(*t, fs, 2.0);
  EXPECT_LT(rev.max_chain_error, 1e-9);
  EXPECT_TRUE(rev.exponent_matches);
  EXPECT_NEAR(rev.expected_exponent, 0.5, 1e-15);
}

TEST(Morrey, HigherDimensionNeedsPEqualTwo) {
  const auto t = models::torus(2, 4);
  const auto fs = random_test_functions(*t, 1, 2);
  EXPECT_THROW(riesz::morrey_reverse_check(*t, fs, 4.0), BackendUnsupported);
}

TEST(Riesz, ReverseRatioAtLeastOne) {
  const auto m = models::chain(models::cycle(16), "C16");
  const auto eq = riesz::riesz_equivalence(*m, random_test_functions(*m, 42, 10), 0.5, true);
  EXPECT_TRUE(eq.forward_applicable);
  EXPECT_GE(eq.min_reverse, 1.0 - 1e-9);
  EXPECT_TRUE(eq.reverse_at_least_one);
  EXPECT_FALSE(riesz::riesz_equivalence(*m, random_test_functions(*m, 42, 2), 0.5, false).forward_applicable);
}

TEST(Riesz, TransformIsUnitaryOnModes) {
  const auto t = models::torus(2, 3);
  for (const auto& k : t->band(3)) {
    const auto r = riesz::riesz_transform(*t, t->mode(k));
    EXPECT_LT((r.field.pointwise_norm().array() - 1.0).abs().maxCoeff(), 1e-12);
    const double kn = std::hypot(k[0], k[1]);
    EXPECT_LT(sup_abs(r.field.components[0] - Complex(0.0, k[0] / kn) * t->mode(k)), 1e-12);
  }
}

TEST(DomGamma, BoundedOnCurvedModels) {
  const auto m = models::chain(models::hypercube(3), "Q3");
  const auto s = riesz::domgamma_ratio(*m, random_test_functions(*m, 2, 10), kInf, calculus::gamma2_nonnegative(*m));
  EXPECT_TRUE(std::isfinite(s.max));
  EXPECT_GT(s.min, 0.0);
}

TEST(Cogrowth, VerdictsFollowTheDimension) {
  for (int n : {1, 2, 3}) {
    EXPECT_EQ(riesz::cogrowth_estimate(n, 0.5 * n).verdict, riesz::Verdict::Diverges);
    EXPECT_EQ(riesz::cogrowth_estimate(n, 2.0 * n).verdict, riesz::Verdict::Converges);
    EXPECT_NE(riesz::cogrowth_estimate(n, n).verdict, riesz::Verdict::Converges);
  }
}

TEST(Sobolev, EmbeddingBoundHolds) {
  const auto t = models::torus(1, 16);
  const auto r = riesz::sobolev_embedding(*t, random_test_functions(*t, 3, 10), 1.1);
  EXPECT_TRUE(r.holds);
  EXPECT_LE(r.max_ratio, r.bound);
}

TEST(Marcinkiewicz, IdentitySymbolGivesRatioOne) {
  const auto z = models::integer_group(8, [](const std::vector<int>& k) { return 1.0 * k[0] * k[0]; }, "Z");
  const std::vector<Complex> one(17, 1.0);
  const auto r = riesz::marcinkiewicz_bound_and_ratio(*z, one, random_test_functions(*z, 1, 5), 0.5, 1.1);
  EXPECT_NEAR(r.ratio.max, 1.0, 1e-9);
  EXPECT_NEAR(r.ratio.min, 1.0, 1e-9);
  EXPECT_TRUE(std::isfinite(r.rhs));
}
