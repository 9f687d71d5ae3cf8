#include <gtest/gtest.h>

#include <cmath>

#include "sgholder/models.hpp"
#include "sgholder/multiplier.hpp"
#include "sgholder/sampling.hpp"

using namespace sgholder;
using multiplier::gamma_function;

TEST(GammaFunction, RealValues) {
  EXPECT_NEAR(gamma_function(5.0).real(), 24.0, 1e-11);
  EXPECT_NEAR(gamma_function(0.5).real(), std::sqrt(kPi), 1e-13);
  EXPECT_NEAR(gamma_function(-0.5).real(), -2.0 * std::sqrt(kPi), 1e-12);
  EXPECT_NEAR(gamma_function(3.7).real(), std::tgamma(3.7), 1e-12);
}

TEST(GammaFunction, ImaginaryAxisModulus) {
  for (double y : {0.25, 1.0, 2.0, 5.0}) {
    const double g = std::abs(gamma_function(Complex(1.0, y)));
    EXPECT_NEAR(g * g, kPi * y / std::sinh(kPi * y), 1e-12);
  }
  EXPECT_NEAR(std::abs(gamma_function(Complex(1.0, -1.0))), 0.52156405, 1e-8);
}

TEST(GammaFunction, Reflection) {
  const Complex z(0.3, 0.2);
  EXPECT_LT(std::abs(gamma_function(z) * gamma_function(1.0 - z) - kPi / std::sin(kPi * z)), 1e-11);
}

TEST(Profiles, QuadratureMatchesClosedForms) {
  for (double lambda : {1e-2, 1.0, 30.0}) {
    for (double g : {0.5, 2.0}) {
      const auto p = multiplier::imaginary_power_profile(g);
      EXPECT_LT(std::abs(multiplier::multiplier_value(p, lambda) - std::pow(Complex(lambda), Complex(0.0, g))), 1e-9);
    }
    const auto t = multiplier::truncation_profile(1.5);
    EXPECT_NEAR(std::abs(multiplier::multiplier_value(t, lambda) - (1.0 - std::exp(-1.5 * lambda))), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(multiplier::multiplier_value(multiplier::constant_profile(), lambda) - 1.0), 0.0, 1e-11);
  }
  const auto tab = multiplier::tabulated_profile({0.1, 10.0}, {1.0, 1.0});
  EXPECT_NEAR(std::abs(multiplier::multiplier_value(tab, 2.0) - 1.0), 0.0, 1e-10);
}

TEST(HolderBound, Formula) {
  for (double a : {0.25, 0.5, 0.75})
    EXPECT_NEAR(multiplier::holder_bound(a), std::pow(2.0, 2.0 - a) * 0.96788290 / (1.0 - a), 1e-6);
}

TEST(AnalyticMultiplier, ConstantProfileIsIdentity) {
  const auto m = models::chain(models::cycle(16), "C16");
  const auto fs = random_test_functions(*m, 13, 5);
  const auto one = multiplier::constant_profile();
  EXPECT_LT(sup_abs(multiplier::analytic_multiplier_apply(*m, one, fs[0]) - fs[0]), 1e-10);
  const auto r = multiplier::analytic_multiplier_holder_ratio(*m, one, fs, 0.5);
  EXPECT_NEAR(r.ratio.max, 1.0, 1e-6);
  EXPECT_NEAR(r.ratio.min, 1.0, 1e-6);
}

TEST(AnalyticMultiplier, ImaginaryPowerWithinBound) {
  const auto m = models::chain(models::cycle(16), "C16");
  const auto r = multiplier::analytic_multiplier_holder_ratio(*m, multiplier::imaginary_power_profile(1.0),
                                                              random_test_functions(*m, 13, 10), 0.5);
  EXPECT_TRUE(r.within_bound);
  EXPECT_LE(r.ratio.max, r.bound);
}
