#include <gtest/gtest.h>

#include <cmath>

#include "sgholder/errors.hpp"
#include "sgholder/models.hpp"
#include "sgholder/sampling.hpp"
#include "sgholder/semigroup.hpp"

using namespace sgholder;

TEST(Subordination, ScalarAgainstClosedForm) {
  for (double s : {0.1, 1.0, 10.0})
    for (double e = -3.0; e <= 3.0; e += 0.25) {
      const double l = std::pow(10.0, e);
      EXPECT_NEAR(semigroup::subordinated_exponential(l, s), std::exp(-s * std::sqrt(l)), 1e-8) << l << " " << s;
    }
  EXPECT_NEAR(semigroup::subordinated_exponential(0.0, 1.0), 1.0, 1e-14);
}

TEST(Subordination, RuleIsAProbabilityMeasure) {
  const auto& r = semigroup::subordination_rule();
  double w = 0.0, mean = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    w += r.weights[i];
    mean += r.weights[i] * r.nodes[i];
  }
  EXPECT_NEAR(w, 1.0, 1e-14);
  // E[u] = Gamma(3/2) / Gamma(1/2) = 1/2 for the half-gamma law.
  EXPECT_NEAR(mean, 0.5, 1e-9);
}

TEST(Subordination, DensityIntegratesToOne) {
  // Trapezoid in log v, independent of the library quadrature.
  for (double s : {0.3, 2.0}) {
    double total = 0.0;
    const double h = 1e-3;
    for (double x = -30.0; x <= 80.0; x += h) total += semigroup::subordinator_density(s, std::exp(x)) * std::exp(x) * h;
    EXPECT_NEAR(total, 1.0, 1e-8);
  }
}

TEST(Subordination, DensityDerivativeMatchesDifferences) {
  const double s = 0.7, v = 0.4, h = 1e-5;
  const double fd = (semigroup::subordinator_density(s + h, v) - semigroup::subordinator_density(s - h, v)) / (2 * h);
  EXPECT_NEAR(semigroup::subordinator_density(s, v, 1), fd, 1e-6);
  const double fd2 = (semigroup::subordinator_density(s + h, v, 1) - semigroup::subordinator_density(s - h, v, 1)) / (2 * h);
  EXPECT_NEAR(semigroup::subordinator_density(s, v, 2), fd2, 1e-5);
}

TEST(Poisson, SemigroupPropertyAndOperatorSubordination) {
  const auto m = models::chain(models::hypercube(3), "Q3");
  const Function f = random_test_function(*m, 2, 0);
  const Function a = semigroup::poisson_apply(*m, 0.3, semigroup::poisson_apply(*m, 0.5, f));
  EXPECT_LT(sup_abs(a - semigroup::poisson_apply(*m, 0.8, f)), 1e-13);
  for (double s : {0.1, 1.0, 10.0})
    EXPECT_LT(sup_abs(semigroup::subordination_apply(*m, s, f) - semigroup::poisson_apply(*m, s, f)), 1e-8);
}

TEST(Poisson, DerivativeMatchesDifferences) {
  const auto m = models::chain(models::cycle(9), "C9");
  const Function f = random_test_function(*m, 4, 1);
  const double s = 0.6, h = 1e-5;
  const Function fd = (semigroup::poisson_apply(*m, s + h, f) - semigroup::poisson_apply(*m, s - h, f)) / (2 * h);
  EXPECT_LT(sup_abs(semigroup::poisson_derivative(*m, s, 1, f) - fd), 1e-8);
  EXPECT_THROW(semigroup::poisson_apply(*m, -1.0, f), NonpositiveTime);
}

TEST(Poisson, LatticeRejectsZeroTimeDerivative) {
  const auto t = models::torus(1, 4);
  const Function f = t->mode({1});
  EXPECT_THROW(semigroup::poisson_derivative(*t, 0.0, 1, f), NonpositiveTime);
  EXPECT_LT(sup_abs(semigroup::poisson_apply(*t, 0.2, f) - std::exp(-0.2 * 2.0 * kPi) * f), 1e-13);
}

TEST(Phi, DerivativeL1Norms) {
  // s d/ds phi_s = (1 - 2u) phi_s with u = s^2 / 4v ~ Gamma(1/2), so the norm
  // is E|1 - 2u| = 0.96788290 (scipy quad).
  EXPECT_NEAR(semigroup::phi_derivative_l1(1.0, 1), 0.96788290, 1e-7);
  EXPECT_NEAR(semigroup::phi_derivative_l1(3.0, 1), semigroup::phi_derivative_l1(1.0, 1), 1e-9);
  EXPECT_NEAR(semigroup::phi_derivative_l1(1.0, 0), 1.0, 1e-9);
}
