#include <gtest/gtest.h>

#include <cmath>

#include "sgholder/gamma.hpp"
#include "sgholder/models.hpp"
#include "sgholder/quantum_torus.hpp"
#include "sgholder/sampling.hpp"

using namespace sgholder;

TEST(Gamma, TwoPointClosedForm) {
  const auto m = models::chain(models::two_point(1.5), "two_point");
  Function f(2);
  f << Complex(1.0, 2.0), Complex(-0.5, 0.25);
  const double expected = 1.5 * std::norm(f(0) - f(1)) / 2.0;
  const Function g = calculus::gamma(*m, f);
  EXPECT_NEAR(g(0).real(), expected, 1e-13);
  EXPECT_NEAR(g(1).real(), expected, 1e-13);
  EXPECT_NEAR(g(0).imag(), 0.0, 1e-13);
}

TEST(Gamma, MatchesGradientOnChainsAndTori) {
  const auto c = models::chain(models::path({1.0, 0.3, 2.0, 0.7}), "path");
  const auto t = models::torus(2, 3);
  for (const SemigroupModel* m : {static_cast<const SemigroupModel*>(c.get()), static_cast<const SemigroupModel*>(t.get())}) {
    const Function f = random_test_function(*m, 9, 0);
    const RealVector n = m->gradient(f).pointwise_norm();
    const Function g = calculus::gamma(*m, f);
    EXPECT_LT((n.array().square() - g.real().array()).abs().maxCoeff(), 1e-9 * g.real().maxCoeff());
  }
}

TEST(Gamma, TorusModeIsFourPiSquaredKSquared) {
  const auto t = models::torus(1, 4);
  const Function g = calculus::gamma(*t, t->mode({3}));
  EXPECT_LT((g.array() - 4.0 * kPi * kPi * 9.0).abs().maxCoeff(), 1e-8);
}

TEST(Gamma2, CurvedAndFlatModels) {
  for (int n : {3, 5, 10}) EXPECT_TRUE(calculus::gamma2_psd_check(*models::chain(models::cycle(n), "C")).holds);
  EXPECT_TRUE(calculus::gamma2_psd_check(*models::chain(models::hypercube(3), "Q3")).holds);
  EXPECT_TRUE(calculus::gamma2_nonnegative(*models::torus(1, 4)));
}

TEST(Gamma2, FormMatchesIteratedGamma) {
  const auto m = models::chain(models::cycle(7), "C7");
  RealVector f = random_test_function(*m, 1, 0).real();
  const Function fc = f.cast<Complex>();
  const Function g2 = calculus::gamma_k(*m, 2, fc, fc);
  for (int x = 0; x < 7; ++x) {
    const Matrix q = calculus::gamma2_form(*m, x);
    EXPECT_NEAR(f.dot(q * f), g2(x).real(), 1e-10);
  }
}

// A star with a heavy centre: the Bakry-Emery form is indefinite.
TEST(Gamma2, DetectsNegativeCurvature) {
  std::vector<models::Edge> edges;
  for (int leaf = 1; leaf <= 6; ++leaf) edges.push_back({0, leaf, 1.0});
  const auto m = models::chain(models::weighted_graph(edges), "star");
  const auto v = calculus::gamma2_psd_check(*m);
  EXPECT_FALSE(v.holds);
  EXPECT_LT(v.min_eigenvalue, 0.0);
  EXPECT_GE(v.worst_state, 0);
}

TEST(SpaceTime, IdentityHoldsWithPlusTwo) {
  const auto m = models::chain(models::cycle(16), "C16");
  std::vector<double> grid;
  for (int i = 0; i < 8; ++i) grid.push_back(0.05 * std::pow(2.0, i));
  for (int i = 0; i < 5; ++i) {
    const auto r = calculus::gs_identity_check(*m, random_test_function(*m, 5, i), grid);
    EXPECT_LT(r.max_relative_error, 1e-9);
    EXPECT_GT(r.opposite_sign_error, 0.5);
    EXPECT_LT(r.finite_difference_error, 1e-5);
  }
}

TEST(Intertwining, ChainsAndTori) {
  EXPECT_TRUE(calculus::gradient_intertwines(*models::torus(1, 6)));
}

TEST(QuantumGamma, DerivationsAgreeWithGenerator) {
  Matrix th(2, 2);
  th << 0.0, 0.3, -0.3, 0.0;
  const auto f = qt::random_element(2, th, 4, 0, 2);
  const auto a = calculus::qt_gamma(f), b = calculus::qt_gamma_from_generator(f);
  for (const auto& [k, v] : a.coeffs) {
    const auto it = b.coeffs.find(k);
    const Complex w = it == b.coeffs.end() ? Complex(0.0) : it->second;
    EXPECT_LT(std::abs(v - w), 1e-12);
  }
}
