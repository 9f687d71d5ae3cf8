#include <gtest/gtest.h>

#include <cmath>

#include "sgholder/campanato.hpp"
#include "sgholder/errors.hpp"
#include "sgholder/gamma.hpp"
#include "sgholder/models.hpp"
#include "sgholder/quadrature.hpp"
#include "sgholder/sampling.hpp"
#include "sgholder/semigroup.hpp"

using namespace sgholder;
using campanato::Form;

namespace {

double scan(const std::function<double(double)>& h) {
  double best = 0.0;
  for (double e = -4.0; e <= 4.0; e += 1e-4) best = std::max(best, h(std::pow(10.0, e)));
  return best;
}

std::unique_ptr<ChainModel> two_point(double mu) { return models::chain(models::two_point(mu * mu / 2.0), "two_point"); }

Function flip() {
  Function f(2);
  f << 1.0, -1.0;
  return f;
}

}  // namespace

TEST(Campanato, EigenfunctionSeminormsClosedForm) {
  const double mu = 3.0, alpha = 0.4;
  const auto m = two_point(mu);
  const double mean = scan([&](double s) { return std::pow(s, -alpha) * (1.0 - std::exp(-s * mu)); });
  const double square =
      scan([&](double s) { return std::pow(s, -alpha) * std::sqrt(1.0 - std::exp(-2.0 * s * mu)); });
  EXPECT_NEAR(campanato::lip_seminorm(*m, flip(), alpha, campanato::Oscillation::Mean).value, mean, 1e-6 * mean);
  EXPECT_NEAR(campanato::lip_seminorm(*m, flip(), alpha, campanato::Oscillation::Square).value, square, 1e-6 * square);
}

TEST(Campanato, IdentitiesNeedTheFactorTwo) {
  const auto m = models::chain(models::cycle(16), "C16");
  for (int i = 0; i < 5; ++i) {
    const Function f = random_test_function(*m, 12, i);
    for (double t : {0.1, 1.0}) {
      const auto jm = campanato::junge_mei_identity_check(*m, f, t);
      const auto it = campanato::iterated_identity_check(*m, f, t);
      EXPECT_LT(jm.relative_error, 1e-7);
      EXPECT_LT(it.relative_error, 1e-7);
      EXPECT_GT(jm.literal_error, 0.1);
      EXPECT_GT(it.literal_error, 0.1);
    }
  }
}

TEST(Campanato, SquareOscillationIsNonnegative) {
  const auto m = models::chain(models::hypercube(4), "Q4");
  for (int i = 0; i < 10; ++i) {
    const Function osc = campanato::square_oscillation(*m, random_test_function(*m, 2, i), 0.3);
    EXPECT_GE(osc.real().minCoeff(), -1e-12);
    EXPECT_LT(osc.imag().cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Carleson, ClosedFormRouteMatchesQuadrature) {
  const auto m = models::chain(models::cycle(12), "C12");
  const Function f = random_test_function(*m, 6, 0);
  const auto grid = holder::grid_for_coefficients(*m, {m->analyze(f)});
  for (Form form : {Form::Partial, Form::Gamma, Form::GammaHat}) {
    const double fast = campanato::carleson_seminorm(*m, f, 0.3, form).value;
    const double slow = holder::maximize(grid, [&](double s) {
                          const Function in = campanato::carleson_integral(*m, form, f, s, 1e-12);
                          return std::pow(s, -0.3) * std::sqrt(sup_abs(semigroup::poisson_apply(*m, s, in)));
                        }).value;
    EXPECT_NEAR(fast, slow, 1e-9 * slow);
    const Function c = m->analyze(f);
    const double mk = campanato::min_kernel_seminorm(*m, f, 0.3, form).value;
    const double mk_slow = holder::maximize(grid, [&](double s) {
                             auto g = [&](double t) -> Function {
                               return std::min(s, t) * campanato::form_along_flow(*m, form, c, t + s);
                             };
                             Function v = quadrature::integrate(g, 0.0, s, 1e-300, 1e-12, 4000).value;
                             v += quadrature::integrate(g, s, s + 60.0, 1e-300, 1e-12, 4000).value;
                             return std::pow(s, -0.3) * std::sqrt(sup_abs(v));
                           }).value;
    EXPECT_NEAR(mk, mk_slow, 1e-8 * mk_slow);
  }
}

TEST(Delta, EigenfunctionClosedForm) {
  const double mu = 2.0, s = 0.7;
  const auto m = two_point(mu);
  for (double delta : {0.0, 0.01, 0.5, 3.0}) {
    const auto r = campanato::delta_inequality_check(*m, flip(), s, delta);
    EXPECT_NEAR(r.lhs, std::exp(-s * mu) - std::exp(-(1.0 + delta) * s * mu), 1e-13);
    EXPECT_NEAR(r.rhs, std::sqrt((1.0 - std::exp(-2.0 * s * mu) * (1.0 + 2.0 * s * mu)) / 4.0), 1e-10);
  }
  EXPECT_EQ(campanato::delta_inequality_check(*m, flip(), s, 0.0).lhs, 0.0);
}

TEST(Delta, IncrementIsOrderDelta) {
  const auto m = models::chain(models::cycle(16), "C16");
  const Function f = random_test_function(*m, 1, 0);
  const double c1 = campanato::delta_inequality_check(*m, f, 0.5, 1e-3).constant;
  const double c2 = campanato::delta_inequality_check(*m, f, 0.5, 1e-1).constant;
  EXPECT_NEAR((c2 / c1) / std::sqrt(100.0), 1.0, 0.1);
}

TEST(Eqnorm, ExplicitConstantsHold) {
  const auto m = models::chain(models::cycle(16), "C16");
  const bool g2 = calculus::gamma2_nonnegative(*m);
  for (double alpha : {0.1, 0.25, 0.4}) {
    for (int i = 0; i < 10; ++i) {
      const auto r = campanato::eqnorm_comparison(*m, random_test_function(*m, 3, i), alpha, g2);
      EXPECT_TRUE(r.holds_i);
      ASSERT_TRUE(r.part_ii_applicable);
      EXPECT_TRUE(r.holds_ii);
      EXPECT_EQ(r.constant_ii, 1.0 / (1.0 - std::pow(2.0, alpha - 0.5)));
    }
  }
  EXPECT_FALSE(campanato::eqnorm_comparison(*m, random_test_function(*m, 3, 0), 0.6, g2).part_ii_applicable);
}

TEST(Pointwise, DoubleIntegralIdentity) {
  const auto m = models::chain(models::hypercube(3), "Q3");
  for (int i = 0; i < 3; ++i) {
    const auto r = campanato::pointwise_square_inequalities(*m, random_test_function(*m, 4, i), 0.5);
    EXPECT_LT(r.identity_error, 1e-7);
    EXPECT_FALSE(r.degenerate);
    EXPECT_GE(r.min_oscillation, -1e-10);
    EXPECT_TRUE(std::isfinite(r.c_ii));
  }
}

TEST(SquareFunctions, GammaFormsNeedCurvature) {
  const auto m = models::chain(models::cycle(8), "C8");
  const auto fs = random_test_functions(*m, 1, 3);
  EXPECT_THROW(campanato::sqr_functions_equivalence(*m, Form::Gamma, fs, 0.5, false), PrerequisiteFailed);
  const auto r = campanato::sqr_functions_equivalence(*m, Form::Partial, fs, 0.5, false);
  EXPECT_EQ(r.used, 3);
  EXPECT_GT(r.min, 0.0);
}

TEST(HolderCampanato, MeanBound) {
  const auto m = models::chain(models::cycle(16), "C16");
  const auto r = campanato::comparison_holder_campanato(*m, random_test_functions(*m, 5, 10), 0.3, true);
  EXPECT_TRUE(r.mean_bound_holds);
  EXPECT_LE(r.mean_ratio.max, 1.0 / 0.3);
  EXPECT_TRUE(r.square_applicable);
}
