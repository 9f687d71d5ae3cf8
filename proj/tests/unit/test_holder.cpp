#include <gtest/gtest.h>

#include <cmath>

#include <Eigen/SVD>

#include "sgholder/errors.hpp"
#include "sgholder/holder.hpp"
#include "sgholder/models.hpp"
#include "sgholder/quantum_torus.hpp"
#include "sgholder/sampling.hpp"

using namespace sgholder;

namespace {

double closed_form(double mu, double alpha, int k = 1) {
  const double e = k - alpha;
  return std::pow(mu, alpha) * std::pow(e, e) * std::exp(-e);
}

// Norm of f in A_theta for theta = p/q through the q x q clock and shift
// representations pi_z(u_k) = e^{2 pi i <k, z>} U^k1 V^k2, maximized over z.
double rational_norm(const qt::Element& f, int p, int q) {
  const Complex w = std::polar(1.0, 2.0 * kPi * p / q);
  ComplexMatrix U = ComplexMatrix::Zero(q, q), V = ComplexMatrix::Zero(q, q);
  for (int j = 0; j < q; ++j) {
    U(j, j) = std::pow(w, j);
    V((j + 1) % q, j) = 1.0;
  }
  auto power = [q](const ComplexMatrix& m, int e) {
    ComplexMatrix out = ComplexMatrix::Identity(q, q);
    const ComplexMatrix base = e >= 0 ? m : ComplexMatrix(m.adjoint());
    for (int i = 0; i < std::abs(e); ++i) out = out * base;
    return out;
  };
  std::vector<std::pair<qt::Mode, ComplexMatrix>> terms;
  for (const auto& [k, a] : f.coeffs) terms.emplace_back(k, a * power(U, k[0]) * power(V, k[1]));
  auto norm = [&](double z0, double z1) {
    ComplexMatrix m = ComplexMatrix::Zero(q, q);
    for (const auto& [k, t] : terms) m += std::polar(1.0, 2.0 * kPi * (k[0] * z0 + k[1] * z1)) * t;
    return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues()(0);
  };
  const int n = 40;
  double best = 0.0, b0 = 0.0, b1 = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double v = norm(static_cast<double>(i) / n, static_cast<double>(j) / n);
      if (v > best) best = v, b0 = static_cast<double>(i) / n, b1 = static_cast<double>(j) / n;
    }
  for (double h = 0.5 / n; h > 1e-9; h *= 0.5) {
    double nb = best, n0 = b0, n1 = b1;
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) {
        const double v = norm(b0 + a * h, b1 + b * h);
        if (v > nb) nb = v, n0 = b0 + a * h, n1 = b1 + b * h;
      }
    best = nb, b0 = n0, b1 = n1;
  }
  return best;
}

}  // namespace

TEST(HolderSeminorm, EigenfunctionClosedForm) {
  for (double lambda : {1.0, 4.0 * kPi * kPi, 100.0}) {
    const auto m = models::chain(models::two_point(lambda / 2.0), "two_point");
    Function f(2);
    f << 1.0, -1.0;
    for (double alpha : {0.25, 0.5, 0.75}) {
      const auto r = holder::holder_seminorm(*m, f, alpha);
      EXPECT_NEAR(r.value / closed_form(std::sqrt(lambda), alpha), 1.0, 1e-6);
      EXPECT_NEAR(r.s_star * std::sqrt(lambda), 1.0 - alpha, 1e-3);
      EXPECT_FALSE(r.range_warning);
    }
  }
}

TEST(HolderSeminorm, SecondOrderOnTorusMode) {
  const auto t = models::torus(1, 4);
  const Function u = t->mode({2});
  const double mu = 4.0 * kPi;
  EXPECT_NEAR(holder::holder_seminorm(*t, u, 0.5, 2).value / closed_form(mu, 0.5, 2), 1.0, 1e-6);
  EXPECT_NEAR(holder::holder_norm(*t, u, 0.5), std::max(1.0, closed_form(mu, 0.5)), 1e-6);
}

TEST(HolderSeminorm, BlindToConstantsAndRejectsBadAlpha) {
  const auto m = models::chain(models::cycle(10), "C10");
  const Function f = random_test_function(*m, 8, 0);
  const Function g = f + Function::Constant(f.size(), Complex(3.0, -1.0));
  EXPECT_NEAR(holder::holder_seminorm(*m, f, 0.4).value, holder::holder_seminorm(*m, g, 0.4).value, 1e-12);
  EXPECT_THROW(holder::holder_seminorm(*m, f, 1.0), DomainError);
  EXPECT_THROW(holder::holder_seminorm(*m, f, 0.0), DomainError);
}

TEST(HolderSeminorm, PruningLeavesTheMaximumUnchanged) {
  holder::ScaleGrid grid{1e-2, 1e2, 16, 1e-6};
  auto h = [](double s) { return s * std::exp(-s) + 0.1 * std::sin(s); };
  auto up = [](double s) { return s * std::exp(-s) + 0.1; };
  const auto a = holder::maximize(grid, h), b = holder::maximize(grid, h, up);
  EXPECT_DOUBLE_EQ(a.value, b.value);
  EXPECT_LE(b.evaluations, a.evaluations);
}

TEST(QuantumTorus, CommutationRelation) {
  Matrix th(2, 2);
  th << 0.0, 0.3, -0.3, 0.0;
  const auto u1 = qt::make_element(2, th, {{{1, 0}, 1.0}});
  const auto u2 = qt::make_element(2, th, {{{0, 1}, 1.0}});
  const auto ab = qt::multiply(u1, u2), ba = qt::multiply(u2, u1);
  EXPECT_NEAR(std::abs(ab.coeffs.at({1, 1}) - std::polar(1.0, 2.0 * kPi * 0.3) * ba.coeffs.at({1, 1})), 0.0, 1e-14);
  EXPECT_THROW(qt::make_element(2, Matrix::Identity(2, 2), {}), SymmetryError);
}

TEST(QuantumTorus, RationalThetaNormMatchesFiniteRepresentations) {
  Matrix th(2, 2);
  th << 0.0, 1.0 / 3.0, -1.0 / 3.0, 0.0;
  for (std::uint64_t i = 0; i < 3; ++i) {
    const auto f = qt::random_element(2, th, 21, i);
    const double oracle = rational_norm(f, 1, 3);
    const double coarse = qt::operator_norm_on_box(f, 8, 1e-9);
    const double fine = qt::operator_norm_on_box(f, 32, 1e-9);
    EXPECT_LE(fine, oracle * (1.0 + 1e-9));
    EXPECT_LT(oracle - fine, oracle - coarse);
    EXPECT_NEAR(fine / oracle, 1.0, 2e-3);
  }
}

TEST(QuantumTorus, ZeroThetaNormIsSupNorm) {
  const auto f = qt::random_element(2, Matrix::Zero(2, 2), 2, 0);
  // For theta = 0 every representation is one dimensional: q = 1.
  const double oracle = rational_norm(f, 0, 1);
  EXPECT_NEAR(qt::operator_norm(f).value / oracle, 1.0, 2e-3);
  EXPECT_THROW(qt::represent(f, 1), BoxTooSmall);
}

TEST(QuantumTorus, SemigroupSeminormOfAMode) {
  Matrix th(2, 2);
  th << 0.0, 0.3, -0.3, 0.0;
  const auto u = qt::make_element(2, th, {{{1, 1}, 1.0}});
  const double mu = 2.0 * kPi * std::sqrt(2.0);
  EXPECT_NEAR(holder::qt_holder_seminorm(u, 0.5).value / closed_form(mu, 0.5), 1.0, 1e-6);
}

TEST(Weaver, SingleModeClosedForm) {
  Matrix th(2, 2);
  th << 0.0, 0.3, -0.3, 0.0;
  const auto u = qt::make_element(2, th, {{{1, 0}, 1.0}});
  holder::WeaverOptions opt;
  opt.z_per_axis = 16;
  const auto r = holder::weaver_norm(u, 0.5, opt);
  // ||sigma_z u - u|| = |e^{2 pi i z_0} - 1|, largest over the grid along z_1 = 0.
  double expected = 1.0;
  for (int j = 1; j <= 8; ++j) {
    const double z = j / 16.0;
    expected = std::max(expected, std::abs(std::polar(1.0, 2.0 * kPi * z) - 1.0) / std::sqrt(z));
  }
  EXPECT_NEAR(r.value, expected, 1e-5);
  EXPECT_NEAR(r.sup_norm, 1.0, 1e-6);
}
