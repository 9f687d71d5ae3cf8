#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sgholder/errors.hpp"
#include "sgholder/models.hpp"
#include "sgholder/spectral.hpp"

using namespace sgholder;

namespace {

std::vector<double> sorted(const RealVector& v) {
  std::vector<double> out(v.data(), v.data() + v.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Generator, RejectsInvalidMatrices) {
  Matrix a(2, 2);
  a << 1, 1, -1, 1;
  EXPECT_THROW(FiniteChainGenerator(StateSpace::uniform(2), a), SignError);
  a << 1, -1, -1, 2;
  EXPECT_THROW(FiniteChainGenerator(StateSpace::uniform(2), a), RowSumError);
  a << 1, -1, -2, 2;
  EXPECT_THROW(FiniteChainGenerator(StateSpace::uniform(2), a), DetailedBalanceError);
  RealVector mu(2);
  mu << 2.0, 1.0;
  EXPECT_NO_THROW(FiniteChainGenerator(StateSpace(mu), a));
}

TEST(Spectrum, CycleMatchesCosineFormula) {
  for (int n : {3, 8, 17}) {
    const auto m = models::chain(models::cycle(n, 0.7), "cycle");
    std::vector<double> expected;
    for (int k = 0; k < n; ++k) expected.push_back(2.0 * 0.7 * (1.0 - std::cos(2.0 * kPi * k / n)));
    std::sort(expected.begin(), expected.end());
    const auto got = sorted(m->eigenvalues());
    for (int k = 0; k < n; ++k) EXPECT_NEAR(got[k], expected[k], 1e-12);
  }
}

TEST(Spectrum, HypercubeAndComplete) {
  const auto h = models::chain(models::hypercube(4), "Q4");
  const auto got = sorted(h->eigenvalues());
  const auto expected = models::hypercube_spectrum(4);
  ASSERT_EQ(got.size(), expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], expected[i], 1e-12);
  const auto k = models::chain(models::complete(6, 1.0), "K6");
  const auto kg = sorted(k->eigenvalues());
  EXPECT_EQ(kg[0], 0.0);
  for (int i = 1; i < 6; ++i) EXPECT_NEAR(kg[i], 6.0, 1e-12);
}

TEST(Spectrum, EigenvectorsAreMuOrthonormal) {
  RealVector mu(3);
  mu << 1.0, 2.0, 3.0;
  const auto gen = models::weighted_graph({{0, 1, 1.0}, {1, 2, 0.5}}, mu);
  const auto dec = eigendecompose(gen);
  const Matrix gram = dec.phi.transpose() * mu.asDiagonal() * dec.phi;
  EXPECT_LT((gram - Matrix::Identity(3, 3)).norm(), 1e-12);
  const Matrix back = dec.phi * Matrix(dec.eigenvalues.asDiagonal()) * dec.analysis;
  EXPECT_LT((back - gen.matrix()).norm(), 1e-12);
}

TEST(Spectrum, HeatKernelIsMarkov) {
  const auto m = models::chain(models::path({1.0, 2.0, 0.5}), "path");
  const Matrix k = spectral_kernel(m->decomposition(), [](double l) { return std::exp(-0.3 * l); });
  const RealVector& mu = m->weights();
  for (Eigen::Index i = 0; i < k.rows(); ++i) {
    double row = 0.0;
    for (Eigen::Index j = 0; j < k.cols(); ++j) {
      EXPECT_GE(k(i, j), -1e-14);
      row += k(i, j) * mu(j);
    }
    EXPECT_NEAR(row, 1.0, 1e-12);
  }
}

TEST(EdgeList, ParsesAndReportsLines) {
  std::istringstream ok("# triangle\n0 1 1.0\n1 2 1.0\n2 0 1.0\n");
  const auto gen = models::read_edge_list(ok);
  EXPECT_EQ(gen.size(), 3u);
  EXPECT_DOUBLE_EQ(gen.matrix()(1, 0), -1.0);
  std::istringstream bad("0 1 1.0\n1 x 2\n");
  try {
    models::read_edge_list(bad);
    FAIL() << "no ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(Lattice, ModesAreEigenfunctions) {
  const auto t = models::torus(2, 3);
  const Function u = t->mode({2, -1});
  const Function au = t->generator(u);
  EXPECT_LT(sup_abs(au - 4.0 * kPi * kPi * 5.0 * u), 1e-9);
  const Function c = t->analyze(u);
  EXPECT_NEAR(std::abs(c(t->index_of({2, -1}))), 1.0, 1e-12);
  EXPECT_GE(t->grid(), 4 * 7);
}

TEST(Lattice, FftSizesAreSevenSmooth) {
  EXPECT_EQ(fft_size_at_least(13), 14);
  EXPECT_EQ(fft_size_at_least(17), 18);
  EXPECT_EQ(fft_size_at_least(64), 64);
  EXPECT_EQ(fft_size_at_least(67), 70);
}

TEST(QuotientNorm, EnclosingRadius) {
  EXPECT_NEAR(enclosing_radius({Complex(0, 0), Complex(2, 0)}), 1.0, 1e-12);
  EXPECT_NEAR(enclosing_radius({Complex(1, 0), Complex(-0.5, std::sqrt(3) / 2), Complex(-0.5, -std::sqrt(3) / 2)}), 1.0,
              1e-9);
  const auto m = models::chain(models::cycle(4), "C4");
  Function f(4);
  f << 3.0, 5.0, 3.0, 5.0;
  EXPECT_NEAR(m->quotient_sup_norm(f), 1.0, 1e-12);
}

TEST(OperatorNorms, HeatOneToInfIsMaxKernel) {
  const auto m = models::chain(models::cycle(6), "C6");
  const Matrix k = spectral_kernel(m->decomposition(), [](double l) { return std::exp(-0.5 * l); });
  EXPECT_NEAR(operator_pq_norm(m->generator_matrix().space(), k, 1.0, kInf), k.maxCoeff(), 1e-12);
  EXPECT_NEAR(operator_pq_norm(m->generator_matrix().space(), k, 2.0, 2.0), 1.0, 1e-12);
  EXPECT_THROW(operator_pq_norm(m->generator_matrix().space(), k, 3.0, 5.0), UnsupportedPair);
}
