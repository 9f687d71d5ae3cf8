#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "sgholder/errors.hpp"
#include "sgholder/group.hpp"

using namespace sgholder;
using groups::FiniteGroup;

namespace {

double form(const FiniteGroup& g, const std::vector<double>& psi, const RealVector& v) {
  double s = 0.0;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) s += v(a) * v(b) * psi[g.multiply(g.inverse(a), b)];
  return s;
}

}  // namespace

TEST(Groups, TablesAreGroups) {
  for (const auto& g : {FiniteGroup::cyclic(5), FiniteGroup::dihedral(4), FiniteGroup::symmetric(3), FiniteGroup::z2_power(3)}) {
    for (int a = 0; a < g.order(); ++a) {
      EXPECT_EQ(g.multiply(a, g.inverse(a)), g.identity());
      for (int b = 0; b < g.order(); ++b)
        for (int c = 0; c < g.order(); ++c)
          EXPECT_EQ(g.multiply(g.multiply(a, b), c), g.multiply(a, g.multiply(b, c)));
    }
  }
  EXPECT_EQ(FiniteGroup::dihedral(6).order(), 12);
  EXPECT_EQ(FiniteGroup::symmetric(4).order(), 24);
}

TEST(Groups, FromJson) {
  std::istringstream in("[[0, 1], [1, 0]]");
  const auto g = FiniteGroup::from_json(in);
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.inverse(1), 1);
}

TEST(Cocycle, HammingLengthOnCube) {
  for (int n = 1; n <= 4; ++n) {
    const auto g = FiniteGroup::z2_power(n);
    std::vector<double> psi;
    for (int x = 0; x < g.order(); ++x) psi.push_back(__builtin_popcount(static_cast<unsigned>(x)));
    const auto c = groups::cocycle_from_psi(g, psi);
    EXPECT_EQ(c.dimension, n);
    EXPECT_LT(c.psi_error, 1e-10);
    EXPECT_LT(c.cocycle_error, 1e-9);
    EXPECT_LT(c.orthogonality_error, 1e-10);
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) {
        const RealVector lhs = c.beta.col(g.multiply(a, b));
        const RealVector rhs = c.beta.col(a) + c.pi[a] * c.beta.col(b);
        EXPECT_LT((lhs - rhs).norm(), 1e-9);
      }
  }
}

TEST(Cocycle, CosineLengthOnCyclicGroup) {
  const int n = 7;
  const auto g = FiniteGroup::cyclic(n);
  std::vector<double> psi;
  for (int k = 0; k < n; ++k) psi.push_back(1.0 - std::cos(2.0 * kPi * k / n));
  const auto c = groups::cocycle_from_psi(g, psi);
  EXPECT_EQ(c.dimension, 2);
  for (int k = 0; k < n; ++k) EXPECT_NEAR(c.beta.col(k).squaredNorm(), psi[k], 1e-10);
}

TEST(Cocycle, RejectsWithWitness) {
  const auto g = FiniteGroup::z2_power(2);
  const std::vector<double> psi{0.0, 1.0, 1.0, 5.0};
  const auto v = groups::conditionally_negative_check(g, psi);
  EXPECT_FALSE(v.conditionally_negative);
  ASSERT_EQ(v.witness.size(), 4);
  EXPECT_NEAR(v.witness.sum(), 0.0, 1e-12);
  EXPECT_GT(form(g, psi, v.witness), 0.0);
  EXPECT_NEAR(form(g, psi, v.witness), v.witness_value, 1e-10);
  EXPECT_THROW(groups::cocycle_from_psi(g, psi), DomainError);
}

TEST(Cocycle, InputValidation) {
  const auto g = FiniteGroup::cyclic(3);
  EXPECT_THROW(groups::conditionally_negative_check(g, {0.0, 1.0, 2.0}), SymmetryError);
  EXPECT_THROW(groups::conditionally_negative_check(g, {1.0, 1.0, 1.0}), DomainError);
}

TEST(Cocycle, PowersOnTheIntegers) {
  EXPECT_TRUE(groups::conditionally_negative_check_z(10, [](int k) { return 1.0 * k * k; }).conditionally_negative);
  EXPECT_TRUE(groups::conditionally_negative_check_z(10, [](int k) { return 1.0 * std::abs(k); }).conditionally_negative);
  EXPECT_FALSE(groups::conditionally_negative_check_z(10, [](int k) { return std::pow(std::abs(k), 3.0); }).conditionally_negative);
}
