#pragma once

#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "sgholder/types.hpp"

namespace sgholder::groups {

// Finite group given by its multiplication table: table[g][h] = gh.
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<std::vector<int>> table);

  static FiniteGroup cyclic(int n);
  // (Z/2)^n with elements encoded as bit masks.
  static FiniteGroup z2_power(int n);
  // Symmetries of the regular n-gon, order 2n.
  static FiniteGroup dihedral(int n);
  // All permutations of {0, ..., n-1}, n <= 5.
  static FiniteGroup symmetric(int n);
  // JSON array of arrays.
  static FiniteGroup from_json(std::istream& in);
  static FiniteGroup from_json_file(const std::string& path);

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int multiply(int g, int h) const { return table_[g][h]; }
  int inverse(int g) const { return inverse_[g]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = -1;
};

struct CnVerdict {
  bool conditionally_negative = false;
  double min_eigenvalue = 0.0;
  double trace = 0.0;
  // Zero-sum coefficients v with sum_ij v_i v_j psi(g_i^{-1} g_j) > 0 when
  // the check fails; empty otherwise.
  RealVector witness;
  double witness_value = 0.0;
};

// psi is conditionally negative iff K(g, h) = (psi(g) + psi(h) - psi(g^{-1} h)) / 2
// is positive semidefinite; eigenvalues >= -1e-10 trace(K) count as
// nonnegative. Throws SymmetryError unless psi(g) = psi(g^{-1}) and
// DomainError unless psi(e) = 0 and psi >= 0.
CnVerdict conditionally_negative_check(const FiniteGroup& g, const std::vector<double>& psi);

// Same test for psi restricted to the truncation {-F, ..., F} of Z.
CnVerdict conditionally_negative_check_z(int bandwidth, const std::function<double(int)>& psi);

// Orthogonal representation pi on R^d with a 1-cocycle beta:
// beta(gh) = beta(g) + pi(g) beta(h) and ||beta(g)||^2 = psi(g).
struct Cocycle {
  int dimension = 0;
  Matrix beta;            // d x |G|, column g is beta(g)
  std::vector<Matrix> pi;  // pi[g] is d x d
  double psi_error = 0.0;
  double cocycle_error = 0.0;
  double orthogonality_error = 0.0;
};

// Factors K = B^T B (rank-revealing eigendecomposition) and takes
// beta(g) = column g of B; pi(g) is the unique linear map sending beta(h)
// to beta(gh) - beta(g). Throws DomainError if psi is not conditionally
// negative and CocycleConsistencyError if the identity fails beyond 1e-8.
Cocycle cocycle_from_psi(const FiniteGroup& g, const std::vector<double>& psi);

}  // namespace sgholder::groups
