#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Sparse>

#include "sgholder/types.hpp"

namespace sgholder::qt {

using Mode = std::vector<int>;

// Finite sum f = sum_k a_k u_k in the quantum torus with antisymmetric
// Theta. Products follow u_a u_b = chi(a, b) u_{a+b} with
// chi(a, b) = exp(2 pi i <a, Theta_low b>), Theta_low the strictly lower
// triangular part, so u_a u_b = exp(2 pi i <a, Theta b>) u_b u_a.
struct Element {
  int n = 0;
  Matrix theta;
  std::map<Mode, Complex> coeffs;

  Element() = default;
  Element(int dim, Matrix th);

  Complex chi(const Mode& a, const Mode& b) const;
  std::size_t support_size() const { return coeffs.size(); }
  int degree() const;  // max |k|_inf over the support
};

// Validates that Theta is n x n antisymmetric (SymmetryError otherwise).
Element make_element(int n, const Matrix& theta, const std::map<Mode, Complex>& coeffs);

// JSON {"n": 2, "theta": [[...]], "coeffs": [{"k": [..], "re": x, "im": y}]}.
Element read_element(std::istream& in);
Element read_element_file(const std::string& path);

// Element number `index` of the ensemble `seed`: i.i.d. standard complex
// normal coefficients on every mode with |k|_inf <= degree, drawn from
// RandomStream(seed, index) in lexicographic order and scaled so that
// sum |a_k| = 1.
Element random_element(int n, const Matrix& theta, std::uint64_t seed, std::uint64_t index, int degree = 1);

Element multiply(const Element& a, const Element& b);
Element adjoint(const Element& a);
Element add(const Element& a, const Element& b);
Element scale(const Element& a, Complex c);
// Coefficientwise multiplier a_k -> m(k) a_k.
Element map_coefficients(const Element& a, const std::function<Complex(const Mode&)>& m);
// sigma_z: a_k -> exp(2 pi i <z, k>) a_k.
Element rotate(const Element& a, const std::vector<double>& z);

// Compression of the left regular representation to l^2 of the box
// [-L, L]^n: row l, column l - k carries a_k chi(-l, k). Box points are
// indexed lexicographically. BoxTooSmall unless L exceeds the support radius.
Eigen::SparseMatrix<Complex> represent(const Element& a, int box);

struct NormOptions {
  int box = 24;
  double tol = 1e-6;
  // Recompute on the box L + 4 and flag a relative disagreement above this.
  double boundary_tol = 1e-3;
  bool check_boundary = true;
};

struct NormResult {
  double value = 0.0;        // on box L
  double outer_value = 0.0;  // on box L + 4 (0 when not checked)
  bool boundary_warning = false;
  int iterations = 0;
};

// Largest singular value of represent(a, L) by restarted Lanczos on M^* M.
NormResult operator_norm(const Element& a, const NormOptions& opt = {});

// Single-box variant with an optional warm-start vector (updated in place).
double operator_norm_on_box(const Element& a, int box, double tol, Function* warm = nullptr,
                            int* iterations = nullptr);

}  // namespace sgholder::qt
