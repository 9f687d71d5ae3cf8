#pragma once

#include <complex>
#include <limits>

#include <Eigen/Dense>

namespace sgholder {

using Complex = std::complex<double>;
using Function = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kPi = 3.14159265358979323846;

// Pointwise |f|^2 as a complex-typed function, so it can be fed back to
// spectral operators.
inline Function abs2(const Function& f) { return f.cwiseAbs2().cast<Complex>(); }

// Pointwise conj(f) * g.
inline Function conj_mul(const Function& f, const Function& g) {
  return f.conjugate().cwiseProduct(g);
}

inline double sup_abs(const Function& f) {
  return f.size() == 0 ? 0.0 : f.cwiseAbs().maxCoeff();
}

}  // namespace sgholder
