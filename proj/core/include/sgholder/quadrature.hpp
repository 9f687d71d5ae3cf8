#pragma once

#include <functional>
#include <vector>

#include "sgholder/types.hpp"

namespace sgholder::quadrature {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre on [-1, 1] via Golub-Welsch.
Rule gauss_legendre(int n);

// Generalized Gauss-Laguerre for the weight u^alpha e^{-u} on [0, inf).
Rule gauss_laguerre(int n, double alpha);

// Double-exponential rule for the probability measure
// pi^{-1/2} u^{-1/2} e^{-u} du on [0, inf): u = exp(pi/2 sinh t) with t on
// a uniform grid of spacing h over [t_min, t_max]. Weights are renormalized
// to sum to one.
Rule exp_sinh_half_gamma(double h = 0.04, double t_min = -4.0, double t_max = 3.2);

struct ScalarResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
};

struct VectorResult {
  Function value;
  double error = 0.0;
  int evaluations = 0;
};

// Adaptive Gauss-Kronrod (7/15) with global error control in sup norm.
ScalarResult integrate(const std::function<double(double)>& f, double a, double b,
                       double abs_tol, double rel_tol, int max_intervals = 2000);

VectorResult integrate(const std::function<Function(double)>& f, double a, double b,
                       double abs_tol, double rel_tol, int max_intervals = 2000);

// Fixed composite Gauss-Legendre over geometrically graded panels on [a, b]
// (a > 0) plus one uniform panel on [0, a] when include_origin is set.
Function graded_gauss_legendre(const std::function<Function(double)>& f, double a, double b,
                               int panels, int order, bool include_origin);

}  // namespace sgholder::quadrature
