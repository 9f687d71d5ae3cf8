#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sgholder/model.hpp"
#include "sgholder/riesz_morrey.hpp"

namespace sgholder::multiplier {

// Lanczos approximation (g = 7, nine terms) with reflection for Re z < 1/2.
Complex gamma_function(Complex z);

// A bounded profile M on (0, inf) defining m(lambda) = int_0^inf lambda e^{-t lambda} M(t) dt.
struct AnalyticProfile {
  std::string name;
  std::function<Complex(double)> M;
  double sup_norm = 0.0;            // ||M||_inf
  std::vector<double> breakpoints;  // t where M is not smooth
  Complex at_zero = 0.0;            // value used on the kernel of A
  std::function<Complex(double)> closed_form;  // m(lambda) when known
};

AnalyticProfile constant_profile(Complex c = 1.0);
// M(t) = t^{-i gamma} / Gamma(1 - i gamma), so m(lambda) = lambda^{i gamma}.
AnalyticProfile imaginary_power_profile(double gamma);
// M = 1 on [0, T], so m(lambda) = 1 - exp(-T lambda).
AnalyticProfile truncation_profile(double T);
// Piecewise linear in log t through (t_i, M_i), constant beyond the ends.
AnalyticProfile tabulated_profile(std::vector<double> t, std::vector<Complex> values, std::string name = "tabulated");

// m(lambda) by adaptive quadrature of int e^{x - e^x} M(e^x / lambda) dx
// over [-40, 4].
Complex multiplier_value(const AnalyticProfile& p, double lambda, double rel_tol = 1e-12);

// m(A^{1/2}) f, one quadrature per distinct eigenvalue.
Function analytic_multiplier_apply(const SemigroupModel& m, const AnalyticProfile& p, const Function& f);

// 2^{2 - alpha} L / (1 - alpha) with L = int |s d/ds phi_s(v)| dv: the
// operator bound on Lambda_alpha that follows from ||d/ds P_s|| <= L / s.
double holder_bound(double alpha);

struct MultiplierHolderReport {
  // |m(A^{1/2}) f|_{Lambda_alpha} / (||M||_inf |f|_{Lambda_alpha}).
  riesz::RatioSweep ratio;
  double bound = 0.0;
  bool within_bound = false;
};

MultiplierHolderReport analytic_multiplier_holder_ratio(const SemigroupModel& m, const AnalyticProfile& p,
                                                        const std::vector<Function>& samples, double alpha);

}  // namespace sgholder::multiplier
