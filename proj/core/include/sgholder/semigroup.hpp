#pragma once

#include <functional>

#include "sgholder/model.hpp"
#include "sgholder/quadrature.hpp"

namespace sgholder::semigroup {

using Multiplier = std::function<Complex(double)>;

Multiplier heat_multiplier(double t);
// (-sqrt(lambda))^k exp(-s sqrt(lambda)), the symbol of d^k/ds^k P_s.
Multiplier poisson_multiplier(double s, int k = 0);

// T_t f = exp(-tA) f.
Function heat_apply(const SemigroupModel& m, double t, const Function& f);
// P_s f = exp(-s A^{1/2}) f.
Function poisson_apply(const SemigroupModel& m, double s, const Function& f);
// d^k/ds^k P_s f. NonpositiveTime for s < 0, and for s = 0 with k >= 1 on
// models whose symbol is unbounded in the continuum limit.
Function poisson_derivative(const SemigroupModel& m, double s, int k, const Function& f);

enum class SubordinationRule { DoubleExponential, GaussLaguerre };

// Nodes u_i and weights w_i (sum w_i = 1) for the probability measure
// pi^{-1/2} u^{-1/2} e^{-u} du, under which
// P_s f = E[T_{s^2 / (4u)} f].
const quadrature::Rule& subordination_rule(SubordinationRule rule = SubordinationRule::DoubleExponential);

// P_s f through the heat semigroup: sum_i w_i T_{s^2/(4 u_i)} f.
Function subordination_apply(const SemigroupModel& m, double s, const Function& f,
                             SubordinationRule rule = SubordinationRule::DoubleExponential);

// Scalar version: the quadrature value of exp(-s sqrt(lambda)).
double subordinated_exponential(double lambda, double s,
                                SubordinationRule rule = SubordinationRule::DoubleExponential);

// Subordinator density phi_s(v) = s v^{-3/2} exp(-s^2 / 4v) / (2 sqrt(pi))
// and its s-derivatives, k <= 2.
double subordinator_density(double s, double v, int k = 0);

// int_0^inf |s^k d^k/ds^k phi_s(v)| dv by adaptive quadrature in log v.
double phi_derivative_l1(double s, int k);

}  // namespace sgholder::semigroup
