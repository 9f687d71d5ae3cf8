#include "sgholder/semigroup.hpp"

#include <cmath>

#include "sgholder/errors.hpp"

namespace sgholder::semigroup {

namespace {

void check_time(const SemigroupModel& m, double s, int k) {
  if (!(s >= 0.0)) throw NonpositiveTime("time parameter must be nonnegative");
  if (s == 0.0 && k >= 1 && !m.allows_zero_time())
    throw NonpositiveTime("derivative at s = 0 is not available on this model");
}

}  // namespace

Multiplier heat_multiplier(double t) {
  return [t](double l) { return Complex(std::exp(-t * l)); };
}

Multiplier poisson_multiplier(double s, int k) {
  return [s, k](double l) {
    const double r = std::sqrt(l);
    return Complex(std::pow(-r, k) * std::exp(-s * r));
  };
}

Function heat_apply(const SemigroupModel& m, double t, const Function& f) {
  check_time(m, t, 0);
  return m.apply(heat_multiplier(t), f);
}

Function poisson_apply(const SemigroupModel& m, double s, const Function& f) {
  check_time(m, s, 0);
  return m.apply(poisson_multiplier(s, 0), f);
}

Function poisson_derivative(const SemigroupModel& m, double s, int k, const Function& f) {
  if (k < 0) throw DomainError("derivative order must be nonnegative");
  check_time(m, s, k);
  return m.apply(poisson_multiplier(s, k), f);
}

const quadrature::Rule& subordination_rule(SubordinationRule rule) {
  static const quadrature::Rule de = quadrature::exp_sinh_half_gamma();
  static const quadrature::Rule gl = [] {
    quadrature::Rule r = quadrature::gauss_laguerre(64, -0.5);
    for (double& w : r.weights) w /= std::sqrt(kPi);
    return r;
  }();
  return rule == SubordinationRule::DoubleExponential ? de : gl;
}

double subordinated_exponential(double lambda, double s, SubordinationRule rule) {
  const quadrature::Rule& r = subordination_rule(rule);
  double acc = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) acc += r.weights[i] * std::exp(-lambda * s * s / (4.0 * r.nodes[i]));
  return acc;
}

Function subordination_apply(const SemigroupModel& m, double s, const Function& f, SubordinationRule rule) {
  check_time(m, s, 0);
  const quadrature::Rule& r = subordination_rule(rule);
  const Function c = m.analyze(f);
  Function acc = Function::Zero(f.size());
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    const double t = s * s / (4.0 * r.nodes[i]);
    acc += r.weights[i] * m.apply_coefficients(heat_multiplier(t), c);
  }
  return acc;
}

double subordinator_density(double s, double v, int k) {
  if (!(v > 0.0)) return 0.0;
  const double base = std::exp(-s * s / (4.0 * v)) / (2.0 * std::sqrt(kPi) * std::pow(v, 1.5));
  switch (k) {
    case 0:
      return s * base;
    case 1:
      return base * (1.0 - s * s / (2.0 * v));
    case 2:
      return base * (-s / (2.0 * v)) * (3.0 - s * s / (2.0 * v));
    default:
      throw DomainError("subordinator derivatives are implemented for k <= 2");
  }
}

double phi_derivative_l1(double s, int k) {
  if (!(s > 0.0)) throw NonpositiveTime("s must be positive");
  if (k < 0 || k > 2) throw DomainError("k must be 0, 1 or 2");
  const double sk = std::pow(s, k);
  auto integrand = [&](double x) {
    const double v = std::exp(x);
    return std::abs(sk * subordinator_density(s, v, k)) * v;
  };
  // Split at the sign changes of d^k phi / ds^k (v = s^2/2 for k = 1,
  // v = s^2/6 for k = 2) so each piece is smooth.
  const double c = std::log(s * s);
  std::vector<double> cuts = {c - 12.0};
  if (k == 1) cuts.push_back(c - std::log(2.0));
  if (k == 2) cuts.push_back(c - std::log(6.0));
  cuts.push_back(c + 80.0);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    total += quadrature::integrate(integrand, cuts[i], cuts[i + 1], 1e-14, 1e-12).value;
  return total;
}

}  // namespace sgholder::semigroup
