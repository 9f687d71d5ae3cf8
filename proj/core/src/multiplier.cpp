#include "sgholder/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "sgholder/errors.hpp"
#include "sgholder/holder.hpp"
#include "sgholder/quadrature.hpp"
#include "sgholder/semigroup.hpp"

namespace sgholder::multiplier {

Complex gamma_function(Complex z) {
  static const double p[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                             771.32342877765313,   -176.61502916214059,   12.507343278686905,
                             -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * gamma_function(1.0 - z));
  z -= 1.0;
  Complex x = p[0];
  for (int i = 1; i < 9; ++i) x += p[i] / (z + static_cast<double>(i));
  const Complex t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

AnalyticProfile constant_profile(Complex c) {
  AnalyticProfile p;
  p.name = "constant";
  p.M = [c](double) { return c; };
  p.sup_norm = std::abs(c);
  p.at_zero = c;
  p.closed_form = [c](double) { return c; };
  return p;
}

AnalyticProfile imaginary_power_profile(double gamma) {
  AnalyticProfile p;
  p.name = "imaginary_power";
  const Complex norm = 1.0 / gamma_function(Complex(1.0, -gamma));
  p.M = [gamma, norm](double t) { return std::polar(1.0, -gamma * std::log(t)) * norm; };
  p.sup_norm = std::abs(norm);
  p.closed_form = [gamma](double lambda) { return std::polar(1.0, gamma * std::log(lambda)); };
  return p;
}

AnalyticProfile truncation_profile(double T) {
  if (!(T > 0.0)) throw DomainError("truncation time must be positive");
  AnalyticProfile p;
  p.name = "truncation";
  p.M = [T](double t) { return Complex(t <= T ? 1.0 : 0.0); };
  p.sup_norm = 1.0;
  p.breakpoints = {T};
  p.closed_form = [T](double lambda) { return Complex(-std::expm1(-T * lambda)); };
  return p;
}

AnalyticProfile tabulated_profile(std::vector<double> t, std::vector<Complex> values, std::string name) {
  if (t.size() != values.size() || t.empty()) throw DimensionMismatch("profile nodes and values differ in length");
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!(t[i] > 0.0) || (i > 0 && !(t[i] > t[i - 1]))) throw DomainError("profile nodes must be positive and increasing");
  AnalyticProfile p;
  p.name = std::move(name);
  for (const Complex& v : values) p.sup_norm = std::max(p.sup_norm, std::abs(v));
  p.breakpoints = t;
  p.at_zero = values.back();
  p.M = [t, values](double x) -> Complex {
    if (x <= t.front()) return values.front();
    if (x >= t.back()) return values.back();
    const auto it = std::upper_bound(t.begin(), t.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - t.begin());
    const double w = std::log(x / t[i - 1]) / std::log(t[i] / t[i - 1]);
    return (1.0 - w) * values[i - 1] + w * values[i];
  };
  return p;
}

Complex multiplier_value(const AnalyticProfile& p, double lambda, double rel_tol) {
  if (!(lambda > 0.0)) return p.at_zero;
  const double lo = -40.0, hi = 4.0;
  std::vector<double> cuts = {lo};
  for (double b : p.breakpoints) {
    const double x = std::log(b * lambda);
    if (x > lo && x < hi) cuts.push_back(x);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  auto g = [&](double x) -> Function {
    Function v(1);
    v(0) = std::exp(x - std::exp(x)) * p.M(std::exp(x) / lambda);
    return v;
  };
  Complex total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    total += quadrature::integrate(g, cuts[i], cuts[i + 1], 1e-15, rel_tol, 4000).value(0);
  return total;
}

Function analytic_multiplier_apply(const SemigroupModel& m, const AnalyticProfile& p, const Function& f) {
  std::map<double, Complex> values;
  const RealVector& lam = m.eigenvalues();
  for (Eigen::Index k = 0; k < lam.size(); ++k)
    if (!values.count(lam(k))) values.emplace(lam(k), multiplier_value(p, std::sqrt(lam(k))));
  return m.apply([&](double l) { return values.at(l); }, f);
}

double holder_bound(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  return std::pow(2.0, 2.0 - alpha) * semigroup::phi_derivative_l1(1.0, 1) / (1.0 - alpha);
}

MultiplierHolderReport analytic_multiplier_holder_ratio(const SemigroupModel& m, const AnalyticProfile& p,
                                                        const std::vector<Function>& samples, double alpha) {
  MultiplierHolderReport r;
  r.bound = holder_bound(alpha);
  std::map<double, Complex> values;
  const RealVector& lam = m.eigenvalues();
  for (Eigen::Index k = 0; k < lam.size(); ++k)
    if (!values.count(lam(k))) values.emplace(lam(k), multiplier_value(p, std::sqrt(lam(k))));
  auto ratio = [&](const Function& f, int pd) -> std::pair<double, double> {
    const Function c = m.analyze(f);
    bool kernel = true;
    for (Eigen::Index k = 0; k < c.size(); ++k)
      if (!m.is_kernel(k) && std::abs(c(k)) > 1e-12 * c.cwiseAbs().maxCoeff()) kernel = false;
    if (kernel) return {0.0, 0.0};
    const holder::ScaleGrid grid = holder::grid_for_coefficients(m, {c}, pd);
    const Function mf = m.apply_coefficients([&](double l) { return values.at(l); }, c);
    return {holder::holder_seminorm(m, mf, alpha, 1, false, grid).value,
            p.sup_norm * holder::holder_seminorm(m, f, alpha, 1, false, grid).value};
  };
  r.ratio = riesz::sweep(m.name(), alpha, samples, ratio);
  r.within_bound = r.ratio.used > 0 && r.ratio.max <= r.bound;
  return r;
}

}  // namespace sgholder::multiplier
