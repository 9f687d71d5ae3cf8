#include "sgholder/campanato.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "sgholder/errors.hpp"
#include "sgholder/gamma.hpp"
#include "sgholder/quadrature.hpp"
#include "sgholder/semigroup.hpp"

namespace sgholder::campanato {

namespace {

using semigroup::poisson_multiplier;

Function flow(const SemigroupModel& m, const Function& c, double t, int k = 0) {
  return m.apply_coefficients(poisson_multiplier(t, k), c);
}

bool all_kernel(const SemigroupModel& m, const Function& c) {
  const double cmax = c.size() ? c.cwiseAbs().maxCoeff() : 0.0;
  for (Eigen::Index k = 0; k < c.size(); ++k)
    if (!m.is_kernel(k) && std::abs(c(k)) > 1e-12 * cmax) return false;
  return true;
}

double relative_sup(const Function& err, const Function& ref) {
  const double r = sup_abs(ref);
  return r > 1e-14 ? sup_abs(err) / r : sup_abs(err);
}

// t past which exp(-2 t sqrt(lambda_min+)) is below exp(-36).
double tail_horizon(const SemigroupModel& m, double s) {
  return s + 18.0 / std::sqrt(m.min_positive_eigenvalue());
}

// Concatenated adaptive integration over consecutive breakpoints.
Function integrate_pieces(const std::function<Function(double)>& g, const std::vector<double>& breaks, double rel_tol,
                          double* error = nullptr, int* evaluations = nullptr) {
  Function total;
  double err = 0.0;
  int evals = 0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    const quadrature::VectorResult r = quadrature::integrate(g, breaks[i], breaks[i + 1], 1e-300, rel_tol, 4000);
    if (total.size() == 0)
      total = r.value;
    else
      total += r.value;
    err += r.error;
    evals += r.evaluations;
  }
  if (error) *error = err;
  if (evaluations) *evaluations = evals;
  return total;
}

// B[P_t f] = sum_{a,b} Phi_ab exp(-t (mu_a + mu_b)) with f grouped by
// distinct mu = sqrt(lambda), so t-integrals against B[P_t f] have closed
// forms. Empty when the pair table would be too large.
struct PairExpansion {
  std::vector<double> sigma;
  std::vector<Function> phi;
  bool empty() const { return phi.empty(); }
  Function combine(const std::function<double(double)>& weight) const {
    Function out = Function::Zero(phi.front().size());
    for (std::size_t i = 0; i < phi.size(); ++i) out += weight(sigma[i]) * phi[i];
    return out;
  }
};

PairExpansion pair_expansion(const SemigroupModel& m, Form form, const Function& c) {
  const RealVector& ev = m.eigenvalues();
  const double cmax = c.size() ? c.cwiseAbs().maxCoeff() : 0.0;
  std::vector<std::pair<double, Eigen::Index>> modes;
  for (Eigen::Index k = 0; k < c.size(); ++k)
    if (!m.is_kernel(k) && std::abs(c(k)) > 1e-15 * cmax) modes.emplace_back(std::sqrt(ev(k)), k);
  std::sort(modes.begin(), modes.end());
  std::vector<double> mu;
  std::vector<Function> groups;
  for (const auto& [x, k] : modes) {
    if (mu.empty() || x > mu.back() * (1.0 + 1e-12)) {
      mu.push_back(x);
      groups.push_back(Function::Zero(c.size()));
    }
    groups.back()(k) = c(k);
  }
  PairExpansion e;
  const double cells = static_cast<double>(mu.size()) * static_cast<double>(mu.size()) * static_cast<double>(m.size());
  if (mu.empty() || cells > 4e6) return e;
  std::vector<Function> g(mu.size());
  for (std::size_t a = 0; a < mu.size(); ++a) g[a] = m.synthesize(groups[a]);
  for (std::size_t a = 0; a < mu.size(); ++a) {
    for (std::size_t b = 0; b < mu.size(); ++b) {
      Function v = Function::Zero(c.size());
      if (form != Form::Gamma) v += (mu[a] * mu[b]) * conj_mul(g[a], g[b]);
      if (form != Form::Partial) v += calculus::gamma(m, g[a], g[b]);
      e.sigma.push_back(mu[a] + mu[b]);
      e.phi.push_back(std::move(v));
    }
  }
  return e;
}

// int_0^s t exp(-t sigma) dt.
double t_weight(double s, double sigma) {
  const double x = s * sigma;
  if (x < 1e-3) return s * s * (0.5 - x / 3.0 + x * x / 8.0 - x * x * x / 30.0);
  return (-std::expm1(-x) - x * std::exp(-x)) / (sigma * sigma);
}

// int_0^inf min(s, t) exp(-(t + s) sigma) dt.
double min_weight(double s, double sigma) {
  const double x = s * sigma;
  return -std::exp(-x) * std::expm1(-x) / (sigma * sigma);
}

double ratio_or_zero(double num, double den) { return den > 0.0 ? num / den : 0.0; }

holder::ScaleGrid grid_for(const SemigroupModel& m, const Function& c) {
  return holder::grid_for_coefficients(m, {c});
}

void summarize(RatioExtremes& r) {
  if (r.ratios.empty()) return;
  r.min = *std::min_element(r.ratios.begin(), r.ratios.end());
  r.max = *std::max_element(r.ratios.begin(), r.ratios.end());
}

}  // namespace

Function square_oscillation(const SemigroupModel& m, const Function& f, double s) {
  const Function ps = semigroup::poisson_apply(m, s, f);
  return semigroup::poisson_apply(m, s, abs2(f)) - abs2(ps);
}

Function mean_oscillation(const SemigroupModel& m, const Function& f, double s) {
  const Function d = f - semigroup::poisson_apply(m, s, f);
  return semigroup::poisson_apply(m, s, abs2(d));
}

CampanatoResult lip_seminorm(const SemigroupModel& m, const Function& f, double alpha, Oscillation osc, Side side) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("Campanato exponent must lie in [0, 1)");
  CampanatoResult r;
  r.oscillation = osc;
  r.side = side;
  if (side == Side::Symmetric) {
    const CampanatoResult col = lip_seminorm(m, f, alpha, osc, Side::Column);
    const CampanatoResult row = lip_seminorm(m, f, alpha, osc, Side::Row);
    CampanatoResult out = col.value >= row.value ? col : row;
    out.side = Side::Symmetric;
    out.range_warning = col.range_warning || row.range_warning;
    return out;
  }
  const Function g = side == Side::Row ? Function(f.conjugate()) : f;
  const Function c = m.analyze(g);
  if (all_kernel(m, c)) return r;
  r.grid = grid_for(m, c);
  auto h = [&](double s) {
    const Function v = osc == Oscillation::Mean ? mean_oscillation(m, g, s) : square_oscillation(m, g, s);
    return std::pow(s, -alpha) * std::sqrt(std::max(sup_abs(v), 0.0));
  };
  const holder::SupResult sup = holder::maximize(r.grid, h);
  r.value = sup.value;
  r.s_star = sup.argmax;
  r.range_warning = sup.at_boundary;
  return r;
}

Function form_along_flow(const SemigroupModel& m, Form form, const Function& coeffs, double t) {
  const Function dg = flow(m, coeffs, t, 1);
  if (form == Form::Partial) return abs2(dg);
  const Function g = flow(m, coeffs, t, 0);
  const Function gam = calculus::gamma(m, g);
  return form == Form::Gamma ? gam : Function(gam + abs2(dg));
}

Function carleson_integral(const SemigroupModel& m, Form form, const Function& f, double s, double rel_tol,
                           double* error, int* evaluations) {
  const Function c = m.analyze(f);
  auto g = [&](double t) -> Function { return t * form_along_flow(m, form, c, t); };
  return integrate_pieces(g, {0.0, s}, rel_tol, error, evaluations);
}

CarlesonResult carleson_seminorm(const SemigroupModel& m, const Function& f, double alpha, Form form) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("Carleson exponent must lie in [0, 1)");
  CarlesonResult r;
  r.form = form;
  const Function c = m.analyze(f);
  if (all_kernel(m, c)) return r;
  r.grid = grid_for(m, c);
  const PairExpansion pe = pair_expansion(m, form, c);
  auto h = [&](double s) {
    const Function inner = pe.empty() ? carleson_integral(m, form, f, s)
                                      : pe.combine([s](double sigma) { return t_weight(s, sigma); });
    return std::pow(s, -alpha) * std::sqrt(sup_abs(semigroup::poisson_apply(m, s, inner)));
  };
  const holder::SupResult sup = holder::maximize(r.grid, h);
  r.value = sup.value;
  r.s_star = sup.argmax;
  r.range_warning = sup.at_boundary;
  carleson_integral(m, form, f, r.s_star, 1e-10, &r.quadrature_error, &r.quadrature_evaluations);
  return r;
}

IdentityResult junge_mei_identity_check(const SemigroupModel& m, const Function& f, double t) {
  if (!(t > 0.0)) throw NonpositiveTime("identity check needs t > 0");
  const Function tf = semigroup::heat_apply(m, t, f);
  const Function lhs = semigroup::heat_apply(m, t, abs2(f)) - abs2(tf);
  auto g = [&](double u) -> Function {
    return semigroup::heat_apply(m, t - u, calculus::gamma(m, semigroup::heat_apply(m, u, f)));
  };
  IdentityResult r;
  const Function integral = integrate_pieces(g, {0.0, t}, 1e-12, &r.quadrature_error);
  r.relative_error = relative_sup(lhs - 2.0 * integral, lhs);
  r.literal_error = relative_sup(lhs - integral, lhs);
  return r;
}

IdentityResult iterated_identity_check(const SemigroupModel& m, const Function& f, double s) {
  if (!(s > 0.0)) throw NonpositiveTime("identity check needs s > 0");
  const Function c = m.analyze(f);
  const Function lhs = square_oscillation(m, f, s);
  auto g = [&](double t) -> Function {
    return semigroup::poisson_apply(m, s - t, calculus::gamma_sqrt(m, flow(m, c, t)));
  };
  IdentityResult r;
  const Function integral = integrate_pieces(g, {0.0, s}, 1e-12, &r.quadrature_error);
  r.relative_error = relative_sup(lhs - 2.0 * integral, lhs);
  r.literal_error = relative_sup(lhs - integral, lhs);
  return r;
}

PointwiseSquareReport pointwise_square_inequalities(const SemigroupModel& m, const Function& f, double s,
                                                    double slack) {
  if (!(s > 0.0)) throw NonpositiveTime("pointwise square functions need s > 0");
  PointwiseSquareReport r;
  const Eigen::Index n = static_cast<Eigen::Index>(m.size());
  r.oscillation = square_oscillation(m, f, s);
  r.min_oscillation = r.oscillation.real().minCoeff();
  const Function c = m.analyze(f);
  if (all_kernel(m, c)) {
    r.double_integral = r.lower_partial = r.lower_gamma_hat = r.upper_gamma_hat = Function::Zero(n);
    return r;
  }
  const double s3 = s / 3.0;
  auto g = [&](double t) -> Function {
    const Function dg = flow(m, c, t, 1);
    const Function partial = abs2(dg);
    const Function hat = calculus::gamma(m, flow(m, c, t)) + partial;
    const double a = std::max(0.0, t - s);
    // int_a^t exp(-(s - t + 2v) mu) dv as a multiplier in mu = sqrt(lambda).
    auto inner = [&](double lambda) -> Complex {
      const double mu = std::sqrt(lambda);
      if (mu == 0.0) return t - a;
      return std::exp(-(s - t + 2.0 * a) * mu) * (-std::expm1(-2.0 * (t - a) * mu)) / (2.0 * mu);
    };
    Function out(4 * n);
    out.segment(0, n) = 2.0 * m.apply(inner, hat);
    out.segment(n, n) = std::min(s, t) * semigroup::poisson_apply(m, s + t, partial);
    out.segment(2 * n, n) = std::min(s, t) * semigroup::poisson_apply(m, s + t, hat);
    out.segment(3 * n, n) = std::min(s3, t) * semigroup::poisson_apply(m, s3 + t, hat);
    return out;
  };
  const Function all = integrate_pieces(g, {0.0, s3, s, tail_horizon(m, s)}, 1e-12);
  r.double_integral = all.segment(0, n);
  r.lower_partial = all.segment(n, n);
  r.lower_gamma_hat = all.segment(2 * n, n);
  r.upper_gamma_hat = all.segment(3 * n, n);
  r.identity_error = relative_sup(r.oscillation - r.double_integral, r.oscillation);
  const double osc_scale = sup_abs(r.oscillation);
  // Smallest c with num <= c den pointwise; points where den vanishes must
  // have num within the slack.
  auto constant = [&](const Function& num, const Function& den) {
    const double den_floor = 1e-12 * std::max(sup_abs(den), osc_scale);
    double best = 0.0;
    for (Eigen::Index x = 0; x < n; ++x) {
      const double a = num(x).real(), b = den(x).real();
      if (b <= den_floor) {
        if (a > slack) r.degenerate = true;
        continue;
      }
      best = std::max(best, a / b);
    }
    return best;
  };
  r.c_ii = constant(r.lower_partial, r.oscillation);
  r.c_iii_lower = constant(r.lower_gamma_hat, r.oscillation);
  r.c_iii_upper = constant(r.oscillation, r.upper_gamma_hat);
  return r;
}

EqnormReport eqnorm_comparison(const SemigroupModel& m, const Function& f, double alpha, bool gamma2_verified,
                               double slack) {
  EqnormReport r;
  r.alpha = alpha;
  r.lip_mean = lip_seminorm(m, f, alpha, Oscillation::Mean).value;
  r.lip_square = lip_seminorm(m, f, alpha, Oscillation::Square).value;
  const Function c = m.analyze(f);
  double literal = 0.0;
  if (!all_kernel(m, c)) {
    const holder::ScaleGrid grid = grid_for(m, c);
    auto diff = [&](double s) { return sup_abs(flow(m, c, s) - flow(m, c, 2.0 * s)); };
    r.dyadic_difference = holder::maximize(grid, [&](double s) { return std::pow(s, -alpha) * diff(s); }).value;
    literal = holder::maximize(grid, [&](double s) { return std::pow(s, -alpha) * std::sqrt(diff(s)); }).value;
  }
  r.bound_i = (1.0 + std::pow(2.0, alpha)) * r.lip_square + r.dyadic_difference;
  r.holds_i = r.lip_mean <= r.bound_i + slack;
  r.literal_bound_i = (1.0 + std::pow(2.0, alpha)) * r.lip_square + literal;
  r.literal_holds_i = r.lip_mean <= r.literal_bound_i + slack;
  r.part_ii_applicable = alpha < 0.5 && gamma2_verified;
  if (r.part_ii_applicable) {
    r.constant_ii = 1.0 / (1.0 - std::pow(2.0, alpha - 0.5));
    r.bound_ii = r.constant_ii * r.lip_mean;
    r.holds_ii = r.lip_square <= r.bound_ii + slack;
  }
  return r;
}

DeltaReport delta_inequality_check(const SemigroupModel& m, const Function& f, double s, double delta) {
  if (!(s > 0.0)) throw NonpositiveTime("delta inequality needs s > 0");
  if (delta < 0.0) throw DomainError("delta must be nonnegative");
  const Function c = m.analyze(f);
  DeltaReport r;
  r.lhs = sup_abs(flow(m, c, s) - flow(m, c, (1.0 + delta) * s));
  r.rhs = std::sqrt(sup_abs(semigroup::poisson_apply(m, s, carleson_integral(m, Form::Partial, f, s))));
  r.c_delta = delta <= 1.0 ? std::sqrt(delta) : 1.0 + std::log(delta) / std::log(1.5);
  r.constant = r.lhs > 0.0 ? ratio_or_zero(r.lhs, r.c_delta * r.rhs) : 0.0;
  return r;
}

holder::SupResult min_kernel_seminorm(const SemigroupModel& m, const Function& f, double alpha, Form form) {
  const Function c = m.analyze(f);
  holder::SupResult out;
  if (all_kernel(m, c)) return out;
  const PairExpansion pe = pair_expansion(m, form, c);
  auto h = [&](double s) {
    if (!pe.empty()) return std::pow(s, -alpha) * std::sqrt(sup_abs(pe.combine([s](double sigma) { return min_weight(s, sigma); })));
    auto g = [&](double t) -> Function { return std::min(s, t) * form_along_flow(m, form, c, t + s); };
    const Function v = integrate_pieces(g, {0.0, s, tail_horizon(m, s)}, 1e-10);
    return std::pow(s, -alpha) * std::sqrt(sup_abs(v));
  };
  return holder::maximize(grid_for(m, c), h);
}

RatioExtremes sqr_functions_equivalence(const SemigroupModel& m, Form form, const std::vector<Function>& samples,
                                        double alpha, bool gamma2_verified) {
  if (form != Form::Partial && !gamma2_verified)
    throw PrerequisiteFailed("square function equivalence for Gamma forms needs Gamma_2 >= 0");
  RatioExtremes r;
  for (const Function& f : samples) {
    const double lhs = carleson_seminorm(m, f, alpha, form).value;
    const double rhs = min_kernel_seminorm(m, f, alpha, form).value;
    if (lhs <= 1e-14 && rhs <= 1e-14) {
      ++r.skipped;
      continue;
    }
    r.ratios.push_back(ratio_or_zero(lhs, rhs));
    ++r.used;
  }
  summarize(r);
  return r;
}

HolderCampanatoReport comparison_holder_campanato(const SemigroupModel& m, const std::vector<Function>& samples,
                                                  double alpha, bool gamma2_verified, double slack) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("comparison needs alpha in (0, 1)");
  HolderCampanatoReport r;
  r.mean_bound = 1.0 / alpha;
  r.square_applicable = alpha < 0.5 && gamma2_verified;
  for (const Function& f : samples) {
    const double hold = holder::holder_seminorm(m, f, alpha).value;
    const double mean = lip_seminorm(m, f, alpha, Oscillation::Mean, Side::Symmetric).value;
    if (hold <= 1e-14) {
      ++r.mean_ratio.skipped;
      ++r.reverse_ratio.skipped;
      if (r.square_applicable) ++r.square_ratio.skipped;
      continue;
    }
    r.mean_ratio.ratios.push_back(mean / hold);
    ++r.mean_ratio.used;
    if (mean > r.mean_bound * hold + slack) r.mean_bound_holds = false;
    if (mean > 1e-14) {
      r.reverse_ratio.ratios.push_back(hold / mean);
      ++r.reverse_ratio.used;
    } else {
      ++r.reverse_ratio.skipped;
    }
    if (r.square_applicable) {
      r.square_ratio.ratios.push_back(lip_seminorm(m, f, alpha, Oscillation::Square, Side::Symmetric).value / hold);
      ++r.square_ratio.used;
    }
  }
  summarize(r.mean_ratio);
  summarize(r.square_ratio);
  summarize(r.reverse_ratio);
  return r;
}

}  // namespace sgholder::campanato
