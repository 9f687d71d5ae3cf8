#include "sgholder/riesz_morrey.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "sgholder/campanato.hpp"
#include "sgholder/errors.hpp"
#include "sgholder/gamma.hpp"
#include "sgholder/holder.hpp"
#include "sgholder/parallel.hpp"
#include "sgholder/semigroup.hpp"

namespace sgholder::riesz {

namespace {

using semigroup::poisson_multiplier;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kZero = 1e-14;

bool all_kernel(const SemigroupModel& m, const Function& c) {
  const double cmax = c.size() ? c.cwiseAbs().maxCoeff() : 0.0;
  for (Eigen::Index k = 0; k < c.size(); ++k)
    if (!m.is_kernel(k) && std::abs(c(k)) > 1e-12 * cmax) return false;
  return true;
}

Function sqrt_nonneg(const Function& g) {
  Function out(g.size());
  for (Eigen::Index i = 0; i < g.size(); ++i) out(i) = std::sqrt(std::max(g(i).real(), 0.0));
  return out;
}

double squared_radius(const std::vector<int>& k) {
  double s = 0.0;
  for (int v : k) s += static_cast<double>(v) * v;
  return s;
}

}  // namespace

void finalize(RatioSweep& s) {
  const std::size_t n = s.numerators.size();
  s.samples = n;
  s.ratios.assign(n, kNaN);
  s.used = s.skipped = 0;
  std::vector<double> used;
  double best = -1.0, half = -1.0;
  s.argmax = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(s.denominators[i] > kZero)) {
      ++s.skipped;
      continue;
    }
    const double r = s.numerators[i] / s.denominators[i];
    s.ratios[i] = r;
    used.push_back(r);
    ++s.used;
    if (r > best) {
      best = r;
      s.argmax = static_cast<int>(i);
    }
    if (i < n / 2) half = std::max(half, r);
  }
  if (used.empty()) {
    s.max = s.min = s.median = s.half_max = 0.0;
    s.doubling_stable = false;
    return;
  }
  std::sort(used.begin(), used.end());
  s.min = used.front();
  s.max = used.back();
  const std::size_t u = used.size();
  s.median = u % 2 ? used[u / 2] : 0.5 * (used[u / 2 - 1] + used[u / 2]);
  s.half_max = std::max(half, 0.0);
  s.doubling_stable = half > 0.0 && s.max - half <= 0.1 * half;
}

RatioSweep sweep(const std::string& model, double alpha, const std::vector<Function>& samples,
                 const SampleRatio& ratio, int per_decade) {
  RatioSweep s;
  s.model = model;
  s.alpha = alpha;
  s.numerators.assign(samples.size(), 0.0);
  s.denominators.assign(samples.size(), 0.0);
  parallel_for(samples.size(), [&](std::size_t i) {
    const auto [num, den] = ratio(samples[i], per_decade);
    s.numerators[i] = num;
    s.denominators[i] = den;
  });
  finalize(s);
  if (s.argmax >= 0) {
    const auto [num, den] = ratio(samples[s.argmax], 2 * per_decade);
    s.refined_ratio = num / den;
    s.refinement_stable = std::abs(s.refined_ratio - s.max) <= 1e-3 * s.max;
  }
  return s;
}

RatioSweep domgamma_ratio(const SemigroupModel& m, const std::vector<Function>& samples, double p,
                          bool gamma2_verified) {
  if (!gamma2_verified) throw PrerequisiteFailed("gradient decay bound needs Gamma_2 >= 0");
  if (!(p == 2.0 || std::isinf(p))) throw DomainError("gradient decay bound is measured for p = 2 or infinity");
  auto ratio = [&](const Function& f, int pd) -> std::pair<double, double> {
    const Function c = m.analyze(f);
    if (all_kernel(m, c)) return {0.0, 0.0};
    const holder::ScaleGrid grid = holder::grid_for_coefficients(m, {c}, pd);
    auto h = [&](double s) {
      const Function g = campanato::form_along_flow(m, campanato::Form::Gamma, c, s);
      return s * m.lp_norm(sqrt_nonneg(g), p);
    };
    return {holder::maximize(grid, h).value, m.lp_norm(f, p)};
  };
  return sweep(m.name(), 0.0, samples, ratio);
}

RieszEquivalence riesz_equivalence(const SemigroupModel& m, const std::vector<Function>& samples, double alpha,
                                   bool gamma2_verified) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("Riesz equivalence needs alpha in (0, 1)");
  enum { Hold, HoldQ, Gam, GamQ, Hat, HatQ, LitHat, LitDer, Count };
  using Bundle = std::array<double, Count>;
  auto bundle = [&](const Function& f, int pd) {
    Bundle b{};
    const Function c = m.analyze(f);
    if (all_kernel(m, c)) return b;
    const holder::ScaleGrid grid = holder::grid_for_coefficients(m, {c}, pd);
    auto sup = [&](const std::function<double(double)>& h) { return holder::maximize(grid, h).value; };
    const double e = 1.0 - alpha;
    auto deriv = [&](double s) { return m.apply_coefficients(poisson_multiplier(s, 1), c); };
    auto form = [&](campanato::Form fm, double s) { return campanato::form_along_flow(m, fm, c, s); };
    b[Hold] = sup([&](double s) { return std::pow(s, e) * m.sup_norm(deriv(s)); });
    b[HoldQ] = sup([&](double s) { return std::pow(s, e) * m.quotient_sup_norm(deriv(s)); });
    if (gamma2_verified) {
      b[Gam] = sup([&](double s) { return std::pow(s, e) * m.sup_norm(sqrt_nonneg(form(campanato::Form::Gamma, s))); });
      b[GamQ] = sup(
          [&](double s) { return std::pow(s, e) * m.quotient_sup_norm(sqrt_nonneg(form(campanato::Form::Gamma, s))); });
    }
    b[Hat] = sup([&](double s) { return std::pow(s, e) * m.sup_norm(sqrt_nonneg(form(campanato::Form::GammaHat, s))); });
    b[HatQ] = sup(
        [&](double s) { return std::pow(s, e) * m.quotient_sup_norm(sqrt_nonneg(form(campanato::Form::GammaHat, s))); });
    b[LitHat] = sup([&](double s) { return std::pow(s, e) * std::sqrt(m.sup_norm(form(campanato::Form::GammaHat, s))); });
    b[LitDer] = sup([&](double s) { return std::pow(s, e) * std::sqrt(m.sup_norm(deriv(s))); });
    return b;
  };
  std::vector<Bundle> base(samples.size());
  parallel_for(samples.size(), [&](std::size_t i) { base[i] = bundle(samples[i], 32); });
  auto make = [&](int num, int den) {
    RatioSweep s;
    s.model = m.name();
    s.alpha = alpha;
    for (const Bundle& b : base) {
      s.numerators.push_back(b[num]);
      s.denominators.push_back(b[den]);
    }
    finalize(s);
    if (s.argmax >= 0) {
      const Bundle b = bundle(samples[s.argmax], 64);
      s.refined_ratio = b[num] / b[den];
      s.refinement_stable = std::abs(s.refined_ratio - s.max) <= 1e-3 * s.max;
    }
    return s;
  };
  RieszEquivalence r;
  r.forward_applicable = gamma2_verified;
  if (gamma2_verified) {
    r.forward = make(Gam, Hold);
    r.forward_quotient = make(GamQ, HoldQ);
  }
  r.reverse = make(Hat, Hold);
  r.reverse_quotient = make(HatQ, HoldQ);
  r.literal_reverse = make(LitHat, LitDer);
  r.min_reverse = r.reverse.min;
  r.reverse_at_least_one = r.reverse.used == 0 || r.reverse.min >= 1.0 - 1e-9;
  return r;
}

RieszTransform riesz_transform(const LatticeModel& m, const Function& f) {
  if (!m.heat_symbol()) throw IntertwiningUnverified("Riesz transform needs the heat symbol on a torus");
  RieszTransform r;
  const Function c = m.analyze(f);
  const std::vector<int> zero(m.dimension(), 0);
  const Eigen::Index origin = m.index_of(zero);
  r.kernel_projected = std::abs(c(origin)) > 1e-12 * std::max(c.cwiseAbs().maxCoeff(), 1e-300);
  for (int j = 0; j < m.dimension(); ++j) {
    Function cj = Function::Zero(c.size());
    for (Eigen::Index idx = 0; idx < c.size(); ++idx) {
      if (idx == origin) continue;
      const std::vector<int> k = m.frequency(idx);
      cj(idx) = Complex(0.0, k[j] / std::sqrt(squared_radius(k))) * c(idx);
    }
    r.field.components.push_back(m.synthesize(cj));
  }
  return r;
}

RatioSweep riesz_holder_ratio(const LatticeModel& m, const std::vector<Function>& samples, double alpha) {
  if (!calculus::gradient_intertwines(m))
    throw IntertwiningUnverified("gradient of model '" + m.name() + "' does not commute with P_s");
  auto ratio = [&](const Function& f, int pd) -> std::pair<double, double> {
    const Function c = m.analyze(f);
    if (all_kernel(m, c)) return {0.0, 0.0};
    const holder::ScaleGrid grid = holder::grid_for_coefficients(m, {c}, pd);
    const GradientField rf = riesz_transform(m, f).field;
    std::vector<Function> coeffs;
    for (const Function& comp : rf.components) coeffs.push_back(m.analyze(comp));
    auto h = [&](double s) {
      GradientField d;
      for (const Function& cj : coeffs) d.components.push_back(m.apply_coefficients(poisson_multiplier(s, 1), cj));
      return std::pow(s, 1.0 - alpha) * d.pointwise_norm().maxCoeff();
    };
    return {holder::maximize(grid, h).value, holder::holder_seminorm(m, f, alpha, 1, false, grid).value};
  };
  return sweep(m.name(), alpha, samples, ratio);
}

ExponentFit fit_power_law(const std::function<double(double)>& v, double t_min, double t_max, int points) {
  if (points < 2 || !(t_min > 0.0) || !(t_max > t_min)) throw DomainError("power-law fit needs a proper window");
  std::vector<double> x(points), y(points);
  for (int i = 0; i < points; ++i) {
    const double t = t_min * std::pow(t_max / t_min, static_cast<double>(i) / (points - 1));
    x[i] = std::log(t);
    y[i] = std::log(v(t));
  }
  double mx = 0.0, my = 0.0;
  for (int i = 0; i < points; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= points;
  my /= points;
  double sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < points; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  ExponentFit fit;
  fit.t_min = t_min;
  fit.t_max = t_max;
  fit.points = points;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (int i = 0; i < points; ++i)
    fit.residual = std::max(fit.residual, std::abs(y[i] - fit.intercept - fit.slope * x[i]));
  return fit;
}

ExponentFit ultracontractivity_fit(const LatticeModel& m, double t_min, double t_max, int points, bool allow_outside) {
  const double f = m.bandwidth();
  if (!allow_outside && (t_min < 1.0 / (f * f) || t_max > 1.0))
    throw WindowError("ultracontractivity window must lie inside [F^-2, 1]");
  std::vector<double> psi;
  for (const auto& k : m.band(m.bandwidth())) psi.push_back(m.symbol(k));
  auto kernel_peak = [&](double t) {
    double sum = 1.0;
    for (double v : psi) sum += std::exp(-v * t);
    return sum;
  };
  ExponentFit fit = fit_power_law(kernel_peak, t_min, t_max, points);
  fit.dimension = -2.0 * fit.slope;
  return fit;
}

RatioSweep morrey_ratio(const LatticeModel& m, const std::vector<Function>& samples, double p) {
  const int n = m.dimension();
  if (!(p > n) || std::isinf(p)) throw DomainError("Morrey inequality needs n < p < infinity");
  const double alpha = 1.0 - n / p;
  auto ratio = [&](const Function& f, int pd) -> std::pair<double, double> {
    const Function c = m.analyze(f);
    if (all_kernel(m, c)) return {0.0, 0.0};
    const holder::ScaleGrid grid = holder::grid_for_coefficients(m, {c}, pd);
    return {holder::holder_seminorm(m, f, alpha, 1, false, grid).value, m.lp_norm(m.sqrt_generator(f), p)};
  };
  return sweep(m.name(), alpha, samples, ratio);
}

double poisson_p_to_inf_norm(int dimension, double s, double p) {
  if (!(s > 0.0)) throw NonpositiveTime("Poisson kernel needs s > 0");
  if (std::isinf(p)) return 1.0;
  if (!(p >= 1.0)) throw DomainError("p must be at least 1");
  if (p == 2.0) {
    const double a = 4.0 * kPi * s;
    const int cut = static_cast<int>(std::ceil(40.0 / a)) + 1;
    std::vector<int> idx(dimension, -cut);
    double sum = 0.0;
    while (true) {
      double r2 = 0.0;
      for (int v : idx) r2 += static_cast<double>(v) * v;
      sum += std::exp(-a * std::sqrt(r2));
      int d = dimension - 1;
      while (d >= 0 && idx[d] == cut) idx[d--] = -cut;
      if (d < 0) break;
      ++idx[d];
    }
    return std::sqrt(sum);
  }
  if (dimension != 1) throw BackendUnsupported("L^p -> L^infty Poisson norms for p != 2 are only available on T^1");
  // ||P_s||_{p->inf} = ||p_s||_{p'}, trapezoid rule on the periodic kernel.
  const double a = 2.0 * kPi * s;
  const double q = p == 1.0 ? kInf : p / (p - 1.0);
  if (std::isinf(q)) return std::sinh(a) / (std::cosh(a) - 1.0);
  const int n = std::max(256, static_cast<int>(std::ceil(12.0 / s)));
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double k = std::sinh(a) / (std::cosh(a) - std::cos(2.0 * kPi * i / n));
    acc += std::pow(k, q);
  }
  return std::pow(acc / n, 1.0 / q);
}

MorreyReverseReport morrey_reverse_check(const LatticeModel& m, const std::vector<Function>& samples, double p) {
  const int n = m.dimension();
  if (!(p > n) || std::isinf(p)) throw DomainError("Morrey inequality needs n < p < infinity");
  MorreyReverseReport r;
  r.p = p;
  r.alpha = 1.0 - n / p;
  std::vector<double> err(samples.size(), 0.0), ratio(samples.size(), 0.0);
  std::vector<char> excluded(samples.size(), 0);
  parallel_for(samples.size(), [&](std::size_t i) {
    const Function c = m.analyze(samples[i]);
    if (all_kernel(m, c)) {
      excluded[i] = 1;
      return;
    }
    Function g = c;
    for (Eigen::Index k = 0; k < g.size(); ++k) {
      const double lam = m.eigenvalues()(k);
      g(k) = lam > 0.0 ? c(k) / std::sqrt(lam) : Complex(0.0);
    }
    const holder::ScaleGrid grid = holder::grid_for_coefficients(m, {g});
    const double hold = holder::holder_seminorm(m, m.synthesize(g), r.alpha, 1, false, grid).value;
    const double scale = m.sup_norm(samples[i]);
    for (double s : grid.points()) {
      const double lhs = m.sup_norm(m.apply_coefficients(poisson_multiplier(s, 0), c));
      const double via = m.sup_norm(m.apply_coefficients(poisson_multiplier(s, 1), g));
      err[i] = std::max(err[i], std::abs(lhs - via) / std::max(lhs, scale));
      ratio[i] = std::max(ratio[i], lhs / (std::pow(s, r.alpha - 1.0) * hold));
    }
  });
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (excluded[i]) {
      ++r.excluded;
      continue;
    }
    ++r.samples_checked;
    r.max_chain_error = std::max(r.max_chain_error, err[i]);
    r.max_chain_ratio = std::max(r.max_chain_ratio, ratio[i]);
  }
  r.chain_holds = r.samples_checked > 0 && r.max_chain_error <= 1e-9 && r.max_chain_ratio <= 1.0 + 1e-9;
  const double lo = n == 1 ? 1e-3 : 1e-2;
  const double hi = n == 1 ? 1e-2 : 5e-2;
  r.operator_fit = fit_power_law([&](double s) { return poisson_p_to_inf_norm(n, s, p); }, lo, hi, 12);
  r.operator_fit.dimension = -r.operator_fit.slope * p;
  r.expected_exponent = n / p;
  r.exponent_matches = std::abs(-r.operator_fit.slope - r.expected_exponent) <= 0.1;
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Converges:
      return "converges";
    case Verdict::Diverges:
      return "diverges";
    case Verdict::Inconclusive:
      break;
  }
  return "inconclusive";
}

CogrowthReport cogrowth_estimate(int dimension, double s, int max_log2_cutoff) {
  if (dimension < 1 || dimension > 3) throw DomainError("cogrowth sums are computed for dimensions 1 to 3");
  const int levels = max_log2_cutoff > 0 ? max_log2_cutoff : (dimension == 1 ? 14 : dimension == 2 ? 9 : 6);
  const int cut = 1 << levels;
  std::vector<double> shell(levels + 1, 0.0);
  std::vector<int> idx(dimension, -cut);
  while (true) {
    int inf = 0;
    double r2 = 0.0;
    for (int v : idx) {
      inf = std::max(inf, std::abs(v));
      r2 += static_cast<double>(v) * v;
    }
    int j = 0;
    while ((1 << j) < inf) ++j;
    shell[j] += std::pow(1.0 + 4.0 * kPi * kPi * r2, -s / 2.0);
    int d = dimension - 1;
    while (d >= 0 && idx[d] == cut) idx[d--] = -cut;
    if (d < 0) break;
    ++idx[d];
  }
  CogrowthReport r;
  r.dimension = dimension;
  r.s = s;
  double sum = 0.0;
  for (int j = 0; j <= levels; ++j) {
    sum += shell[j];
    r.cutoffs.push_back(1 << j);
    r.partial_sums.push_back(sum);
    if (j > 0) r.increments.push_back(shell[j]);
  }
  // Slope of log increment against log F over the second half of the levels.
  const int first = static_cast<int>(r.increments.size()) / 2;
  double mx = 0.0, my = 0.0;
  int cnt = 0;
  for (int i = first; i < static_cast<int>(r.increments.size()); ++i) {
    mx += std::log(static_cast<double>(r.cutoffs[i + 1]));
    my += std::log(r.increments[i]);
    ++cnt;
  }
  mx /= cnt;
  my /= cnt;
  double sxx = 0.0, sxy = 0.0;
  for (int i = first; i < static_cast<int>(r.increments.size()); ++i) {
    const double x = std::log(static_cast<double>(r.cutoffs[i + 1])) - mx;
    sxx += x * x;
    sxy += x * (std::log(r.increments[i]) - my);
  }
  r.increment_slope = sxx > 0.0 ? sxy / sxx : 0.0;
  if (r.increments.back() < 1e-6 || r.increment_slope < -0.1)
    r.verdict = Verdict::Converges;
  else if (r.increment_slope > 0.1)
    r.verdict = Verdict::Diverges;
  return r;
}

SobolevReport sobolev_embedding(const LatticeModel& m, const std::vector<Function>& samples, double s) {
  SobolevReport r;
  r.s = s;
  double bound2 = 0.0;
  for (const auto& k : m.band(m.bandwidth())) bound2 += std::pow(1.0 + m.symbol(k), -s);
  r.bound = std::sqrt(bound2);
  for (const Function& f : samples) {
    const Function g = m.apply([&](double lam) { return Complex(std::pow(1.0 + lam, s / 2.0)); }, f);
    const double den = m.lp_norm(g, 2.0);
    if (den > kZero) r.max_ratio = std::max(r.max_ratio, m.sup_norm(f) / den);
  }
  r.holds = r.max_ratio <= r.bound * (1.0 + 1e-9);
  return r;
}

double sobolev_symbol_norm(const std::vector<Complex>& g, double s) {
  const int len = static_cast<int>(g.size());
  const int f = (len - 1) / 2;
  const int n = std::max(64, 8 * len);
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const double theta = static_cast<double>(j) / n;
    Complex v = 0.0;
    for (int i = 0; i < len; ++i) v += g[i] * std::polar(1.0, 2.0 * kPi * (i - f) * theta);
    acc += std::norm(v) * std::pow(3.0 - 2.0 * std::cos(2.0 * kPi * theta), s);
  }
  return std::sqrt(acc / n);
}

MarcinkiewiczReport marcinkiewicz_bound_and_ratio(const LatticeModel& m, const std::vector<Complex>& symbol,
                                                  const std::vector<Function>& samples, double alpha, double s) {
  if (m.dimension() != 1) throw DomainError("Marcinkiewicz experiment runs on the integer group");
  const int f = m.bandwidth();
  if (static_cast<int>(symbol.size()) != 2 * f + 1) throw DimensionMismatch("symbol must cover -F..F");
  MarcinkiewiczReport r;
  r.alpha = alpha;
  r.s = s;
  std::vector<double> root(2 * f + 1);
  double lo = kInf, hi = 0.0;
  for (int k = -f; k <= f; ++k) {
    const double psi = m.symbol({k});
    root[k + f] = std::sqrt(psi);
    if (psi > 0.0) {
      lo = std::min(lo, psi);
      hi = std::max(hi, psi);
    }
  }
  auto h = [&](double t) {
    std::vector<Complex> g(2 * f + 1);
    for (int i = 0; i <= 2 * f; ++i) {
      const double z = t * root[i];
      g[i] = symbol[i] * (z * std::exp(-z / 2.0));
    }
    return sobolev_symbol_norm(g, s);
  };
  const holder::SupResult sup = holder::maximize(holder::grid_for_spectrum(lo, hi), h);
  r.rhs = sup.value;
  r.t_star = sup.argmax;
  auto ratio = [&](const Function& x, int pd) -> std::pair<double, double> {
    const Function c = m.analyze(x);
    if (all_kernel(m, c)) return {0.0, 0.0};
    Function tc = Function::Zero(c.size());
    for (Eigen::Index idx = 0; idx < c.size(); ++idx) {
      const int k = m.frequency(idx)[0];
      if (std::abs(k) <= f) tc(idx) = symbol[k + f] * c(idx);
    }
    const holder::ScaleGrid grid = holder::grid_for_coefficients(m, {c}, pd);
    return {holder::holder_seminorm(m, m.synthesize(tc), alpha, 1, false, grid).value,
            holder::holder_seminorm(m, x, alpha, 1, false, grid).value};
  };
  r.ratio = sweep(m.name(), alpha, samples, ratio);
  r.lhs = r.ratio.max;
  r.lhs_over_rhs = r.rhs > 0.0 ? r.lhs / r.rhs : 0.0;
  return r;
}

}  // namespace sgholder::riesz
