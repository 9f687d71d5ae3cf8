#include "sgholder/holder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sgholder/errors.hpp"
#include "sgholder/gamma.hpp"
#include "sgholder/semigroup.hpp"

namespace sgholder::holder {

std::vector<double> ScaleGrid::points() const {
  if (!(s_min > 0.0) || !(s_max > s_min)) throw DomainError("scale grid needs 0 < s_min < s_max");
  const double decades = std::log10(s_max / s_min);
  const int n = static_cast<int>(std::ceil(decades * per_decade - 1e-9));
  std::vector<double> out(n + 1);
  for (int i = 0; i <= n; ++i) out[i] = (i == n) ? s_max : s_min * std::pow(10.0, static_cast<double>(i) / per_decade);
  return out;
}

ScaleGrid grid_for_spectrum(double lambda_min_positive, double lambda_max, int per_decade) {
  if (!(lambda_min_positive > 0.0) || !std::isfinite(lambda_min_positive))
    throw DomainError("spectral range has no positive eigenvalue");
  ScaleGrid g;
  g.s_min = 1e-3 / std::sqrt(lambda_max);
  g.s_max = 1e3 / std::sqrt(lambda_min_positive);
  g.per_decade = per_decade;
  return g;
}

ScaleGrid grid_for_coefficients(const SemigroupModel& m, const std::vector<Function>& coeffs, int per_decade) {
  const RealVector& lam = m.eigenvalues();
  double lo = kInf, hi = 0.0;
  for (const Function& c : coeffs) {
    const double cmax = c.cwiseAbs().maxCoeff();
    for (Eigen::Index k = 0; k < c.size(); ++k)
      if (lam(k) > 0.0 && std::abs(c(k)) > 1e-12 * cmax) {
        lo = std::min(lo, lam(k));
        hi = std::max(hi, lam(k));
      }
  }
  return grid_for_spectrum(lo, hi, per_decade);
}

SupResult maximize(const ScaleGrid& grid, const std::function<double(double)>& h,
                   const std::function<double(double)>& upper) {
  const std::vector<double> s = grid.points();
  const std::size_t n = s.size();
  std::vector<double> val(n, -kInf);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> bound;
  if (upper) {
    bound.resize(n);
    for (std::size_t i = 0; i < n; ++i) bound[i] = upper(s[i]);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return bound[a] > bound[b]; });
  }
  SupResult r;
  double best = -kInf;
  std::size_t arg = 0;
  for (std::size_t i : order) {
    if (upper && bound[i] <= best) break;
    val[i] = h(s[i]);
    ++r.evaluations;
    if (val[i] > best) {
      best = val[i];
      arg = i;
    }
  }
  r.value = best;
  r.argmax = s[arg];
  r.at_boundary = (arg == 0 || arg + 1 == n);
  // Golden section on [s_{i-1}, s_{i+1}] in log s.
  double a = std::log(s[arg > 0 ? arg - 1 : 0]);
  double b = std::log(s[arg + 1 < n ? arg + 1 : n - 1]);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double width = std::log1p(grid.refine_tol);
  auto eval = [&](double x) {
    const double v = h(std::exp(x));
    ++r.evaluations;
    if (v > r.value) {
      r.value = v;
      r.argmax = std::exp(x);
    }
    return v;
  };
  if (b > a) {
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = eval(x1), f2 = eval(x2);
    while (b - a > width) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + invphi * (b - a);
        f2 = eval(x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - invphi * (b - a);
        f1 = eval(x1);
      }
    }
  }
  return r;
}

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("Hoelder exponent must lie in (0, 1)");
}

}  // namespace

SeminormResult holder_seminorm(const SemigroupModel& m, const Function& f, double alpha, int order, bool quotient,
                               std::optional<ScaleGrid> grid) {
  check_alpha(alpha);
  if (order < 1) throw DomainError("derivative order must be at least 1");
  const Function c = m.analyze(f);
  SeminormResult r;
  if (c.cwiseAbs().maxCoeff() == 0.0) {
    r.grid = grid.value_or(ScaleGrid{});
    return r;
  }
  const bool nonzero = [&] {
    const double cmax = c.cwiseAbs().maxCoeff();
    for (Eigen::Index k = 0; k < c.size(); ++k)
      if (!m.is_kernel(k) && std::abs(c(k)) > 1e-12 * cmax) return true;
    return false;
  }();
  if (!nonzero) {
    r.grid = grid.value_or(ScaleGrid{});
    return r;
  }
  r.grid = grid.value_or(grid_for_coefficients(m, {c}));
  auto h = [&](double s) {
    const Function d = m.apply_coefficients(semigroup::poisson_multiplier(s, order), c);
    const double nrm = quotient ? m.quotient_sup_norm(d) : m.sup_norm(d);
    return std::pow(s, order - alpha) * nrm;
  };
  const SupResult sup = maximize(r.grid, h);
  r.value = sup.value;
  r.s_star = sup.argmax;
  r.range_warning = sup.at_boundary;
  r.evaluations = sup.evaluations;
  return r;
}

double holder_norm(const SemigroupModel& m, const Function& f, double alpha) {
  return std::max(m.sup_norm(f), holder_seminorm(m, f, alpha).value);
}

SeminormResult hilbert_holder_seminorm(const SemigroupModel& m, const GradientField& field, double alpha,
                                       std::optional<ScaleGrid> grid) {
  check_alpha(alpha);
  if (!calculus::gradient_intertwines(m))
    throw IntertwiningUnverified("gradient of model '" + m.name() + "' does not commute with P_s");
  std::vector<Function> coeffs;
  for (const Function& comp : field.components) coeffs.push_back(m.analyze(comp));
  SeminormResult r;
  r.grid = grid.value_or(grid_for_coefficients(m, coeffs));
  auto h = [&](double s) {
    GradientField d;
    for (const Function& c : coeffs) d.components.push_back(m.apply_coefficients(semigroup::poisson_multiplier(s, 1), c));
    return std::pow(s, 1.0 - alpha) * d.pointwise_norm().maxCoeff();
  };
  const SupResult sup = maximize(r.grid, h);
  r.value = sup.value;
  r.s_star = sup.argmax;
  r.range_warning = sup.at_boundary;
  r.evaluations = sup.evaluations;
  return r;
}

double eqsquare_ratio(const SemigroupModel& m, const Function& f, double alpha) {
  const double one = holder_seminorm(m, f, alpha, 1).value;
  const double two = holder_seminorm(m, f, alpha, 2).value;
  if (!(one > 0.0)) throw DomainError("seminorm vanishes");
  return two / one;
}

WeaverResult weaver_norm(const qt::Element& f, double alpha, const WeaverOptions& opt) {
  check_alpha(alpha);
  const int n = f.n;
  const int side = opt.z_per_axis;
  if (side < 2 || side % 2) throw DomainError("z grid needs an even number of points per axis");
  WeaverResult r;
  Function warm;
  r.sup_norm = qt::operator_norm_on_box(f, opt.norm.box, opt.norm.tol, &warm);
  ++r.norm_evaluations;

  // Grid offsets j in [-side/2, side/2)^n, z = j / side, stored flat.
  const int half = side / 2;
  std::size_t total = 1;
  for (int d = 0; d < n; ++d) total *= static_cast<std::size_t>(side);
  auto decode = [&](std::size_t idx) {
    std::vector<int> j(n);
    for (int d = n - 1; d >= 0; --d) {
      j[d] = static_cast<int>(idx % side) - half;
      idx /= side;
    }
    return j;
  };
  auto encode = [&](const std::vector<int>& j) {
    std::size_t idx = 0;
    for (int d = 0; d < n; ++d) idx = idx * side + static_cast<std::size_t>(((j[d] + half) % side + side) % side);
    return idx;
  };
  auto wrap = [&](int v) { return ((v + half) % side + side) % side - half; };
  auto geodesic = [&](const std::vector<int>& a, const std::vector<int>& b) {
    double s = 0.0;
    for (int d = 0; d < n; ++d) {
      const int dv = std::abs(wrap(a[d] - b[d]));
      s += static_cast<double>(dv) * dv;
    }
    return std::sqrt(s) / side;
  };
  const std::vector<int> origin(n, 0);

  double l1 = 0.0;
  for (const auto& [k, a] : f.coeffs) l1 += std::abs(a);
  // Bound on N(j) = ||sigma_z f - f|| from the triangle inequality over modes.
  auto triangle = [&](const std::vector<int>& j) {
    double b = 0.0;
    for (const auto& [k, a] : f.coeffs) {
      double phase = 0.0;
      for (int d = 0; d < n; ++d) phase += static_cast<double>(j[d]) * k[d] / side;
      b += std::abs(a) * std::abs(std::polar(1.0, 2.0 * kPi * phase) - 1.0);
    }
    return std::min(b, 2.0 * l1);
  };
  auto to_z = [&](const std::vector<int>& j) {
    std::vector<double> z(n);
    for (int d = 0; d < n; ++d) z[d] = static_cast<double>(j[d]) / side;
    return z;
  };
  auto difference = [&](const std::vector<double>& z) { return qt::add(qt::rotate(f, z), qt::scale(f, -1.0)); };

  // upper[i] bounds N(z_i); exact where evaluated. N is even in z and
  // subadditive, N(z) <= N(c) + N(z - c), so coarse corners bound the finer
  // levels.
  std::vector<double> upper(total, kInf);
  std::vector<char> exact(total, 0);
  upper[encode(origin)] = 0.0;
  exact[encode(origin)] = 1;

  int step = 1;
  while (half % (2 * step) == 0 && 2 * step <= half / 2) step *= 2;
  double best = 0.0;
  std::vector<int> best_j;
  auto candidate = [&](const std::vector<int>& j) {
    int nonzero = 0;
    for (int v : j) nonzero += v != 0;
    return nonzero > 0 && (!opt.axis_only || nonzero == 1);
  };
  std::vector<std::pair<std::size_t, Function>> vectors;
  bool first_level = true;
  for (int s = step; s >= 1; s /= 2) {
    const int prev = 2 * s;
    std::vector<std::pair<double, std::size_t>> queue;
    for (std::size_t idx = 0; idx < total; ++idx) {
      const std::vector<int> j = decode(idx);
      bool on_level = true, on_prev = true;
      for (int v : j) {
        on_level = on_level && v % s == 0;
        on_prev = on_prev && v % prev == 0;
      }
      if (!on_level || (!first_level && on_prev) || !candidate(j)) continue;
      double u = triangle(j);
      if (!first_level) {
        // Corners of the coarse cell around j.
        for (int mask = 0; mask < (1 << n); ++mask) {
          std::vector<int> c(n);
          for (int d = 0; d < n; ++d) {
            const int lo = static_cast<int>(std::floor(static_cast<double>(j[d]) / prev)) * prev;
            c[d] = wrap((mask >> d) & 1 ? lo + prev : lo);
          }
          const double a = upper[encode(c)];
          std::vector<int> step_j(n);
          for (int d = 0; d < n; ++d) step_j[d] = wrap(j[d] - c[d]);
          if (std::isfinite(a)) u = std::min(u, a + triangle(step_j));
        }
      }
      upper[idx] = u;
      queue.emplace_back(u / std::pow(geodesic(j, origin), alpha), idx);
    }
    std::stable_sort(queue.begin(), queue.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [bound, idx] : queue) {
      if (bound <= best) break;
      const std::vector<int> j = decode(idx);
      std::vector<int> neg(n);
      for (int d = 0; d < n; ++d) neg[d] = wrap(-j[d]);
      const std::size_t mirror = encode(neg);
      double value;
      if (exact[mirror]) {
        value = upper[mirror];
      } else {
        // Warm start from the nearest evaluated offset.
        const Function* start = &warm;
        double nearest = kInf;
        for (const auto& [other, vec] : vectors) {
          const double d = geodesic(j, decode(other));
          if (d < nearest) {
            nearest = d;
            start = &vec;
          }
        }
        Function v = *start;
        value = qt::operator_norm_on_box(difference(to_z(j)), opt.norm.box, opt.norm.tol, &v);
        ++r.norm_evaluations;
        vectors.emplace_back(idx, std::move(v));
        upper[mirror] = value;
        exact[mirror] = 1;
      }
      upper[idx] = value;
      exact[idx] = 1;
      const double ratio = value / std::pow(geodesic(j, origin), alpha);
      if (ratio > best) {
        best = ratio;
        best_j = j;
      }
    }
    first_level = false;
  }
  r.lipschitz_part = best;
  if (!best_j.empty()) r.z_star = to_z(best_j);
  if (opt.norm.check_boundary) {
    const int outer = opt.norm.box + 4;
    const double sup_outer = qt::operator_norm_on_box(f, outer, opt.norm.tol);
    ++r.norm_evaluations;
    double lip_outer = 0.0;
    if (!best_j.empty()) {
      lip_outer = qt::operator_norm_on_box(difference(r.z_star), outer, opt.norm.tol) /
                  std::pow(geodesic(best_j, origin), alpha);
      ++r.norm_evaluations;
    }
    auto off = [&](double inner, double outer_v) {
      return std::abs(outer_v - inner) > opt.norm.boundary_tol * std::max(outer_v, 1e-300);
    };
    r.boundary_warning = off(r.sup_norm, sup_outer) || off(r.lipschitz_part, lip_outer);
    r.sup_norm = std::max(r.sup_norm, sup_outer);
    r.lipschitz_part = std::max(r.lipschitz_part, lip_outer);
  }
  r.value = std::max(r.sup_norm, r.lipschitz_part);
  return r;
}

SeminormResult qt_holder_seminorm(const qt::Element& f, double alpha, const qt::NormOptions& norm, int per_decade) {
  check_alpha(alpha);
  SeminormResult r;
  double lo = kInf, hi = 0.0;
  for (const auto& [k, a] : f.coeffs) {
    double s = 0.0;
    for (int v : k) s += static_cast<double>(v) * v;
    if (s > 0.0) {
      lo = std::min(lo, 4.0 * kPi * kPi * s);
      hi = std::max(hi, 4.0 * kPi * kPi * s);
    }
  }
  if (hi == 0.0) return r;
  r.grid = grid_for_spectrum(lo, hi, per_decade);
  auto radial = [](const qt::Mode& k) {
    double s = 0.0;
    for (int v : k) s += static_cast<double>(v) * v;
    return 2.0 * kPi * std::sqrt(s);
  };
  auto derivative = [&](double s) {
    return qt::map_coefficients(f, [&](const qt::Mode& k) { return Complex(-radial(k) * std::exp(-s * radial(k))); });
  };
  Function warm;
  auto h = [&](double s) {
    return std::pow(s, 1.0 - alpha) * qt::operator_norm_on_box(derivative(s), norm.box, norm.tol, &warm);
  };
  auto upper = [&](double s) {
    double b = 0.0;
    for (const auto& [k, a] : f.coeffs) b += std::abs(a) * radial(k) * std::exp(-s * radial(k));
    return std::pow(s, 1.0 - alpha) * b;
  };
  const SupResult sup = maximize(r.grid, h, upper);
  r.value = sup.value;
  r.s_star = sup.argmax;
  r.range_warning = sup.at_boundary;
  r.evaluations = sup.evaluations;
  if (norm.check_boundary && r.value > 0.0) {
    const double outer =
        std::pow(r.s_star, 1.0 - alpha) * qt::operator_norm_on_box(derivative(r.s_star), norm.box + 4, norm.tol);
    ++r.evaluations;
    if (std::abs(outer - r.value) > norm.boundary_tol * outer) r.range_warning = true;
    r.value = std::max(r.value, outer);
  }
  return r;
}

}  // namespace sgholder::holder
