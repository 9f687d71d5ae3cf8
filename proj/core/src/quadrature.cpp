#include "sgholder/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace sgholder::quadrature {

namespace {

Rule golub_welsch(const RealVector& diag, const RealVector& offdiag, double mu0) {
  Eigen::SelfAdjointEigenSolver<Matrix> es;
  es.computeFromTridiagonal(diag, offdiag, Eigen::ComputeEigenvectors);
  Rule r;
  const auto n = diag.size();
  r.nodes.resize(n);
  r.weights.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    r.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    r.weights[i] = mu0 * v0 * v0;
  }
  return r;
}

// QUADPACK qk15 abscissae and weights.
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T, class F, class Norm>
std::pair<T, double> kronrod15(const F& f, double a, double b, const Norm& norm) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T fc = f(c);
  T kron = fc * kWgk[7];
  T gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    T f1 = f(c - dx);
    T f2 = f(c + dx);
    T sum = f1 + f2;
    kron += sum * kWgk[j];
    if (j % 2 == 1) gauss += sum * kWg[j / 2];
  }
  kron *= h;
  gauss *= h;
  const double err = norm(kron - gauss);
  return {kron, err};
}

template <class T, class F, class Norm>
std::tuple<T, double, int> adaptive(const F& f, double a, double b, double abs_tol, double rel_tol,
                                    int max_intervals, const Norm& norm) {
  struct Seg {
    double a, b;
    T value;
    double error;
  };
  auto cmp = [](const Seg& x, const Seg& y) { return x.error < y.error; };
  std::priority_queue<Seg, std::vector<Seg>, decltype(cmp)> heap(cmp);
  auto [v0, e0] = kronrod15<T>(f, a, b, norm);
  T total = v0;
  double total_err = e0;
  heap.push({a, b, v0, e0});
  int evals = 15;
  while (static_cast<int>(heap.size()) < max_intervals) {
    const double target = std::max(abs_tol, rel_tol * norm(total));
    if (total_err <= target) break;
    Seg s = heap.top();
    heap.pop();
    const double m = 0.5 * (s.a + s.b);
    if (!(m > s.a && m < s.b)) {
      heap.push(s);
      break;
    }
    auto [vl, el] = kronrod15<T>(f, s.a, m, norm);
    auto [vr, er] = kronrod15<T>(f, m, s.b, norm);
    evals += 30;
    total = total - s.value + vl + vr;
    total_err += el + er - s.error;
    heap.push({s.a, m, vl, el});
    heap.push({m, s.b, vr, er});
  }
  // Re-sum to shed the cancellation drift of the running totals.
  T sum = heap.top().value * 0.0;
  double err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {sum, err, evals};
}

}  // namespace

Rule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  RealVector diag = RealVector::Zero(n);
  RealVector off(std::max(n - 1, 0));
  for (int i = 1; i < n; ++i) off(i - 1) = i / std::sqrt(4.0 * i * i - 1.0);
  return golub_welsch(diag, off, 2.0);
}

Rule gauss_laguerre(int n, double alpha) {
  if (n < 1 || alpha <= -1.0) throw std::invalid_argument("gauss_laguerre: bad parameters");
  RealVector diag(n);
  RealVector off(std::max(n - 1, 0));
  for (int i = 0; i < n; ++i) diag(i) = 2.0 * i + alpha + 1.0;
  for (int i = 1; i < n; ++i) off(i - 1) = std::sqrt(i * (i + alpha));
  return golub_welsch(diag, off, std::tgamma(alpha + 1.0));
}

Rule exp_sinh_half_gamma(double h, double t_min, double t_max) {
  Rule r;
  double total = 0.0;
  const int n = static_cast<int>(std::floor((t_max - t_min) / h + 0.5));
  for (int j = 0; j <= n; ++j) {
    const double t = t_min + j * h;
    const double u = std::exp(0.5 * kPi * std::sinh(t));
    const double du = u * 0.5 * kPi * std::cosh(t);
    const double w = h * du * std::exp(-u) / std::sqrt(u * kPi);
    if (w == 0.0 || !std::isfinite(w)) continue;
    r.nodes.push_back(u);
    r.weights.push_back(w);
    total += w;
  }
  for (double& w : r.weights) w /= total;
  return r;
}

ScalarResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                       double rel_tol, int max_intervals) {
  auto [v, e, n] = adaptive<double>(f, a, b, abs_tol, rel_tol, max_intervals,
                                    [](double x) { return std::abs(x); });
  return {v, e, n};
}

VectorResult integrate(const std::function<Function(double)>& f, double a, double b, double abs_tol,
                       double rel_tol, int max_intervals) {
  auto [v, e, n] = adaptive<Function>(f, a, b, abs_tol, rel_tol, max_intervals,
                                      [](const Function& x) { return sup_abs(x); });
  return {v, e, n};
}

Function graded_gauss_legendre(const std::function<Function(double)>& f, double a, double b, int panels,
                               int order, bool include_origin) {
  const Rule gl = gauss_legendre(order);
  auto panel = [&](double lo, double hi, Function& acc, bool& init) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    for (int i = 0; i < order; ++i) {
      Function v = f(c + h * gl.nodes[i]) * (h * gl.weights[i]);
      if (!init) {
        acc = v;
        init = true;
      } else {
        acc += v;
      }
    }
  };
  Function acc;
  bool init = false;
  if (include_origin) panel(0.0, a, acc, init);
  const double ratio = std::pow(b / a, 1.0 / panels);
  double lo = a;
  for (int p = 0; p < panels; ++p) {
    const double hi = (p + 1 == panels) ? b : lo * ratio;
    panel(lo, hi, acc, init);
    lo = hi;
  }
  return acc;
}

}  // namespace sgholder::quadrature
