#include "sgholder/quantum_torus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <Eigen/Eigenvalues>
#include <nlohmann/json.hpp>

#include "sgholder/errors.hpp"
#include "sgholder/rng.hpp"

namespace sgholder::qt {

Element::Element(int dim, Matrix th) : n(dim), theta(std::move(th)) {}

Complex Element::chi(const Mode& a, const Mode& b) const {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) s += a[i] * theta(i, j) * b[j];
  return std::polar(1.0, 2.0 * kPi * s);
}

int Element::degree() const {
  int d = 0;
  for (const auto& [k, v] : coeffs)
    for (int x : k) d = std::max(d, std::abs(x));
  return d;
}

Element make_element(int n, const Matrix& theta, const std::map<Mode, Complex>& coeffs) {
  if (n < 1) throw DomainError("quantum torus dimension must be positive");
  if (theta.rows() != n || theta.cols() != n) throw DimensionMismatch("theta must be n x n");
  if ((theta + theta.transpose()).cwiseAbs().maxCoeff() > 1e-14)
    throw SymmetryError("theta must be antisymmetric");
  Element e(n, theta);
  for (const auto& [k, v] : coeffs) {
    if (static_cast<int>(k.size()) != n) throw DimensionMismatch("mode dimension mismatch");
    if (v != Complex(0.0)) e.coeffs[k] += v;
  }
  return e;
}

Element read_element(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
    const int n = j.at("n").get<int>();
    Matrix theta = Matrix::Zero(n, n);
    const auto& th = j.at("theta");
    if (!th.is_array() || static_cast<int>(th.size()) != n) throw ParseError("theta must have n rows", 0);
    for (int r = 0; r < n; ++r) {
      if (!th[r].is_array() || static_cast<int>(th[r].size()) != n) throw ParseError("theta must have n columns", 0);
      for (int c = 0; c < n; ++c) theta(r, c) = th[r][c].get<double>();
    }
    std::map<Mode, Complex> coeffs;
    for (const auto& c : j.at("coeffs")) {
      Mode k = c.at("k").get<Mode>();
      const double re = c.value("re", 0.0);
      const double im = c.value("im", 0.0);
      coeffs[k] += Complex(re, im);
    }
    return make_element(n, theta, coeffs);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("quantum torus element: ") + e.what(), 0);
  }
}

Element read_element_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open element file '" + path + "'", 0);
  return read_element(in);
}

namespace {

void same_algebra(const Element& a, const Element& b) {
  if (a.n != b.n || (a.theta - b.theta).cwiseAbs().maxCoeff() > 0.0)
    throw DimensionMismatch("elements live in different quantum tori");
}

Mode plus(const Mode& a, const Mode& b) {
  Mode c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Mode minus(const Mode& a) {
  Mode c(a);
  for (int& v : c) v = -v;
  return c;
}

void prune(Element& e) {
  for (auto it = e.coeffs.begin(); it != e.coeffs.end();)
    it = (std::abs(it->second) == 0.0) ? e.coeffs.erase(it) : std::next(it);
}

}  // namespace

Element multiply(const Element& a, const Element& b) {
  same_algebra(a, b);
  Element out(a.n, a.theta);
  for (const auto& [k, x] : a.coeffs)
    for (const auto& [l, y] : b.coeffs) out.coeffs[plus(k, l)] += x * y * a.chi(k, l);
  prune(out);
  return out;
}

Element adjoint(const Element& a) {
  Element out(a.n, a.theta);
  // u_k^* = u_k^{-1} = conj(chi(k, -k)) u_{-k}.
  for (const auto& [k, x] : a.coeffs) out.coeffs[minus(k)] += std::conj(x * a.chi(k, minus(k)));
  return out;
}

Element add(const Element& a, const Element& b) {
  same_algebra(a, b);
  Element out = a;
  for (const auto& [k, y] : b.coeffs) out.coeffs[k] += y;
  prune(out);
  return out;
}

Element scale(const Element& a, Complex c) {
  return map_coefficients(a, [c](const Mode&) { return c; });
}

Element map_coefficients(const Element& a, const std::function<Complex(const Mode&)>& m) {
  Element out(a.n, a.theta);
  for (const auto& [k, x] : a.coeffs) out.coeffs[k] = m(k) * x;
  prune(out);
  return out;
}

Element rotate(const Element& a, const std::vector<double>& z) {
  if (static_cast<int>(z.size()) != a.n) throw DimensionMismatch("rotation dimension mismatch");
  return map_coefficients(a, [&](const Mode& k) {
    double s = 0.0;
    for (int i = 0; i < a.n; ++i) s += z[i] * k[i];
    return std::polar(1.0, 2.0 * kPi * s);
  });
}

Eigen::SparseMatrix<Complex> represent(const Element& a, int box) {
  if (box < a.degree() + 1) throw BoxTooSmall("box radius must exceed the support radius");
  const int side = 2 * box + 1;
  Eigen::Index dim = 1;
  for (int d = 0; d < a.n; ++d) dim *= side;
  std::vector<Eigen::Triplet<Complex>> trips;
  trips.reserve(static_cast<std::size_t>(dim) * a.coeffs.size());
  Mode l(a.n), src(a.n);
  for (Eigen::Index row = 0; row < dim; ++row) {
    Eigen::Index r = row;
    for (int d = a.n - 1; d >= 0; --d) {
      l[d] = static_cast<int>(r % side) - box;
      r /= side;
    }
    const Mode neg = minus(l);
    for (const auto& [k, x] : a.coeffs) {
      Eigen::Index col = 0;
      bool inside = true;
      for (int d = 0; d < a.n; ++d) {
        src[d] = l[d] - k[d];
        inside = inside && std::abs(src[d]) <= box;
        col = col * side + (src[d] + box);
      }
      if (inside) trips.emplace_back(row, col, x * a.chi(neg, k));
    }
  }
  Eigen::SparseMatrix<Complex> m(dim, dim);
  m.setFromTriplets(trips.begin(), trips.end());
  m.makeCompressed();
  return m;
}

namespace {

// Largest eigenvalue of the positive operator H = M^* M by Lanczos without
// reorthogonalization: loss of orthogonality only duplicates converged Ritz
// values, so the top one stays reliable. The top Ritz value is checked every
// 10 steps; a run stops once its change, extrapolated geometrically, leaves
// less than tol/10 relative, and restarts from the Ritz vector after 400 steps.
double top_eigenvalue(const Eigen::SparseMatrix<Complex>& m, double tol, Function* warm, int* iterations) {
  const Eigen::Index dim = m.cols();
  // H = M^* M in row-major form, applied with split real and imaginary parts.
  const Eigen::SparseMatrix<Complex, Eigen::RowMajor> h = Eigen::SparseMatrix<Complex>(m.adjoint()) * m;
  const std::vector<int> ptr(h.outerIndexPtr(), h.outerIndexPtr() + dim + 1);
  const std::vector<int> col(h.innerIndexPtr(), h.innerIndexPtr() + h.nonZeros());
  std::vector<double> re(h.nonZeros()), im(h.nonZeros());
  for (Eigen::Index i = 0; i < h.nonZeros(); ++i) {
    re[i] = h.valuePtr()[i].real();
    im[i] = h.valuePtr()[i].imag();
  }
  auto apply = [&](const Function& x, Function& y) {
    const double* xp = reinterpret_cast<const double*>(x.data());
    double* yp = reinterpret_cast<double*>(y.data());
    for (Eigen::Index row = 0; row < dim; ++row) {
      double a = 0.0, b = 0.0;
      for (int q = ptr[row]; q < ptr[row + 1]; ++q) {
        const double xr = xp[2 * col[q]], xi = xp[2 * col[q] + 1];
        a += re[q] * xr - im[q] * xi;
        b += re[q] * xi + im[q] * xr;
      }
      yp[2 * row] = a;
      yp[2 * row + 1] = b;
    }
  };
  Function v;
  if (warm && warm->size() == dim && warm->norm() > 0.0) {
    v = *warm;
  } else {
    v.resize(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(1.0 + 0.5 * std::cos(0.7 * i), 0.25 * std::sin(1.3 * i));
  }
  v.normalize();
  constexpr int kSteps = 400;
  constexpr int kCheck = 10;
  constexpr int kRestarts = 20;
  const int steps = static_cast<int>(std::min<Eigen::Index>(kSteps, dim));
  // Top eigenvalue of the Lanczos tridiagonal by Sturm-sequence bisection.
  auto top = [](const std::vector<double>& alpha, const std::vector<double>& beta, int k) {
    double lo = kInf, hi = -kInf;
    for (int i = 0; i < k; ++i) {
      const double r = (i > 0 ? std::abs(beta[i - 1]) : 0.0) + (i + 1 < k ? std::abs(beta[i]) : 0.0);
      lo = std::min(lo, alpha[i] - r);
      hi = std::max(hi, alpha[i] + r);
    }
    auto count_above = [&](double x) {
      int count = 0;
      double d = 1.0;
      for (int i = 0; i < k; ++i) {
        const double b2 = i > 0 ? beta[i - 1] * beta[i - 1] : 0.0;
        d = alpha[i] - x - (i > 0 ? b2 / d : 0.0);
        if (d == 0.0) d = -1e-300;
        if (d > 0.0) ++count;
      }
      return count;
    };
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(std::abs(hi), 1e-300); ++it) {
      const double mid = 0.5 * (lo + hi);
      if (count_above(mid) > 0)
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  };
  // Top Ritz vector by inverse iteration on the positive definite (theta + delta) I - T.
  auto ritz_vector = [](const std::vector<double>& alpha, const std::vector<double>& beta, int k, double theta) {
    const double shift = theta + 1e-10 * std::max(std::abs(theta), 1e-300);
    RealVector y = RealVector::Ones(k);
    RealVector d(k), l(std::max(k - 1, 0));
    for (int i = 0; i < k; ++i) {
      d(i) = shift - alpha[i];
      if (i > 0) {
        l(i - 1) = -beta[i - 1] / d(i - 1);
        d(i) -= l(i - 1) * -beta[i - 1];
      }
    }
    for (int pass = 0; pass < 3; ++pass) {
      for (int i = 1; i < k; ++i) y(i) -= l(i - 1) * y(i - 1);
      for (int i = 0; i < k; ++i) y(i) /= d(i);
      for (int i = k - 2; i >= 0; --i) y(i) -= l(i) * y(i + 1);
      y.normalize();
    }
    return y;
  };
  double theta = 0.0;
  int iters = 0;
  std::vector<Function> basis;
  for (int restart = 0; restart < kRestarts; ++restart) {
    basis.assign(1, v);
    std::vector<double> alpha, beta;
    double prev = -1.0, prev_change = -1.0;
    bool converged = false;
    Function w(dim);
    for (int j = 0; j < steps; ++j) {
      apply(basis[j], w);
      ++iters;
      alpha.push_back(basis[j].dot(w).real());
      w -= alpha.back() * basis[j];
      if (j > 0) w -= beta.back() * basis[j - 1];
      const double b = w.norm();
      const int k = j + 1;
      const bool breakdown = b <= 1e-13 * std::max(std::abs(alpha.back()), 1e-300);
      if (breakdown || k % kCheck == 0) {
        theta = top(alpha, beta, k);
        if (prev > 0.0) {
          // Remaining error from the geometric rate of the last two changes.
          const double change = std::max(theta - prev, 0.0);
          const double rate = prev_change > 0.0 ? change / prev_change : 1.0;
          const bool settled = change <= 1e-3 * tol * theta ||
                               (rate < 0.9 && change * rate / (1.0 - rate) <= 0.1 * tol * theta);
          if (settled) converged = true;
          prev_change = change;
        }
        if (breakdown || converged) {
          converged = true;
          break;
        }
        prev = theta;
      }
      if (k == steps) break;
      beta.push_back(b);
      basis.push_back(w / b);
    }
    const int k = static_cast<int>(alpha.size());
    theta = top(alpha, beta, k);
    const RealVector y = ritz_vector(alpha, beta, k, theta);
    Function next = Function::Zero(dim);
    for (int i = 0; i < k; ++i) next += y(i) * basis[i];
    v = next.normalized();
    if (converged) break;
    if (restart + 1 == kRestarts) throw ConvergenceError("Lanczos did not reach the requested tolerance");
  }
  if (warm) *warm = v;
  if (iterations) *iterations = iters;
  return theta;
}

}  // namespace

double operator_norm_on_box(const Element& a, int box, double tol, Function* warm, int* iterations) {
  if (a.coeffs.empty()) return 0.0;
  const auto m = represent(a, box);
  return std::sqrt(std::max(top_eigenvalue(m, tol, warm, iterations), 0.0));
}

NormResult operator_norm(const Element& a, const NormOptions& opt) {
  NormResult r;
  r.value = operator_norm_on_box(a, opt.box, opt.tol, nullptr, &r.iterations);
  if (opt.check_boundary) {
    r.outer_value = operator_norm_on_box(a, opt.box + 4, opt.tol);
    r.boundary_warning = std::abs(r.outer_value - r.value) > opt.boundary_tol * std::max(r.outer_value, 1e-300);
  }
  return r;
}

Element random_element(int n, const Matrix& theta, std::uint64_t seed, std::uint64_t index, int degree) {
  if (n < 1 || degree < 0) throw DomainError("random element needs n >= 1 and degree >= 0");
  RandomStream rng(seed, index);
  std::map<Mode, Complex> coeffs;
  Mode k(n, -degree);
  double l1 = 0.0;
  while (true) {
    const Complex a = rng.complex_normal();
    coeffs[k] = a;
    l1 += std::abs(a);
    int d = n - 1;
    while (d >= 0 && k[d] == degree) k[d--] = -degree;
    if (d < 0) break;
    ++k[d];
  }
  for (auto& [mode, a] : coeffs) a /= l1;
  return make_element(n, theta, coeffs);
}

}  // namespace sgholder::qt
