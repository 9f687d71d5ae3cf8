#include "sgholder/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "sgholder/errors.hpp"

namespace sgholder {

namespace {

constexpr double kRelTol = 1e-10;

std::string entry(Eigen::Index i, Eigen::Index j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}

std::vector<int> component_labels(const Matrix& a, int& count) {
  const auto n = a.rows();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (a(i, j) != 0.0 || a(j, i) != 0.0) parent[find(i)] = find(j);
  std::vector<int> label(n, -1), root_label(n, -1);
  count = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const int r = find(i);
    if (root_label[r] < 0) root_label[r] = count++;
    label[i] = root_label[r];
  }
  return label;
}

// Symmetric S = D^{1/2} A D^{-1/2}.
Matrix symmetrized(const RealVector& mu, const Matrix& a) {
  const RealVector s = mu.cwiseSqrt();
  Matrix out = s.asDiagonal() * a * s.cwiseInverse().asDiagonal();
  return 0.5 * (out + out.transpose());
}

}  // namespace

StateSpace::StateSpace(RealVector mu) : mu_(std::move(mu)) {
  if (mu_.size() == 0) throw DimensionMismatch("state space must be nonempty");
  for (Eigen::Index i = 0; i < mu_.size(); ++i)
    if (!(mu_(i) > 0.0) || !std::isfinite(mu_(i)))
      throw DomainError("measure must be strictly positive at state " + std::to_string(i));
}

StateSpace StateSpace::uniform(std::size_t n) {
  return StateSpace(RealVector::Constant(static_cast<Eigen::Index>(n), 1.0 / static_cast<double>(n)));
}

FiniteChainGenerator::FiniteChainGenerator(StateSpace space, Matrix a) : space_(std::move(space)), a_(std::move(a)) {
  const auto n = static_cast<Eigen::Index>(space_.size());
  if (a_.rows() != n || a_.cols() != n) throw DimensionMismatch("generator shape does not match state space");
  const RealVector& mu = space_.mu();
  const double scale = std::max(a_.cwiseAbs().maxCoeff(), 1e-300);
  for (Eigen::Index i = 0; i < n; ++i) {
    double row = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!std::isfinite(a_(i, j))) throw DomainError("non-finite generator entry " + entry(i, j));
      if (i != j && a_(i, j) > 0.0) throw SignError("positive off-diagonal entry " + entry(i, j));
      row += a_(i, j);
    }
    if (std::abs(row) > kRelTol * scale * n) throw RowSumError("row " + std::to_string(i) + " does not sum to zero");
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double l = mu(i) * a_(i, j);
      const double r = mu(j) * a_(j, i);
      if (std::abs(l - r) > kRelTol * (std::abs(l) + std::abs(r)) + 1e-300)
        throw DetailedBalanceError("detailed balance fails at " + entry(i, j));
    }
  Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrized(mu, a_));
  const RealVector& lam = es.eigenvalues();
  const double lmax = std::max(lam.cwiseAbs().maxCoeff(), 1e-300);
  if (lam.minCoeff() < -1e-9 * lmax) throw NotMarkovian("generator has negative spectrum");
  const RealVector s = mu.cwiseSqrt();
  for (double t : {0.1 / lmax, 1.0 / lmax}) {
    const RealVector e = (-t * lam.array()).exp().matrix();
    const Matrix sym = es.eigenvectors() * e.asDiagonal() * es.eigenvectors().transpose();
    const Matrix tt = s.cwiseInverse().asDiagonal() * sym * s.asDiagonal();
    if (tt.minCoeff() < -1e-10) throw NotMarkovian("exp(-tA) has a negative entry");
    const RealVector rows = tt.rowwise().sum();
    if ((rows.array() - 1.0).abs().maxCoeff() > 1e-9) throw NotMarkovian("exp(-tA) is not row stochastic");
  }
}

Function SpectralDecomposition::coefficients(const Function& f) const {
  if (static_cast<std::size_t>(f.size()) != size()) throw DimensionMismatch("function length mismatch");
  Function c(f.size());
  c.real() = analysis * f.real();
  c.imag() = analysis * f.imag();
  return c;
}

Function SpectralDecomposition::synthesize(const Function& c) const {
  if (static_cast<std::size_t>(c.size()) != size()) throw DimensionMismatch("coefficient length mismatch");
  Function f(c.size());
  f.real() = phi * c.real();
  f.imag() = phi * c.imag();
  return f;
}

SpectralDecomposition eigendecompose(const FiniteChainGenerator& gen) {
  const RealVector& mu = gen.space().mu();
  Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrized(mu, gen.matrix()));
  SpectralDecomposition d;
  d.mu = mu;
  d.eigenvalues = es.eigenvalues();
  const double lmax = std::max(d.eigenvalues.maxCoeff(), 0.0);
  d.kernel_tolerance = kRelTol * lmax;
  for (Eigen::Index k = 0; k < d.eigenvalues.size(); ++k)
    if (d.eigenvalues(k) < d.kernel_tolerance || lmax == 0.0) {
      d.eigenvalues(k) = 0.0;
      ++d.kernel_dimension;
    }
  const RealVector s = mu.cwiseSqrt();
  d.phi = s.cwiseInverse().asDiagonal() * es.eigenvectors();
  d.analysis = d.phi.transpose() * mu.asDiagonal();
  d.component = component_labels(gen.matrix(), d.components);
  return d;
}

Function spectral_apply(const SpectralDecomposition& dec, const std::function<Complex(double)>& g,
                        const Function& f) {
  Function c = dec.coefficients(f);
  for (Eigen::Index k = 0; k < c.size(); ++k) {
    const Complex gk = g(dec.eigenvalues(k));
    if (!std::isfinite(gk.real()) || !std::isfinite(gk.imag()))
      throw DomainError("multiplier is not finite at eigenvalue " + std::to_string(dec.eigenvalues(k)));
    c(k) *= gk;
  }
  return dec.synthesize(c);
}

Matrix spectral_kernel(const SpectralDecomposition& dec, const std::function<double(double)>& g) {
  RealVector gv(dec.eigenvalues.size());
  for (Eigen::Index k = 0; k < gv.size(); ++k) {
    gv(k) = g(dec.eigenvalues(k));
    if (!std::isfinite(gv(k))) throw DomainError("multiplier is not finite on the spectrum");
  }
  return dec.phi * gv.asDiagonal() * dec.phi.transpose();
}

double lp_norm(const RealVector& mu, const Function& f, double p) {
  if (mu.size() != f.size()) throw DimensionMismatch("function length mismatch");
  if (!(p >= 1.0)) throw DomainError("lp_norm requires p >= 1");
  if (std::isinf(p)) return sup_abs(f);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < f.size(); ++i) acc += mu(i) * std::pow(std::abs(f(i)), p);
  return std::pow(acc, 1.0 / p);
}

double lp_norm(const StateSpace& space, const Function& f, double p) { return lp_norm(space.mu(), f, p); }

double operator_pq_norm(const StateSpace& space, const Matrix& k, double p, double q) {
  const RealVector& mu = space.mu();
  const auto n = mu.size();
  if (k.rows() != n || k.cols() != n) throw DimensionMismatch("kernel shape mismatch");
  auto is = [](double x, double v) { return std::isinf(v) ? std::isinf(x) : x == v; };
  const Matrix ak = k.cwiseAbs();
  if (is(p, 1) && is(q, kInf)) return ak.maxCoeff();
  if (is(p, 2) && is(q, 2)) {
    const RealVector s = mu.cwiseSqrt();
    const Matrix m = s.asDiagonal() * k * s.asDiagonal();
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
  }
  if (is(p, 1) && is(q, 2)) return (mu.transpose() * ak.cwiseAbs2()).cwiseSqrt().maxCoeff();
  if (is(p, 2) && is(q, kInf)) return (ak.cwiseAbs2() * mu).cwiseSqrt().maxCoeff();
  if (is(p, 1) && is(q, 1)) return (mu.transpose() * ak).maxCoeff();
  if (is(p, kInf) && is(q, kInf)) return (ak * mu).maxCoeff();
  throw UnsupportedPair("no exact formula for the (" + std::to_string(p) + ", " + std::to_string(q) + ") norm");
}

namespace {

struct Disk {
  Complex c;
  double r;
};

bool inside(const Disk& d, Complex p, double eps) { return std::abs(p - d.c) <= d.r + eps; }

Disk two_point(Complex a, Complex b) { return {0.5 * (a + b), 0.5 * std::abs(a - b)}; }

Disk three_point(Complex a, Complex b, Complex c) {
  const Complex ab = b - a, ac = c - a;
  const double d = 2.0 * (ab.real() * ac.imag() - ab.imag() * ac.real());
  const double scale = std::max({std::norm(ab), std::norm(ac), 1e-300});
  if (std::abs(d) < 1e-14 * scale) {
    Disk best = two_point(a, b);
    for (const Disk& cand : {two_point(a, c), two_point(b, c)})
      if (cand.r > best.r) best = cand;
    return best;
  }
  const double ux = (ac.imag() * std::norm(ab) - ab.imag() * std::norm(ac)) / d;
  const double uy = (ab.real() * std::norm(ac) - ac.real() * std::norm(ab)) / d;
  const Complex center = a + Complex(ux, uy);
  return {center, std::abs(center - a)};
}

}  // namespace

double enclosing_radius(const std::vector<Complex>& points) {
  if (points.empty()) return 0.0;
  bool real = true;
  double lo = kInf, hi = -kInf, scale = 0.0;
  for (const Complex& p : points) {
    real = real && p.imag() == 0.0;
    lo = std::min(lo, p.real());
    hi = std::max(hi, p.real());
    scale = std::max(scale, std::abs(p));
  }
  if (real) return 0.5 * (hi - lo);
  // Incremental minidisk over a fixed pseudo-random order, so the result is
  // reproducible.
  std::vector<Complex> pts(points);
  std::uint64_t state = 0x9E3779B97F4A7C15ull;
  for (std::size_t i = pts.size(); i > 1; --i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    std::swap(pts[i - 1], pts[(state >> 33) % i]);
  }
  const double eps = 1e-13 * std::max(scale, 1e-300);
  Disk d{pts[0], 0.0};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (inside(d, pts[i], eps)) continue;
    d = {pts[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (inside(d, pts[j], eps)) continue;
      d = two_point(pts[i], pts[j]);
      for (std::size_t k = 0; k < j; ++k)
        if (!inside(d, pts[k], eps)) d = three_point(pts[i], pts[j], pts[k]);
    }
  }
  return d.r;
}

double quotient_sup_norm(const SpectralDecomposition& dec, const Function& f) {
  if (static_cast<std::size_t>(f.size()) != dec.size()) throw DimensionMismatch("function length mismatch");
  if (dec.kernel_dimension != dec.components)
    throw BackendUnsupported("kernel is not spanned by component indicators");
  std::vector<std::vector<Complex>> groups(dec.components);
  for (Eigen::Index i = 0; i < f.size(); ++i) groups[dec.component[i]].push_back(f(i));
  double r = 0.0;
  for (const auto& g : groups) r = std::max(r, enclosing_radius(g));
  return r;
}

}  // namespace sgholder
