#include "sgholder/model.hpp"

#include <cmath>
#include <mutex>

#include <fftw3.h>

#include "sgholder/errors.hpp"

namespace sgholder {

RealVector GradientField::pointwise_norm() const {
  if (components.empty()) return {};
  RealVector acc = RealVector::Zero(components.front().size());
  for (const Function& c : components) acc += c.cwiseAbs2();
  return acc.cwiseSqrt();
}

Function GradientField::pointwise_pairing(const GradientField& other) const {
  if (components.size() != other.components.size()) throw DimensionMismatch("fiber dimension mismatch");
  if (components.empty()) return {};
  Function acc = Function::Zero(components.front().size());
  for (std::size_t j = 0; j < components.size(); ++j) acc += conj_mul(components[j], other.components[j]);
  return acc;
}

Function SemigroupModel::apply_coefficients(const std::function<Complex(double)>& g, const Function& c) const {
  const RealVector& lam = eigenvalues();
  if (c.size() != lam.size()) throw DimensionMismatch("coefficient length mismatch");
  Function w(c.size());
  for (Eigen::Index k = 0; k < c.size(); ++k) {
    if (c(k) == Complex(0.0)) {
      w(k) = 0.0;
      continue;
    }
    const Complex gk = g(lam(k));
    if (!std::isfinite(gk.real()) || !std::isfinite(gk.imag()))
      throw DomainError("multiplier is not finite at eigenvalue " + std::to_string(lam(k)));
    w(k) = gk * c(k);
  }
  return synthesize(w);
}

Function SemigroupModel::apply(const std::function<Complex(double)>& g, const Function& f) const {
  return apply_coefficients(g, analyze(f));
}

Function SemigroupModel::generator(const Function& f) const {
  return apply([](double l) { return Complex(l); }, f);
}

Function SemigroupModel::sqrt_generator(const Function& f) const {
  return apply([](double l) { return Complex(std::sqrt(l)); }, f);
}

double SemigroupModel::lp_norm(const Function& f, double p) const { return sgholder::lp_norm(weights(), f, p); }

double SemigroupModel::max_eigenvalue() const { return eigenvalues().maxCoeff(); }

double SemigroupModel::min_positive_eigenvalue() const {
  double m = kInf;
  const RealVector& lam = eigenvalues();
  for (Eigen::Index k = 0; k < lam.size(); ++k)
    if (lam(k) > 0.0) m = std::min(m, lam(k));
  return m;
}

ChainModel::ChainModel(FiniteChainGenerator gen, std::string name)
    : gen_(std::move(gen)), dec_(eigendecompose(gen_)), name_(std::move(name)) {}

double ChainModel::quotient_sup_norm(const Function& f) const { return sgholder::quotient_sup_norm(dec_, f); }

GradientField ChainModel::gradient(const Function& f) const {
  const Matrix& a = gen_.matrix();
  const auto n = a.rows();
  if (f.size() != n) throw DimensionMismatch("function length mismatch");
  GradientField g;
  g.components.assign(n, Function::Zero(n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j && a(i, j) < 0.0) g.components[j](i) = std::sqrt(-a(i, j) / 2.0) * (f(j) - f(i));
  return g;
}

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

bool smooth7(int n) {
  for (int p : {2, 3, 5, 7})
    while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

int fft_size_at_least(int n) {
  int m = std::max(n, 1);
  while (!smooth7(m)) ++m;
  return m;
}

LatticeModel::LatticeModel(int dimension, int bandwidth, Symbol psi, bool heat_symbol, std::string name, int grid)
    : dim_(dimension), bandwidth_(bandwidth), psi_(std::move(psi)), heat_(heat_symbol), name_(std::move(name)) {
  if (dim_ < 1 || dim_ > 3) throw DomainError("lattice dimension must be 1, 2 or 3");
  if (bandwidth_ < 1) throw DomainError("bandwidth must be positive");
  const int minimal = 4 * (2 * bandwidth_ + 1);
  grid_ = grid == 0 ? fft_size_at_least(minimal) : grid;
  if (grid_ < minimal) throw DomainError("grid resolution must be at least 4 (2F + 1)");
  points_ = 1;
  for (int d = 0; d < dim_; ++d) points_ *= grid_;
  weights_ = RealVector::Constant(points_, 1.0 / static_cast<double>(points_));
  eigenvalues_.resize(points_);
  for (Eigen::Index i = 0; i < points_; ++i) {
    const std::vector<int> k = frequency(i);
    const double v = psi_(k);
    if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("symbol must be finite and nonnegative");
    eigenvalues_(i) = v;
  }
  const double lmax = eigenvalues_.maxCoeff();
  for (Eigen::Index i = 0; i < points_; ++i) {
    std::vector<int> k = frequency(i);
    if (std::abs(eigenvalues_(i)) <= 1e-10 * lmax) eigenvalues_(i) = 0.0;
    bool nyquist = false;
    for (int& kj : k) {
      nyquist = nyquist || kj == -grid_ / 2;
      kj = -kj;
    }
    if (nyquist) continue;
    const double v = psi_(k);
    if (std::abs(v - psi_(frequency(i))) > 1e-12 * std::max(1.0, std::abs(v)))
      throw SymmetryError("symbol is not symmetric under k -> -k");
  }
  if (eigenvalues_(0) != 0.0) throw DomainError("symbol must vanish at k = 0");
  std::vector<int> dims(dim_, grid_);
  std::vector<fftw_complex> buf(points_);
  std::lock_guard<std::mutex> lock(planner_mutex());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  forward_ = fftw_plan_dft(dim_, dims.data(), buf.data(), buf.data(), FFTW_FORWARD, flags);
  backward_ = fftw_plan_dft(dim_, dims.data(), buf.data(), buf.data(), FFTW_BACKWARD, flags);
}

LatticeModel::~LatticeModel() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (forward_) fftw_destroy_plan(static_cast<fftw_plan>(forward_));
  if (backward_) fftw_destroy_plan(static_cast<fftw_plan>(backward_));
}

Function LatticeModel::analyze(const Function& f) const {
  if (f.size() != points_) throw DimensionMismatch("function length mismatch");
  Function in = f;
  Function out(points_);
  fftw_execute_dft(static_cast<fftw_plan>(forward_), reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out / static_cast<double>(points_);
}

Function LatticeModel::synthesize(const Function& c) const {
  if (c.size() != points_) throw DimensionMismatch("coefficient length mismatch");
  Function in = c;
  Function out(points_);
  fftw_execute_dft(static_cast<fftw_plan>(backward_), reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

double LatticeModel::quotient_sup_norm(const Function& f) const {
  std::size_t kernel = 0;
  for (Eigen::Index i = 0; i < points_; ++i) kernel += eigenvalues_(i) == 0.0;
  if (kernel == static_cast<std::size_t>(points_)) return 0.0;
  if (kernel != 1) throw BackendUnsupported("quotient norm needs a kernel reduced to constants");
  return enclosing_radius(std::vector<Complex>(f.data(), f.data() + f.size()));
}

GradientField LatticeModel::gradient(const Function& f) const {
  if (!heat_) throw BackendUnsupported("explicit gradient is only available for the heat symbol");
  const Function c = analyze(f);
  GradientField g;
  for (int j = 0; j < dim_; ++j) {
    Function cj(points_);
    for (Eigen::Index i = 0; i < points_; ++i) cj(i) = Complex(0.0, 2.0 * kPi * frequency(i)[j]) * c(i);
    g.components.push_back(synthesize(cj));
  }
  return g;
}

std::vector<int> LatticeModel::frequency(Eigen::Index idx) const {
  std::vector<int> k(dim_);
  for (int d = dim_ - 1; d >= 0; --d) {
    const int m = static_cast<int>(idx % grid_);
    idx /= grid_;
    k[d] = m < (grid_ + 1) / 2 ? m : m - grid_;
  }
  return k;
}

Eigen::Index LatticeModel::index_of(const std::vector<int>& k) const {
  if (static_cast<int>(k.size()) != dim_) throw DimensionMismatch("frequency dimension mismatch");
  Eigen::Index idx = 0;
  for (int d = 0; d < dim_; ++d) {
    const int m = ((k[d] % grid_) + grid_) % grid_;
    idx = idx * grid_ + m;
  }
  return idx;
}

std::vector<double> LatticeModel::point(Eigen::Index idx) const {
  std::vector<double> x(dim_);
  for (int d = dim_ - 1; d >= 0; --d) {
    x[d] = static_cast<double>(idx % grid_) / grid_;
    idx /= grid_;
  }
  return x;
}

std::vector<std::vector<int>> LatticeModel::band(int radius) const {
  std::vector<std::vector<int>> out;
  std::vector<int> k(dim_, -radius);
  while (true) {
    bool zero = true;
    for (int v : k) zero = zero && v == 0;
    if (!zero) out.push_back(k);
    int d = dim_ - 1;
    while (d >= 0 && k[d] == radius) k[d--] = -radius;
    if (d < 0) break;
    ++k[d];
  }
  return out;
}

Function LatticeModel::mode(const std::vector<int>& k) const {
  Function c = Function::Zero(points_);
  c(index_of(k)) = 1.0;
  return synthesize(c);
}

}  // namespace sgholder
