#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "sgholder/spectral.hpp"
#include "sgholder/types.hpp"

namespace sgholder {

// Pointwise values of a Hilbert-module valued function: component j at
// every sample point.
struct GradientField {
  std::vector<Function> components;

  RealVector pointwise_norm() const;
  // sum_j conj(a_j) b_j at every point.
  Function pointwise_pairing(const GradientField& other) const;
};

enum class ModelKind { FiniteChain, Lattice };

// A symmetric Markov semigroup T_t = exp(-tA) realized on a finite set of
// sample points. A is diagonal in a spectral basis: analyze() maps values to
// coefficients, synthesize() maps back, and eigenvalues() lists the
// eigenvalue attached to each coefficient.
class SemigroupModel {
 public:
  virtual ~SemigroupModel() = default;

  virtual ModelKind kind() const = 0;
  virtual std::string name() const = 0;
  virtual std::size_t size() const = 0;
  // Measure of each sample point (sums to the total mass of the space).
  virtual const RealVector& weights() const = 0;
  virtual const RealVector& eigenvalues() const = 0;
  virtual Function analyze(const Function& f) const = 0;
  virtual Function synthesize(const Function& c) const = 0;
  virtual double quotient_sup_norm(const Function& f) const = 0;
  // Explicit derivation into a Hilbert module with |delta f|^2 = Gamma[f].
  virtual GradientField gradient(const Function& f) const = 0;
  virtual bool allows_zero_time() const = 0;

  // g(A) f.
  Function apply(const std::function<Complex(double)>& g, const Function& f) const;
  // synthesize(g(lambda) * c) for precomputed coefficients c.
  Function apply_coefficients(const std::function<Complex(double)>& g, const Function& c) const;

  Function generator(const Function& f) const;
  Function sqrt_generator(const Function& f) const;

  double sup_norm(const Function& f) const { return sup_abs(f); }
  double lp_norm(const Function& f, double p) const;
  bool is_kernel(Eigen::Index k) const { return eigenvalues()(k) == 0.0; }
  double max_eigenvalue() const;
  // Smallest nonzero eigenvalue.
  double min_positive_eigenvalue() const;
};

class ChainModel final : public SemigroupModel {
 public:
  ChainModel(FiniteChainGenerator gen, std::string name);

  ModelKind kind() const override { return ModelKind::FiniteChain; }
  std::string name() const override { return name_; }
  std::size_t size() const override { return gen_.size(); }
  const RealVector& weights() const override { return gen_.space().mu(); }
  const RealVector& eigenvalues() const override { return dec_.eigenvalues; }
  Function analyze(const Function& f) const override { return dec_.coefficients(f); }
  Function synthesize(const Function& c) const override { return dec_.synthesize(c); }
  double quotient_sup_norm(const Function& f) const override;
  // delta f(i)_j = sqrt(-A_ij / 2) (f_j - f_i), one component per target state.
  GradientField gradient(const Function& f) const override;
  bool allows_zero_time() const override { return true; }

  const FiniteChainGenerator& generator_matrix() const { return gen_; }
  const SpectralDecomposition& decomposition() const { return dec_; }

 private:
  FiniteChainGenerator gen_;
  SpectralDecomposition dec_;
  std::string name_;
};

// Band-limited functions on the torus T^n sampled on a uniform R^n grid, or
// (n = 1) functions on the dual circle of Z. The spectral basis is the
// Fourier basis, with symbol psi(k) on each grid frequency
// k in [-R/2, R/2)^n. Products of two functions of bandwidth F stay exact
// because R >= 4 (2F + 1).
class LatticeModel final : public SemigroupModel {
 public:
  using Symbol = std::function<double(const std::vector<int>&)>;

  // heat_symbol marks psi(k) = 4 pi^2 |k|^2, for which the gradient is the
  // usual one; grid = 0 picks the smallest 7-smooth size >= 4 (2F + 1).
  LatticeModel(int dimension, int bandwidth, Symbol psi, bool heat_symbol, std::string name, int grid = 0);
  ~LatticeModel() override;
  LatticeModel(const LatticeModel&) = delete;
  LatticeModel& operator=(const LatticeModel&) = delete;

  ModelKind kind() const override { return ModelKind::Lattice; }
  std::string name() const override { return name_; }
  std::size_t size() const override { return static_cast<std::size_t>(points_); }
  const RealVector& weights() const override { return weights_; }
  const RealVector& eigenvalues() const override { return eigenvalues_; }
  Function analyze(const Function& f) const override;
  Function synthesize(const Function& c) const override;
  double quotient_sup_norm(const Function& f) const override;
  GradientField gradient(const Function& f) const override;
  bool allows_zero_time() const override { return false; }

  int dimension() const { return dim_; }
  int bandwidth() const { return bandwidth_; }
  int grid() const { return grid_; }
  bool heat_symbol() const { return heat_; }
  double symbol(const std::vector<int>& k) const { return psi_(k); }

  std::vector<int> frequency(Eigen::Index idx) const;
  Eigen::Index index_of(const std::vector<int>& k) const;
  std::vector<double> point(Eigen::Index idx) const;
  // All frequencies with |k|_inf <= radius except k = 0, in lexicographic order.
  std::vector<std::vector<int>> band(int radius) const;
  // Samples of exp(2 pi i <k, x>).
  Function mode(const std::vector<int>& k) const;

 private:
  int dim_;
  int bandwidth_;
  int grid_;
  Eigen::Index points_;
  Symbol psi_;
  bool heat_;
  std::string name_;
  RealVector weights_;
  RealVector eigenvalues_;
  void* forward_ = nullptr;
  void* backward_ = nullptr;
};

// Smallest 7-smooth integer >= n.
int fft_size_at_least(int n);

}  // namespace sgholder
