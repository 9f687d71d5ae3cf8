#pragma once

#include <functional>
#include <vector>

#include "sgholder/types.hpp"

namespace sgholder {

// Finite set {0, ..., N-1} carrying a strictly positive measure.
class StateSpace {
 public:
  explicit StateSpace(RealVector mu);
  static StateSpace uniform(std::size_t n);

  std::size_t size() const { return static_cast<std::size_t>(mu_.size()); }
  const RealVector& mu() const { return mu_; }

 private:
  RealVector mu_;
};

// Generator A of a reversible Markov chain: off-diagonal entries <= 0,
// zero row sums, mu_i A_ij = mu_j A_ji. The constructor validates and
// throws SignError, RowSumError, DetailedBalanceError or NotMarkovian.
class FiniteChainGenerator {
 public:
  FiniteChainGenerator(StateSpace space, Matrix a);

  const StateSpace& space() const { return space_; }
  const Matrix& matrix() const { return a_; }
  std::size_t size() const { return space_.size(); }

 private:
  StateSpace space_;
  Matrix a_;
};

struct SpectralDecomposition {
  RealVector mu;
  RealVector eigenvalues;  // ascending; entries below kernel_tolerance are exactly 0
  Matrix phi;              // column k is the mu-orthonormal eigenvector phi_k
  Matrix analysis;         // phi^T diag(mu): coefficients c = analysis * f
  double kernel_tolerance = 0.0;
  int kernel_dimension = 0;
  std::vector<int> component;  // connected component label of each state
  int components = 0;

  std::size_t size() const { return static_cast<std::size_t>(eigenvalues.size()); }
  Function coefficients(const Function& f) const;
  Function synthesize(const Function& c) const;
};

// Symmetrizes D^{1/2} A D^{-1/2} and diagonalizes it with a self-adjoint
// solver. The kernel is {lambda < 1e-10 lambda_max}.
SpectralDecomposition eigendecompose(const FiniteChainGenerator& gen);

// sum_k g(lambda_k) <phi_k, f>_mu phi_k. DomainError if g is not finite on
// the spectrum.
Function spectral_apply(const SpectralDecomposition& dec, const std::function<Complex(double)>& g,
                        const Function& f);

// Kernel K of g(A) relative to mu: (g(A) f)_i = sum_j K_ij f_j mu_j.
Matrix spectral_kernel(const SpectralDecomposition& dec, const std::function<double(double)>& g);

// (sum_i mu_i |f_i|^p)^{1/p}, or max_i |f_i| for p = inf.
double lp_norm(const StateSpace& space, const Function& f, double p);
double lp_norm(const RealVector& mu, const Function& f, double p);

// Exact operator norm L^p(mu) -> L^q(mu) of (Tf)_i = sum_j K_ij f_j mu_j for
// (p, q) in {(1,inf), (2,2), (1,2), (2,inf), (1,1), (inf,inf)}; throws
// UnsupportedPair otherwise.
double operator_pq_norm(const StateSpace& space, const Matrix& k, double p, double q);

// Radius of the smallest disk containing the points.
double enclosing_radius(const std::vector<Complex>& points);

// inf over kernel elements h of ||f - h||_inf. The kernel of a reversible
// generator consists of the functions constant on connected components, so
// this is the largest per-component enclosing radius.
double quotient_sup_norm(const SpectralDecomposition& dec, const Function& f);

}  // namespace sgholder
