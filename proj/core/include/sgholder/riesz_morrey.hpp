#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sgholder/model.hpp"

namespace sgholder::riesz {

// Per-sample ratios numerator / denominator. Samples whose denominator
// vanishes (kernel elements) are skipped.
struct RatioSweep {
  std::string model;
  double alpha = 0.0;
  std::size_t samples = 0;
  std::vector<double> numerators;
  std::vector<double> denominators;
  std::vector<double> ratios;  // NaN for skipped samples
  int used = 0;
  int skipped = 0;
  double max = 0.0;
  double min = 0.0;
  double median = 0.0;
  int argmax = -1;
  // Max over the first half of the samples, and whether the full max stays
  // within 10% of it.
  double half_max = 0.0;
  bool doubling_stable = false;
  // Argmax sample recomputed on a scale grid of twice the density.
  double refined_ratio = 0.0;
  bool refinement_stable = true;
};

// Fills ratios and statistics from numerators and denominators.
void finalize(RatioSweep& sweep);

// Evaluates (numerator, denominator) for every sample in parallel, then
// recomputes the argmax sample with per_decade doubled.
using SampleRatio = std::function<std::pair<double, double>(const Function& f, int per_decade)>;
RatioSweep sweep(const std::string& model, double alpha, const std::vector<Function>& samples,
                 const SampleRatio& ratio, int per_decade = 32);

// sup_s s ||Gamma[P_s f]^{1/2}||_p over ||f||_p, p = 2 or infinity.
RatioSweep domgamma_ratio(const SemigroupModel& m, const std::vector<Function>& samples, double p,
                          bool gamma2_verified);

struct RieszEquivalence {
  // sup_s s^{1-alpha} ||Gamma[P_s f]^{1/2}|| over |f|_{Lambda_alpha}; needs Gamma_2 >= 0.
  bool forward_applicable = false;
  RatioSweep forward;
  // sup_s s^{1-alpha} ||Gammahat[P_s f]^{1/2}|| over |f|_{Lambda_alpha}; always >= 1.
  RatioSweep reverse;
  // Both with the quotient norm on numerator and denominator.
  RatioSweep forward_quotient;
  RatioSweep reverse_quotient;
  // sup_s s^{1-alpha} ||Gammahat[P_s f]||^{1/2} over sup_s s^{1-alpha} ||dP_s f / ds||^{1/2}.
  RatioSweep literal_reverse;
  double min_reverse = 0.0;
  bool reverse_at_least_one = true;  // every reverse ratio >= 1 - 1e-9
};

RieszEquivalence riesz_equivalence(const SemigroupModel& m, const std::vector<Function>& samples, double alpha,
                                   bool gamma2_verified);

struct RieszTransform {
  GradientField field;
  bool kernel_projected = false;  // f had a nonzero mean, which was removed
};

// Components i k_j / |k| f^(k) on a torus with the heat symbol.
RieszTransform riesz_transform(const LatticeModel& m, const Function& f);

// |R f|_{Lambda_alpha(H)} / |f|_{Lambda_alpha}.
RatioSweep riesz_holder_ratio(const LatticeModel& m, const std::vector<Function>& samples, double alpha);

struct ExponentFit {
  double t_min = 0.0;
  double t_max = 0.0;
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // max |log value - fitted line|
  double dimension = 0.0;
  int points = 0;
};

// Least-squares line through (log t_i, log v(t_i)) on a log-spaced window.
ExponentFit fit_power_law(const std::function<double(double)>& v, double t_min, double t_max, int points);

// ||T_t: L^1 -> L^infty|| = sum_{|k|_inf <= F} exp(-psi(k) t) on a torus,
// fitted on [t_min, t_max]; dimension = -2 slope. WindowError if the window
// leaves [F^-2, 1] unless allow_outside.
ExponentFit ultracontractivity_fit(const LatticeModel& m, double t_min = 1e-3, double t_max = 1e-2,
                                   int points = 16, bool allow_outside = false);

// |f|_{Lambda_{1-n/p}} / ||A^{1/2} f||_p, p > n.
RatioSweep morrey_ratio(const LatticeModel& m, const std::vector<Function>& samples, double p);

struct MorreyReverseReport {
  double p = 0.0;
  double alpha = 0.0;
  int samples_checked = 0;
  int excluded = 0;  // kernel samples
  // ||P_s f|| = ||d/ds P_s A^{-1/2} f||, error relative to max(||P_s f||, ||f||).
  double max_chain_error = 0.0;
  // max over samples and grid scales of ||P_s f|| / (s^{alpha-1} |A^{-1/2} f|_{Lambda_alpha}).
  double max_chain_ratio = 0.0;
  bool chain_holds = false;
  // ||P_s: L^p -> L^infty|| fitted against s; exponent = -slope, expected n/p.
  ExponentFit operator_fit;
  double expected_exponent = 0.0;
  bool exponent_matches = false;
};

// p = 2 uses ||P_s||_{2->inf}^2 = sum_k exp(-4 pi s |k|); other p need n = 1,
// where the kernel sinh(2 pi s) / (cosh(2 pi s) - cos(2 pi x)) is known.
MorreyReverseReport morrey_reverse_check(const LatticeModel& m, const std::vector<Function>& samples, double p);

// ||P_s: L^p(T^n) -> L^infty|| for the Poisson symbol exp(-2 pi s |k|).
double poisson_p_to_inf_norm(int dimension, double s, double p);

enum class Verdict { Converges, Diverges, Inconclusive };
std::string to_string(Verdict v);

struct CogrowthReport {
  int dimension = 0;
  double s = 0.0;
  std::vector<int> cutoffs;         // F = 2^j
  std::vector<double> partial_sums; // sum_{|k|_inf <= F} (1 + 4 pi^2 |k|^2)^{-s/2}
  std::vector<double> increments;
  double increment_slope = 0.0;     // of log increment against log F over the last half
  Verdict verdict = Verdict::Inconclusive;
};

CogrowthReport cogrowth_estimate(int dimension, double s, int max_log2_cutoff = 0);

struct SobolevReport {
  double s = 0.0;
  double max_ratio = 0.0;  // max ||f||_inf / ||(1 + A)^{s/2} f||_2 over samples
  // (sum_{|k|_inf <= F} (1 + psi(k))^{-s})^{1/2}, a bound from Cauchy-Schwarz.
  double bound = 0.0;
  bool holds = false;
};

SobolevReport sobolev_embedding(const LatticeModel& m, const std::vector<Function>& samples, double s);

struct MarcinkiewiczReport {
  double alpha = 0.0;
  double s = 0.0;
  // sup_t ||(1 + Delta)^{s/2} (m eta(t psi^{1/2}))||_{l^2(Z)}, eta(z) = z e^{-z/2}.
  double rhs = 0.0;
  double t_star = 0.0;
  RatioSweep ratio;  // |T_m f|_{Lambda_alpha} / |f|_{Lambda_alpha}
  double lhs = 0.0;  // max ratio
  double lhs_over_rhs = 0.0;
};

// Symbol m indexed by k = -F..F on the integer-group model of bandwidth F.
double sobolev_symbol_norm(const std::vector<Complex>& g, double s);
MarcinkiewiczReport marcinkiewicz_bound_and_ratio(const LatticeModel& m, const std::vector<Complex>& symbol,
                                                  const std::vector<Function>& samples, double alpha, double s);

}  // namespace sgholder::riesz
