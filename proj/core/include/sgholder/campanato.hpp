#pragma once

#include <vector>

#include "sgholder/holder.hpp"
#include "sgholder/model.hpp"

namespace sgholder::campanato {

// Mean: sup_s s^{-alpha} ||P_s |f - P_s f|^2||^{1/2}.
// Square: sup_s s^{-alpha} ||P_s |f|^2 - |P_s f|^2||^{1/2}.
enum class Oscillation { Mean, Square };
// Row evaluates the column quantity at conj(f); Symmetric is the max of both.
enum class Side { Column, Row, Symmetric };

struct CampanatoResult {
  double value = 0.0;
  Oscillation oscillation = Oscillation::Mean;
  Side side = Side::Column;
  double s_star = 0.0;
  bool range_warning = false;
  holder::ScaleGrid grid;
};

// alpha in [0, 1).
CampanatoResult lip_seminorm(const SemigroupModel& m, const Function& f, double alpha, Oscillation osc,
                             Side side = Side::Column);

// P_s |f|^2 - |P_s f|^2.
Function square_oscillation(const SemigroupModel& m, const Function& f, double s);
// P_s |f - P_s f|^2.
Function mean_oscillation(const SemigroupModel& m, const Function& f, double s);

// Quadratic forms evaluated along the Poisson flow g_t = P_t f:
// Partial is |d/dt g_t|^2, Gamma is Gamma[g_t], GammaHat is their sum.
enum class Form { Partial, Gamma, GammaHat };
Function form_along_flow(const SemigroupModel& m, Form form, const Function& coeffs, double t);

struct CarlesonResult {
  double value = 0.0;
  Form form = Form::Partial;
  double s_star = 0.0;
  bool range_warning = false;
  holder::ScaleGrid grid;
  // Quadrature record of the inner integral at s_star.
  double quadrature_error = 0.0;
  int quadrature_evaluations = 0;
};

// int_0^s t B[P_t f] dt, adaptive Gauss-Kronrod to relative tolerance rel_tol.
Function carleson_integral(const SemigroupModel& m, Form form, const Function& f, double s, double rel_tol = 1e-10,
                           double* error = nullptr, int* evaluations = nullptr);

// sup_s s^{-alpha} ||P_s int_0^s B[t P_t f] dt / t||^{1/2}.
CarlesonResult carleson_seminorm(const SemigroupModel& m, const Function& f, double alpha, Form form);

struct IdentityResult {
  double relative_error = 0.0;  // against the identity with the factor 2
  double literal_error = 0.0;   // against the identity without it
  double quadrature_error = 0.0;
};

// T_t |f|^2 - |T_t f|^2 = 2 int_0^t T_{t-s} Gamma[T_s f] ds.
IdentityResult junge_mei_identity_check(const SemigroupModel& m, const Function& f, double t);

// P_s |f|^2 - |P_s f|^2 = 2 int_0^s P_{s-t} Gamma_{A^{1/2}}[P_t f] dt.
IdentityResult iterated_identity_check(const SemigroupModel& m, const Function& f, double s);

struct PointwiseSquareReport {
  Function oscillation;  // P_s |f|^2 - |P_s f|^2
  // (i): 2 int_0^inf int_{max(0, t-s)}^t P_{s-t+2v} GammaHat[P_t f] dv dt.
  Function double_integral;
  double identity_error = 0.0;
  // (ii): int_0^inf P_{s+t} |d/dt P_t f|^2 min(s, t) dt <= c_ii * oscillation.
  Function lower_partial;
  // (iii): int_0^inf P_{r+t} GammaHat[P_t f] min(r, t) dt at r = s and r = s/3.
  Function lower_gamma_hat;
  Function upper_gamma_hat;
  // Smallest constants making each inequality hold at every point.
  double c_ii = 0.0;
  double c_iii_lower = 0.0;
  double c_iii_upper = 0.0;
  // A side exceeded the slack where the other side vanished.
  bool degenerate = false;
  double min_oscillation = 0.0;  // Kadison-Schwarz: >= -1e-10
};

// The t-integrals run over [0, s + 18 / sqrt(lambda_min+)], beyond which the
// integrands are below exp(-36) of their size.
PointwiseSquareReport pointwise_square_inequalities(const SemigroupModel& m, const Function& f, double s,
                                                    double slack = 1e-8);

struct EqnormReport {
  double alpha = 0.0;
  double lip_mean = 0.0;       // column Lip seminorm
  double lip_square = 0.0;     // column lip seminorm
  double dyadic_difference = 0.0;  // sup_s s^{-alpha} ||P_s f - P_{2s} f||
  double bound_i = 0.0;        // (1 + 2^alpha) lip_square + dyadic_difference
  bool holds_i = false;
  // The same with ||P_s f - P_{2s} f||^{1/2}.
  double literal_bound_i = 0.0;
  bool literal_holds_i = false;
  bool part_ii_applicable = false;  // alpha < 1/2 and Gamma_2 >= 0
  double constant_ii = 0.0;         // (1 - 2^{alpha - 1/2})^{-1}
  double bound_ii = 0.0;
  bool holds_ii = false;
};

EqnormReport eqnorm_comparison(const SemigroupModel& m, const Function& f, double alpha, bool gamma2_verified,
                               double slack = 1e-8);

struct DeltaReport {
  double lhs = 0.0;      // ||P_s f - P_{(1+delta)s} f||
  double rhs = 0.0;      // ||P_s int_0^s |d/dt P_t f|^2 t dt||^{1/2}
  double c_delta = 0.0;  // delta^{1/2} for delta <= 1, 1 + log_{3/2} delta beyond
  double constant = 0.0; // lhs / (c_delta rhs), 0 when lhs vanishes
};

DeltaReport delta_inequality_check(const SemigroupModel& m, const Function& f, double s, double delta);

// sup_s s^{-alpha} ||int_0^inf B[P_{t+s} f] min(s, t) dt||^{1/2}.
holder::SupResult min_kernel_seminorm(const SemigroupModel& m, const Function& f, double alpha, Form form);

struct RatioExtremes {
  double min = 0.0;
  double max = 0.0;
  int used = 0;     // samples with both sides nonzero
  int skipped = 0;  // samples in the kernel
  std::vector<double> ratios;
};

// Carleson form over min-kernel form for each sample. Throws
// PrerequisiteFailed for Gamma and GammaHat unless Gamma_2 >= 0 is verified.
RatioExtremes sqr_functions_equivalence(const SemigroupModel& m, Form form, const std::vector<Function>& samples,
                                        double alpha, bool gamma2_verified);

struct HolderCampanatoReport {
  // max(Lip^c, Lip^r) / |f|_{Lambda_alpha}; bounded by 1/alpha.
  RatioExtremes mean_ratio;
  double mean_bound = 0.0;
  bool mean_bound_holds = true;
  // max(lip^c, lip^r) / |f|_{Lambda_alpha}, measured when alpha < 1/2 and
  // Gamma_2 >= 0.
  bool square_applicable = false;
  RatioExtremes square_ratio;
  // |f|_{Lambda_alpha} / max(Lip^c, Lip^r): no bound is known, recorded only.
  RatioExtremes reverse_ratio;
};

HolderCampanatoReport comparison_holder_campanato(const SemigroupModel& m, const std::vector<Function>& samples,
                                                  double alpha, bool gamma2_verified, double slack = 1e-8);

}  // namespace sgholder::campanato
