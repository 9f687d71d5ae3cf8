#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sgholder/model.hpp"
#include "sgholder/quantum_torus.hpp"

namespace sgholder::holder {

// Log-spaced scales s_min * 10^{i / per_decade} covering [s_min, s_max].
struct ScaleGrid {
  double s_min = 1e-3;
  double s_max = 1e3;
  int per_decade = 32;
  // Golden-section refinement around the best grid point stops when the
  // bracket is narrower than this relative width.
  double refine_tol = 1e-4;

  std::vector<double> points() const;
};

// [1e-3 / sqrt(lambda_max), 1e3 / sqrt(lambda_min+)] over the given
// eigenvalue range.
ScaleGrid grid_for_spectrum(double lambda_min_positive, double lambda_max, int per_decade = 32);

// Same range computed from the eigenvalues that carry the coefficients c
// (entries above 1e-12 max|c|).
ScaleGrid grid_for_coefficients(const SemigroupModel& m, const std::vector<Function>& coeffs, int per_decade = 32);

struct SupResult {
  double value = 0.0;
  double argmax = 0.0;
  bool at_boundary = false;
  int evaluations = 0;
};

// sup_s h(s) over the grid followed by golden-section refinement in log s.
// If upper(s) >= h(s) is supplied, grid points whose bound cannot beat the
// running maximum are skipped; the result is unchanged.
SupResult maximize(const ScaleGrid& grid, const std::function<double(double)>& h,
                   const std::function<double(double)>& upper = nullptr);

struct SeminormResult {
  double value = 0.0;
  double s_star = 0.0;
  bool range_warning = false;  // maximum on the edge of the scale range
  int evaluations = 0;
  ScaleGrid grid;
};

// sup_s s^{k - alpha} ||d^k/ds^k P_s f||, with the quotient sup norm when
// requested. alpha must lie in (0, 1).
SeminormResult holder_seminorm(const SemigroupModel& m, const Function& f, double alpha, int order = 1,
                               bool quotient = false, std::optional<ScaleGrid> grid = std::nullopt);

// max(||f||_inf, seminorm).
double holder_norm(const SemigroupModel& m, const Function& f, double alpha);

// Seminorm of a Hilbert-module valued function, with P_s acting on each
// component and the fiber norm taken pointwise. Throws
// IntertwiningUnverified unless the model's gradient commutes with P_s.
SeminormResult hilbert_holder_seminorm(const SemigroupModel& m, const GradientField& field, double alpha,
                                       std::optional<ScaleGrid> grid = std::nullopt);

// Order-2 seminorm over order-1 seminorm.
double eqsquare_ratio(const SemigroupModel& m, const Function& f, double alpha);

struct WeaverResult {
  double value = 0.0;
  double sup_norm = 0.0;
  double lipschitz_part = 0.0;  // sup_z ||sigma_z f - f|| / |z|^alpha over the grid
  std::vector<double> z_star;
  bool boundary_warning = false;
  int norm_evaluations = 0;
};

struct WeaverOptions {
  int z_per_axis = 64;
  bool axis_only = false;
  qt::NormOptions norm;
};

// max(||f||, sup_z ||sigma_z f - f|| / |z|^alpha), z on a uniform grid of
// [-1/2, 1/2)^n minus the origin.
WeaverResult weaver_norm(const qt::Element& f, double alpha, const WeaverOptions& opt = {});

// sup_s s^{1 - alpha} ||d/ds P_s f|| with P_s u_k = exp(-2 pi s |k|) u_k.
SeminormResult qt_holder_seminorm(const qt::Element& f, double alpha, const qt::NormOptions& norm = {},
                                  int per_decade = 32);

}  // namespace sgholder::holder
