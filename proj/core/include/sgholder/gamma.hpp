#pragma once

#include <functional>
#include <vector>

#include "sgholder/model.hpp"
#include "sgholder/quantum_torus.hpp"

namespace sgholder::calculus {

using Bilinear = std::function<Function(const Function&, const Function&)>;

// Gamma(f, g) = (conj(Af) g + conj(f) Ag - A(conj(f) g)) / 2.
Function gamma(const SemigroupModel& m, const Function& f, const Function& g);
Function gamma(const SemigroupModel& m, const Function& f);
// Carre du champ of the subordinated generator A^{1/2}.
Function gamma_sqrt(const SemigroupModel& m, const Function& f, const Function& g);
Function gamma_sqrt(const SemigroupModel& m, const Function& f);

// Iterated forms: Gamma_0(f, g) = conj(f) g and
// 2 Gamma_{k+1}(f, g) = Gamma_k(Af, g) + Gamma_k(f, Ag) - A Gamma_k(f, g).
Function gamma_k(const SemigroupModel& m, int k, const Function& f, const Function& g);

// 2 B'(f, g) = B(Af, g) + B(f, Ag) - A B(f, g).
Function derived_form(const SemigroupModel& m, const Bilinear& b, const Function& f, const Function& g);

// Gamma[f_s] + |d f_s / ds|^2.
Function space_time_gamma(const SemigroupModel& m, const Function& fs, const Function& dfs);

struct Gamma2Verdict {
  bool holds = false;
  int worst_state = -1;
  double min_eigenvalue = 0.0;  // smallest eigenvalue over all Q_x
  double scale = 0.0;           // max_x ||Q_x||
  RealVector eigenvector;       // eigenvector of the worst Q_x
  std::vector<double> min_per_state;
};

// Hermitian form Q_x with <f, Q_x f> = Gamma_2[f](x).
Matrix gamma2_form(const ChainModel& m, int x);

// Gamma_2 >= 0 iff every Q_x is positive semidefinite; eigenvalues above
// -1e-9 ||Q_x|| count as nonnegative.
Gamma2Verdict gamma2_psd_check(const ChainModel& m);

// Gamma_2 >= 0 on the model: the matrix test on chains, and the flat Bochner
// identity Gamma_2 = |Hess f|^2 for the heat symbol on a torus.
bool gamma2_nonnegative(const SemigroupModel& m);

struct DerivedFormVerdict {
  bool monotone = true;        // B[T_t f] <= T_t B[f] + 1e-9 on every sample and t
  bool derived_nonnegative = true;  // B'[f] >= -1e-9 on every sample
  bool agree = true;
  double monotone_violation = 0.0;
  double derived_violation = 0.0;
  int monotone_witness_sample = -1;
  double monotone_witness_time = 0.0;
  int derived_witness_sample = -1;
};

DerivedFormVerdict derived_form_check(const SemigroupModel& m, const Bilinear& b, const std::vector<Function>& samples,
                                      const std::vector<double>& times);

// G_s = P_s(conj(dP_s f) P_s f) + P_s(conj(P_s f) dP_s f) - (dP_s/ds)(|P_s f|^2).
Function gs_function(const SemigroupModel& m, const Function& f, double s);

struct GsIdentityResult {
  // max over s of ||dG_s/ds - 2 P_s Gammahat[P_s f]||_inf / ||2 P_s Gammahat[P_s f]||_inf,
  // dG_s/ds expanded term by term with the product rule.
  double max_relative_error = 0.0;
  // Same with -dG_s/ds on the left.
  double opposite_sign_error = 0.0;
  // Central difference of G_s against the expanded derivative.
  double finite_difference_error = 0.0;
};

GsIdentityResult gs_identity_check(const SemigroupModel& m, const Function& f, const std::vector<double>& s_grid);

// delta(P_t f) = (P_t (x) id) delta f on random functions at t in {0.3, 1}.
bool gradient_intertwines(const SemigroupModel& m);

// Gamma[f] = sum_j (d_j f)^* (d_j f), d_j multiplying a_k by 2 pi i k_j.
qt::Element qt_gamma(const qt::Element& f);
// (Delta f)^* f + f^* Delta f - Delta(f^* f), halved, with Delta = 4 pi^2 |k|^2.
qt::Element qt_gamma_from_generator(const qt::Element& f);

}  // namespace sgholder::calculus
