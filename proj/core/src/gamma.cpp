#include "sgholder/gamma.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "sgholder/errors.hpp"
#include "sgholder/sampling.hpp"
#include "sgholder/semigroup.hpp"

namespace sgholder::calculus {

namespace {

Function carre(const Function& af, const Function& f, const Function& ag, const Function& g, const Function& a_fg) {
  return 0.5 * (conj_mul(af, g) + conj_mul(f, ag) - a_fg);
}

}  // namespace

Function gamma(const SemigroupModel& m, const Function& f, const Function& g) {
  return carre(m.generator(f), f, m.generator(g), g, m.generator(conj_mul(f, g)));
}

Function gamma(const SemigroupModel& m, const Function& f) {
  const Function af = m.generator(f);
  const Function two_re = 2.0 * conj_mul(af, f).real().cast<Complex>();
  const Function g = 0.5 * (two_re - m.generator(abs2(f)));
  return g.real().cast<Complex>();
}

Function gamma_sqrt(const SemigroupModel& m, const Function& f, const Function& g) {
  return carre(m.sqrt_generator(f), f, m.sqrt_generator(g), g, m.sqrt_generator(conj_mul(f, g)));
}

Function gamma_sqrt(const SemigroupModel& m, const Function& f) {
  const Function af = m.sqrt_generator(f);
  const Function two_re = 2.0 * conj_mul(af, f).real().cast<Complex>();
  return (0.5 * (two_re - m.sqrt_generator(abs2(f)))).real().cast<Complex>();
}

Function gamma_k(const SemigroupModel& m, int k, const Function& f, const Function& g) {
  if (k < 0) throw DomainError("gamma_k needs k >= 0");
  if (k == 0) return conj_mul(f, g);
  const Function af = m.generator(f);
  const Function ag = m.generator(g);
  return 0.5 * (gamma_k(m, k - 1, af, g) + gamma_k(m, k - 1, f, ag) - m.generator(gamma_k(m, k - 1, f, g)));
}

Function derived_form(const SemigroupModel& m, const Bilinear& b, const Function& f, const Function& g) {
  return 0.5 * (b(m.generator(f), g) + b(f, m.generator(g)) - m.generator(b(f, g)));
}

Function space_time_gamma(const SemigroupModel& m, const Function& fs, const Function& dfs) {
  return gamma(m, fs) + abs2(dfs);
}

Matrix gamma2_form(const ChainModel& m, int x) {
  const Matrix& a = m.generator_matrix().matrix();
  const auto n = a.rows();
  auto local = [&](Eigen::Index z) {
    Matrix g = Matrix::Zero(n, n);
    for (Eigen::Index y = 0; y < n; ++y) {
      if (y == z || a(z, y) == 0.0) continue;
      const double w = -0.5 * a(z, y);
      g(z, z) += w;
      g(y, y) += w;
      g(z, y) -= w;
      g(y, z) -= w;
    }
    return g;
  };
  const Matrix gx = local(x);
  Matrix q = a.transpose() * gx + gx * a;
  for (Eigen::Index z = 0; z < n; ++z)
    if (a(x, z) != 0.0) q -= a(x, z) * local(z);
  q *= 0.5;
  return 0.5 * (q + q.transpose());
}

Gamma2Verdict gamma2_psd_check(const ChainModel& m) {
  const int n = static_cast<int>(m.size());
  Gamma2Verdict v;
  v.holds = true;
  std::vector<Eigen::SelfAdjointEigenSolver<Matrix>> solvers(n);
  for (int x = 0; x < n; ++x) {
    solvers[x].compute(gamma2_form(m, x));
    v.scale = std::max(v.scale, solvers[x].eigenvalues().cwiseAbs().maxCoeff());
  }
  v.min_eigenvalue = kInf;
  for (int x = 0; x < n; ++x) {
    const double lo = solvers[x].eigenvalues()(0);
    const double norm = solvers[x].eigenvalues().cwiseAbs().maxCoeff();
    v.min_per_state.push_back(lo);
    if (lo < v.min_eigenvalue) {
      v.min_eigenvalue = lo;
      v.worst_state = x;
      v.eigenvector = solvers[x].eigenvectors().col(0);
    }
    if (lo < -1e-9 * norm - 1e-14 * v.scale) v.holds = false;
  }
  return v;
}

bool gamma2_nonnegative(const SemigroupModel& m) {
  if (m.kind() == ModelKind::FiniteChain) return gamma2_psd_check(dynamic_cast<const ChainModel&>(m)).holds;
  return dynamic_cast<const LatticeModel&>(m).heat_symbol();
}

DerivedFormVerdict derived_form_check(const SemigroupModel& m, const Bilinear& b, const std::vector<Function>& samples,
                                      const std::vector<double>& times) {
  DerivedFormVerdict v;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Function& f = samples[i];
    const Function bf = b(f, f);
    for (double t : times) {
      const Function tf = semigroup::heat_apply(m, t, f);
      const RealVector gap = (b(tf, tf) - semigroup::heat_apply(m, t, bf)).real();
      const double worst = gap.maxCoeff();
      if (worst > v.monotone_violation) {
        v.monotone_violation = worst;
        v.monotone_witness_sample = static_cast<int>(i);
        v.monotone_witness_time = t;
      }
    }
    const double low = -derived_form(m, b, f, f).real().minCoeff();
    if (low > v.derived_violation) {
      v.derived_violation = low;
      v.derived_witness_sample = static_cast<int>(i);
    }
  }
  v.monotone = v.monotone_violation <= 1e-9;
  v.derived_nonnegative = v.derived_violation <= 1e-9;
  v.agree = v.monotone == v.derived_nonnegative;
  return v;
}

Function gs_function(const SemigroupModel& m, const Function& f, double s) {
  using semigroup::poisson_multiplier;
  const Function u = semigroup::poisson_apply(m, s, f);
  const Function du = m.sqrt_generator(u) * -1.0;
  return m.apply(poisson_multiplier(s, 0), conj_mul(du, u) + conj_mul(u, du)) -
         m.apply(poisson_multiplier(s, 1), abs2(u));
}

GsIdentityResult gs_identity_check(const SemigroupModel& m, const Function& f, const std::vector<double>& s_grid) {
  using semigroup::poisson_multiplier;
  GsIdentityResult r;
  const Function c = m.analyze(f);
  for (double s : s_grid) {
    const Function u = m.apply_coefficients(poisson_multiplier(s, 0), c);
    const Function u1 = m.apply_coefficients(poisson_multiplier(s, 1), c);
    const Function u2 = m.apply_coefficients(poisson_multiplier(s, 2), c);
    auto p0 = [&](const Function& g) { return m.apply(poisson_multiplier(s, 0), g); };
    auto p1 = [&](const Function& g) { return m.apply(poisson_multiplier(s, 1), g); };
    auto p2 = [&](const Function& g) { return m.apply(poisson_multiplier(s, 2), g); };
    // Product rule applied to each of the three terms of G_s.
    const Function dg = p1(conj_mul(u1, u)) + p0(conj_mul(u2, u) + abs2(u1)) + p1(conj_mul(u, u1)) +
                        p0(abs2(u1) + conj_mul(u, u2)) - p2(abs2(u)) - p1(conj_mul(u1, u) + conj_mul(u, u1));
    const Function rhs = 2.0 * p0(space_time_gamma(m, u, u1));
    const double scale = std::max(sup_abs(rhs), 1e-300);
    r.max_relative_error = std::max(r.max_relative_error, sup_abs(dg - rhs) / scale);
    r.opposite_sign_error = std::max(r.opposite_sign_error, sup_abs(dg + rhs) / scale);
    const double h = 1e-4 * s;
    const Function fd = (gs_function(m, f, s + h) - gs_function(m, f, s - h)) / (2.0 * h);
    r.finite_difference_error = std::max(r.finite_difference_error, sup_abs(fd - dg) / std::max(sup_abs(dg), 1e-300));
  }
  return r;
}

bool gradient_intertwines(const SemigroupModel& m) {
  for (std::uint64_t i = 0; i < 3; ++i) {
    const Function f = random_test_function(m, 0x5eed, i);
    const GradientField df = m.gradient(f);
    double scale = 0.0;
    for (const auto& comp : df.components) scale = std::max(scale, sup_abs(comp));
    for (double t : {0.3, 1.0}) {
      const GradientField lhs = m.gradient(semigroup::poisson_apply(m, t, f));
      for (std::size_t j = 0; j < df.components.size(); ++j) {
        const Function rhs = semigroup::poisson_apply(m, t, df.components[j]);
        if (sup_abs(lhs.components[j] - rhs) > 1e-9 * std::max(scale, 1e-300)) return false;
      }
    }
  }
  return true;
}

qt::Element qt_gamma(const qt::Element& f) {
  qt::Element acc(f.n, f.theta);
  for (int j = 0; j < f.n; ++j) {
    const qt::Element dj = qt::map_coefficients(f, [j](const qt::Mode& k) { return Complex(0.0, 2.0 * kPi * k[j]); });
    acc = qt::add(acc, qt::multiply(qt::adjoint(dj), dj));
  }
  return acc;
}

qt::Element qt_gamma_from_generator(const qt::Element& f) {
  auto lap = [](const qt::Element& e) {
    return qt::map_coefficients(e, [](const qt::Mode& k) {
      double s = 0.0;
      for (int v : k) s += static_cast<double>(v) * v;
      return Complex(4.0 * kPi * kPi * s);
    });
  };
  const qt::Element fs = qt::adjoint(f);
  const qt::Element sum = qt::add(qt::add(qt::multiply(qt::adjoint(lap(f)), f), qt::multiply(fs, lap(f))),
                                  qt::scale(lap(qt::multiply(fs, f)), -1.0));
  return qt::scale(sum, 0.5);
}

}  // namespace sgholder::calculus
