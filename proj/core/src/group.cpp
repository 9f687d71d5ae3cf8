#include "sgholder/group.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <nlohmann/json.hpp>

#include "sgholder/errors.hpp"

namespace sgholder::groups {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  const int n = order();
  if (n == 0) throw DimensionMismatch("group table is empty");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw DimensionMismatch("group table must be square");
    std::vector<bool> seen(n, false);
    for (int v : row) {
      if (v < 0 || v >= n || seen[v]) throw DomainError("group table row is not a permutation");
      seen[v] = true;
    }
  }
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int h = 0; h < n && ok; ++h) ok = table_[e][h] == h && table_[h][e] == h;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw DomainError("group table has no identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw DomainError("group table is not associative");
  inverse_.assign(n, -1);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (table_[g][h] == identity_) inverse_[g] = h;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::z2_power(int n) {
  const int m = 1 << n;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a][b] = a ^ b;
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  // Element (r, s) = rot^r ref^s encoded as r + n s.
  const int m = 2 * n;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int r1 = a % n, s1 = a / n, r2 = b % n, s2 = b / n;
      const int r = ((s1 ? r1 - r2 : r1 + r2) % n + n) % n;
      t[a][b] = r + n * (s1 ^ s2);
    }
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 5) throw DomainError("symmetric group degree must be in [1, 5]");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<int>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::from_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("group table: ") + e.what(), 0);
  }
  if (!j.is_array()) throw ParseError("group table must be an array of arrays", 0);
  std::vector<std::vector<int>> t;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("group table must be an array of arrays", 0);
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError("group table entries must be integers", 0);
      r.push_back(v.get<int>());
    }
    t.push_back(std::move(r));
  }
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group table '" + path + "'", 0);
  return from_json(in);
}

namespace {

CnVerdict psd_verdict(const Matrix& k) {
  CnVerdict v;
  Eigen::SelfAdjointEigenSolver<Matrix> es(k);
  v.trace = k.trace();
  v.min_eigenvalue = es.eigenvalues()(0);
  v.conditionally_negative = v.min_eigenvalue >= -1e-10 * std::max(std::abs(v.trace), 1e-300);
  return v;
}

void validate_psi(const std::vector<double>& psi, const std::vector<int>& inverse, int identity) {
  const double scale = std::max(1.0, *std::max_element(psi.begin(), psi.end()));
  for (std::size_t g = 0; g < psi.size(); ++g) {
    if (!(psi[g] >= 0.0) || !std::isfinite(psi[g])) throw DomainError("psi must be finite and nonnegative");
    if (std::abs(psi[g] - psi[inverse[g]]) > 1e-12 * scale)
      throw SymmetryError("psi(g) != psi(g^-1) at element " + std::to_string(g));
  }
  if (std::abs(psi[identity]) > 1e-12 * scale) throw DomainError("psi must vanish at the identity");
}

Matrix cn_kernel(const FiniteGroup& g, const std::vector<double>& psi) {
  const int n = g.order();
  Matrix k(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) k(a, b) = 0.5 * (psi[a] + psi[b] - psi[g.multiply(g.inverse(a), b)]);
  return k;
}

}  // namespace

CnVerdict conditionally_negative_check(const FiniteGroup& g, const std::vector<double>& psi) {
  if (static_cast<int>(psi.size()) != g.order()) throw DimensionMismatch("psi length must equal the group order");
  std::vector<int> inv(g.order());
  for (int a = 0; a < g.order(); ++a) inv[a] = g.inverse(a);
  validate_psi(psi, inv, g.identity());
  const Matrix k = cn_kernel(g, psi);
  CnVerdict v = psd_verdict(k);
  if (!v.conditionally_negative) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(k);
    RealVector w = es.eigenvectors().col(0);
    w(g.identity()) -= w.sum();
    v.witness = w;
    double val = 0.0;
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) val += w(a) * w(b) * psi[g.multiply(g.inverse(a), b)];
    v.witness_value = val;
  }
  return v;
}

CnVerdict conditionally_negative_check_z(int bandwidth, const std::function<double(int)>& psi) {
  const int n = 2 * bandwidth + 1;
  const double scale = std::max(1.0, std::abs(psi(2 * bandwidth)));
  for (int k = -2 * bandwidth; k <= 2 * bandwidth; ++k) {
    if (!(psi(k) >= 0.0)) throw DomainError("psi must be nonnegative");
    if (std::abs(psi(k) - psi(-k)) > 1e-12 * scale) throw SymmetryError("psi(k) != psi(-k)");
  }
  if (std::abs(psi(0)) > 1e-12 * scale) throw DomainError("psi must vanish at 0");
  Matrix k(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ka = a - bandwidth, kb = b - bandwidth;
      k(a, b) = 0.5 * (psi(ka) + psi(kb) - psi(kb - ka));
    }
  CnVerdict v = psd_verdict(k);
  if (!v.conditionally_negative) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(k);
    RealVector w = es.eigenvectors().col(0);
    w(bandwidth) -= w.sum();
    v.witness = w;
    double val = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) val += w(a) * w(b) * psi(b - a);
    v.witness_value = val;
  }
  return v;
}

Cocycle cocycle_from_psi(const FiniteGroup& g, const std::vector<double>& psi) {
  const CnVerdict v = conditionally_negative_check(g, psi);
  if (!v.conditionally_negative) throw DomainError("psi is not conditionally negative");
  const int n = g.order();
  const Matrix k = cn_kernel(g, psi);
  Eigen::SelfAdjointEigenSolver<Matrix> es(k);
  const double cut = 1e-10 * std::max(k.trace(), 1e-300);
  std::vector<int> keep;
  for (int i = 0; i < n; ++i)
    if (es.eigenvalues()(i) > cut) keep.push_back(i);
  Cocycle c;
  c.dimension = static_cast<int>(keep.size());
  const int d = c.dimension;
  c.beta = Matrix::Zero(d, n);
  Matrix pinv(n, d);  // B^+ = U diag(1/sqrt(lambda))
  for (int r = 0; r < d; ++r) {
    const double lam = es.eigenvalues()(keep[r]);
    c.beta.row(r) = std::sqrt(lam) * es.eigenvectors().col(keep[r]).transpose();
    pinv.col(r) = es.eigenvectors().col(keep[r]) / std::sqrt(lam);
  }
  double scale = 1.0;
  for (double p : psi) scale = std::max(scale, std::sqrt(p));
  for (int a = 0; a < n; ++a) c.psi_error = std::max(c.psi_error, std::abs(c.beta.col(a).squaredNorm() - psi[a]));
  c.pi.reserve(n);
  for (int a = 0; a < n; ++a) {
    if (d == 0) {
      c.pi.emplace_back(0, 0);
      continue;
    }
    Matrix shifted(d, n);
    for (int h = 0; h < n; ++h) shifted.col(h) = c.beta.col(g.multiply(a, h)) - c.beta.col(a);
    Matrix p = shifted * pinv;
    c.orthogonality_error =
        std::max(c.orthogonality_error, (p.transpose() * p - Matrix::Identity(d, d)).cwiseAbs().maxCoeff());
    c.cocycle_error = std::max(c.cocycle_error, (p * c.beta - shifted).colwise().norm().maxCoeff());
    c.pi.push_back(std::move(p));
  }
  if (c.cocycle_error > 1e-8 * scale)
    throw CocycleConsistencyError("cocycle identity fails with error " + std::to_string(c.cocycle_error));
  return c;
}

}  // namespace sgholder::groups
