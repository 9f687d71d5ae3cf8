#include "sgholder/models.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "sgholder/errors.hpp"

namespace sgholder::models {

namespace {

void add_rate(Matrix& a, int i, int j, double r) {
  a(i, j) -= r;
  a(i, i) += r;
}

}  // namespace

FiniteChainGenerator two_point(double rate) {
  Matrix a(2, 2);
  a << rate, -rate, -rate, rate;
  return {StateSpace::uniform(2), a};
}

FiniteChainGenerator cycle(int n, double rate) {
  if (n < 3) throw DomainError("cycle needs at least 3 states");
  Matrix a = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    add_rate(a, i, (i + 1) % n, rate);
    add_rate(a, i, (i + n - 1) % n, rate);
  }
  return {StateSpace::uniform(n), a};
}

FiniteChainGenerator hypercube(int d, double rate) {
  if (d < 1 || d > 12) throw DomainError("hypercube dimension must be in [1, 12]");
  const int n = 1 << d;
  Matrix a = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < d; ++b) add_rate(a, i, i ^ (1 << b), rate);
  return {StateSpace::uniform(n), a};
}

FiniteChainGenerator complete(int n, double rate) {
  if (n < 2) throw DomainError("complete graph needs at least 2 states");
  Matrix a = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) add_rate(a, i, j, rate);
  return {StateSpace::uniform(n), a};
}

FiniteChainGenerator path(const std::vector<double>& rates) {
  const int n = static_cast<int>(rates.size()) + 1;
  Matrix a = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    if (!(rates[i] > 0.0)) throw SignError("path rates must be positive");
    add_rate(a, i, i + 1, rates[i]);
    add_rate(a, i + 1, i, rates[i]);
  }
  return {StateSpace::uniform(n), a};
}

std::vector<double> hypercube_spectrum(int d, double rate) {
  std::vector<double> out;
  for (int w = 0; w <= d; ++w) {
    const double mult = std::round(std::tgamma(d + 1.0) / (std::tgamma(w + 1.0) * std::tgamma(d - w + 1.0)));
    for (int m = 0; m < static_cast<int>(mult); ++m) out.push_back(2.0 * rate * w);
  }
  return out;
}

FiniteChainGenerator weighted_graph(const std::vector<Edge>& edges, std::optional<RealVector> mu,
                                    std::optional<int> states) {
  int n = states.value_or(0);
  if (mu) n = std::max(n, static_cast<int>(mu->size()));
  for (const Edge& e : edges) {
    if (e.from < 0 || e.to < 0) throw DomainError("negative state index");
    n = std::max({n, e.from + 1, e.to + 1});
  }
  if (n == 0) throw DimensionMismatch("empty graph");
  RealVector m = mu ? *mu : RealVector::Constant(n, 1.0 / n);
  if (m.size() != n) throw DimensionMismatch("measure length does not match the number of states");
  StateSpace space(m);
  std::map<std::pair<int, int>, double> rate;
  for (const Edge& e : edges) {
    if (e.from == e.to) throw DomainError("self loops are not allowed");
    if (!(e.rate >= 0.0)) throw SignError("negative edge weight on " + std::to_string(e.from) + " -> " +
                                          std::to_string(e.to));
    rate[{e.from, e.to}] += e.rate;
  }
  Matrix a = Matrix::Zero(n, n);
  for (const auto& [ij, r] : rate) {
    const auto [i, j] = ij;
    a(i, j) -= r;
    if (!rate.count({j, i})) a(j, i) -= m(i) * r / m(j);
  }
  for (int i = 0; i < n; ++i) a(i, i) = -(a.row(i).sum() - a(i, i));
  return {space, a};
}

FiniteChainGenerator read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::optional<RealVector> mu;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "mu") {
      if (mu) throw ParseError("duplicate mu line", lineno);
      std::vector<double> vals;
      std::string tok;
      while (ls >> tok) {
        try {
          std::size_t used = 0;
          vals.push_back(std::stod(tok, &used));
          if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
          throw ParseError("bad measure value '" + tok + "'", lineno);
        }
      }
      if (vals.empty()) throw ParseError("empty mu line", lineno);
      mu = Eigen::Map<RealVector>(vals.data(), static_cast<Eigen::Index>(vals.size()));
      continue;
    }
    Edge e{};
    std::istringstream es(line);
    std::string extra;
    if (!(es >> e.from >> e.to >> e.rate) || (es >> extra))
      throw ParseError("expected 'i j w', got '" + line + "'", lineno);
    edges.push_back(e);
  }
  return weighted_graph(edges, mu);
}

FiniteChainGenerator read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open edge list '" + path + "'", 0);
  return read_edge_list(in);
}

std::unique_ptr<ChainModel> chain(FiniteChainGenerator gen, std::string name) {
  return std::make_unique<ChainModel>(std::move(gen), std::move(name));
}

std::unique_ptr<LatticeModel> torus(int dimension, int bandwidth, int grid) {
  auto psi = [](const std::vector<int>& k) {
    double s = 0.0;
    for (int v : k) s += static_cast<double>(v) * v;
    return 4.0 * kPi * kPi * s;
  };
  return std::make_unique<LatticeModel>(dimension, bandwidth, psi, true,
                                        "torus" + std::to_string(dimension) + "_F" + std::to_string(bandwidth), grid);
}

std::unique_ptr<LatticeModel> integer_group(int bandwidth, LatticeModel::Symbol psi, std::string name, int grid) {
  return std::make_unique<LatticeModel>(1, bandwidth, std::move(psi), false, std::move(name), grid);
}

}  // namespace sgholder::models
