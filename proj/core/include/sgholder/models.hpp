#pragma once

#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sgholder/model.hpp"

namespace sgholder::models {

FiniteChainGenerator two_point(double rate = 1.0);
// Nearest-neighbour walk on Z/N: A_ii = 2r, A_{i,i+-1} = -r (N >= 3).
FiniteChainGenerator cycle(int n, double rate = 1.0);
// Walk on {0,1}^d flipping one coordinate at rate r.
FiniteChainGenerator hypercube(int d, double rate = 1.0);
FiniteChainGenerator complete(int n, double rate = 1.0);
// Path 0 - 1 - ... - n with edge rates w (uniform measure).
FiniteChainGenerator path(const std::vector<double>& rates);

// 2 r w with multiplicity C(d, w), w = 0..d, ascending.
std::vector<double> hypercube_spectrum(int d, double rate = 1.0);

struct Edge {
  int from;
  int to;
  double rate;
};

// Edge i j w sets the jump rate i -> j to w. When the reverse edge is not
// listed its rate follows from detailed balance, mu_i w / mu_j. Without mu
// the measure is uniform.
FiniteChainGenerator weighted_graph(const std::vector<Edge>& edges, std::optional<RealVector> mu = std::nullopt,
                                    std::optional<int> states = std::nullopt);

// Lines "i j w" (0-based) and optionally one line "mu v_0 ... v_{N-1}";
// '#' starts a comment. Throws ParseError with the offending line.
FiniteChainGenerator read_edge_list(std::istream& in);
FiniteChainGenerator read_edge_list_file(const std::string& path);

std::unique_ptr<ChainModel> chain(FiniteChainGenerator gen, std::string name);

// Heat semigroup on T^n: psi(k) = 4 pi^2 |k|^2.
std::unique_ptr<LatticeModel> torus(int dimension, int bandwidth, int grid = 0);

// Functions on the dual circle of Z with a conditionally negative length
// psi on Z, evaluated on the FFT frequencies.
std::unique_ptr<LatticeModel> integer_group(int bandwidth, LatticeModel::Symbol psi, std::string name, int grid = 0);

}  // namespace sgholder::models
