#pragma once

#include <cstdint>
#include <vector>

#include "graphprof/graph.hpp"
#include "graphprof/ints.hpp"

namespace graphprof {

// Limit description of a disjoint clique union: relative clique sizes
// alpha_1 >= ... >= alpha_r > 0 plus isolated-vertex mass beta, summing
// to 1.
struct CliqueSpec {
  std::vector<double> alphas;
  double beta = 0.0;

  // beta is inferred as 1 - sum(alphas); alphas are sorted descending.
  static CliqueSpec make(std::vector<double> alphas);
  void validate() const;
  int r() const { return static_cast<int>(alphas.size()); }
};

// Largest-remainder apportionment of weights*n into integer sizes summing
// to n exactly; leftover seats go to the largest fractional remainders,
// ties to the lower index.
std::vector<int> apportion(const std::vector<double>& weights, int n);

// K_{a1 n} ⊔ ... ⊔ K_{ar n} ⊔ (beta n isolated vertices), sizes by
// largest-remainder apportionment, cliques contiguous in index order.
Graph clique_union(const CliqueSpec& spec, int n);

// The profile-balanced three-clique union with shares (theta, theta,
// 1-2 theta): the unique clique union whose independent-triple and
// triangle densities both converge to the threshold constant rho.
Graph extremal_rho_graph(int n);

// Odd-order rotational tournament: v beats v+1, ..., v+(n-1)/2 (mod n).
Tournament circular_tournament(int n);

// Seeded random models; each pair is decided by a pure function of
// (seed, pair), so results are reproducible and thread-count independent.
Graph random_graph(int n, double p, std::uint64_t seed);
Tournament random_tournament(int n, std::uint64_t seed);

// u beats v iff u < v.
Tournament transitive_tournament(int n);

// Pentagon-based recursive blow-up: level 1 is C5; level k takes five
// level-(k-1) blocks and joins consecutive blocks (mod 5) completely.
// Self-complementary at every level, with edge density exactly 1/2.
// Depth capped at 4 (n = 625).
Graph tyomkyn_graph(int k);

// Exact edge and triangle counts of the blow-up levels by recurrence:
//   m_k = 5 m_{k-1} + 5 * 25^{k-1},   T_k = 5 T_{k-1} + 10 m_{k-1} n_{k-1}.
struct TyomkynLevel {
  int k = 0;
  std::int64_t n = 0;
  count_t edges = 0;
  count_t triangles = 0;
};
std::vector<TyomkynLevel> tyomkyn_levels(int k_max);

}  // namespace graphprof
