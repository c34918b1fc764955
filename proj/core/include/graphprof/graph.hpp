#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "graphprof/bitset.hpp"
#include "graphprof/ints.hpp"

namespace graphprof {

using VertexPair = std::pair<int, int>;

// Default ceiling on the order of constructed objects. Two row-bitset
// matrices at n = 20000 take about 100 MB; anything above the limit is
// refused up front with a resource_error carrying the estimate.
// Override per process with the GRAPHPROF_MAX_N environment variable.
int max_vertices();

// Undirected simple graph on vertices 0..n-1, one neighbor bitset per
// vertex. Immutable after construction; rows are safe to read from any
// number of threads.
class Graph {
 public:
  Graph() = default;  // the empty graph on zero vertices

  static Graph from_edges(int n, std::span<const VertexPair> edges);
  // Takes ownership of prebuilt rows; checks symmetry and a clear diagonal.
  static Graph from_rows(std::vector<Bitset> rows);

  int order() const { return n_; }
  count_t edge_count() const { return m_; }
  int degree(int v) const { return degrees_[v]; }
  const std::vector<int>& degrees() const { return degrees_; }
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const Bitset& neighbors(int v) const { return adj_[v]; }

  Graph complement() const;
  Graph induce(std::span<const int> vs) const;

 private:
  int n_ = 0;
  count_t m_ = 0;
  std::vector<Bitset> adj_;
  std::vector<int> degrees_;
};

// Tournament on vertices 0..n-1: a complete antisymmetric orientation,
// row v = out-neighborhood N+(v). The in-neighborhood is derived, not
// stored: N-(v) = V \ ({v} ∪ N+(v)).
class Tournament {
 public:
  Tournament() = default;

  static Tournament from_arcs(int n, std::span<const VertexPair> arcs);
  static Tournament from_rows(std::vector<Bitset> rows);

  int order() const { return n_; }
  int out_degree(int v) const { return out_degrees_[v]; }
  int in_degree(int v) const { return n_ - 1 - out_degrees_[v]; }
  const std::vector<int>& out_degrees() const { return out_degrees_; }
  bool beats(int u, int v) const { return out_[u].test(v); }
  const Bitset& out_set(int v) const { return out_[v]; }
  Bitset in_set(int v) const;

  Tournament reverse() const;
  Tournament induce(std::span<const int> vs) const;

 private:
  int n_ = 0;
  std::vector<Bitset> out_;
  std::vector<int> out_degrees_;
};

}  // namespace graphprof
