#include "graphprof/graph.hpp"

#include <cstdlib>
#include <string>

#include "graphprof/errors.hpp"

namespace graphprof {

namespace {

constexpr int kDefaultMaxVertices = 20000;

void check_order(int n) {
  if (n < 0) throw input_error("vertex count must be non-negative, got " + std::to_string(n));
  int cap = max_vertices();
  if (n > cap) {
    double mb = 2.0 * n * (n / 8.0) / 1e6;
    throw resource_error("order " + std::to_string(n) + " exceeds the vertex limit " +
                         std::to_string(cap) + " (~" + std::to_string(static_cast<long>(mb)) +
                         " MB of adjacency rows); raise GRAPHPROF_MAX_N to override");
  }
}

void check_vertex(int v, int n, const std::string& what) {
  if (v < 0 || v >= n)
    throw input_error(what + " has vertex " + std::to_string(v) +
                      " outside 0.." + std::to_string(n - 1));
}

std::string pair_str(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::vector<int> row_counts(const std::vector<Bitset>& rows) {
  std::vector<int> d(rows.size());
  for (std::size_t v = 0; v < rows.size(); ++v) d[v] = static_cast<int>(rows[v].count());
  return d;
}

}  // namespace

int max_vertices() {
  static int cap = [] {
    if (const char* env = std::getenv("GRAPHPROF_MAX_N")) {
      long v = std::strtol(env, nullptr, 10);
      if (v > 0) return static_cast<int>(v);
    }
    return kDefaultMaxVertices;
  }();
  return cap;
}

Graph Graph::from_edges(int n, std::span<const VertexPair> edges) {
  check_order(n);
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    std::string what = "edge " + pair_str(u, v) + " at index " + std::to_string(i);
    check_vertex(u, n, what);
    check_vertex(v, n, what);
    if (u == v) throw input_error(what + " is a self-loop");
    rows[u].set(v);
    rows[v].set(u);
  }
  return from_rows(std::move(rows));
}

Graph Graph::from_rows(std::vector<Bitset> rows) {
  int n = static_cast<int>(rows.size());
  check_order(n);
  for (int v = 0; v < n; ++v) {
    if (rows[v].size() != static_cast<std::size_t>(n))
      throw input_error("adjacency row " + std::to_string(v) + " has wrong width");
    if (rows[v].test(v)) throw input_error("self-loop at vertex " + std::to_string(v));
  }
  count_t total = 0;
  for (int v = 0; v < n; ++v) total += static_cast<count_t>(rows[v].count());
  // Symmetry: check bit (u,v) == bit (v,u) for u<v.
  for (int u = 0; u < n; ++u)
    for (std::size_t v = rows[u].next_set(u + 1); v != Bitset::npos;
         v = rows[u].next_set(v + 1))
      if (!rows[v].test(u))
        throw input_error("asymmetric adjacency at pair " + pair_str(u, static_cast<int>(v)));
  Graph g;
  g.n_ = n;
  g.adj_ = std::move(rows);
  g.degrees_ = row_counts(g.adj_);
  g.m_ = total / 2;
  return g;
}

Graph Graph::complement() const {
  std::vector<Bitset> rows(n_, Bitset(n_));
  for (int v = 0; v < n_; ++v) {
    rows[v] = adj_[v].complement();
    rows[v].reset(v);
  }
  return from_rows(std::move(rows));
}

Graph Graph::induce(std::span<const int> vs) const {
  int k = static_cast<int>(vs.size());
  std::vector<Bitset> rows(k, Bitset(k));
  for (int i = 0; i < k; ++i) {
    check_vertex(vs[i], n_, "selection entry " + std::to_string(i));
    for (int j = i + 1; j < k; ++j) {
      if (vs[i] == vs[j])
        throw input_error("duplicate vertex " + std::to_string(vs[i]) + " in selection");
      if (adjacent(vs[i], vs[j])) {
        rows[i].set(j);
        rows[j].set(i);
      }
    }
  }
  return from_rows(std::move(rows));
}

Tournament Tournament::from_arcs(int n, std::span<const VertexPair> arcs) {
  check_order(n);
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    auto [u, v] = arcs[i];
    std::string what = "arc " + pair_str(u, v) + " at index " + std::to_string(i);
    check_vertex(u, n, what);
    check_vertex(v, n, what);
    if (u == v) throw input_error(what + " is a self-arc");
    if (rows[v].test(u))
      throw input_error("both orientations present for pair " + pair_str(u, v));
    if (rows[u].test(v)) throw input_error("duplicate " + what);
    rows[u].set(v);
  }
  return from_rows(std::move(rows));
}

Tournament Tournament::from_rows(std::vector<Bitset> rows) {
  int n = static_cast<int>(rows.size());
  check_order(n);
  for (int v = 0; v < n; ++v) {
    if (rows[v].size() != static_cast<std::size_t>(n))
      throw input_error("out-row " + std::to_string(v) + " has wrong width");
    if (rows[v].test(v)) throw input_error("self-arc at vertex " + std::to_string(v));
  }
  // Completeness + antisymmetry: row u and the transposed column u must
  // partition V \ {u}. Checked wordwise via out[u] and the in-set built
  // from the other rows.
  std::vector<Bitset> in(n, Bitset(n));
  for (int u = 0; u < n; ++u)
    for (std::size_t v = rows[u].next_set(0); v != Bitset::npos;
         v = rows[u].next_set(v + 1))
      in[v].set(u);
  count_t total = 0;
  for (int u = 0; u < n; ++u) {
    if (rows[u].and_count(in[u]) != 0) {
      for (std::size_t v = rows[u].next_set(0); v != Bitset::npos;
           v = rows[u].next_set(v + 1))
        if (in[u].test(v))
          throw input_error("both orientations present for pair " +
                            pair_str(u, static_cast<int>(v)));
    }
    std::size_t covered = rows[u].count() + in[u].count();
    if (covered != static_cast<std::size_t>(n - 1)) {
      Bitset seen = rows[u];
      seen |= in[u];
      seen.set(u);
      std::size_t missing = seen.complement().next_set(0);
      throw input_error("missing orientation for pair " +
                        pair_str(u, static_cast<int>(missing)));
    }
    total += static_cast<count_t>(rows[u].count());
  }
  if (n >= 2 && total != binomial(n, 2))
    throw internal_error("out-degree sum != C(n,2)");
  Tournament t;
  t.n_ = n;
  t.out_ = std::move(rows);
  t.out_degrees_ = row_counts(t.out_);
  return t;
}

Bitset Tournament::in_set(int v) const {
  Bitset r = out_[v].complement();
  r.reset(v);
  return r;
}

Tournament Tournament::reverse() const {
  std::vector<Bitset> rows(n_, Bitset(n_));
  for (int v = 0; v < n_; ++v) rows[v] = in_set(v);
  return from_rows(std::move(rows));
}

Tournament Tournament::induce(std::span<const int> vs) const {
  int k = static_cast<int>(vs.size());
  std::vector<Bitset> rows(k, Bitset(k));
  for (int i = 0; i < k; ++i) {
    check_vertex(vs[i], n_, "selection entry " + std::to_string(i));
    for (int j = i + 1; j < k; ++j) {
      if (vs[i] == vs[j])
        throw input_error("duplicate vertex " + std::to_string(vs[i]) + " in selection");
      if (beats(vs[i], vs[j]))
        rows[i].set(j);
      else
        rows[j].set(i);
    }
  }
  return from_rows(std::move(rows));
}

}  // namespace graphprof
