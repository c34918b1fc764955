#pragma once

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "graphprof/graph.hpp"
#include "graphprof/ints.hpp"

// Test-side oracles. These recount profiles by definition (triple/4-set
// enumeration with structural classification) and deliberately share no
// code with the formula or canonical-form paths they check.

namespace testutil {

using graphprof::count_t;
using graphprof::Graph;
using graphprof::Tournament;
using graphprof::VertexPair;

// (N0, N1, N2, N3) by scanning every vertex triple.
inline std::array<count_t, 4> brute_profile3(const Graph& g) {
  std::array<count_t, 4> counts{};
  int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        int edges = g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(b, c);
        counts[edges] += 1;
      }
  return counts;
}

// (T4, C4, W4, L4) by scanning every 4-set; the sorted out-degree sequence
// inside a 4-tournament identifies its type.
inline std::array<count_t, 4> brute_profile4(const Tournament& t) {
  std::array<count_t, 4> counts{};  // T4, C4, W4, L4
  int n = t.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          int vs[4] = {a, b, c, d};
          std::array<int, 4> deg{};
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
              if (i != j && t.beats(vs[i], vs[j])) deg[i] += 1;
          std::sort(deg.begin(), deg.end());
          if (deg == std::array<int, 4>{0, 1, 2, 3})
            counts[0] += 1;
          else if (deg == std::array<int, 4>{1, 1, 2, 2})
            counts[1] += 1;
          else if (deg == std::array<int, 4>{1, 1, 1, 3})
            counts[2] += 1;  // one vertex beats a cyclic triangle
          else
            counts[3] += 1;  // cyclic triangle beats one vertex
        }
  return counts;
}

inline count_t brute_cyclic_triangles(const Tournament& t) {
  count_t c = 0;
  int n = t.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c2 = b + 1; c2 < n; ++c2) {
        int da = t.beats(a, b) + t.beats(a, c2);
        int db = t.beats(b, a) + t.beats(b, c2);
        int dc = t.beats(c2, a) + t.beats(c2, b);
        if (da == 1 && db == 1 && dc == 1) c += 1;
      }
  return c;
}

// Exact k-clique count by subset enumeration (small n only).
inline count_t brute_k_cliques(const Graph& g, int k) {
  int n = g.order();
  count_t total = 0;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return 0;
  while (true) {
    bool clique = true;
    for (int i = 0; i < k && clique; ++i)
      for (int j = i + 1; j < k && clique; ++j)
        clique = g.adjacent(idx[i], idx[j]);
    total += clique;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return total;
}

// Does g contain an induced 5-vertex path? Subset scan: 4 edges, max
// degree 2, connected.
inline bool brute_has_induced_p5(const Graph& g) {
  int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          for (int e = d + 1; e < n; ++e) {
            int vs[5] = {a, b, c, d, e};
            int deg[5] = {0, 0, 0, 0, 0};
            int edges = 0;
            for (int i = 0; i < 5; ++i)
              for (int j = i + 1; j < 5; ++j)
                if (g.adjacent(vs[i], vs[j])) {
                  ++edges;
                  ++deg[i];
                  ++deg[j];
                }
            if (edges != 4) continue;
            int ones = 0;
            bool ok = true;
            for (int i = 0; i < 5; ++i) {
              if (deg[i] == 0 || deg[i] > 2) ok = false;
              ones += deg[i] == 1;
            }
            if (!ok || ones != 2) continue;
            // connectivity separates the path from triangle + edge
            unsigned reach = 1;
            for (int rounds = 0; rounds < 5; ++rounds)
              for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j)
                  if ((reach >> i & 1) && g.adjacent(vs[i], vs[j])) reach |= 1u << j;
            if (reach == 31u) return true;
          }
  return false;
}

// tr(T) by subset enumeration: a tournament is transitive iff its
// out-degrees are pairwise distinct.
inline int brute_max_transitive(const Tournament& t) {
  int n = t.order();
  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) vs.push_back(v);
    int k = static_cast<int>(vs.size());
    if (k <= best) continue;
    std::vector<int> deg(k, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j && t.beats(vs[i], vs[j])) deg[i] += 1;
    std::sort(deg.begin(), deg.end());
    bool transitive = true;
    for (int i = 0; i < k; ++i) transitive = transitive && deg[i] == i;
    if (transitive) best = k;
  }
  return best;
}

// Test-corpus generators, seeded independently of the library RNG.
inline Graph mt_random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<VertexPair> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline Tournament mt_random_tournament(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<VertexPair> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng))
        arcs.emplace_back(u, v);
      else
        arcs.emplace_back(v, u);
    }
  return Tournament::from_arcs(n, arcs);
}

}  // namespace testutil
