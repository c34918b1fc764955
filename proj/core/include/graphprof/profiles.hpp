#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "graphprof/graph.hpp"
#include "graphprof/ints.hpp"

namespace graphprof {

// Default budget for enumeration-style operations, in predicted elementary
// evaluations. Operations whose predicted cost exceeds the cap refuse up
// front. GRAPHPROF_WORK_CAP overrides the default per process.
std::uint64_t default_work_cap();

// Induced 3-vertex profile: counts[i] = number of vertex triples spanning
// exactly i edges. Counts are exact; densities are the derived view
// counts[i] / C(n,3).
struct Profile3 {
  int n = 0;
  std::array<count_t, 4> counts{};  // N0, N1, N2, N3
  std::array<double, 4> densities{};

  count_t total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
};

// Induced 3- and 4-vertex profile of a tournament.
//
// Type naming fixed by the counting identities below: W4 is the 4-set with
// a vertex beating a cyclic triangle (out-degree pattern 3,1,1,1), L4 the
// reversal (2,2,2,0), C4 the strongly connected type, T4 transitive.
struct TournamentProfile4 {
  int n = 0;
  count_t t4 = 0, c4 = 0, w4 = 0, l4 = 0;
  count_t trans3 = 0, cyc3 = 0;
  std::array<double, 4> densities4{};  // t4, c4, w4, l4
  double density_c3 = 0.0;

  count_t total4() const { return t4 + c4 + w4 + l4; }
};

// Per-arc cyclic-triangle counts: for the arc u->v, s = |N+(v) ∩ N-(u)|,
// the number of cyclic triangles through the arc. Arcs are laid out in row
// order (u ascending, then v ascending within out[u]).
struct ArcCycleCounts {
  int n = 0;
  std::vector<std::uint32_t> row_offset;  // size n+1, prefix sums of out-degrees
  std::vector<int> head;                  // arc i points at head[i]
  std::vector<std::uint32_t> s;           // cyclic triangles through arc i

  count_t sum() const {
    count_t t = 0;
    for (std::uint32_t v : s) t += v;
    return t;
  }
};

// Exact number of triangles, by edge iteration: for each edge (u,v) with
// u < v, popcount the common neighborhood above v, so every triangle is
// counted at its lowest edge exactly once.
count_t triangle_count(const Graph& g, unsigned threads = 1);

// Exact 3-profile from the closed identities
//   N3 = triangles, N2 = sum_v C(deg v,2) - 3 N3,
//   N1 = m(n-2) - 2 N2 - 3 N3, N0 = C(n,3) - N1 - N2 - N3.
Profile3 profile3_graph(const Graph& g, unsigned threads = 1);

// Exact cyclic-triangle count: C(n,3) - sum_v C(d+(v),2).
count_t cyclic_triangle_count(const Tournament& t);

ArcCycleCounts arc_cycle_counts(const Tournament& t, unsigned threads = 1);

// Exact 4-profile from degree and arc identities:
//   A = sum C(d+,3), B = sum C(d-,3), C4 = sum_e C(s_e,2),
//   T4 = A + B + C4 - C(n,4), W4 = A - T4, L4 = B - T4.
TournamentProfile4 profile4_tournament(const Tournament& t, unsigned threads = 1);

// Exact number of k-vertex cliques, by recursive candidate-set
// intersection. Refuses if the predicted node count exceeds the cap.
count_t count_k_cliques(const Graph& g, int k,
                        std::uint64_t work_cap = default_work_cap());

}  // namespace graphprof
