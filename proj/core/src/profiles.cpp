#include "graphprof/profiles.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "graphprof/errors.hpp"
#include "graphprof/parallel.hpp"

namespace graphprof {

std::uint64_t default_work_cap() {
  static std::uint64_t cap = [] {
    if (const char* env = std::getenv("GRAPHPROF_WORK_CAP")) {
      unsigned long long v = std::strtoull(env, nullptr, 10);
      if (v > 0) return static_cast<std::uint64_t>(v);
    }
    return std::uint64_t{1'000'000'000};
  }();
  return cap;
}

count_t triangle_count(const Graph& g, unsigned threads) {
  int n = g.order();
  std::vector<count_t> partial(threads ? threads : 1, 0);
  parallel_chunks(static_cast<std::size_t>(n), threads,
                  [&](std::size_t begin, std::size_t end, unsigned w) {
                    count_t local = 0;
                    for (std::size_t u = begin; u < end; ++u) {
                      const Bitset& row_u = g.neighbors(static_cast<int>(u));
                      for (std::size_t v = row_u.next_set(u + 1); v != Bitset::npos;
                           v = row_u.next_set(v + 1))
                        local += static_cast<count_t>(
                            row_u.and_count_above(g.neighbors(static_cast<int>(v)), v));
                    }
                    partial[w] = local;
                  });
  count_t total = 0;
  for (count_t p : partial) total += p;
  return total;
}

Profile3 profile3_graph(const Graph& g, unsigned threads) {
  int n = g.order();
  if (n < 3) throw input_error("3-profile needs n >= 3, got n = " + std::to_string(n));
  count_t n3 = triangle_count(g, threads);
  count_t cherries = 0;  // paths of length 2, counted at their centre
  for (int v = 0; v < n; ++v) cherries += binomial(g.degree(v), 2);
  count_t n2 = cherries - 3 * n3;
  count_t n1 = g.edge_count() * (n - 2) - 2 * n2 - 3 * n3;
  count_t n0 = binomial(n, 3) - n1 - n2 - n3;
  if (n0 < 0 || n1 < 0 || n2 < 0 || n3 < 0)
    throw internal_error("negative 3-profile count");
  Profile3 p;
  p.n = n;
  p.counts = {n0, n1, n2, n3};
  count_t denom = binomial(n, 3);
  for (int i = 0; i < 4; ++i) p.densities[i] = ratio(p.counts[i], denom);
  return p;
}

count_t cyclic_triangle_count(const Tournament& t) {
  int n = t.order();
  if (n < 3) return 0;
  count_t trans = 0;
  for (int v = 0; v < n; ++v) trans += binomial(t.out_degree(v), 2);
  return binomial(n, 3) - trans;
}

ArcCycleCounts arc_cycle_counts(const Tournament& t, unsigned threads) {
  int n = t.order();
  if (n < 3) throw input_error("arc cycle counts need n >= 3");
  ArcCycleCounts acc;
  acc.n = n;
  acc.row_offset.resize(n + 1, 0);
  for (int v = 0; v < n; ++v)
    acc.row_offset[v + 1] = acc.row_offset[v] + static_cast<std::uint32_t>(t.out_degree(v));
  std::uint32_t arcs = acc.row_offset[n];
  acc.head.resize(arcs);
  acc.s.resize(arcs);
  parallel_chunks(static_cast<std::size_t>(n), threads,
                  [&](std::size_t begin, std::size_t end, unsigned) {
                    for (std::size_t u = begin; u < end; ++u) {
                      std::uint32_t idx = acc.row_offset[u];
                      const Bitset& out_u = t.out_set(static_cast<int>(u));
                      // N-(u) = ~out[u] minus the diagonal; u itself can never
                      // appear in out[v] for v in out[u], so no mask is needed.
                      out_u.for_each_set([&](std::size_t v) {
                        acc.head[idx] = static_cast<int>(v);
                        acc.s[idx] = static_cast<std::uint32_t>(
                            t.out_set(static_cast<int>(v)).andnot_count(out_u));
                        ++idx;
                      });
                    }
                  });
  return acc;
}

TournamentProfile4 profile4_tournament(const Tournament& t, unsigned threads) {
  int n = t.order();
  if (n < 4) throw input_error("4-profile needs n >= 4, got n = " + std::to_string(n));
  count_t a = 0, b = 0, trans3 = 0;
  for (int v = 0; v < n; ++v) {
    a += binomial(t.out_degree(v), 3);
    b += binomial(t.in_degree(v), 3);
    trans3 += binomial(t.out_degree(v), 2);
  }
  // C4 = sum over arcs of C(s_e, 2): pairs of cyclic triangles sharing an
  // arc correspond one-to-one with strongly connected 4-sets.
  std::vector<count_t> partial(threads ? threads : 1, 0);
  parallel_chunks(static_cast<std::size_t>(n), threads,
                  [&](std::size_t begin, std::size_t end, unsigned w) {
                    count_t local = 0;
                    for (std::size_t u = begin; u < end; ++u) {
                      const Bitset& out_u = t.out_set(static_cast<int>(u));
                      out_u.for_each_set([&](std::size_t v) {
                        auto s = t.out_set(static_cast<int>(v)).andnot_count(out_u);
                        local += binomial(static_cast<std::int64_t>(s), 2);
                      });
                    }
                    partial[w] = local;
                  });
  count_t c4 = 0;
  for (count_t p : partial) c4 += p;

  TournamentProfile4 prof;
  prof.n = n;
  prof.t4 = a + b + c4 - binomial(n, 4);
  prof.c4 = c4;
  prof.w4 = a - prof.t4;
  prof.l4 = b - prof.t4;
  prof.trans3 = trans3;
  prof.cyc3 = binomial(n, 3) - trans3;
  if (prof.t4 < 0 || prof.w4 < 0 || prof.l4 < 0 || prof.cyc3 < 0)
    throw internal_error("negative 4-profile count");
  count_t denom = binomial(n, 4);
  prof.densities4 = {ratio(prof.t4, denom), ratio(prof.c4, denom),
                     ratio(prof.w4, denom), ratio(prof.l4, denom)};
  prof.density_c3 = ratio(prof.cyc3, binomial(n, 3));
  return prof;
}

namespace {

// `chosen` vertices are already in the clique; `cand` holds the common
// neighbors above the last chosen vertex.
count_t clique_extend(const Graph& g, std::vector<Bitset>& scratch, const Bitset& cand,
                      int chosen, int k) {
  if (chosen == k - 1) return static_cast<count_t>(cand.count());
  count_t found = 0;
  Bitset& next = scratch[chosen];
  for (std::size_t v = cand.next_set(0); v != Bitset::npos; v = cand.next_set(v + 1)) {
    Bitset::intersect_above_into(cand, g.neighbors(static_cast<int>(v)), v, next);
    found += clique_extend(g, scratch, next, chosen + 1, k);
  }
  return found;
}

}  // namespace

count_t count_k_cliques(const Graph& g, int k, std::uint64_t work_cap) {
  int n = g.order();
  if (k < 1 || k > n)
    throw input_error("clique size " + std::to_string(k) + " outside 1.." + std::to_string(n));
  if (k == 1) return n;
  if (k == 2) return g.edge_count();
  int dmax = 0;
  for (int v = 0; v < n; ++v) dmax = std::max(dmax, g.degree(v));
  // Every visited search node is a clique, so both C(n,k) and the
  // branching bound m * dmax^(k-2) dominate the node count.
  double by_subsets = 1.0;
  for (int i = 0; i < k; ++i) by_subsets *= static_cast<double>(n - i) / (i + 1);
  double by_branching = to_double(g.edge_count());
  for (int i = 0; i < k - 2; ++i) {
    by_branching *= dmax;
    if (by_branching > 1e30) break;
  }
  double predicted = std::min(by_subsets, by_branching);
  if (predicted > static_cast<double>(work_cap))
    throw resource_error("clique search predicted ~" + std::to_string(predicted) +
                         " nodes, over the work cap of " + std::to_string(work_cap));
  std::vector<Bitset> scratch(k, Bitset(n));
  Bitset all(n);
  for (int v = 0; v < n; ++v) all.set(v);
  count_t total = 0;
  Bitset& first = scratch[0];
  for (int v = 0; v < n; ++v) {
    Bitset::intersect_above_into(all, g.neighbors(v), static_cast<std::size_t>(v), first);
    total += clique_extend(g, scratch, first, 1, k);
  }
  return total;
}

}  // namespace graphprof
