#include "graphprof/universality.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <unordered_map>

#include "graphprof/errors.hpp"
#include "graphprof/profiles.hpp"
#include "graphprof/rng.hpp"

namespace graphprof {

namespace {

template <typename Obj>
UniversalityReport universal_impl(const Obj& obj, int l, UniversalityMode mode,
                                  std::uint64_t samples, std::uint64_t seed,
                                  std::uint64_t work_cap, unsigned threads) {
  constexpr Kind kind = std::is_same_v<Obj, Graph> ? Kind::graph : Kind::tournament;
  int n = obj.order();
  if (n < l)
    throw input_error("need n >= l, got n = " + std::to_string(n) + ", l = " +
                      std::to_string(l));
  UniversalityReport rep;
  rep.kind = kind;
  rep.l = l;
  rep.mode = mode;

  if (mode == UniversalityMode::exhaustive) {
    if (l < 3 || l > 5)
      throw input_error("exhaustive universality supports l in 3..5; use sampled mode above");
    count_t subsets = binomial(n, l);
    if (subsets > static_cast<count_t>(work_cap))
      throw resource_error("exhaustive universality needs " + graphprof::to_string(subsets) +
                           " class evaluations, over the work cap of " +
                           std::to_string(work_cap) + "; consider sampled mode");
    ClassCounts counts = profile_exhaustive(obj, l, work_cap, threads);
    rep.classes = counts.classes;
    rep.counts = counts.counts;
    rep.inspected = counts.total;
  } else {
    if (l < 3 || l > 8) throw input_error("sampled universality supports l in 3..8");
    if (samples < 1) throw input_error("sampled universality needs samples >= 1");
    ProfileEstimate est = profile_montecarlo(obj, l, samples, seed, threads);
    rep.classes = class_list(kind, l);
    rep.counts.assign(rep.classes.size(), 0);
    for (std::size_t i = 0; i < est.classes.size(); ++i)
      rep.counts[est.classes[i].index] += est.counts[i];
    rep.inspected = static_cast<count_t>(samples);
    rep.samples = samples;
    rep.seed = seed;
  }

  for (std::size_t i = 0; i < rep.classes.size(); ++i)
    if (rep.counts[i] == 0) rep.missing.push_back(rep.classes[i]);
  rep.universal = rep.missing.empty();
  return rep;
}

}  // namespace

UniversalityReport is_l_universal(const Graph& g, int l, UniversalityMode mode,
                                  std::uint64_t samples, std::uint64_t seed,
                                  std::uint64_t work_cap, unsigned threads) {
  return universal_impl(g, l, mode, samples, seed, work_cap, threads);
}
UniversalityReport is_l_universal(const Tournament& t, int l, UniversalityMode mode,
                                  std::uint64_t samples, std::uint64_t seed,
                                  std::uint64_t work_cap, unsigned threads) {
  return universal_impl(t, l, mode, samples, seed, work_cap, threads);
}

std::optional<std::array<int, 5>> find_induced_path5(const Graph& g,
                                                     std::uint64_t work_cap) {
  int n = g.order();
  if (n < 5) throw input_error("path search needs n >= 5");
  std::uint64_t expanded = 0;
  auto charge = [&](std::uint64_t units) {
    expanded += units;
    if (expanded > work_cap)
      throw resource_error("path search exceeded the work cap of " +
                           std::to_string(work_cap) + " expansions");
  };

  // non_adj[v] = vertices not adjacent to v (v itself included); extending
  // an induced path means intersecting the tip's neighborhood with the
  // non-neighborhoods of every earlier path vertex.
  std::vector<Bitset> non_adj(n);
  for (int v = 0; v < n; ++v) non_adj[v] = g.neighbors(v).complement();

  Bitset cand3(n), cand4(n), cand5(n);
  for (int x1 = 0; x1 < n; ++x1) {
    const Bitset& n1 = g.neighbors(x1);
    for (std::size_t x2 = n1.next_set(0); x2 != Bitset::npos; x2 = n1.next_set(x2 + 1)) {
      charge(1);
      const Bitset& n2 = g.neighbors(static_cast<int>(x2));
      Bitset::intersect_into(n2, non_adj[x1], cand3);
      cand3.reset(x1);
      for (std::size_t x3 = cand3.next_set(0); x3 != Bitset::npos;
           x3 = cand3.next_set(x3 + 1)) {
        charge(1);
        const Bitset& n3 = g.neighbors(static_cast<int>(x3));
        Bitset::intersect_into(n3, non_adj[x1], cand4);
        cand4.andnot(n2);
        cand4.reset(x1);
        cand4.reset(x2);
        for (std::size_t x4 = cand4.next_set(0); x4 != Bitset::npos;
             x4 = cand4.next_set(x4 + 1)) {
          charge(1);
          const Bitset& n4 = g.neighbors(static_cast<int>(x4));
          Bitset::intersect_into(n4, non_adj[x1], cand5);
          cand5.andnot(n2);
          cand5.andnot(n3);
          cand5.reset(x1);
          cand5.reset(x2);
          cand5.reset(x3);
          std::size_t x5 = cand5.next_set(0);
          if (x5 != Bitset::npos)
            return std::array<int, 5>{x1, static_cast<int>(x2), static_cast<int>(x3),
                                      static_cast<int>(x4), static_cast<int>(x5)};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

struct TransitiveSearch {
  const std::vector<std::uint32_t>& out_mask;
  std::unordered_map<std::uint32_t, int> memo;

  int longest(std::uint32_t cand) {
    if (cand == 0) return 0;
    auto it = memo.find(cand);
    if (it != memo.end()) return it->second;
    int best = 0;
    std::uint32_t rest = cand;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      // v as the source that beats everything chosen after it
      int len = 1 + longest(cand & out_mask[v]);
      if (len > best) best = len;
    }
    memo.emplace(cand, best);
    return best;
  }
};

}  // namespace

int max_transitive(const Tournament& t) {
  int n = t.order();
  if (n > 24)
    throw resource_error("transitive search is capped at n = 24, got n = " +
                         std::to_string(n));
  if (n == 0) return 0;
  std::vector<std::uint32_t> out_mask(n, 0);
  for (int v = 0; v < n; ++v)
    t.out_set(v).for_each_set([&](std::size_t u) { out_mask[v] |= 1u << u; });
  TransitiveSearch search{out_mask, {}};
  std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  return search.longest(all);
}

FoxSample fox_sample(const Graph& g, int k, std::uint64_t seed, std::uint64_t work_cap) {
  if (k < 4) throw input_error("sampling demonstration needs k >= 4");
  int n = g.order();
  int m = static_cast<int>(std::ceil(std::exp2(k / 4.0) - 1e-9));
  if (m > n)
    throw input_error("sample size m = " + std::to_string(m) + " exceeds n = " +
                      std::to_string(n));
  // Floyd's sampler over [0, n)
  RngStream rng(splitmix64(seed) ^ 0xa5a5a5a5a5a5a5a5ULL);
  std::vector<int> picked;
  picked.reserve(m);
  for (int i = n - m; i < n; ++i) {
    int t = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
    bool dup = false;
    for (int q : picked) dup |= q == t;
    picked.push_back(dup ? i : t);
  }
  std::sort(picked.begin(), picked.end());

  FoxSample out;
  out.k = k;
  out.m = m;
  out.vertices = picked;
  if (k <= m) {
    Graph h = g.induce(picked);
    out.cliques = count_k_cliques(h, k, work_cap);
    out.anticliques = count_k_cliques(h.complement(), k, work_cap);
  }
  return out;
}

}  // namespace graphprof
