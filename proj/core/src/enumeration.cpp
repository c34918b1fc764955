#include "graphprof/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "graphprof/errors.hpp"
#include "graphprof/parallel.hpp"
#include "graphprof/rng.hpp"

namespace graphprof {

namespace {

// Pair-bit encoding of the subobject induced on vs (ascending), matching
// encode_small on the induced object.
template <typename Obj>
std::uint32_t encode_subset(const Obj& obj, const int* vs, int l);

template <>
std::uint32_t encode_subset<Graph>(const Graph& g, const int* vs, int l) {
  std::uint32_t code = 0;
  int bits = l * (l - 1) / 2, t = 0;
  for (int j = 1; j < l; ++j)
    for (int i = 0; i < j; ++i, ++t)
      if (g.adjacent(vs[i], vs[j])) code |= 1u << (bits - 1 - t);
  return code;
}

template <>
std::uint32_t encode_subset<Tournament>(const Tournament& tt, const int* vs, int l) {
  std::uint32_t code = 0;
  int bits = l * (l - 1) / 2, t = 0;
  for (int j = 1; j < l; ++j)
    for (int i = 0; i < j; ++i, ++t)
      if (tt.beats(vs[i], vs[j])) code |= 1u << (bits - 1 - t);
  return code;
}

template <typename Obj>
constexpr Kind kind_of();
template <>
constexpr Kind kind_of<Graph>() { return Kind::graph; }
template <>
constexpr Kind kind_of<Tournament>() { return Kind::tournament; }

template <typename Obj>
ClassCounts exhaustive_impl(const Obj& obj, int l, std::uint64_t work_cap,
                            unsigned threads) {
  int n = obj.order();
  if (l < 3 || l > 5) throw input_error("exhaustive profile supports l in 3..5");
  if (n < l)
    throw input_error("need n >= l, got n = " + std::to_string(n) + ", l = " +
                      std::to_string(l));
  count_t subsets = binomial(n, l);
  if (subsets > static_cast<count_t>(work_cap))
    throw resource_error("exhaustive profile needs " + graphprof::to_string(subsets) +
                         " class evaluations, over the work cap of " +
                         std::to_string(work_cap));

  SmallClassifier cls(kind_of<Obj>(), l);
  std::size_t nclasses = cls.classes().size();
  unsigned nthreads = threads ? threads : 1;
  std::vector<std::vector<count_t>> partial(nthreads,
                                            std::vector<count_t>(nclasses, 0));

  // Partition on the smallest subset element; each worker walks the
  // remaining l-1 indices lexicographically.
  parallel_chunks(static_cast<std::size_t>(n - l + 1), threads,
                  [&](std::size_t begin, std::size_t end, unsigned w) {
                    std::vector<count_t>& tally = partial[w];
                    int vs[5];
                    for (std::size_t first = begin; first < end; ++first) {
                      vs[0] = static_cast<int>(first);
                      for (int i = 1; i < l; ++i) vs[i] = vs[0] + i;
                      while (true) {
                        tally[cls.classify_raw(encode_subset(obj, vs, l))] += 1;
                        int i = l - 1;
                        while (i >= 1 && vs[i] == n - l + i) --i;
                        if (i < 1) break;
                        ++vs[i];
                        for (int j = i + 1; j < l; ++j) vs[j] = vs[j - 1] + 1;
                      }
                    }
                  });

  ClassCounts out;
  out.classes = cls.classes();
  out.counts.assign(nclasses, 0);
  for (const auto& tally : partial)
    for (std::size_t i = 0; i < nclasses; ++i) out.counts[i] += tally[i];
  for (count_t c : out.counts) out.total += c;
  if (out.total != subsets) throw internal_error("subset enumeration lost subsets");
  return out;
}

template <typename Obj>
ProfileEstimate montecarlo_impl(const Obj& obj, int l, std::uint64_t samples,
                                std::uint64_t seed, unsigned threads) {
  int n = obj.order();
  if (l < 3 || l > 8) throw input_error("sampled profile supports l in 3..8");
  if (n < l)
    throw input_error("need n >= l, got n = " + std::to_string(n) + ", l = " +
                      std::to_string(l));
  if (samples < 1) throw input_error("need at least one sample");

  SmallClassifier cls(kind_of<Obj>(), l);
  unsigned nthreads = threads ? threads : 1;
  std::vector<std::map<int, count_t>> partial(nthreads);

  parallel_chunks(samples, threads, [&](std::size_t begin, std::size_t end, unsigned w) {
    std::map<int, count_t>& tally = partial[w];
    int vs[8];
    for (std::size_t j = begin; j < end; ++j) {
      // Floyd's sampler: uniform l-subset of [0,n), keyed by (seed, j).
      RngStream rng(splitmix64(seed) ^ (0x9e3779b97f4a7c15ULL * (j + 1)));
      std::uint64_t chosen_mask_small = 0;  // only used for n <= 64 fast path
      int count = 0;
      if (n <= 64) {
        for (int i = n - l; i < n; ++i) {
          int t = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
          if (chosen_mask_small & (1ULL << t)) t = i;
          chosen_mask_small |= 1ULL << t;
          vs[count++] = t;
        }
      } else {
        for (int i = n - l; i < n; ++i) {
          int t = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
          bool dup = false;
          for (int q = 0; q < count; ++q) dup |= vs[q] == t;
          if (dup) t = i;
          vs[count++] = t;
        }
      }
      std::sort(vs, vs + l);
      tally[cls.classify_raw(encode_subset(obj, vs, l))] += 1;
    }
  });

  std::map<int, count_t> merged;
  for (const auto& t : partial)
    for (const auto& [idx, c] : t) merged[idx] += c;

  ProfileEstimate est;
  est.kind = kind_of<Obj>();
  est.l = l;
  est.samples = samples;
  est.seed = seed;
  const double z99 = 2.5758293035489004;
  for (const auto& [idx, c] : merged) {
    est.classes.push_back(cls.classes()[idx]);
    est.counts.push_back(c);
    double p = ratio(c, static_cast<count_t>(samples));
    est.densities.push_back(p);
    est.half_width.push_back(z99 * std::sqrt(p * (1.0 - p) / static_cast<double>(samples)));
  }
  return est;
}

}  // namespace

count_t ClassCounts::count_of(std::uint32_t canonical_code) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].code == canonical_code) return counts[i];
  return 0;
}

ClassCounts profile_exhaustive(const Graph& g, int l, std::uint64_t work_cap,
                               unsigned threads) {
  return exhaustive_impl(g, l, work_cap, threads);
}
ClassCounts profile_exhaustive(const Tournament& t, int l, std::uint64_t work_cap,
                               unsigned threads) {
  return exhaustive_impl(t, l, work_cap, threads);
}

ProfileEstimate profile_montecarlo(const Graph& g, int l, std::uint64_t samples,
                                   std::uint64_t seed, unsigned threads) {
  return montecarlo_impl(g, l, samples, seed, threads);
}
ProfileEstimate profile_montecarlo(const Tournament& t, int l, std::uint64_t samples,
                                   std::uint64_t seed, unsigned threads) {
  return montecarlo_impl(t, l, samples, seed, threads);
}

}  // namespace graphprof
