#pragma once

#include <cstdint>
#include <vector>

#include "graphprof/classes.hpp"
#include "graphprof/graph.hpp"
#include "graphprof/ints.hpp"
#include "graphprof/profiles.hpp"

namespace graphprof {

// Exact per-class subset counts; classes[i] pairs with counts[i], and the
// counts sum to C(n,l).
struct ClassCounts {
  std::vector<ClassId> classes;
  std::vector<count_t> counts;
  count_t total = 0;

  count_t count_of(std::uint32_t canonical_code) const;
};

// Reference oracle: enumerates every l-subset and classifies the induced
// subobject. Refuses eagerly when C(n,l) exceeds the work cap.
ClassCounts profile_exhaustive(const Graph& g, int l,
                               std::uint64_t work_cap = default_work_cap(),
                               unsigned threads = 1);
ClassCounts profile_exhaustive(const Tournament& t, int l,
                               std::uint64_t work_cap = default_work_cap(),
                               unsigned threads = 1);

// Seeded estimate of the l-profile from uniform l-subsets. Sample j is a
// pure function of (seed, j), so the estimate is identical for any thread
// count. half_width[i] is a 99% normal-approximation confidence radius.
struct ProfileEstimate {
  Kind kind = Kind::graph;
  int l = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<ClassId> classes;        // observed classes only
  std::vector<count_t> counts;         // tallies per observed class
  std::vector<double> densities;
  std::vector<double> half_width;
};

ProfileEstimate profile_montecarlo(const Graph& g, int l, std::uint64_t samples,
                                   std::uint64_t seed, unsigned threads = 1);
ProfileEstimate profile_montecarlo(const Tournament& t, int l, std::uint64_t samples,
                                   std::uint64_t seed, unsigned threads = 1);

}  // namespace graphprof
