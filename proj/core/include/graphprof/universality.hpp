#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "graphprof/classes.hpp"
#include "graphprof/enumeration.hpp"
#include "graphprof/graph.hpp"

namespace graphprof {

enum class UniversalityMode { exhaustive, sampled };

// Which l-vertex classes appear as induced subobjects. Exhaustive mode is
// exact; sampled mode certifies presence only, so `missing` there means
// "not found in the sample", never proven absence, and `universal` means
// every class was witnessed.
struct UniversalityReport {
  Kind kind = Kind::graph;
  int l = 0;
  UniversalityMode mode = UniversalityMode::exhaustive;
  bool universal = false;
  std::vector<ClassId> missing;
  std::vector<ClassId> classes;  // full class list for (kind, l)
  std::vector<count_t> counts;   // aligned with classes
  count_t inspected = 0;         // C(n,l) or the sample count
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Exhaustive: l <= 5, refuses over the work cap. Sampled: l <= 8.
UniversalityReport is_l_universal(const Graph& g, int l,
                                  UniversalityMode mode = UniversalityMode::exhaustive,
                                  std::uint64_t samples = 0, std::uint64_t seed = 0,
                                  std::uint64_t work_cap = default_work_cap(),
                                  unsigned threads = 1);
UniversalityReport is_l_universal(const Tournament& t, int l,
                                  UniversalityMode mode = UniversalityMode::exhaustive,
                                  std::uint64_t samples = 0, std::uint64_t seed = 0,
                                  std::uint64_t work_cap = default_work_cap(),
                                  unsigned threads = 1);

// First induced 5-vertex path in ascending-index DFS order, or nullopt if
// none exists. The node budget counts partial paths expanded; exceeding it
// raises resource_error.
std::optional<std::array<int, 5>> find_induced_path5(
    const Graph& g, std::uint64_t work_cap = default_work_cap());

// Exact order of the largest transitive subtournament. Exhaustive
// extension search with memoization; n is capped at 24.
int max_transitive(const Tournament& t);

// One random-subset draw: m = ceil(2^(k/4)) uniform vertices, with exact
// k-clique and k-anticlique counts inside the induced subgraph.
struct FoxSample {
  int k = 0;
  int m = 0;
  std::vector<int> vertices;  // ascending
  count_t cliques = 0;
  count_t anticliques = 0;
};

FoxSample fox_sample(const Graph& g, int k, std::uint64_t seed,
                     std::uint64_t work_cap = default_work_cap());

}  // namespace graphprof
