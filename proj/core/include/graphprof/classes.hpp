#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "graphprof/graph.hpp"

namespace graphprof {

enum class Kind { graph, tournament };

std::string kind_name(Kind k);

// Isomorphism class of a small graph or tournament.
//
// The encoding packs one bit per vertex pair, pairs ordered (0,1), (0,2),
// (1,2), (0,3), ... — i.e. each new vertex appends its relations to all
// earlier ones. The first pair is the most significant bit, so integer
// order on codes equals lexicographic order on the bit strings. For graphs
// a bit means "adjacent"; for tournaments it means "lower index beats
// higher". The canonical code is the minimum over all vertex relabelings;
// two objects of equal order get the same canonical code iff they are
// isomorphic.
struct ClassId {
  Kind kind = Kind::graph;
  int l = 0;
  std::uint32_t code = 0;  // canonical encoding
  int index = -1;          // rank in the enumerated class list

  std::string canon_string() const;  // the bit string, most significant first
  auto operator<=>(const ClassId&) const = default;
};

std::uint32_t encode_small(const Graph& g);
std::uint32_t encode_small(const Tournament& t);

// Minimal code over all permutations; exact for l <= 8 (branch-and-bound
// over partial placements). Cached in a full lookup table for l <= 5.
std::uint32_t canonical_code(Kind kind, int l, std::uint32_t raw);

// Canonical class of a small object, 3 <= order <= 5.
ClassId canonical_class(const Graph& g);
ClassId canonical_class(const Tournament& t);

// All isomorphism classes of the given order, sorted by canonical code.
// Public contract covers 3 <= l <= 5 (4/11/34 graph classes, 2/4/12
// tournament classes).
std::vector<ClassId> enumerate_classes(Kind kind, int l);

// Class lists up to l = 8, built by vertex extension from the level below
// and cached. Levels 3..5 coincide with enumerate_classes.
const std::vector<ClassId>& class_list(Kind kind, int l);

// Index of a canonical code in class_list(kind, l); -1 if absent.
int class_index(Kind kind, int l, std::uint32_t canonical);

// Conventional names where they exist: P0..P3 for 3-vertex graphs,
// T3/C3 for 3-vertex tournaments, T4/C4/W4/L4 for 4-vertex tournaments;
// otherwise "<kind><l>#<index>".
std::string class_name(const ClassId& id);

// Representative object of a class (vertices 0..l-1, identity labeling of
// the code).
Graph graph_from_code(int l, std::uint32_t code);
Tournament tournament_from_code(int l, std::uint32_t code);

// Raw-code classifier for a fixed (kind, l), safe to share across worker
// threads with no locking. For l <= 5 every lookup is one table read.
class SmallClassifier {
 public:
  SmallClassifier(Kind kind, int l);
  Kind kind() const { return kind_; }
  int order() const { return l_; }
  const std::vector<ClassId>& classes() const { return *classes_; }
  std::uint32_t canonical(std::uint32_t raw) const;
  int classify_raw(std::uint32_t raw) const;  // class index

 private:
  Kind kind_;
  int l_;
  const std::vector<ClassId>* classes_;
  std::vector<int> index_of_raw_;  // dense raw -> class index, l <= 5 only
  std::vector<std::uint32_t> canon_of_raw_;
};

}  // namespace graphprof
