#include <doctest.h>

#include <algorithm>
#include <set>

#include "graphprof/classes.hpp"
#include "graphprof/errors.hpp"
#include "test_util.hpp"

using namespace graphprof;

namespace {

// Apply a vertex permutation to a pair-bit code.
std::uint32_t permute_code(Kind kind, int l, std::uint32_t code, const std::vector<int>& perm) {
  int bits = l * (l - 1) / 2;
  auto bit_of = [&](int i, int j) {  // i < j
    int t = j * (j - 1) / 2 + i;
    return (code >> (bits - 1 - t)) & 1u;
  };
  std::uint32_t out = 0;
  int t = 0;
  for (int j = 1; j < l; ++j)
    for (int i = 0; i < j; ++i, ++t) {
      int a = perm[i], b = perm[j];
      std::uint32_t bit;
      if (kind == Kind::graph) {
        bit = a < b ? bit_of(a, b) : bit_of(b, a);
      } else {
        // orientation flips when the permutation swaps the pair order
        bit = a < b ? bit_of(a, b) : 1u - bit_of(b, a);
      }
      out |= bit << (bits - 1 - t);
    }
  return out;
}

int count_automorphisms(Kind kind, int l, std::uint32_t code) {
  std::vector<int> perm(l);
  for (int i = 0; i < l; ++i) perm[i] = i;
  int aut = 0;
  do {
    if (permute_code(kind, l, code, perm) == code) ++aut;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return aut;
}

}  // namespace

TEST_CASE("class counts for small orders") {
  CHECK(enumerate_classes(Kind::graph, 3).size() == 4);
  CHECK(enumerate_classes(Kind::graph, 4).size() == 11);
  CHECK(enumerate_classes(Kind::graph, 5).size() == 34);
  CHECK(enumerate_classes(Kind::tournament, 3).size() == 2);
  CHECK(enumerate_classes(Kind::tournament, 4).size() == 4);
  CHECK(enumerate_classes(Kind::tournament, 5).size() == 12);
  CHECK_THROWS_AS(enumerate_classes(Kind::graph, 6), input_error);
  CHECK_THROWS_AS(enumerate_classes(Kind::graph, 2), input_error);
}

TEST_CASE("canonical code is a permutation invariant") {
  std::mt19937_64 rng(99);
  for (Kind kind : {Kind::graph, Kind::tournament}) {
    for (int l : {3, 4, 5, 6, 7}) {
      int bits = l * (l - 1) / 2;
      std::vector<int> perm(l);
      for (int i = 0; i < l; ++i) perm[i] = i;
      for (int trial = 0; trial < 40; ++trial) {
        std::uint32_t code =
            static_cast<std::uint32_t>(rng()) & ((bits == 32 ? 0 : (1u << bits)) - 1u);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::uint32_t moved = permute_code(kind, l, code, perm);
        CHECK(canonical_code(kind, l, code) == canonical_code(kind, l, moved));
        // canonical code is itself reachable, hence minimal over the orbit
        CHECK(canonical_code(kind, l, canonical_code(kind, l, code)) ==
              canonical_code(kind, l, code));
      }
    }
  }
}

TEST_CASE("isomorphic objects share a class, non-isomorphic do not") {
  Graph tri = Graph::from_edges(3, std::vector<VertexPair>{{0, 1}, {1, 2}, {0, 2}});
  Graph tri_relabelled = Graph::from_edges(3, std::vector<VertexPair>{{2, 1}, {0, 1}, {2, 0}});
  CHECK(canonical_class(tri) == canonical_class(tri_relabelled));

  std::set<std::uint32_t> codes;
  for (auto& c : enumerate_classes(Kind::graph, 3)) codes.insert(c.code);
  CHECK(codes.size() == 4);

  std::set<std::string> names;
  for (auto& c : enumerate_classes(Kind::tournament, 4)) names.insert(class_name(c));
  CHECK(names == std::set<std::string>{"T4", "C4", "W4", "L4"});

  std::set<std::string> names3;
  for (auto& c : enumerate_classes(Kind::graph, 3)) names3.insert(class_name(c));
  CHECK(names3 == std::set<std::string>{"P0", "P1", "P2", "P3"});
}

TEST_CASE("code round trip through representative objects") {
  for (auto& c : enumerate_classes(Kind::graph, 5))
    CHECK(encode_small(graph_from_code(5, c.code)) == c.code);
  for (auto& c : enumerate_classes(Kind::tournament, 5))
    CHECK(encode_small(tournament_from_code(5, c.code)) == c.code);
}

TEST_CASE("extended class lists by vertex extension") {
  CHECK(class_list(Kind::graph, 6).size() == 156);
  CHECK(class_list(Kind::graph, 7).size() == 1044);
  CHECK(class_list(Kind::tournament, 6).size() == 56);
  CHECK(class_list(Kind::tournament, 7).size() == 456);

  // Orbit-size identity: sum over classes of l!/|Aut| must recover the
  // number of labeled objects, 2^C(l,2).
  for (Kind kind : {Kind::graph, Kind::tournament}) {
    for (int l : {4, 5, 6}) {
      long long factorial = 1;
      for (int i = 2; i <= l; ++i) factorial *= i;
      long long labeled = 0;
      for (auto& c : class_list(kind, l))
        labeled += factorial / count_automorphisms(kind, l, c.code);
      CHECK(labeled == 1ll << (l * (l - 1) / 2));
    }
  }
}

TEST_CASE("canonical_class enforces its order range") {
  CHECK_THROWS_AS(canonical_class(Graph::from_edges(2, {})), input_error);
  CHECK_THROWS_AS(canonical_class(testutil::mt_random_graph(6, 0.5, 0)), input_error);
}

TEST_CASE("canon_string renders the code") {
  Graph tri = Graph::from_edges(3, std::vector<VertexPair>{{0, 1}, {1, 2}, {0, 2}});
  ClassId id = canonical_class(tri);
  CHECK(id.canon_string() == "111");
  Graph empty3 = Graph::from_edges(3, {});
  CHECK(canonical_class(empty3).canon_string() == "000");
}
