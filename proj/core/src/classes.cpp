#include "graphprof/classes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>

#include "graphprof/errors.hpp"

namespace graphprof {

namespace {

constexpr int kMaxSmall = 8;

int pair_bits(int l) { return l * (l - 1) / 2; }

// Bit position of pair (i,j), i < j, within an order-l code (MSB-first).
int bit_pos(int l, int i, int j) {
  int t = j * (j - 1) / 2 + i;
  return pair_bits(l) - 1 - t;
}

struct SmallRelation {
  // rel[a][b]: graph — adjacency; tournament — a beats b.
  std::array<std::array<bool, kMaxSmall>, kMaxSmall> rel{};
};

SmallRelation decode(Kind kind, int l, std::uint32_t code) {
  SmallRelation r;
  for (int j = 1; j < l; ++j)
    for (int i = 0; i < j; ++i) {
      bool bit = (code >> bit_pos(l, i, j)) & 1u;
      if (kind == Kind::graph) {
        r.rel[i][j] = r.rel[j][i] = bit;
      } else {
        r.rel[i][j] = bit;
        r.rel[j][i] = !bit;
      }
    }
  return r;
}

// Lexicographically minimal code over all placements. DFS fills positions
// left to right; a partial placement fixes the code prefix for all pairs
// among placed positions, so branches whose prefix exceeds the incumbent
// are cut.
struct Canonizer {
  Kind kind;
  int l, total_bits;
  const SmallRelation* rel;
  std::uint32_t best;
  std::array<int, kMaxSmall> perm{};
  std::uint32_t used = 0;

  void run(std::uint32_t start) {
    best = start;
    dfs(0, 0, 0);
  }

  void dfs(int pos, std::uint32_t partial, int filled) {
    if (pos == l) {
      if (partial < best) best = partial;
      return;
    }
    for (int w = 0; w < l; ++w) {
      if (used & (1u << w)) continue;
      // rel[a][b] already carries the pair bit in placement order for
      // both kinds (symmetric for graphs, "a beats b" for tournaments).
      std::uint32_t column = 0;
      for (int i = 0; i < pos; ++i)
        column = (column << 1) | static_cast<std::uint32_t>(rel->rel[perm[i]][w]);
      int new_filled = filled + pos;
      std::uint32_t cand =
          partial | (pos ? column << (total_bits - new_filled) : 0);
      int shift = total_bits - new_filled;
      if ((cand >> shift) > (best >> shift)) continue;
      used |= 1u << w;
      perm[pos] = w;
      dfs(pos + 1, cand, new_filled);
      used &= ~(1u << w);
    }
  }
};

std::uint32_t canonical_uncached(Kind kind, int l, std::uint32_t raw) {
  SmallRelation r = decode(kind, l, raw);
  Canonizer c{kind, l, pair_bits(l), &r, 0};
  c.run(raw);
  return c.best;
}

struct ClassTables {
  std::mutex mu;
  // canon_table[kind][l]: raw code -> canonical code, for l <= 5.
  std::map<std::pair<int, int>, std::vector<std::uint32_t>> canon;
  // lists[kind][l]: sorted class codes, l <= 8.
  std::map<std::pair<int, int>, std::vector<ClassId>> lists;
  std::map<std::pair<int, int>, std::map<std::uint32_t, int>> index;
};

ClassTables& tables() {
  static ClassTables t;
  return t;
}

const std::vector<std::uint32_t>& canon_table(Kind kind, int l) {
  auto& t = tables();
  std::lock_guard<std::mutex> lock(t.mu);
  auto key = std::make_pair(static_cast<int>(kind), l);
  auto it = t.canon.find(key);
  if (it != t.canon.end()) return it->second;
  std::vector<std::uint32_t> table(std::size_t{1} << pair_bits(l));
  for (std::uint32_t raw = 0; raw < table.size(); ++raw)
    table[raw] = canonical_uncached(kind, l, raw);
  return t.canon.emplace(key, std::move(table)).first->second;
}

std::vector<ClassId> build_level(Kind kind, int l);

const std::vector<ClassId>& list_locked(Kind kind, int l) {
  auto& t = tables();
  auto key = std::make_pair(static_cast<int>(kind), l);
  auto it = t.lists.find(key);
  if (it != t.lists.end()) return it->second;
  auto built = build_level(kind, l);
  auto& idx = t.index[key];
  for (const ClassId& c : built) idx[c.code] = c.index;
  return t.lists.emplace(key, std::move(built)).first->second;
}

std::vector<ClassId> build_level(Kind kind, int l) {
  std::vector<std::uint32_t> codes;
  if (l <= 5) {
    // Direct sweep over all labeled objects.
    std::size_t space = std::size_t{1} << pair_bits(l);
    std::vector<char> seen(space, 0);
    for (std::uint32_t raw = 0; raw < space; ++raw) {
      std::uint32_t c = canonical_uncached(kind, l, raw);
      if (!seen[c]) {
        seen[c] = 1;
        codes.push_back(c);
      }
    }
  } else {
    // Extend every class of order l-1 by one vertex with every possible
    // relation pattern; every order-l object arises this way (delete any
    // vertex of it).
    const std::vector<ClassId>& below = list_locked(kind, l - 1);
    std::vector<std::uint32_t> out;
    for (const ClassId& parent : below) {
      for (std::uint32_t mask = 0; mask < (1u << (l - 1)); ++mask) {
        // The new vertex takes position l-1; its column holds the bits for
        // pairs (i, l-1) in i order, the lowest l-1 bits of the code.
        std::uint32_t column = 0;
        for (int i = 0; i < l - 1; ++i)
          column = (column << 1) | ((mask >> i) & 1u);
        std::uint32_t raw = (parent.code << (l - 1)) | column;
        out.push_back(canonical_uncached(kind, l, raw));
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    codes = std::move(out);
  }
  std::sort(codes.begin(), codes.end());
  std::vector<ClassId> result;
  result.reserve(codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i)
    result.push_back(ClassId{kind, l, codes[i], static_cast<int>(i)});
  return result;
}

void check_range(int l, int lo, int hi, const char* what) {
  if (l < lo || l > hi)
    throw input_error(std::string(what) + " supports order " + std::to_string(lo) + ".." +
                      std::to_string(hi) + ", got " + std::to_string(l));
}

}  // namespace

std::string kind_name(Kind k) { return k == Kind::graph ? "graph" : "tournament"; }

std::string ClassId::canon_string() const {
  int bits = pair_bits(l);
  std::string s(bits, '0');
  for (int b = 0; b < bits; ++b)
    if ((code >> (bits - 1 - b)) & 1u) s[b] = '1';
  return s;
}

std::uint32_t encode_small(const Graph& g) {
  int l = g.order();
  std::uint32_t code = 0;
  for (int j = 1; j < l; ++j)
    for (int i = 0; i < j; ++i)
      if (g.adjacent(i, j)) code |= 1u << bit_pos(l, i, j);
  return code;
}

std::uint32_t encode_small(const Tournament& t) {
  int l = t.order();
  std::uint32_t code = 0;
  for (int j = 1; j < l; ++j)
    for (int i = 0; i < j; ++i)
      if (t.beats(i, j)) code |= 1u << bit_pos(l, i, j);
  return code;
}

std::uint32_t canonical_code(Kind kind, int l, std::uint32_t raw) {
  check_range(l, 1, kMaxSmall, "canonical_code");
  if (l <= 5) return canon_table(kind, l)[raw];
  return canonical_uncached(kind, l, raw);
}

ClassId canonical_class(const Graph& g) {
  check_range(g.order(), 3, 5, "canonical_class");
  std::uint32_t c = canonical_code(Kind::graph, g.order(), encode_small(g));
  return ClassId{Kind::graph, g.order(), c, class_index(Kind::graph, g.order(), c)};
}

ClassId canonical_class(const Tournament& t) {
  check_range(t.order(), 3, 5, "canonical_class");
  std::uint32_t c = canonical_code(Kind::tournament, t.order(), encode_small(t));
  return ClassId{Kind::tournament, t.order(), c, class_index(Kind::tournament, t.order(), c)};
}

std::vector<ClassId> enumerate_classes(Kind kind, int l) {
  check_range(l, 3, 5, "enumerate_classes");
  return class_list(kind, l);
}

const std::vector<ClassId>& class_list(Kind kind, int l) {
  check_range(l, 3, kMaxSmall, "class_list");
  auto& t = tables();
  std::lock_guard<std::mutex> lock(t.mu);
  return list_locked(kind, l);
}

int class_index(Kind kind, int l, std::uint32_t canonical) {
  class_list(kind, l);  // ensure built
  auto& t = tables();
  std::lock_guard<std::mutex> lock(t.mu);
  auto& idx = t.index[std::make_pair(static_cast<int>(kind), l)];
  auto it = idx.find(canonical);
  return it == idx.end() ? -1 : it->second;
}

std::string class_name(const ClassId& id) {
  if (id.kind == Kind::graph && id.l == 3) {
    int edges = static_cast<int>(std::popcount(id.code));
    return "P" + std::to_string(edges);
  }
  if (id.kind == Kind::tournament && id.l == 3) {
    // The cyclic triangle has no vertex of out-degree 2.
    Tournament t = tournament_from_code(3, id.code);
    bool cyclic = t.out_degree(0) == 1 && t.out_degree(1) == 1 && t.out_degree(2) == 1;
    return cyclic ? "C3" : "T3";
  }
  if (id.kind == Kind::tournament && id.l == 4) {
    Tournament t = tournament_from_code(4, id.code);
    std::array<int, 4> d{};
    for (int v = 0; v < 4; ++v) d[v] = t.out_degree(v);
    std::sort(d.begin(), d.end());
    if (d == std::array<int, 4>{0, 1, 2, 3}) return "T4";
    if (d == std::array<int, 4>{1, 1, 2, 2}) return "C4";
    if (d == std::array<int, 4>{1, 1, 1, 3}) return "W4";
    return "L4";  // 0,2,2,2
  }
  return kind_name(id.kind) + std::to_string(id.l) + "#" + std::to_string(id.index);
}

Graph graph_from_code(int l, std::uint32_t code) {
  std::vector<Bitset> rows(l, Bitset(l));
  for (int j = 1; j < l; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> bit_pos(l, i, j)) & 1u) {
        rows[i].set(j);
        rows[j].set(i);
      }
  return Graph::from_rows(std::move(rows));
}

Tournament tournament_from_code(int l, std::uint32_t code) {
  std::vector<Bitset> rows(l, Bitset(l));
  for (int j = 1; j < l; ++j)
    for (int i = 0; i < j; ++i) {
      if ((code >> bit_pos(l, i, j)) & 1u)
        rows[i].set(j);
      else
        rows[j].set(i);
    }
  return Tournament::from_rows(std::move(rows));
}

SmallClassifier::SmallClassifier(Kind kind, int l) : kind_(kind), l_(l) {
  check_range(l, 3, kMaxSmall, "SmallClassifier");
  classes_ = &class_list(kind, l);
  if (l <= 5) {
    const auto& table = canon_table(kind, l);
    canon_of_raw_ = table;
    index_of_raw_.resize(table.size());
    std::map<std::uint32_t, int> idx;
    for (const ClassId& c : *classes_) idx[c.code] = c.index;
    for (std::size_t raw = 0; raw < table.size(); ++raw)
      index_of_raw_[raw] = idx.at(table[raw]);
  }
}

std::uint32_t SmallClassifier::canonical(std::uint32_t raw) const {
  if (!canon_of_raw_.empty()) return canon_of_raw_[raw];
  return canonical_uncached(kind_, l_, raw);
}

int SmallClassifier::classify_raw(std::uint32_t raw) const {
  if (!index_of_raw_.empty()) return index_of_raw_[raw];
  std::uint32_t canon = canonical_uncached(kind_, l_, raw);
  const auto& cs = *classes_;
  auto it = std::lower_bound(cs.begin(), cs.end(), canon,
                             [](const ClassId& c, std::uint32_t v) { return c.code < v; });
  if (it == cs.end() || it->code != canon)
    throw internal_error("canonical code missing from class list");
  return it->index;
}

}  // namespace graphprof
