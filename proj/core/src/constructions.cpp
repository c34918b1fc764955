#include "graphprof/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "graphprof/errors.hpp"
#include "graphprof/extremal.hpp"
#include "graphprof/rng.hpp"

namespace graphprof {

CliqueSpec CliqueSpec::make(std::vector<double> alphas) {
  std::sort(alphas.begin(), alphas.end(), std::greater<>());
  double sum = std::accumulate(alphas.begin(), alphas.end(), 0.0);
  CliqueSpec spec;
  spec.alphas = std::move(alphas);
  spec.beta = std::max(0.0, 1.0 - sum);
  spec.validate();
  return spec;
}

void CliqueSpec::validate() const {
  double sum = beta;
  double prev = 2.0;
  for (double a : alphas) {
    if (!(a > 0.0)) throw input_error("clique shares must be positive");
    if (a > prev + 1e-12) throw input_error("clique shares must be non-increasing");
    prev = a;
    sum += a;
  }
  if (beta < 0.0) throw input_error("isolated-vertex share must be non-negative");
  if (std::abs(sum - 1.0) > 1e-12)
    throw input_error("clique shares plus isolated share must sum to 1, got " +
                      std::to_string(sum));
}

std::vector<int> apportion(const std::vector<double>& weights, int n) {
  std::size_t parts = weights.size();
  std::vector<int> sizes(parts, 0);
  std::vector<std::pair<double, std::size_t>> remainders(parts);
  long long assigned = 0;
  for (std::size_t i = 0; i < parts; ++i) {
    double quota = weights[i] * n;
    sizes[i] = static_cast<int>(std::floor(quota + 1e-12));
    assigned += sizes[i];
    remainders[i] = {quota - sizes[i], i};
  }
  long long seats = n - assigned;
  if (seats < 0) throw internal_error("apportionment floor sum exceeds n");
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) {
                     if (a.first != b.first) return a.first > b.first;
                     return a.second < b.second;
                   });
  for (long long s = 0; s < seats; ++s) sizes[remainders[s % parts].second] += 1;
  return sizes;
}

Graph clique_union(const CliqueSpec& spec, int n) {
  spec.validate();
  if (n < spec.r())
    throw input_error("cannot place " + std::to_string(spec.r()) + " cliques on " +
                      std::to_string(n) + " vertices");
  std::vector<double> weights = spec.alphas;
  weights.push_back(spec.beta);
  std::vector<int> sizes = apportion(weights, n);
  std::vector<Bitset> rows(n, Bitset(n));
  int base = 0;
  for (int c = 0; c < spec.r(); ++c) {
    int s = sizes[c];
    for (int i = base; i < base + s; ++i)
      for (int j = base; j < base + s; ++j)
        if (i != j) rows[i].set(j);
    base += s;
  }
  return Graph::from_rows(std::move(rows));
}

Graph extremal_rho_graph(int n) {
  if (n < 3) throw input_error("extremal construction needs n >= 3");
  double theta = solve_cubic_theta().theta;
  return clique_union(CliqueSpec::make({theta, theta, 1.0 - 2.0 * theta}), n);
}

Tournament circular_tournament(int n) {
  if (n < 3 || n % 2 == 0)
    throw input_error("circular tournament needs odd n >= 3, got " + std::to_string(n));
  int half = (n - 1) / 2;
  std::vector<Bitset> rows(n, Bitset(n));
  for (int v = 0; v < n; ++v)
    for (int d = 1; d <= half; ++d) rows[v].set((v + d) % n);
  return Tournament::from_rows(std::move(rows));
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw input_error("edge probability must lie in [0,1]");
  // Threshold in 65-bit space so p = 1 includes every pair.
  using u128 = unsigned __int128;
  u128 threshold = static_cast<u128>(std::ldexp(p, 64));
  std::vector<Bitset> rows(n, Bitset(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<u128>(pair_key(seed, u, v)) < threshold) {
        rows[u].set(v);
        rows[v].set(u);
      }
  return Graph::from_rows(std::move(rows));
}

Tournament random_tournament(int n, std::uint64_t seed) {
  std::vector<Bitset> rows(n, Bitset(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (pair_key(seed, u, v) >> 63)
        rows[u].set(v);
      else
        rows[v].set(u);
    }
  return Tournament::from_rows(std::move(rows));
}

Tournament transitive_tournament(int n) {
  if (n < 1) throw input_error("transitive tournament needs n >= 1");
  std::vector<Bitset> rows(n, Bitset(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) rows[u].set(v);
  return Tournament::from_rows(std::move(rows));
}

Graph tyomkyn_graph(int k) {
  if (k < 1) throw input_error("blow-up depth must be >= 1");
  if (k > 4)
    throw resource_error("blow-up depth " + std::to_string(k) +
                         " exceeds the supported cap of 4 (n = 625)");
  int n = 5;
  std::vector<Bitset> rows(5, Bitset(5));
  for (int v = 0; v < 5; ++v) {
    rows[v].set((v + 1) % 5);
    rows[v].set((v + 4) % 5);
  }
  for (int level = 2; level <= k; ++level) {
    int nn = n * 5;
    std::vector<Bitset> next(nn, Bitset(nn));
    for (int b = 0; b < 5; ++b) {
      int base = b * n;
      // copy of the previous level inside block b
      for (int v = 0; v < n; ++v)
        rows[v].for_each_set([&](std::size_t u) { next[base + v].set(base + u); });
      // complete join to the clockwise-next block
      int nb = ((b + 1) % 5) * n;
      for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u) {
          next[base + v].set(nb + u);
          next[nb + u].set(base + v);
        }
    }
    rows = std::move(next);
    n = nn;
  }
  return Graph::from_rows(std::move(rows));
}

std::vector<TyomkynLevel> tyomkyn_levels(int k_max) {
  if (k_max < 1) throw input_error("blow-up depth must be >= 1");
  std::vector<TyomkynLevel> levels;
  TyomkynLevel cur{1, 5, 5, 0};
  levels.push_back(cur);
  for (int k = 2; k <= k_max; ++k) {
    TyomkynLevel next;
    next.k = k;
    next.n = cur.n * 5;
    next.edges = 5 * cur.edges + 5 * static_cast<count_t>(cur.n) * cur.n;
    next.triangles = 5 * cur.triangles + 10 * cur.edges * static_cast<count_t>(cur.n);
    levels.push_back(next);
    cur = next;
  }
  return levels;
}

}  // namespace graphprof
