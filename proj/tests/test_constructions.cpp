#include <doctest.h>

#include <numeric>

#include "graphprof/constructions.hpp"
#include "graphprof/enumeration.hpp"
#include "graphprof/errors.hpp"
#include "graphprof/extremal.hpp"
#include "graphprof/profiles.hpp"
#include "test_util.hpp"

using namespace graphprof;

TEST_CASE("apportionment is exact and deterministic") {
  auto sizes = apportion({0.5, 0.5}, 101);
  CHECK(sizes == std::vector<int>{51, 50});  // tie goes to the lower index

  auto sizes3 = apportion({0.42737291253094957, 0.42737291253094957, 0.14525417493810086}, 3);
  CHECK(std::accumulate(sizes3.begin(), sizes3.end(), 0) == 3);
  CHECK(sizes3 == std::vector<int>{1, 1, 1});

  for (int n : {1, 7, 100, 999}) {
    auto s = apportion({0.3, 0.3, 0.2, 0.2}, n);
    CHECK(std::accumulate(s.begin(), s.end(), 0) == n);
  }
}

TEST_CASE("clique_union") {
  Graph k10 = clique_union(CliqueSpec::make({1.0}), 10);
  CHECK(k10.edge_count() == 45);
  CHECK(profile3_graph(k10).densities[3] == 1.0);

  Graph empty = clique_union(CliqueSpec::make({}), 10);
  CHECK(empty.edge_count() == 0);
  CHECK(profile3_graph(empty).densities[0] == 1.0);

  Graph halves = clique_union(CliqueSpec::make({0.5, 0.5}), 100);
  Profile3 p = profile3_graph(halves);
  CHECK(p.counts[3] == 2 * binomial(50, 3));
  CHECK(p.counts[3] == 39200);
  CHECK(p.counts[2] == 0);
  CHECK(p.counts[0] == 0);

  CHECK_THROWS_AS(clique_union(CliqueSpec::make({0.4, 0.3, 0.3}), 2), input_error);
  CHECK_THROWS_AS(CliqueSpec::make({0.6, 0.6}), input_error);  // over-allocated
}

TEST_CASE("clique unions never induce a 2-edge triple") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    int r = 1 + static_cast<int>(rng() % 4);
    std::vector<double> alphas(r);
    double left = 1.0;
    for (int i = 0; i < r; ++i) {
      alphas[i] = left * (0.2 + 0.3 * (static_cast<double>(rng() % 1000) / 1000.0));
      left -= alphas[i];
    }
    CliqueSpec spec = CliqueSpec::make(alphas);
    int n = 30 + static_cast<int>(rng() % 300);
    Profile3 p = profile3_graph(clique_union(spec, n));
    CHECK(p.counts[2] == 0);
    CHECK(p.total() == binomial(n, 3));
  }
}

TEST_CASE("extremal_rho_graph balances its two homogeneous densities") {
  double rho = solve_cubic_theta().rho;
  Graph g = extremal_rho_graph(2000);
  Profile3 p = profile3_graph(g);
  CHECK(p.counts[2] == 0);
  CHECK(std::abs(p.densities[0] - rho) <= 4e-3);
  CHECK(std::abs(p.densities[3] - rho) <= 4e-3);

  // complement duality: p1 of the graph equals p2 of the complement
  Graph small = extremal_rho_graph(300);
  Profile3 ps = profile3_graph(small);
  Profile3 pc = profile3_graph(small.complement());
  CHECK(ps.counts[1] == pc.counts[2]);
  CHECK(ps.counts[0] == pc.counts[3]);

  Graph tiny = extremal_rho_graph(3);  // degenerate but valid
  CHECK(tiny.order() == 3);
}

TEST_CASE("circular tournament") {
  CHECK_THROWS_AS(circular_tournament(6), input_error);
  CHECK_THROWS_AS(circular_tournament(1), input_error);

  Tournament c5 = circular_tournament(5);
  for (int v = 0; v < 5; ++v) CHECK(c5.out_degree(v) == 2);
  auto oracle5 = testutil::brute_profile4(c5);
  CHECK(oracle5 == std::array<count_t, 4>{0, 5, 0, 0});

  CHECK(cyclic_triangle_count(circular_tournament(7)) == 14);

  // one-sided 4-types vanish exactly at every tested odd order; the
  // degree identity C(n,4) = n C((n-1)/2,3) + n C((n+1)/2,3) is why
  for (int n = 5; n <= 13; n += 2) {
    Tournament t = circular_tournament(n);
    TournamentProfile4 p = profile4_tournament(t);
    CHECK(p.w4 == 0);
    CHECK(p.l4 == 0);
    auto oracle = testutil::brute_profile4(t);
    CHECK(p.t4 == oracle[0]);
    CHECK(p.c4 == oracle[1]);
    CHECK(oracle[2] == 0);
    CHECK(oracle[3] == 0);
  }
  for (int n = 5; n <= 1001; n += 2) {
    int h = (n - 1) / 2;
    CHECK(binomial(n, 4) == count_t(n) * binomial(h, 3) + count_t(n) * binomial(h + 1, 3));
  }
  // closed form for the transitive count
  for (int n : {5, 7, 9, 11, 13, 101}) {
    Tournament t = circular_tournament(n);
    TournamentProfile4 p = profile4_tournament(t);
    int h = (n - 1) / 2;
    CHECK(p.t4 == 2 * count_t(n) * binomial(h, 3) + count_t(n) * binomial(h + 1, 3) -
                      binomial(n, 4));
  }
}

TEST_CASE("random models") {
  Graph full = random_graph(40, 1.0, 5);
  CHECK(full.edge_count() == binomial(40, 2));
  Graph none = random_graph(40, 0.0, 5);
  CHECK(none.edge_count() == 0);
  CHECK_THROWS_AS(random_graph(10, 1.5, 0), input_error);

  // determinism per seed
  Graph a = random_graph(60, 0.37, 123);
  Graph b = random_graph(60, 0.37, 123);
  for (int u = 0; u < 60; ++u)
    for (int v = 0; v < 60; ++v) CHECK(a.adjacent(u, v) == b.adjacent(u, v));
  Graph c = random_graph(60, 0.37, 124);
  count_t diff = 0;
  for (int u = 0; u < 60; ++u)
    for (int v = u + 1; v < 60; ++v) diff += a.adjacent(u, v) != c.adjacent(u, v);
  CHECK(diff > 0);

  Tournament t1 = random_tournament(50, 9);
  Tournament t2 = random_tournament(50, 9);
  for (int u = 0; u < 50; ++u)
    for (int v = 0; v < 50; ++v)
      if (u != v) CHECK(t1.beats(u, v) == t2.beats(u, v));

  // a modest-size instance already sits near the labeled-type frequencies
  TournamentProfile4 p = profile4_tournament(random_tournament(400, 0));
  CHECK(std::abs(p.densities4[0] - 0.375) < 0.05);
  CHECK(std::abs(p.densities4[1] - 0.375) < 0.05);
  CHECK(std::abs(p.densities4[2] - 0.125) < 0.05);
  CHECK(std::abs(p.densities4[3] - 0.125) < 0.05);
}

TEST_CASE("transitive tournament") {
  Tournament t = transitive_tournament(4);
  TournamentProfile4 p = profile4_tournament(t);
  CHECK(p.t4 == 1);
  CHECK(p.total4() == 1);
  CHECK(cyclic_triangle_count(transitive_tournament(10)) == 0);
}

TEST_CASE("pentagon blow-up family") {
  Graph g1 = tyomkyn_graph(1);
  Profile3 p1 = profile3_graph(g1);
  CHECK(p1.counts == std::array<count_t, 4>{0, 5, 5, 0});

  Graph g2 = tyomkyn_graph(2);
  CHECK(g2.order() == 25);
  CHECK(g2.edge_count() == 150);
  Profile3 p2 = profile3_graph(g2);
  CHECK(p2.counts == std::array<count_t, 4>{250, 900, 900, 250});
  CHECK(testutil::brute_profile3(g2) == p2.counts);

  Graph g3 = tyomkyn_graph(3);
  Profile3 p3 = profile3_graph(g3);
  CHECK(p3.counts[3] == 38750);

  // self-complementarity: N0 = N3 and N1 = N2, exactly
  for (int k = 1; k <= 3; ++k) {
    Profile3 p = profile3_graph(tyomkyn_graph(k));
    CHECK(p.counts[0] == p.counts[3]);
    CHECK(p.counts[1] == p.counts[2]);
  }

  auto levels = tyomkyn_levels(4);
  CHECK(levels[1].triangles == 250);
  CHECK(levels[2].triangles == 38750);
  CHECK(levels[3].triangles == 5037500);
  for (const auto& lv : levels) {
    CHECK(lv.edges == count_t(lv.n) * (lv.n - 1) / 4);  // density exactly 1/2
  }
  // recurrence matches the built graphs
  for (int k = 1; k <= 3; ++k)
    CHECK(triangle_count(tyomkyn_graph(k)) == levels[k - 1].triangles);

  CHECK_THROWS_AS(tyomkyn_graph(0), input_error);
  CHECK_THROWS_AS(tyomkyn_graph(5), resource_error);
}
