#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "graphprof/constructions.hpp"
#include "graphprof/profiles.hpp"

namespace graphprof {

// Threshold constants: theta is the largest root of
// theta^3 + theta^2 - theta + 1/6 = 0 and rho = 6 theta^2 (1 - 2 theta).
// second_root is the other positive root of the same cubic.
struct ExtremalConstants {
  double theta = 0.0;
  double rho = 0.0;
  double second_root = 0.0;
  double residual = 0.0;  // |cubic(theta)|
};

ExtremalConstants solve_cubic_theta();

// Limit densities (p0, p1, p2, p3) of a clique union. p3 = sum alpha_i^3;
// p0 from the elementary symmetric functions of the shares; p2 = 0 because
// clique unions contain no induced 2-edge triple.
std::array<double, 4> clique_union_densities(const CliqueSpec& spec);

// One balance equation p0 = p3 from the constrained minimization of
// max(p0, p3) over clique unions. Interior cases have r equal cliques and
// free isolated mass; boundary cases split the mass 1 over s cliques of
// share alpha1 and t of share alpha2. Rows with t == 0 stand for the
// unbounded tail (t >= tail_from) and carry its analytic lower bound.
struct CaseSpec {
  bool interior = false;
  int r = 0;  // interior: number of equal cliques
  int s = 0, t = 0;
  int tail_from = 0;  // bound rows: the range is t >= tail_from

  static CaseSpec make_interior(int r);
  static CaseSpec make_boundary(int s, int t);
  static CaseSpec make_tail_bound(int s, int tail_from);
  std::string label() const;
};

struct CaseSolution {
  CaseSpec spec;
  bool feasible = true;
  bool is_lower_bound = false;  // analytic tail rows
  double unknown = 0.0;         // solved x (boundary) or alpha_1 (interior)
  double alpha1 = 0.0;
  double value = 0.0;  // p0 = p3 at the solution, or the tail bound
  double bracket_lo = 0.0, bracket_hi = 0.0;
  double residual = 0.0;
};

CaseSolution solve_case(const CaseSpec& spec);

// Every finite case (interior r = 1,2; boundary s in {1,2}, t in {1,2,3})
// plus the analytic tail bounds for s=1, t>=4 and s=2, t>=3. The minimum
// over feasible rows equals rho and is attained only at s=2, t=1.
struct CaseTable {
  std::vector<CaseSolution> rows;
  double minimum = 0.0;
  std::size_t argmin = 0;
};

CaseTable enumerate_cases();

// Independent oracle: scan share grids on the simplex for r = 1..r_max,
// keep near-balanced points (|p0 - p3| <= band), minimize max(p0, p3);
// one refinement pass at step/10 around the incumbent.
struct GridSearchResult {
  bool found = false;
  double value = 0.0;
  CliqueSpec spec;
  std::uint64_t evaluated = 0;
};

GridSearchResult grid_search_min(int r_max, double step, double band,
                                 unsigned threads = 1);

// p0 + p3 - 1/4 (negative slack is possible at finite n).
double goodman_slack(const Profile3& p);

// Exact finite-order floor: every n-vertex graph satisfies
// 24 (N0 + N3) >= n(n-1)(n-5).
bool goodman_floor_holds(const Profile3& p);
// The floor as a density offset against 1/4, for reports.
double goodman_floor_slack(int n);

}  // namespace graphprof
