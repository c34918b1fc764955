#include "graphprof/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "graphprof/errors.hpp"
#include "graphprof/parallel.hpp"

namespace graphprof {

namespace {

struct Root {
  double x = 0.0;
  double lo = 0.0, hi = 0.0;
  double residual = 0.0;
};

// Bisection to machine width on a sign-changing bracket, then a few Newton
// steps clamped to the bracket. Postcondition: bracket width <= 1e-12 and
// |f(x)| <= 1e-10.
Root bisect_newton(const std::function<double(double)>& f,
                   const std::function<double(double)>& df, double lo, double hi) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return {lo, lo, lo, 0.0};
  if (fhi == 0.0) return {hi, hi, hi, 0.0};
  if ((flo > 0) == (fhi > 0))
    throw internal_error("root bracket does not change sign");
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    double fm = f(mid);
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double x = lo + (hi - lo) / 2;
  for (int i = 0; i < 3; ++i) {
    double d = df(x);
    if (d == 0.0) break;
    double nx = x - f(x) / d;
    if (nx < lo || nx > hi) break;
    x = nx;
  }
  Root r{x, lo, hi, std::abs(f(x))};
  if (r.hi - r.lo > 1e-12 || r.residual > 1e-10)
    throw internal_error("root refinement missed its tolerance");
  return r;
}

double cubic(double x) { return x * x * x + x * x - x + 1.0 / 6.0; }
double dcubic(double x) { return 3 * x * x + 2 * x - 1; }

// Boundary-case balance functions in x = t*alpha2 (mass on the small
// cliques), with alpha1 = (1-x)/s. tau = p3 - p0 is strictly decreasing on
// the feasible interval, so a sign change pins the unique balanced point.
double p0_s1(double x, double t) {
  return 3 * x * x - 2 * x * x * x - 3 * x * x / t + 2 * x * x * x / (t * t);
}
double tau_s1(double x, double t) {
  double omx = 1 - x;
  return omx * omx * omx + x * x * x / (t * t) - p0_s1(x, t);
}
double dtau_s1(double x, double t) {
  double h = 1e-7;
  return (tau_s1(x + h, t) - tau_s1(x - h, t)) / (2 * h);
}
double p0_s2(double x, double t) {
  return 1.5 * x - 0.5 * x * x * x - 3 * x * x / t + 2 * x * x * x / (t * t);
}
double tau_s2(double x, double t) {
  return 0.25 - 2.25 * x + 0.75 * x * x + 0.25 * x * x * x + 3 * x * x / t -
         x * x * x / (t * t);
}
double dtau_s2(double x, double t) {
  return -2.25 + 1.5 * x + 0.75 * x * x + 6 * x / t - 3 * x * x / (t * t);
}

CaseSolution infeasible(const CaseSpec& spec) {
  CaseSolution sol;
  sol.spec = spec;
  sol.feasible = false;
  return sol;
}

}  // namespace

ExtremalConstants solve_cubic_theta() {
  // Sign changes verified: cubic(0.3) < 0 < cubic(0.5) and
  // cubic(0.1) > 0 > cubic(0.3).
  Root big = bisect_newton(cubic, dcubic, 0.3, 0.5);
  Root small = bisect_newton(cubic, dcubic, 0.1, 0.3);
  ExtremalConstants c;
  c.theta = big.x;
  c.second_root = small.x;
  c.rho = 6 * c.theta * c.theta * (1 - 2 * c.theta);
  c.residual = std::abs(cubic(c.theta));
  if (c.residual > 1e-12) throw internal_error("cubic residual above 1e-12");
  return c;
}

std::array<double, 4> clique_union_densities(const CliqueSpec& spec) {
  spec.validate();
  double p1s = 0, p2s = 0, p3s = 0;  // power sums
  for (double a : spec.alphas) {
    p1s += a;
    p2s += a * a;
    p3s += a * a * a;
  }
  double e1 = p1s;
  double e2 = (p1s * p1s - p2s) / 2;
  double e3 = (p1s * p1s * p1s - 3 * p1s * p2s + 2 * p3s) / 6;
  double b = spec.beta;
  double p3 = p3s;
  double p0 = 6 * e3 + 6 * b * e2 + 3 * b * b * e1 + b * b * b;
  double p1 = 1.0 - p0 - p3;
  return {p0, p1, 0.0, p3};
}

CaseSpec CaseSpec::make_interior(int r) {
  CaseSpec s;
  s.interior = true;
  s.r = r;
  return s;
}
CaseSpec CaseSpec::make_boundary(int s, int t) {
  CaseSpec c;
  c.s = s;
  c.t = t;
  return c;
}
CaseSpec CaseSpec::make_tail_bound(int s, int tail_from) {
  CaseSpec c;
  c.s = s;
  c.tail_from = tail_from;
  return c;
}

std::string CaseSpec::label() const {
  if (interior) return "interior-r" + std::to_string(r);
  if (tail_from > 0)
    return "boundary-s" + std::to_string(s) + "-t>=" + std::to_string(tail_from);
  return "boundary-s" + std::to_string(s) + "-t" + std::to_string(t);
}

CaseSolution solve_case(const CaseSpec& spec) {
  CaseSolution sol;
  sol.spec = spec;
  const double nudge = 1e-9;

  if (spec.interior) {
    if (spec.r != 1 && spec.r != 2)
      throw input_error("interior case supports r = 1 or 2");
    int r = spec.r;
    auto p3 = [r](double a) { return r * a * a * a; };
    auto p0 = [r](double a) {
      CliqueSpec cs;
      cs.alphas.assign(r, a);
      cs.beta = 1.0 - r * a;
      return clique_union_densities(cs)[0];
    };
    auto bal = [&](double a) { return p3(a) - p0(a); };
    auto dbal = [&](double a) {
      double h = 1e-7;
      return (bal(a + h) - bal(a - h)) / (2 * h);
    };
    Root root = bisect_newton(bal, dbal, nudge, 1.0 / r - nudge);
    sol.unknown = sol.alpha1 = root.x;
    sol.value = p3(root.x);
    sol.bracket_lo = root.lo;
    sol.bracket_hi = root.hi;
    sol.residual = root.residual;
    return sol;
  }

  if (spec.tail_from > 0) {
    sol.is_lower_bound = true;
    if (spec.s == 1) {
      // p0 increases past the balanced point, so p0(1/3) bounds every
      // t >= 4 case below: p0(1/3) > 7/27 - 1/(3t) >= 7/27 - 1/12.
      sol.unknown = 1.0 / 3.0;
      sol.value = 7.0 / 27.0 - 1.0 / (3.0 * spec.tail_from);
      sol.alpha1 = 2.0 / 3.0;
      return sol;
    }
    if (spec.s == 2) {
      // x0 solves the t-free part of tau; the balanced point exceeds x0
      // and p0 increases, so p0(x0) with its positive 1/t^2 term dropped
      // bounds every t >= 3 case below.
      auto tfree = [](double x) { return 0.25 - 2.25 * x + 0.75 * x * x + 0.25 * x * x * x; };
      auto dtfree = [](double x) { return -2.25 + 1.5 * x + 0.75 * x * x; };
      Root x0 = bisect_newton(tfree, dtfree, nudge, 1.0 - nudge);
      sol.unknown = x0.x;
      sol.alpha1 = (1.0 - x0.x) / 2.0;
      double a = 1.5 * x0.x - 0.5 * x0.x * x0.x * x0.x;  // t-free p0(x0)
      double b = 3.0 * x0.x * x0.x;
      sol.value = a - b / spec.tail_from;
      sol.bracket_lo = x0.lo;
      sol.bracket_hi = x0.hi;
      sol.residual = x0.residual;
      return sol;
    }
    throw input_error("tail bounds exist for s = 1 and s = 2 only");
  }

  if (spec.s < 1 || spec.s > 2) throw input_error("boundary case supports s = 1 or 2");
  if (spec.t < 1 || spec.t > 1000000)
    throw input_error("boundary case supports 1 <= t <= 10^6");
  double t = spec.t;
  double upper = spec.s == 1 ? t / (t + 1) : t / (t + 2);
  auto tau = [&](double x) { return spec.s == 1 ? tau_s1(x, t) : tau_s2(x, t); };
  auto dtau = [&](double x) { return spec.s == 1 ? dtau_s1(x, t) : dtau_s2(x, t); };
  double lo = nudge, hi = upper - nudge;
  if (tau(lo) <= 0 || tau(hi) >= 0) return infeasible(spec);  // e.g. s=1, t=1
  Root root = bisect_newton(tau, dtau, lo, hi);
  sol.unknown = root.x;
  sol.alpha1 = (1.0 - root.x) / spec.s;
  sol.value = spec.s == 1 ? p0_s1(root.x, t) : p0_s2(root.x, t);
  sol.bracket_lo = root.lo;
  sol.bracket_hi = root.hi;
  sol.residual = root.residual;
  return sol;
}

CaseTable enumerate_cases() {
  CaseTable table;
  table.rows.push_back(solve_case(CaseSpec::make_interior(1)));
  table.rows.push_back(solve_case(CaseSpec::make_interior(2)));
  for (int t = 1; t <= 3; ++t)
    table.rows.push_back(solve_case(CaseSpec::make_boundary(1, t)));
  table.rows.push_back(solve_case(CaseSpec::make_tail_bound(1, 4)));
  for (int t = 1; t <= 3; ++t)
    table.rows.push_back(solve_case(CaseSpec::make_boundary(2, t)));
  table.rows.push_back(solve_case(CaseSpec::make_tail_bound(2, 3)));

  table.minimum = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const CaseSolution& row = table.rows[i];
    if (!row.feasible) continue;
    if (row.value < table.minimum) {
      table.minimum = row.value;
      table.argmin = i;
    }
  }
  return table;
}

GridSearchResult grid_search_min(int r_max, double step, double band,
                                 unsigned threads) {
  if (r_max < 1 || r_max > 4) throw input_error("grid search supports r_max in 1..4");
  if (!(step >= 1e-4 && step <= 0.1))
    throw input_error("grid step must lie in [1e-4, 0.1]");
  if (band < 0) throw input_error("balance band must be non-negative");

  struct Best {
    double value = std::numeric_limits<double>::infinity();
    std::vector<double> alphas;
    std::uint64_t evaluated = 0;

    void consider(double v, const double* a, int r) {
      std::vector<double> cand(a, a + r);
      if (v < value || (v == value && cand < alphas)) {
        value = v;
        alphas = std::move(cand);
      }
    }
  };

  // Shares are j*step for integer j >= 1, non-increasing, total <= 1.
  int max_steps = static_cast<int>(std::floor(1.0 / step + 1e-9));

  auto scan_point = [&](Best& best, const double* a, int r) {
    double p1s = 0, p2s = 0, p3s = 0;
    for (int i = 0; i < r; ++i) {
      p1s += a[i];
      p2s += a[i] * a[i];
      p3s += a[i] * a[i] * a[i];
    }
    if (p1s > 1.0 + 1e-9) return;
    double beta = std::max(0.0, 1.0 - p1s);
    double e1 = p1s;
    double e2 = (p1s * p1s - p2s) / 2;
    double e3 = (p1s * p1s * p1s - 3 * p1s * p2s + 2 * p3s) / 6;
    double p3 = p3s;
    double p0 = 6 * e3 + 6 * beta * e2 + 3 * beta * beta * e1 + beta * beta * beta;
    best.evaluated += 1;
    if (std::abs(p0 - p3) <= band) best.consider(std::max(p0, p3), a, r);
  };

  // Depth-first walk of non-increasing integer share tuples.
  std::function<void(Best&, double*, int, int, int, int)> walk =
      [&](Best& best, double* a, int r, int depth, int max_j, int remaining) {
        if (depth == r) {
          scan_point(best, a, r);
          return;
        }
        for (int j = std::min(max_j, remaining); j >= 1; --j) {
          a[depth] = j * step;
          walk(best, a, r, depth + 1, j, remaining - j);
        }
      };

  Best global;
  for (int r = 1; r <= r_max; ++r) {
    unsigned nthreads = threads ? threads : 1;
    std::vector<Best> partial(nthreads);
    // Parallel over the outermost share; chunks merged in index order.
    parallel_chunks(static_cast<std::size_t>(max_steps), threads,
                    [&](std::size_t begin, std::size_t end, unsigned w) {
                      double a[4];
                      for (std::size_t j1 = begin; j1 < end; ++j1) {
                        int j = static_cast<int>(max_steps - j1);  // descending j1
                        a[0] = j * step;
                        walk(partial[w], a, r, 1, j, max_steps - j);
                      }
                    });
    for (const Best& p : partial) {
      global.evaluated += p.evaluated;
      if (!p.alphas.empty())
        global.consider(p.value, p.alphas.data(), static_cast<int>(p.alphas.size()));
    }
  }

  // Refinement at step/10 in a box around the incumbent.
  if (!global.alphas.empty()) {
    int r = static_cast<int>(global.alphas.size());
    double fine = step / 10;
    std::vector<double> base = global.alphas;
    std::function<void(double*, int)> refine = [&](double* a, int depth) {
      if (depth == r) {
        for (int i = 0; i + 1 < r; ++i)
          if (a[i] < a[i + 1] - 1e-12) return;
        for (int i = 0; i < r; ++i)
          if (a[i] <= 0) return;
        scan_point(global, a, r);
        return;
      }
      for (int d = -10; d <= 10; ++d) {
        a[depth] = base[depth] + d * fine;
        refine(a, depth + 1);
      }
    };
    double a[4];
    refine(a, 0);
  }

  GridSearchResult result;
  result.evaluated = global.evaluated;
  if (global.alphas.empty()) return result;  // empty feasible set
  result.found = true;
  result.value = global.value;
  result.spec = CliqueSpec::make(global.alphas);
  return result;
}

double goodman_slack(const Profile3& p) {
  return p.densities[0] + p.densities[3] - 0.25;
}

bool goodman_floor_holds(const Profile3& p) {
  count_t n = p.n;
  return 24 * (p.counts[0] + p.counts[3]) >= n * (n - 1) * (n - 5);
}

double goodman_floor_slack(int n) {
  double floor_density =
      static_cast<double>(n) * (n - 1) * (n - 5) / 24.0 / to_double(binomial(n, 3));
  return floor_density - 0.25;
}

}  // namespace graphprof
