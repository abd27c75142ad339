#pragma once

#include <cmath>
#include <limits>

#include "g2u/errors.hpp"

namespace g2u {

// Controls for the deterministic 1-D routines below.
// Objectives signal an infeasible point by returning +inf; that keeps
// brackets well-defined during the scan instead of unwinding mid-search.
struct SearchSpec {
  double lo;
  double hi;
  int n_grid = 64;
  double rtol = 1e-10;
  double atol = 0.0;
  int max_iter = 200;
};

namespace detail {
inline void check_spec(const SearchSpec& s) {
  if (!(s.lo < s.hi)) throw NumericError("SearchSpec: lo must be < hi");
  if (s.n_grid < 8) throw NumericError("SearchSpec: n_grid must be >= 8");
  if (!(s.rtol > 0.0) || s.atol < 0.0)
    throw NumericError("SearchSpec: tolerances must be positive");
}
}  // namespace detail

struct MinResult {
  double x;
  double f;
};

// Seed-grid scan over [lo, hi] followed by golden-section refinement of the
// bracket around the best grid point. The result is never worse than the best
// grid value. Throws InfeasibleError when every grid point is +inf.
template <class F>
MinResult minimize_1d(F&& f, const SearchSpec& spec) {
  detail::check_spec(spec);
  const double inf = std::numeric_limits<double>::infinity();

  const int n = spec.n_grid;
  const double step = (spec.hi - spec.lo) / (n - 1);
  int best = -1;
  double best_f = inf;
  for (int i = 0; i < n; ++i) {
    const double x = (i == n - 1) ? spec.hi : spec.lo + i * step;
    const double v = f(x);
    if (v < best_f) {
      best_f = v;
      best = i;
    }
  }
  if (best < 0) throw InfeasibleError("minimize_1d: no feasible point on the seed grid");

  double a = (best == 0) ? spec.lo : spec.lo + (best - 1) * step;
  double b = (best == n - 1) ? spec.hi : spec.lo + (best + 1) * step;
  double best_x = (best == n - 1) ? spec.hi : spec.lo + best * step;

  static const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < spec.max_iter; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
    if (fc < best_f) { best_f = fc; best_x = c; }
    if (fd < best_f) { best_f = fd; best_x = d; }
    const double tol = spec.rtol * (std::fabs(c) + std::fabs(d)) / 2 + spec.atol;
    if (b - a <= tol) break;
  }
  return {best_x, best_f};
}

// Root of f(x) = target for nondecreasing f by bisection.
// Requires f(lo) <= target <= f(hi); throws NumericError otherwise.
template <class F>
double bisect_monotone(F&& f, double target, const SearchSpec& spec) {
  detail::check_spec(spec);
  double lo = spec.lo;
  double hi = spec.hi;
  double flo = f(lo);
  double fhi = f(hi);
  if (!(flo <= target && target <= fhi))
    throw NumericError("bisect_monotone: target not bracketed by [f(lo), f(hi)]");
  for (int it = 0; it < spec.max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = f(mid);
    if (fm < target)
      lo = mid;
    else
      hi = mid;
    if (std::fabs(fm - target) <= spec.rtol * std::fabs(target) + spec.atol &&
        hi - lo <= spec.rtol * (std::fabs(lo) + std::fabs(hi)) / 2 + spec.atol)
      break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace g2u
