#pragma once

#include <algorithm>

#include <starsched/algo/types.hpp>
#include <starsched/core/simulate.hpp>

namespace starsched::algo {

using FeasibilityOracle = FeasibilityResult (*)(const core::Platform&, const core::Rational&);

/// Minimizes the makespan by binary search over candidate targets.
///
/// Every achievable finish time is a linear combination of the c_i and
/// w_i, so with lambda the lcm of their denominators all candidates live
/// on the 1/lambda grid; the search runs over grid indices between the
/// smallest and largest initial finish time. The upper end is always
/// feasible (nobody has to move anything at max f_i), the plan of the
/// smallest feasible grid point is kept, and its simulated makespan is
/// returned.
inline SolveResult optimize_makespan(const core::Platform& p, FeasibilityOracle inner) {
  core::BigInt lambda = 1;
  for (const core::Worker& w : p.workers) {
    lambda = boost::multiprecision::lcm(lambda, denominator(w.c));
    lambda = boost::multiprecision::lcm(lambda, denominator(w.w));
  }

  auto f = core::finish_times(p);
  core::Rational fmin = f.front();
  core::Rational fmax = f.front();
  for (const core::Rational& v : f) {
    fmin = std::min(fmin, v);
    fmax = std::max(fmax, v);
  }

  auto to_grid = [&](const core::Rational& v) {
    core::Rational scaled = v * lambda;
    return numerator(scaled);  // denominator is 1 on the grid
  };
  core::BigInt lo = to_grid(fmin);
  core::BigInt hi = to_grid(fmax);

  core::MovePlan best;  // the empty plan is feasible at fmax
  while (lo < hi) {
    core::BigInt mid = (lo + hi) / 2;
    FeasibilityResult r = inner(p, core::Rational(mid, lambda));
    if (r.feasible) {
      hi = mid;
      best = std::move(r.plan);
    } else {
      lo = mid + 1;
    }
  }
  return {best, core::simulate_makespan(p, best)};
}

}  // namespace starsched::algo
