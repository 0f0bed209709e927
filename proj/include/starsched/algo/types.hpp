#pragma once

#include <starsched/core/plan.hpp>
#include <starsched/core/rational.hpp>

namespace starsched::algo {

/// A plan together with its simulated makespan.
struct SolveResult {
  core::MovePlan plan;
  core::Rational makespan;
};

/// Answer of a fixed-makespan feasibility query. `scheduled` is the
/// number of receptions the scheduling phase managed to place.
struct FeasibilityResult {
  bool feasible{};
  core::MovePlan plan;
  long long scheduled{};
};

}  // namespace starsched::algo
