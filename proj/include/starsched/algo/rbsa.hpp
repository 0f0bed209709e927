#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include <starsched/algo/mbbsa.hpp>
#include <starsched/algo/types.hpp>
#include <starsched/core/simulate.hpp>

namespace starsched::algo {

/// Backward-filling feasibility test: senders are prepared exactly as in
/// the deadline-based test, but receptions are placed from the target
/// makespan M backward, each time on the receiver that can start
/// receiving latest while the task still fits its idle gap and could
/// already be at the master. Reception slots stack downward from M on
/// each receiver, and the out-port frontier moves to the start of every
/// committed reception. The candidate plan is re-ordered into forward
/// time and checked by simulation; a plan that misses M is reported
/// infeasible rather than returned.
inline FeasibilityResult rbsa_feasible(const core::Platform& p, const core::Rational& M) {
  const std::size_t m = p.size();
  auto prep = detail::prepare_senders(p, M);
  if (!prep.fits) return {false, {}, 0};
  if (prep.to_send == 0) return {true, {}, 0};

  auto f = core::finish_times(p);
  core::Rational master_in = prep.arrival.front();  // earliest any task exists at the master

  std::vector<char> is_receiver(m, 0);
  std::vector<core::Rational> begin(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (f[i] < M) {
      is_receiver[i] = 1;
      begin[i] = M;
    }
  }

  core::Rational out_front = M;
  std::vector<std::size_t> picks;  // receivers, latest reception first
  while (static_cast<long long>(picks.size()) < prep.to_send) {
    std::size_t best = m;
    core::Rational best_start;
    for (std::size_t i = 0; i < m; ++i) {
      if (!is_receiver[i]) continue;
      core::Rational compute_start = begin[i] - p.workers[i].w;
      if (compute_start < f[i]) continue;  // no idle gap left
      core::Rational reception_end = std::min(compute_start, out_front);
      core::Rational start = reception_end - p.workers[i].c;
      if (start < master_in) continue;  // the task cannot be at the master yet
      if (best == m || start > best_start) {
        best = i;
        best_start = start;
      }
    }
    if (best == m) return {false, {}, static_cast<long long>(picks.size())};
    begin[best] -= p.workers[best].w;
    out_front = best_start;
    picks.push_back(best);
  }

  core::MovePlan plan;
  plan.moves.reserve(picks.size());
  for (std::size_t k = 0; k < picks.size(); ++k)
    plan.moves.push_back({prep.emissions[k], picks[picks.size() - 1 - k]});
  if (core::simulate_makespan(p, plan) > M)
    return {false, {}, prep.to_send};
  return {true, plan, prep.to_send};
}

}  // namespace starsched::algo
