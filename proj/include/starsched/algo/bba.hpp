#pragma once

#include <cstddef>
#include <vector>

#include <starsched/algo/types.hpp>
#include <starsched/core/simulate.hpp>

namespace starsched::algo {

/// Snapshot of the greedy rebalancer after an iteration: per-worker task
/// counts and projected finish times, the master port frontiers, and the
/// moves committed so far.
struct IterState {
  std::vector<long long> loads;
  std::vector<core::Rational> ends;
  core::Rational master_in;
  core::Rational master_out;
  std::vector<core::Move> moves;
};

/// Best-balance rebalancing: one task per iteration from the worker that
/// currently finishes last to the worker that would finish the task
/// first, stopping as soon as a transfer no longer improves on the
/// sender's finish time. Optimal on fully homogeneous platforms; a
/// heuristic elsewhere, where the sender's link prices the uplink and
/// the receiver's link the delivery. Workers never both send and
/// receive. Ties break toward the lower index, except that a tied
/// receiver with the earlier current finish time wins.
inline SolveResult bba(const core::Platform& p, std::vector<IterState>* trace = nullptr) {
  const std::size_t m = p.size();
  std::vector<long long> loads(m);
  std::vector<core::Rational> ends(m);
  std::vector<char> was_sender(m, 0);
  std::vector<char> was_receiver(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    loads[i] = p.workers[i].load;
    ends[i] = core::Rational(loads[i]) * p.workers[i].w;
  }
  core::Rational master_in = 0;
  core::Rational master_out = 0;
  core::MovePlan plan;
  if (trace) trace->push_back({loads, ends, master_in, master_out, plan.moves});

  while (true) {
    std::size_t sender = m;
    for (std::size_t k = 0; k < m; ++k) {
      if (loads[k] <= 0 || was_receiver[k]) continue;
      if (sender == m || ends[k] > ends[sender]) sender = k;
    }
    if (sender == m) break;

    core::Rational in_next = master_in + p.workers[sender].c;
    std::size_t receiver = m;
    core::Rational best_end;
    for (std::size_t k = 0; k < m; ++k) {
      if (k == sender || was_sender[k]) continue;
      core::Rational arrival = std::max(in_next, master_out) + p.workers[k].c;
      core::Rational tentative = std::max(ends[k], arrival) + p.workers[k].w;
      if (receiver == m || tentative < best_end ||
          (tentative == best_end && ends[k] < ends[receiver])) {
        receiver = k;
        best_end = tentative;
      }
    }
    if (receiver == m) break;
    if (ends[sender] <= best_end) break;  // the transfer would not help

    master_in = in_next;
    master_out = std::max(in_next, master_out) + p.workers[receiver].c;
    ends[sender] -= p.workers[sender].w;
    --loads[sender];
    ends[receiver] = best_end;
    ++loads[receiver];
    was_sender[sender] = 1;
    was_receiver[receiver] = 1;
    plan.moves.push_back({sender, receiver});
    if (trace) trace->push_back({loads, ends, master_in, master_out, plan.moves});
  }

  return {plan, core::simulate_makespan(p, plan)};
}

}  // namespace starsched::algo
