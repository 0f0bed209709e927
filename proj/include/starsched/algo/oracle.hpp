#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <starsched/algo/types.hpp>
#include <starsched/core/errors.hpp>
#include <starsched/core/simulate.hpp>

namespace starsched::algo {

struct OracleOptions {
  long long max_moves{};
  bool restrict_no_send_and_receive{false};
  long long budget{10'000'000};  // evaluated plan prefixes, across all depths
};

/// Exact optimum over all move plans of length 0..max_moves.
///
/// Plans are enumerated by length, and lexicographically within one
/// length, so the first plan that reaches the optimal makespan is kept
/// and later candidates only replace it on strict improvement. That
/// makes it sound to abandon a prefix as soon as no extension can
/// strictly beat the incumbent: deliveries already routed through the
/// master are committed, so each receiver must still compute everything
/// delivered to it, and the moves still owed on this depth level each
/// occupy the in-port for at least the cheapest link. Two dominance
/// rules shrink the tree without touching the optimum: untouched
/// workers with identical parameters are interchangeable (only the
/// lowest-indexed one is branched on), and an adjacent emission
/// inversion is dropped when swapping the two emissions is legal, since
/// the swapped plan is pointwise no later. The result is deterministic:
/// the shortest optimal length, lexicographically first among the plans
/// the dominance rules retain.
///
/// Throws BudgetExceeded when the number of evaluated prefixes passes
/// the budget.
inline SolveResult brute_force(const core::Platform& p, const OracleOptions& opt) {
  const std::size_t m = p.size();
  const long long depth_cap = std::min(opt.max_moves, p.total_tasks());

  core::Rational c_min = p.workers.front().c;
  core::Rational w_min = p.workers.front().w;
  for (const core::Worker& w : p.workers) {
    c_min = std::min(c_min, w.c);
    w_min = std::min(w_min, w.w);
  }

  // No schedule beats the best pure compute balance: spreading n unit
  // tasks over machines with per-task costs w_j finishes no earlier than
  // the n-th smallest value of {k * w_j}. Once the incumbent reaches
  // this floor the search can stop.
  core::Rational compute_floor = 0;
  {
    std::vector<long long> cnt(m, 0);
    for (long long t = 0; t < p.total_tasks(); ++t) {
      std::size_t pick = 0;
      core::Rational pick_end;
      for (std::size_t j = 0; j < m; ++j) {
        core::Rational end = core::Rational(cnt[j] + 1) * p.workers[j].w;
        if (j == 0 || end < pick_end) {
          pick = j;
          pick_end = end;
        }
      }
      ++cnt[pick];
      compute_floor = std::max(compute_floor, pick_end);
    }
  }

  std::vector<core::Move> cur;
  std::vector<long long> sent(m, 0);
  std::vector<long long> received(m, 0);
  std::vector<core::Move> best_plan;
  core::Rational best_mk;
  bool have_best = false;
  long long nodes = 0;

  std::function<void(long long)> dfs = [&](long long level) {
    if (++nodes > opt.budget)
      throw BudgetExceeded("enumeration passed " + std::to_string(opt.budget) +
                           " simulated plans");

    core::Rational mk = 0;
    core::Rational lb = 0;
    core::Rational arrival = 0;
    core::Rational out_free = 0;
    std::vector<core::Rational> work_end(m);  // per-worker finish under the current prefix
    std::vector<core::Rational> chain(m);     // delivery-driven floor no extension can undercut
    for (std::size_t i = 0; i < m; ++i) {
      work_end[i] = core::Rational(p.workers[i].load - sent[i]) * p.workers[i].w;
      chain[i] = 0;
    }
    for (const core::Move& mv : cur) {
      arrival += p.workers[mv.sender].c;
      out_free = std::max(arrival, out_free) + p.workers[mv.receiver].c;
      const core::Rational& w = p.workers[mv.receiver].w;
      work_end[mv.receiver] = std::max(work_end[mv.receiver], out_free) + w;
      chain[mv.receiver] = std::max(chain[mv.receiver], out_free) + w;
    }
    if (have_best && best_mk <= compute_floor) return;  // cannot be beaten

    const long long depth = static_cast<long long>(cur.size());
    const long long owed = level - depth;  // moves this level still has to place
    for (std::size_t i = 0; i < m; ++i) {
      mk = std::max(mk, work_end[i]);
      lb = std::max(lb, chain[i]);
      // Even if worker i spends every remaining move shedding, it still
      // computes this much.
      long long retained_floor = p.workers[i].load - sent[i] - owed;
      if (retained_floor > 0 || received[i] > 0) {
        core::Rational keep =
            core::Rational(std::max<long long>(retained_floor, 0) + received[i]) * p.workers[i].w;
        lb = std::max(lb, keep);
      }
    }

    if (depth == level) {
      if (!have_best || mk < best_mk) {
        have_best = true;
        best_mk = mk;
        best_plan = cur;
      }
      return;
    }

    if (have_best) {
      if (lb >= best_mk) return;
      // The remaining moves of this level serialize through both master
      // ports; the last of them is computed after its delivery.
      core::Rational in_tail = arrival + core::Rational(owed) * c_min + c_min;
      core::Rational out_tail = out_free + core::Rational(owed) * c_min;
      if (std::max(in_tail, out_tail) + w_min >= best_mk) return;
    }

    for (std::size_t s = 0; s < m; ++s) {
      if (sent[s] >= p.workers[s].load) continue;
      if (opt.restrict_no_send_and_receive && received[s] > 0) continue;
      if (sent[s] == 0 && received[s] == 0) {
        bool duplicate = false;
        for (std::size_t s2 = 0; s2 < s && !duplicate; ++s2)
          duplicate = sent[s2] == 0 && received[s2] == 0 && p.workers[s2] == p.workers[s];
        if (duplicate) continue;  // same first use, lower index already covers it
      }
      for (std::size_t r = 0; r < m; ++r) {
        if (r == s) continue;
        if (opt.restrict_no_send_and_receive && sent[r] > 0) continue;
        if (sent[r] == 0 && received[r] == 0) {
          bool duplicate = false;
          for (std::size_t r2 = 0; r2 < r && !duplicate; ++r2)
            duplicate = r2 != s && sent[r2] == 0 && received[r2] == 0 &&
                        p.workers[r2] == p.workers[r];
          if (duplicate) continue;
        }
        if (!cur.empty()) {
          // An adjacent emission inversion is dominated by the swapped
          // plan unless swapping would make a move ship to its own
          // sender: cheaper links charge the master first.
          const core::Move& prev = cur.back();
          bool inverted = p.workers[s].c < p.workers[prev.sender].c ||
                          (p.workers[s].c == p.workers[prev.sender].c && s < prev.sender);
          if (inverted && s != prev.receiver && prev.sender != r) continue;
        }
        if (have_best) {
          // The child's new delivery alone may already sink it.
          core::Rational child_arrival = arrival + p.workers[s].c;
          core::Rational child_delivery = std::max(child_arrival, out_free) + p.workers[r].c;
          core::Rational child_floor = std::max(chain[r], child_delivery) + p.workers[r].w;
          if (child_floor >= best_mk) continue;
        }
        cur.push_back({s, r});
        ++sent[s];
        ++received[r];
        dfs(level);
        --received[r];
        --sent[s];
        cur.pop_back();
      }
    }
  };

  for (long long level = 0; level <= depth_cap; ++level) {
    if (have_best && best_mk <= compute_floor) break;
    dfs(level);
  }

  core::MovePlan plan{best_plan};
  return {plan, core::simulate_makespan(p, plan)};
}

}  // namespace starsched::algo
