#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <starsched/core/errors.hpp>
#include <starsched/core/plan.hpp>
#include <starsched/core/platform.hpp>
#include <starsched/core/timeline.hpp>

namespace starsched::core {

/// Deterministic as-soon-as-possible execution of a move plan under the
/// bidirectional one-port model.
///
/// The master in-port is the only serial resource on the way in: uplink
/// k starts the moment the in-port frees up, so the k-th task arrives at
/// the master at the running sum of the senders' link costs. Tasks leave
/// the master in arrival order; downlink k starts once the task has
/// fully arrived and the out-port is free. In- and out-port may overlap
/// each other. Every worker computes the tasks it keeps back-to-back
/// from t = 0 and appends each received task to its compute queue, never
/// starting one before its delivery completes.
///
/// Throws InvalidPlan when the plan violates its invariants.
inline Timeline simulate(const Platform& p, const MovePlan& plan) {
  {
    auto problems = plan_violations(p, plan);
    if (!problems.empty()) {
      std::string all;
      for (const std::string& s : problems) {
        if (!all.empty()) all += "; ";
        all += s;
      }
      throw InvalidPlan(all);
    }
  }

  const std::size_t m = p.size();
  std::vector<long long> sent(m, 0);
  for (const Move& mv : plan.moves) ++sent[mv.sender];

  Timeline tl;
  tl.compute.resize(m);

  std::vector<Rational> free_at(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    Rational end = Rational(p.workers[i].load - sent[i]) * p.workers[i].w;
    if (end > 0) tl.compute[i].push_back({Rational(0), end, std::nullopt});
    free_at[i] = end;
  }

  Rational in_free = 0;
  Rational out_free = 0;
  for (std::size_t k = 0; k < plan.moves.size(); ++k) {
    const Move& mv = plan.moves[k];
    MoveTiming t;
    t.sender = mv.sender;
    t.receiver = mv.receiver;
    t.uplink_start = in_free;
    t.arrival = in_free + p.workers[mv.sender].c;
    t.downlink_start = std::max(t.arrival, out_free);
    t.downlink_end = t.downlink_start + p.workers[mv.receiver].c;
    in_free = t.arrival;
    out_free = t.downlink_end;

    Rational start = std::max(t.downlink_end, free_at[mv.receiver]);
    Rational end = start + p.workers[mv.receiver].w;
    free_at[mv.receiver] = end;
    tl.compute[mv.receiver].push_back({start, end, k});
    tl.moves.push_back(std::move(t));
  }

  tl.makespan = 0;
  for (const Rational& f : free_at) tl.makespan = std::max(tl.makespan, f);
  return tl;
}

/// Makespan of simulate(p, plan) without materializing the timeline.
/// Assumes the plan is valid.
inline Rational simulate_makespan(const Platform& p, const MovePlan& plan) {
  const std::size_t m = p.size();
  std::vector<long long> sent(m, 0);
  for (const Move& mv : plan.moves) ++sent[mv.sender];

  std::vector<Rational> free_at(m);
  for (std::size_t i = 0; i < m; ++i)
    free_at[i] = Rational(p.workers[i].load - sent[i]) * p.workers[i].w;

  Rational arrival = 0;
  Rational out_free = 0;
  for (const Move& mv : plan.moves) {
    arrival += p.workers[mv.sender].c;
    out_free = std::max(arrival, out_free) + p.workers[mv.receiver].c;
    free_at[mv.receiver] = std::max(out_free, free_at[mv.receiver]) + p.workers[mv.receiver].w;
  }

  Rational mk = 0;
  for (const Rational& f : free_at) mk = std::max(mk, f);
  return mk;
}

}  // namespace starsched::core
