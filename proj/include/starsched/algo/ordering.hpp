#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include <starsched/core/errors.hpp>
#include <starsched/core/simulate.hpp>

namespace starsched::algo {

/// Signed per-worker imbalance for a pure redistribution: delta[i] > 0
/// means worker i must shed that many tasks, delta[i] < 0 that it must
/// absorb them. Sums to zero.
struct ImbalanceSpec {
  std::vector<long long> delta;
};

struct OrderedRedistribution {
  core::MovePlan plan;
  core::Rational completion;
};

namespace detail {

inline core::Platform zero_compute(const core::Platform& p) {
  core::Platform z = p;
  for (core::Worker& w : z.workers) w.w = 0;
  return z;
}

}  // namespace detail

/// Minimal-time redistribution when computations are neglected: emit
/// the surplus tasks with senders in non-decreasing link-cost order and
/// receiver slots in non-increasing link-cost order, paired through the
/// master first-in first-out. Ties break toward the lower worker index.
/// The completion time is the simulated makespan with all compute costs
/// forced to zero, and is minimal over every sender/receiver ordering.
inline OrderedRedistribution order_redistribution(const core::Platform& p,
                                                  const ImbalanceSpec& spec) {
  if (spec.delta.size() != p.size())
    throw InfeasibleImbalance("delta has " + std::to_string(spec.delta.size()) +
                              " entries for " + std::to_string(p.size()) + " workers");
  long long sum = 0;
  for (long long d : spec.delta) sum += d;
  if (sum != 0)
    throw InfeasibleImbalance("imbalances sum to " + std::to_string(sum) + ", expected 0");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (spec.delta[i] > p.workers[i].load)
      throw InfeasibleImbalance("worker " + std::to_string(i) + " must send " +
                                std::to_string(spec.delta[i]) + " tasks but holds only " +
                                std::to_string(p.workers[i].load));
  }

  std::vector<std::size_t> senders;
  std::vector<std::size_t> receivers;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (spec.delta[i] > 0) senders.push_back(i);
    if (spec.delta[i] < 0) receivers.push_back(i);
  }
  std::sort(senders.begin(), senders.end(), [&](std::size_t a, std::size_t b) {
    if (p.workers[a].c != p.workers[b].c) return p.workers[a].c < p.workers[b].c;
    return a < b;
  });
  std::sort(receivers.begin(), receivers.end(), [&](std::size_t a, std::size_t b) {
    if (p.workers[a].c != p.workers[b].c) return p.workers[a].c > p.workers[b].c;
    return a < b;
  });

  std::vector<std::size_t> emissions;
  for (std::size_t s : senders)
    emissions.insert(emissions.end(), static_cast<std::size_t>(spec.delta[s]), s);
  std::vector<std::size_t> slots;
  for (std::size_t r : receivers)
    slots.insert(slots.end(), static_cast<std::size_t>(-spec.delta[r]), r);

  core::MovePlan plan;
  plan.moves.reserve(emissions.size());
  for (std::size_t k = 0; k < emissions.size(); ++k)
    plan.moves.push_back({emissions[k], slots[k]});

  return {plan, core::simulate_makespan(detail::zero_compute(p), plan)};
}

inline core::Rational redistribution_time(const core::Platform& p, const ImbalanceSpec& spec) {
  return order_redistribution(p, spec).completion;
}

}  // namespace starsched::algo
