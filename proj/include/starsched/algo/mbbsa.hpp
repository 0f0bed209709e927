#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include <starsched/algo/types.hpp>
#include <starsched/core/simulate.hpp>

namespace starsched::algo {

namespace detail {

/// Phases shared by the deadline-based feasibility tests: who has to
/// send, how much, and in which order. Senders are workers that cannot
/// finish their initial load by M; they emit in non-decreasing link-cost
/// order, lower index first on ties. `fits` turns false when a sender
/// cannot push its surplus through its own link within M.
struct SenderPrep {
  bool fits{true};
  std::vector<long long> obligation;    // l_s per worker, 0 for non-senders
  std::vector<std::size_t> emissions;   // sender of the k-th task into the master
  std::vector<core::Rational> arrival;  // arrival of the k-th task at the master
  long long to_send{};                  // total tasks that must move
};

inline SenderPrep prepare_senders(const core::Platform& p, const core::Rational& M) {
  SenderPrep prep;
  const std::size_t m = p.size();
  prep.obligation.assign(m, 0);
  auto f = core::finish_times(p);

  std::vector<std::size_t> senders;
  for (std::size_t i = 0; i < m; ++i) {
    if (f[i] <= M) continue;
    senders.push_back(i);
    core::BigInt need = core::ceil_to_int((f[i] - M) / p.workers[i].w);
    if (core::floor_to_int(M / p.workers[i].c) < need) {
      prep.fits = false;  // M too small for this sender's link
      return prep;
    }
    prep.obligation[i] = need.convert_to<long long>();
    prep.to_send += prep.obligation[i];
  }
  std::sort(senders.begin(), senders.end(), [&](std::size_t a, std::size_t b) {
    if (p.workers[a].c != p.workers[b].c) return p.workers[a].c < p.workers[b].c;
    return a < b;
  });
  core::Rational at = 0;
  for (std::size_t s : senders) {
    for (long long k = 0; k < prep.obligation[s]; ++k) {
      at += p.workers[s].c;
      prep.emissions.push_back(s);
      prep.arrival.push_back(at);
    }
  }
  return prep;
}

}  // namespace detail

/// One reception slot: the latest moment the l-th extra task may reach
/// its receiver and still finish by the target makespan.
struct DeadlineEntry {
  core::Rational deadline;
  std::size_t receiver{};
};

/// Deadline structure for a fixed target makespan M. `entries` holds the
/// per-receiver reception slots sorted by non-decreasing deadline (at
/// most `to_send` slots per receiver; more can never be used), while the
/// capacity vector reports the full per-worker count.
struct DeadlineList {
  std::vector<DeadlineEntry> entries;
  std::vector<long long> sender_obligation;   // l_s
  std::vector<long long> receiver_capacity;   // l_r
  long long to_send{};                        // L_send
  long long receivable{};                     // L_recv
  bool senders_fit{true};
};

inline DeadlineList build_deadline_list(const core::Platform& p, const core::Rational& M) {
  DeadlineList dl;
  const std::size_t m = p.size();
  auto prep = detail::prepare_senders(p, M);
  dl.senders_fit = prep.fits;
  dl.sender_obligation = std::move(prep.obligation);
  dl.to_send = prep.to_send;
  dl.receiver_capacity.assign(m, 0);
  if (!dl.senders_fit) return dl;

  auto f = core::finish_times(p);
  for (std::size_t i = 0; i < m; ++i) {
    if (f[i] >= M) continue;
    core::BigInt cap = core::floor_to_int((M - f[i]) / p.workers[i].w);
    const core::BigInt cap_limit = 1'000'000'000'000LL;  // keeps the sum additive
    long long cap_ll = cap > cap_limit ? 1'000'000'000'000LL : cap.convert_to<long long>();
    dl.receiver_capacity[i] = cap_ll;
    dl.receivable += cap_ll;
    for (long long l = 1; l <= std::min(cap_ll, dl.to_send); ++l)
      dl.entries.push_back({M - core::Rational(l) * p.workers[i].w, i});
  }
  std::sort(dl.entries.begin(), dl.entries.end(), [](const DeadlineEntry& a, const DeadlineEntry& b) {
    if (a.deadline != b.deadline) return a.deadline < b.deadline;
    return a.receiver < b.receiver;
  });
  return dl;
}

/// Can every worker finish by M if overloaded workers ship their surplus
/// through the master? Builds the deadline slots, then runs the
/// Moore-Hodgson scan over them with the reception cost of each slot's
/// receiver. On heterogeneous links the scan additionally never starts
/// the k-th reception before the k-th task has reached the master, which
/// is what makes the emitted plan simulate within M. Feasible when at
/// least `to_send` receptions survive; the plan pairs the surviving
/// receptions, in scan order, with the emission sequence.
inline FeasibilityResult mbbsa_feasible(const core::Platform& p, const core::Rational& M) {
  auto prep = detail::prepare_senders(p, M);
  if (!prep.fits) return {false, {}, 0};
  if (prep.to_send == 0) return {true, {}, 0};

  DeadlineList dl = build_deadline_list(p, M);
  const std::size_t needed = static_cast<std::size_t>(dl.to_send);

  std::vector<DeadlineEntry> sched;
  std::vector<core::Rational> end_at;
  auto recompute = [&](std::size_t from) {
    for (std::size_t k = from; k < sched.size(); ++k) {
      core::Rational prev = k == 0 ? core::Rational(0) : end_at[k - 1];
      const core::Rational& avail = prep.arrival[std::min(k, needed - 1)];
      end_at[k] = std::max(prev, avail) + p.workers[sched[k].receiver].c;
    }
  };

  for (const DeadlineEntry& e : dl.entries) {
    sched.push_back(e);
    end_at.push_back(0);
    recompute(sched.size() - 1);
    while (!sched.empty() && end_at.back() > sched.back().deadline) {
      std::size_t worst = 0;
      for (std::size_t k = 1; k < sched.size(); ++k)
        if (p.workers[sched[k].receiver].c > p.workers[sched[worst].receiver].c) worst = k;
      sched.erase(sched.begin() + static_cast<std::ptrdiff_t>(worst));
      end_at.pop_back();
      recompute(worst);
    }
  }

  long long scheduled = static_cast<long long>(sched.size());
  if (scheduled < dl.to_send) return {false, {}, scheduled};

  core::MovePlan plan;
  plan.moves.reserve(needed);
  for (std::size_t k = 0; k < needed; ++k)
    plan.moves.push_back({prep.emissions[k], sched[k].receiver});
  return {true, plan, scheduled};
}

}  // namespace starsched::algo
