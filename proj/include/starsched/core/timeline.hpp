#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <starsched/core/platform.hpp>
#include <starsched/core/rational.hpp>

namespace starsched::core {

/// Fully timed record of one move. The uplink occupies the master
/// in-port over [uplink_start, arrival], the downlink occupies the
/// out-port over [downlink_start, downlink_end].
struct MoveTiming {
  std::size_t sender{};
  std::size_t receiver{};
  Rational uplink_start;
  Rational arrival;
  Rational downlink_start;
  Rational downlink_end;

  bool operator==(const MoveTiming&) const = default;
};

/// A compute interval of one worker. `move` ties the interval to the
/// move that delivered the task; the initial-load block carries none.
struct ComputeInterval {
  Rational start;
  Rational end;
  std::optional<std::size_t> move;

  bool operator==(const ComputeInterval&) const = default;
};

struct Timeline {
  std::vector<MoveTiming> moves;
  std::vector<std::vector<ComputeInterval>> compute;  // indexed by worker
  Rational makespan;

  bool operator==(const Timeline&) const = default;
};

struct Violation {
  std::string rule;
  std::string detail;
};

namespace detail {

inline bool intervals_overlap(const Rational& a0, const Rational& a1, const Rational& b0,
                              const Rational& b1) {
  return a0 < b1 && b0 < a1;  // touching endpoints is fine
}

inline std::string span(const Rational& a, const Rational& b) {
  return "[" + format_rational(a) + ", " + format_rational(b) + "]";
}

}  // namespace detail

/// Independent consistency check of a timeline against its platform.
/// Does not re-derive any timing; it only verifies the one-port rules,
/// the relay order, per-worker compute sequencing, interval durations
/// and the reported makespan. Empty result means the timeline is valid.
inline std::vector<Violation> validate(const Timeline& tl, const Platform& p) {
  std::vector<Violation> out;
  const std::size_t m = p.size();

  if (tl.compute.size() != m) {
    out.push_back({"shape", "timeline tracks " + std::to_string(tl.compute.size()) +
                                " workers, platform has " + std::to_string(m)});
    return out;
  }
  for (std::size_t k = 0; k < tl.moves.size(); ++k) {
    const MoveTiming& mv = tl.moves[k];
    if (mv.sender >= m || mv.receiver >= m) {
      out.push_back({"shape", "move " + std::to_string(k) + ": worker index out of range"});
      return out;
    }
  }

  std::vector<long long> sent(m, 0);
  for (std::size_t k = 0; k < tl.moves.size(); ++k) {
    const MoveTiming& mv = tl.moves[k];
    ++sent[mv.sender];
    if (mv.arrival - mv.uplink_start != p.workers[mv.sender].c)
      out.push_back({"uplink duration",
                     "move " + std::to_string(k) + ": " + detail::span(mv.uplink_start, mv.arrival)});
    if (mv.downlink_end - mv.downlink_start != p.workers[mv.receiver].c)
      out.push_back({"downlink duration", "move " + std::to_string(k) + ": " +
                                              detail::span(mv.downlink_start, mv.downlink_end)});
    if (mv.downlink_start < mv.arrival)
      out.push_back({"forwarded before received",
                     "move " + std::to_string(k) + ": downlink starts at " +
                         format_rational(mv.downlink_start) + " but the task arrives at " +
                         format_rational(mv.arrival)});
  }

  for (std::size_t a = 0; a < tl.moves.size(); ++a) {
    for (std::size_t b = a + 1; b < tl.moves.size(); ++b) {
      const MoveTiming& x = tl.moves[a];
      const MoveTiming& y = tl.moves[b];
      if (detail::intervals_overlap(x.uplink_start, x.arrival, y.uplink_start, y.arrival))
        out.push_back({"in-port overlap",
                       "moves " + std::to_string(a) + " and " + std::to_string(b) + ": " +
                           detail::span(x.uplink_start, x.arrival) + " vs " +
                           detail::span(y.uplink_start, y.arrival)});
      if (detail::intervals_overlap(x.downlink_start, x.downlink_end, y.downlink_start,
                                    y.downlink_end))
        out.push_back({"out-port overlap",
                       "moves " + std::to_string(a) + " and " + std::to_string(b) + ": " +
                           detail::span(x.downlink_start, x.downlink_end) + " vs " +
                           detail::span(y.downlink_start, y.downlink_end)});
    }
  }

  // Every delivered task must show up as exactly one compute interval on
  // its receiver, starting no earlier than the delivery.
  std::vector<int> seen(tl.moves.size(), 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (const ComputeInterval& ci : tl.compute[i]) {
      if (ci.move) {
        std::size_t k = *ci.move;
        if (k >= tl.moves.size()) {
          out.push_back({"shape", "compute interval references unknown move " + std::to_string(k)});
          continue;
        }
        ++seen[k];
        const MoveTiming& mv = tl.moves[k];
        if (mv.receiver != i)
          out.push_back({"compute on wrong worker",
                         "move " + std::to_string(k) + " delivered to worker " +
                             std::to_string(mv.receiver) + " but computes on " + std::to_string(i)});
        if (ci.start < mv.downlink_end)
          out.push_back({"compute before delivery",
                         "move " + std::to_string(k) + ": compute starts at " +
                             format_rational(ci.start) + ", delivery ends at " +
                             format_rational(mv.downlink_end)});
        if (ci.end - ci.start != p.workers[i].w)
          out.push_back({"compute duration",
                         "worker " + std::to_string(i) + ": " + detail::span(ci.start, ci.end)});
      } else {
        Rational retained_work = Rational(p.workers[i].load - sent[i]) * p.workers[i].w;
        if (ci.start != 0 || ci.end != retained_work)
          out.push_back({"retained block",
                         "worker " + std::to_string(i) + ": " + detail::span(ci.start, ci.end) +
                             ", expected [0, " + format_rational(retained_work) + "]"});
      }
    }
  }
  for (std::size_t k = 0; k < tl.moves.size(); ++k) {
    if (seen[k] == 0)
      out.push_back({"compute missing", "move " + std::to_string(k) + " is never computed"});
    else if (seen[k] > 1)
      out.push_back({"compute duplicated",
                     "move " + std::to_string(k) + " computes " + std::to_string(seen[k]) + " times"});
  }

  Rational last_end = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<ComputeInterval> sorted = tl.compute[i];
    std::sort(sorted.begin(), sorted.end(),
              [](const ComputeInterval& a, const ComputeInterval& b) { return a.start < b.start; });
    for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
      if (sorted[k].end > sorted[k + 1].start)
        out.push_back({"compute overlap",
                       "worker " + std::to_string(i) + ": " + detail::span(sorted[k].start, sorted[k].end) +
                           " vs " + detail::span(sorted[k + 1].start, sorted[k + 1].end)});
    }
    for (const ComputeInterval& ci : sorted) last_end = std::max(last_end, ci.end);
  }
  if (tl.makespan != last_end)
    out.push_back({"makespan mismatch", "reported " + format_rational(tl.makespan) +
                                            ", intervals end at " + format_rational(last_end)});

  return out;
}

}  // namespace starsched::core
