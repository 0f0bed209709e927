#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include <starsched/core/platform.hpp>

namespace starsched::core {

/// One task transfer: sender -> master -> receiver.
struct Move {
  std::size_t sender{};
  std::size_t receiver{};

  auto operator<=>(const Move&) const = default;
};

/// The decision content of a schedule: an ordered list of moves. All
/// timing is derived from it by the simulator; the k-th move is the
/// k-th task through the master in both directions.
struct MovePlan {
  std::vector<Move> moves;

  bool operator==(const MovePlan&) const = default;
};

/// Checks the plan against the platform: a move may not ship a task to
/// its own sender, and a worker can only send tasks from its initial
/// pile (received tasks are never relayed onward).
inline std::vector<std::string> plan_violations(const Platform& p, const MovePlan& plan) {
  std::vector<std::string> out;
  std::vector<long long> sent(p.size(), 0);
  for (std::size_t k = 0; k < plan.moves.size(); ++k) {
    const Move& m = plan.moves[k];
    if (m.sender >= p.size() || m.receiver >= p.size()) {
      out.push_back("move " + std::to_string(k) + ": worker index out of range");
      continue;
    }
    if (m.sender == m.receiver)
      out.push_back("move " + std::to_string(k) + ": sender equals receiver");
    ++sent[m.sender];
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sent[i] > p.workers[i].load)
      out.push_back("worker " + std::to_string(i) + ": sends " + std::to_string(sent[i]) +
                    " tasks but initially holds " + std::to_string(p.workers[i].load));
  }
  return out;
}

}  // namespace starsched::core
