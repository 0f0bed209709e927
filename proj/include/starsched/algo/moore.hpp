#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include <starsched/core/rational.hpp>

namespace starsched::algo {

struct Job {
  core::Rational deadline;
  core::Rational cost;
};

struct MooreResult {
  std::vector<std::size_t> early;  // original job indices, in schedule order
  std::size_t count{};
};

/// Moore-Hodgson rule for a maximum-cardinality on-time set on a single
/// machine: walk the jobs by non-decreasing deadline, add each one, and
/// on a deadline miss eject the costliest job picked so far (the
/// earliest-added on ties). Costs must be positive.
inline MooreResult moore(const std::vector<Job>& jobs) {
  std::vector<std::size_t> order(jobs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (jobs[a].deadline != jobs[b].deadline) return jobs[a].deadline < jobs[b].deadline;
    return a < b;
  });

  std::vector<std::size_t> picked;
  core::Rational t = 0;
  for (std::size_t j : order) {
    picked.push_back(j);
    t += jobs[j].cost;
    if (t > jobs[j].deadline) {
      std::size_t worst = 0;
      for (std::size_t k = 1; k < picked.size(); ++k)
        if (jobs[picked[k]].cost > jobs[picked[worst]].cost) worst = k;
      t -= jobs[picked[worst]].cost;
      picked.erase(picked.begin() + static_cast<std::ptrdiff_t>(worst));
    }
  }
  return {picked, picked.size()};
}

}  // namespace starsched::algo
