#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <starsched/core/rational.hpp>

namespace starsched::core {

/// One worker of a star platform. Moving a task over its link costs c
/// time units per hop (worker->master or master->worker), computing a
/// task on it costs w time units. `load` is the number of tasks it
/// holds before any redistribution.
struct Worker {
  Rational c;
  Rational w;
  long long load{};

  bool operator==(const Worker&) const = default;
};

/// A master-worker star: the master only relays tasks, all initial load
/// sits on the workers. Workers are identified by their index.
struct Platform {
  std::vector<Worker> workers;

  std::size_t size() const { return workers.size(); }

  long long total_tasks() const {
    long long n = 0;
    for (const Worker& w : workers) n += w.load;
    return n;
  }

  /// All links share one cost (a bus network).
  bool comm_homogeneous() const {
    for (const Worker& w : workers)
      if (w.c != workers.front().c) return false;
    return true;
  }

  bool compute_homogeneous() const {
    for (const Worker& w : workers)
      if (w.w != workers.front().w) return false;
    return true;
  }
};

/// Time worker i needs to finish its initial load: f_i = L_i * w_i.
inline std::vector<Rational> finish_times(const Platform& p) {
  std::vector<Rational> f;
  f.reserve(p.size());
  for (const Worker& w : p.workers) f.push_back(Rational(w.load) * w.w);
  return f;
}

/// Structural problems that make a platform unusable. Empty means OK.
inline std::vector<std::string> platform_violations(const Platform& p) {
  std::vector<std::string> out;
  if (p.workers.empty()) out.push_back("platform has no workers");
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Worker& w = p.workers[i];
    if (w.c <= 0)
      out.push_back("worker " + std::to_string(i) + ": link cost must be positive");
    if (w.w <= 0)
      out.push_back("worker " + std::to_string(i) + ": compute cost must be positive");
    if (w.load < 0)
      out.push_back("worker " + std::to_string(i) + ": negative initial load");
  }
  return out;
}

}  // namespace starsched::core
