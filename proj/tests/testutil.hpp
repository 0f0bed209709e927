#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include <starsched/core/platform.hpp>

namespace testutil {

using starsched::core::Platform;
using starsched::core::Rational;
using starsched::core::Worker;

inline Platform make_platform(std::initializer_list<Worker> workers) {
  Platform p;
  p.workers = workers;
  return p;
}

/// The 4-worker bus platform used throughout: c = 2, w = (3,3,4,4),
/// loads (8,1,1,0). Its optimal makespan is 13.
inline Platform trace_platform() {
  return make_platform({{2, 3, 8}, {2, 3, 1}, {2, 4, 1}, {2, 4, 0}});
}

/// Heterogeneous 4-worker platform where the optimal schedule has a
/// worker that both sends and receives: c = (1,8,1,1), w = (1,1,9,10),
/// loads (13,13,0,0). Unrestricted optimum 12.
inline Platform mixed_roles_platform() {
  return make_platform({{1, 1, 13}, {8, 1, 13}, {1, 9, 0}, {1, 10, 0}});
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long long uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

struct RandomPlatformOptions {
  std::size_t min_workers = 2;
  std::size_t max_workers = 4;
  long long max_total_tasks = 10;
  long long cost_max = 10;
  bool hom_comm = false;
  bool hom_comp = false;
};

inline Platform random_platform(Rng& rng, const RandomPlatformOptions& opt) {
  std::size_t m = static_cast<std::size_t>(
      rng.uniform(static_cast<long long>(opt.min_workers), static_cast<long long>(opt.max_workers)));
  long long shared_c = rng.uniform(1, opt.cost_max);
  long long shared_w = rng.uniform(1, opt.cost_max);
  Platform p;
  long long left = opt.max_total_tasks;
  for (std::size_t k = 0; k < m; ++k) {
    long long load = rng.uniform(0, std::max<long long>(0, std::min<long long>(left, 6)));
    left -= load;
    p.workers.push_back({opt.hom_comm ? shared_c : rng.uniform(1, opt.cost_max),
                         opt.hom_comp ? shared_w : rng.uniform(1, opt.cost_max), load});
  }
  if (p.total_tasks() == 0) p.workers.front().load = 1;
  return p;
}

}  // namespace testutil
