#include <gtest/gtest.h>

#include <starsched/algo/moore.hpp>

#include <algorithm>

#include "testutil.hpp"

using namespace starsched;
using algo::Job;
using core::Rational;

namespace {

// Largest on-time subset size by checking every subset: a subset is
// feasible iff running its jobs in deadline order meets every deadline.
std::size_t subset_maximum(const std::vector<Job>& jobs) {
  std::vector<std::size_t> order(jobs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return jobs[a].deadline < jobs[b].deadline; });

  std::size_t best = 0;
  for (unsigned long mask = 0; mask < (1ul << jobs.size()); ++mask) {
    Rational t = 0;
    bool ok = true;
    std::size_t size = 0;
    for (std::size_t j : order) {
      if (!(mask & (1ul << j))) continue;
      t += jobs[j].cost;
      ++size;
      if (t > jobs[j].deadline) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

}  // namespace

TEST(Moore, ThreeJobExample) {
  std::vector<Job> jobs{{2, 1}, {3, 2}, {4, 2}};
  auto r = algo::moore(jobs);
  EXPECT_EQ(r.count, 2u);
  EXPECT_EQ(r.count, subset_maximum(jobs));
}

TEST(Moore, EverythingFitsWhenDeadlinesAreLoose) {
  std::vector<Job> jobs{{10, 1}, {10, 2}, {10, 3}, {10, 4}};
  auto r = algo::moore(jobs);
  EXPECT_EQ(r.count, 4u);
  EXPECT_EQ(r.early, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Moore, HopelessJobIsDropped) {
  std::vector<Job> jobs{{1, 2}};
  EXPECT_EQ(algo::moore(jobs).count, 0u);
}

TEST(Moore, MatchesSubsetBruteForce) {
  testutil::Rng rng(5150);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 10));
    std::vector<Job> jobs;
    for (std::size_t k = 0; k < n; ++k)
      jobs.push_back({Rational(rng.uniform(1, 20)), Rational(rng.uniform(1, 6))});
    EXPECT_EQ(algo::moore(jobs).count, subset_maximum(jobs)) << "instance " << i;
  }
}

TEST(Moore, EarlySetRespectsDeadlines) {
  testutil::Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 12));
    std::vector<Job> jobs;
    for (std::size_t k = 0; k < n; ++k)
      jobs.push_back({Rational(rng.uniform(1, 25)), Rational(rng.uniform(1, 5))});
    auto r = algo::moore(jobs);
    Rational t = 0;
    for (std::size_t j : r.early) {
      t += jobs[j].cost;
      EXPECT_LE(t, jobs[j].deadline);
    }
  }
}
