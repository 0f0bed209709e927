#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <starsched/algo/bba.hpp>
#include <starsched/algo/mbbsa.hpp>
#include <starsched/algo/rbsa.hpp>
#include <starsched/algo/search.hpp>
#include <starsched/bench/generator.hpp>

namespace starsched::bench {

struct BenchRecord {
  int instance{};
  std::string algorithm;
  core::Rational makespan;
  core::Rational distance;  // makespan / best-of-run, always >= 1
};

struct AlgoStats {
  std::vector<double> distances;
  double mean{};
  double stddev{};
  std::vector<double> cdf;  // fraction of instances within 1 + k/100, k = 0..100
};

struct BenchResult {
  std::vector<BenchRecord> records;
  std::map<std::string, AlgoStats> stats;
};

namespace detail {

inline AlgoStats summarize(const std::vector<double>& distances) {
  AlgoStats s;
  s.distances = distances;
  double sum = 0;
  for (double d : distances) sum += d;
  s.mean = distances.empty() ? 0 : sum / static_cast<double>(distances.size());
  double var = 0;
  for (double d : distances) var += (d - s.mean) * (d - s.mean);
  s.stddev = distances.empty() ? 0 : std::sqrt(var / static_cast<double>(distances.size()));
  s.cdf.resize(101);
  for (int k = 0; k <= 100; ++k) {
    double bound = 1.0 + k / 100.0;
    std::size_t within = 0;
    for (double d : distances)
      if (d <= bound) ++within;
    s.cdf[k] = distances.empty() ? 0 : static_cast<double>(within) / static_cast<double>(distances.size());
  }
  return s;
}

}  // namespace detail

/// Runs the three heuristics on `count` random platforms of the family
/// and normalizes every makespan against the best of the three on that
/// instance. Instance i uses seed + i, so runs are reproducible and
/// instances are independent of `count`.
inline BenchResult run_benchmark(const PlatformFamily& family, int count, std::size_t m,
                                 std::uint64_t seed) {
  BenchResult out;
  std::map<std::string, std::vector<double>> dist;
  for (int inst = 0; inst < count; ++inst) {
    core::Platform p = generate(family, m, seed + static_cast<std::uint64_t>(inst));

    struct Run {
      const char* name;
      core::Rational makespan;
    };
    std::vector<Run> runs;
    runs.push_back({"bba", algo::bba(p).makespan});
    runs.push_back({"mbbsa", algo::optimize_makespan(p, algo::mbbsa_feasible).makespan});
    runs.push_back({"rbsa", algo::optimize_makespan(p, algo::rbsa_feasible).makespan});

    core::Rational best = runs.front().makespan;
    for (const Run& r : runs) best = std::min(best, r.makespan);

    for (const Run& r : runs) {
      core::Rational d = r.makespan / best;
      out.records.push_back({inst, r.name, r.makespan, d});
      dist[r.name].push_back(static_cast<double>(d));
    }
  }
  for (auto& [name, values] : dist) out.stats[name] = detail::summarize(values);
  return out;
}

}  // namespace starsched::bench
