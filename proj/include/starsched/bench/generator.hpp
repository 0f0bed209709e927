#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include <starsched/core/plan.hpp>
#include <starsched/core/platform.hpp>

namespace starsched::bench {

enum class Dim { hom, het };
enum class Regime { general, comm_le_comp, comm_ge_comp };

/// A family of random platforms: homogeneous or heterogeneous in each
/// dimension, with the cost ranges tied to the regime. The general
/// regime draws both costs from [1, 100]; comm_le_comp draws link costs
/// from [20, 50] against compute costs in [50, 80]; comm_ge_comp swaps
/// the two ranges.
struct PlatformFamily {
  Dim comm{Dim::het};
  Dim comp{Dim::het};
  Regime regime{Regime::general};
};

namespace detail {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long long uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace detail

/// Deterministic random platform with m workers and at least 50 tasks
/// in total. A homogeneous dimension uses a single draw for all
/// workers; per-worker loads are uniform on [0, 100/m] and redrawn as a
/// block until they sum to at least 50.
inline core::Platform generate(const PlatformFamily& family, std::size_t m, std::uint64_t seed) {
  detail::Rng rng(seed);

  long long c_lo = 1, c_hi = 100, w_lo = 1, w_hi = 100;
  if (family.regime == Regime::comm_le_comp) {
    c_lo = 20;
    c_hi = 50;
    w_lo = 50;
    w_hi = 80;
  } else if (family.regime == Regime::comm_ge_comp) {
    c_lo = 50;
    c_hi = 80;
    w_lo = 20;
    w_hi = 50;
  }

  core::Platform p;
  p.workers.resize(m);

  long long shared_c = rng.uniform(c_lo, c_hi);
  for (core::Worker& w : p.workers)
    w.c = family.comm == Dim::hom ? shared_c : rng.uniform(c_lo, c_hi);
  long long shared_w = rng.uniform(w_lo, w_hi);
  for (core::Worker& w : p.workers)
    w.w = family.comp == Dim::hom ? shared_w : rng.uniform(w_lo, w_hi);

  long long load_cap = std::max<long long>(1, 100 / static_cast<long long>(m));
  long long total = 0;
  do {
    total = 0;
    for (core::Worker& w : p.workers) {
      w.load = rng.uniform(0, load_cap);
      total += w.load;
    }
  } while (total < 50);

  return p;
}

/// Adversarial relay instance built from a 3-partition input: 3n values
/// y_i with S/4 < y_i < S/2 and every consecutive triple summing to S.
struct PartitionStress {
  core::Platform platform;
  core::MovePlan witness;   // grouped schedule; tight iff the triples sum to S
  core::Rational deadline;  // finish time of the witness
};

/// One worker holds all 4n tasks behind a link of cost S/4 and computes
/// too slowly to keep any, 3n empty workers have link costs S/4 + y_i/8,
/// and n further empty workers (link cost S/8) get slower by S with each
/// index. Keeping the master busy without gaps then forces the link
/// costs to be consumed in triples summing to 7S/8, so schedules
/// finishing by the returned deadline encode 3-partition solutions. The
/// witness serves each triple in input order followed by the slowest
/// remaining tail worker.
inline PartitionStress partition_stress(long long S, const std::vector<long long>& ys) {
  if (ys.empty() || ys.size() % 3 != 0)
    throw std::invalid_argument("need 3n values");
  const long long n = static_cast<long long>(ys.size()) / 3;
  for (long long y : ys)
    if (4 * y <= S || 2 * y >= S) throw std::invalid_argument("values must lie in (S/4, S/2)");

  const core::Rational huge = core::Rational(S) * (n + 1);      // dwarfs all link costs
  const core::Rational deadline = huge + core::Rational(S) * n + core::Rational(S, 4);

  PartitionStress out;
  out.platform.workers.push_back({core::Rational(S, 4), deadline + 1, 4 * n});
  for (long long y : ys)
    out.platform.workers.push_back({core::Rational(S, 4) + core::Rational(y, 8), huge, 0});
  for (long long i = 0; i < n; ++i)
    out.platform.workers.push_back({core::Rational(S, 8), huge + core::Rational(S) * i, 0});

  for (long long j = 0; j < n; ++j) {
    for (long long k = 0; k < 3; ++k)
      out.witness.moves.push_back({0, static_cast<std::size_t>(1 + 3 * j + k)});
    out.witness.moves.push_back({0, static_cast<std::size_t>(1 + 3 * n + (n - 1 - j))});
  }
  out.deadline = deadline;
  return out;
}

}  // namespace starsched::bench
