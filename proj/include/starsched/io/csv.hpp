#pragma once

#include <ostream>

#include <starsched/bench/runner.hpp>
#include <starsched/core/timeline.hpp>

namespace starsched::io {

/// One row per occupied interval, with exact times, for external Gantt
/// plotting: uplinks on the sender, downlinks on the receiver, compute
/// blocks on their worker.
inline void write_timeline_csv(std::ostream& out, const core::Timeline& tl) {
  out << "kind,worker,start,end\n";
  for (const core::MoveTiming& mv : tl.moves) {
    out << "uplink," << mv.sender << ',' << core::format_rational(mv.uplink_start) << ','
        << core::format_rational(mv.arrival) << '\n';
    out << "downlink," << mv.receiver << ',' << core::format_rational(mv.downlink_start) << ','
        << core::format_rational(mv.downlink_end) << '\n';
  }
  for (std::size_t i = 0; i < tl.compute.size(); ++i) {
    for (const core::ComputeInterval& ci : tl.compute[i]) {
      out << "compute," << i << ',' << core::format_rational(ci.start) << ','
          << core::format_rational(ci.end) << '\n';
    }
  }
}

inline void write_bench_csv(std::ostream& out, const std::vector<bench::BenchRecord>& records) {
  out << "instance,algorithm,makespan,distance\n";
  out.precision(12);
  for (const bench::BenchRecord& r : records) {
    out << r.instance << ',' << r.algorithm << ',' << core::format_rational(r.makespan) << ','
        << static_cast<double>(r.distance) << '\n';
  }
}

}  // namespace starsched::io
