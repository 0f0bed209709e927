#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <starsched/core/errors.hpp>
#include <starsched/core/timeline.hpp>

namespace starsched::divisible {

using core::Violation;

inline constexpr double kTolerance = 1e-9;

/// Worker in the fluid model: `bandwidth` and `speed` in load-units per
/// time, `alpha` the initial amount of load.
struct DivisibleWorker {
  double bandwidth{};
  double speed{};
  double alpha{};
};

struct DivisiblePlatform {
  std::vector<DivisibleWorker> workers;
};

inline std::vector<std::string> platform_violations(const DivisiblePlatform& p) {
  std::vector<std::string> out;
  if (p.workers.empty()) out.push_back("platform has no workers");
  for (std::size_t i = 0; i < p.workers.size(); ++i) {
    const DivisibleWorker& w = p.workers[i];
    if (!(w.bandwidth > 0))
      out.push_back("worker " + std::to_string(i) + ": bandwidth must be positive");
    if (!(w.speed > 0)) out.push_back("worker " + std::to_string(i) + ": speed must be positive");
    if (w.alpha < 0) out.push_back("worker " + std::to_string(i) + ": negative load");
  }
  return out;
}

/// Smallest imbalance worker i may take on within time t: it must shed
/// at least what it cannot compute, and can never absorb more than its
/// link carries.
inline double imbalance_floor(const DivisibleWorker& w, double t) {
  return std::max(w.alpha - t * w.speed, -t * w.bandwidth);
}

/// g(t) = sum of the per-worker imbalance floors. Strictly decreasing;
/// the load can be balanced within t iff g(t) <= 0 and every worker can
/// at least ship its own surplus (alpha_i <= t * (s_i + b_i)).
inline double imbalance_slack(const DivisiblePlatform& p, double t) {
  double g = 0;
  for (const DivisibleWorker& w : p.workers) g += imbalance_floor(w, t);
  return g;
}

inline bool is_feasible_time(const DivisiblePlatform& p, double t) {
  if (t < 0) return false;
  for (const DivisibleWorker& w : p.workers)
    if (w.alpha - t * w.speed > t * w.bandwidth) return false;
  return imbalance_slack(p, t) <= 0;
}

/// Reference solver: plain bisection on is_feasible_time down to 1e-12
/// relative width. Slower than the breakpoint scan but with no case
/// analysis to get wrong.
inline double min_time_bisection(const DivisiblePlatform& p) {
  if (is_feasible_time(p, 0)) return 0;
  double hi = 0;
  for (const DivisibleWorker& w : p.workers) hi = std::max(hi, w.alpha / w.speed);
  while (!is_feasible_time(p, hi)) hi *= 1.5;  // absorb rounding at the boundary
  double lo = 0;
  while (hi - lo > 1e-12 * std::max(1.0, hi)) {
    double mid = lo + (hi - lo) / 2;
    if (is_feasible_time(p, mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

struct MinTimeResult {
  double t0{};
  std::vector<double> delta;
};

/// Minimum completion time and a witnessing imbalance vector.
///
/// The optimum is the larger of two piecewise-linear thresholds: the
/// earliest time every worker's imbalance box [floor_i(t), t*b_i] is
/// nonempty, and the root of g. g is a sum of max(alpha - t*s, -t*b)
/// terms, so it is linear between the branch switches at alpha/(s - b);
/// scanning those breakpoints pins the root exactly. If rounding leaves
/// the result infeasible, the bisection reference takes over. The
/// returned delta puts every worker at its floor and then waterfills the
/// leftover slack in index order up to each worker's bandwidth cap.
inline MinTimeResult solve_min_time(const DivisiblePlatform& p) {
  double t_box = 0;
  for (const DivisibleWorker& w : p.workers)
    if (w.alpha > 0) t_box = std::max(t_box, w.alpha / (w.speed + w.bandwidth));

  double t_root = 0;
  if (imbalance_slack(p, 0) > 0) {
    std::vector<double> breaks{0.0};
    for (const DivisibleWorker& w : p.workers)
      if (w.speed > w.bandwidth && w.alpha > 0) breaks.push_back(w.alpha / (w.speed - w.bandwidth));
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    auto slope_after = [&](double t) {
      double s = 0;
      for (const DivisibleWorker& w : p.workers) {
        bool shedding_branch = w.alpha - t * w.speed >= -t * w.bandwidth;
        s -= shedding_branch ? w.speed : w.bandwidth;
      }
      return s;
    };

    t_root = -1;
    for (std::size_t k = 0; k < breaks.size(); ++k) {
      double g_here = imbalance_slack(p, breaks[k]);
      if (g_here <= 0) {
        // crossed between the previous breakpoint and this one
        double prev = breaks[k - 1];
        double slope = slope_after(prev + (breaks[k] - prev) / 2);
        t_root = prev - imbalance_slack(p, prev) / slope;
        break;
      }
      if (k + 1 == breaks.size()) {
        double slope = slope_after(breaks[k] + 1);
        t_root = breaks[k] - g_here / slope;
      }
    }
  }

  double t0 = std::max(t_box, t_root);
  if (!is_feasible_time(p, t0)) t0 = min_time_bisection(p);

  MinTimeResult out;
  out.t0 = t0;
  out.delta.resize(p.workers.size());
  double slack = 0;
  for (std::size_t i = 0; i < p.workers.size(); ++i) {
    out.delta[i] = imbalance_floor(p.workers[i], t0);
    slack -= out.delta[i];
  }
  for (std::size_t i = 0; i < p.workers.size() && slack > 0; ++i) {
    double room = t0 * p.workers[i].bandwidth - out.delta[i];
    double take = std::min(room, slack);
    if (take > 0) {
      out.delta[i] += take;
      slack -= take;
    }
  }
  return out;
}

/// Rate-based redistribution plan: who sends how much to whom, at which
/// constant receive and compute rates.
struct DivisibleSolution {
  double t0{};
  std::vector<double> delta;
  std::vector<std::size_t> senders;    // delta > 0
  std::vector<std::size_t> receivers;  // delta < 0
  double total_transfer{};             // L, the load on the move
  std::vector<std::vector<double>> f;       // [sender][receiver] load shipped
  std::vector<std::vector<double>> lambda;  // receive rate f/t0
  std::vector<std::vector<double>> gamma;   // compute rate of each stream
  std::vector<double> initial_rate;         // alpha_j/t0 on receivers
};

namespace detail {

inline std::vector<Violation> pair_violations(const DivisiblePlatform& p, double t0,
                                              const std::vector<double>& delta) {
  std::vector<Violation> out;
  if (delta.size() != p.workers.size()) {
    out.push_back({"shape", "delta has " + std::to_string(delta.size()) + " entries for " +
                                std::to_string(p.workers.size()) + " workers"});
    return out;
  }
  double sum = 0;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    const DivisibleWorker& w = p.workers[i];
    sum += delta[i];
    if (std::abs(delta[i]) > t0 * w.bandwidth + kTolerance)
      out.push_back({"bandwidth bound", "worker " + std::to_string(i) + ": |" +
                                            std::to_string(delta[i]) + "| > t0*b = " +
                                            std::to_string(t0 * w.bandwidth)});
    if (delta[i] < w.alpha - t0 * w.speed - kTolerance)
      out.push_back({"compute lower bound",
                     "worker " + std::to_string(i) + ": delta " + std::to_string(delta[i]) +
                         " < alpha - t0*s = " + std::to_string(w.alpha - t0 * w.speed)});
  }
  if (std::abs(sum) > kTolerance)
    out.push_back({"imbalance sum", "deltas sum to " + std::to_string(sum)});
  return out;
}

}  // namespace detail

/// Builds the constant-rate transfer plan for a feasible (t0, delta):
/// each sender splits its surplus across the receivers proportionally to
/// their deficits, everything flows and is computed at rate f/t0, and a
/// receiver's initial load keeps the rate that finishes it exactly at
/// t0. Throws ConstraintViolation when the pair is not feasible.
inline DivisibleSolution build_plan(const DivisiblePlatform& p, double t0,
                                    const std::vector<double>& delta) {
  {
    auto bad = detail::pair_violations(p, t0, delta);
    if (!bad.empty()) {
      std::string msg;
      for (const Violation& v : bad) {
        if (!msg.empty()) msg += "; ";
        msg += v.rule + ": " + v.detail;
      }
      throw ConstraintViolation(msg);
    }
  }

  DivisibleSolution sol;
  sol.t0 = t0;
  sol.delta = delta;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (delta[i] > 0) sol.senders.push_back(i);
    if (delta[i] < 0) sol.receivers.push_back(i);
  }
  for (std::size_t s : sol.senders) sol.total_transfer += delta[s];

  // Every non-sender computes its initial load at the rate that finishes
  // it exactly at t0 (t0 >= alpha/s holds for all of them).
  sol.initial_rate.assign(p.workers.size(), 0.0);
  if (t0 > 0)
    for (std::size_t i = 0; i < delta.size(); ++i)
      if (delta[i] <= 0) sol.initial_rate[i] = p.workers[i].alpha / t0;

  if (sol.total_transfer <= 0 || sol.receivers.empty()) {
    sol.senders.clear();
    sol.receivers.clear();
    sol.total_transfer = 0;
    return sol;  // balanced: nothing moves
  }

  sol.f.assign(sol.senders.size(), std::vector<double>(sol.receivers.size(), 0.0));
  sol.lambda = sol.f;
  sol.gamma = sol.f;
  for (std::size_t i = 0; i < sol.senders.size(); ++i) {
    for (std::size_t j = 0; j < sol.receivers.size(); ++j) {
      double share = delta[sol.senders[i]] * (-delta[sol.receivers[j]]) / sol.total_transfer;
      sol.f[i][j] = share;
      sol.lambda[i][j] = share / t0;
      sol.gamma[i][j] = share / t0;
    }
  }
  return sol;
}

/// Checks every constraint a valid rate plan must satisfy, to absolute
/// tolerance 1e-9: the imbalance box and zero-sum, transfer positivity
/// and row/column conservation, receive-rate consistency, compute rates
/// that are large enough to finish yet never above the receive rate, and
/// per-receiver capacity including its initial load.
inline std::vector<Violation> verify_solution(const DivisiblePlatform& p,
                                              const DivisibleSolution& sol) {
  std::vector<Violation> out = detail::pair_violations(p, sol.t0, sol.delta);
  if (!out.empty() && out.front().rule == "shape") return out;

  for (std::size_t i = 0; i < sol.delta.size(); ++i) {
    bool listed_sender = std::count(sol.senders.begin(), sol.senders.end(), i) > 0;
    bool listed_receiver = std::count(sol.receivers.begin(), sol.receivers.end(), i) > 0;
    if (sol.delta[i] > kTolerance && !listed_sender)
      out.push_back({"sender set", "worker " + std::to_string(i) + " sheds load but is not listed"});
    if (sol.delta[i] < -kTolerance && !listed_receiver)
      out.push_back({"receiver set", "worker " + std::to_string(i) + " absorbs load but is not listed"});
  }

  const std::size_t ns = sol.senders.size();
  const std::size_t nr = sol.receivers.size();
  if (sol.f.size() != ns || sol.lambda.size() != ns || sol.gamma.size() != ns ||
      (ns > 0 && (sol.f[0].size() != nr || sol.lambda[0].size() != nr || sol.gamma[0].size() != nr))) {
    out.push_back({"shape", "transfer matrices do not match the sender/receiver sets"});
    return out;
  }

  for (std::size_t i = 0; i < ns; ++i) {
    double row = 0;
    for (std::size_t j = 0; j < nr; ++j) {
      double fij = sol.f[i][j];
      row += fij;
      if (fij < -kTolerance)
        out.push_back({"negative transfer", "f[" + std::to_string(i) + "][" + std::to_string(j) +
                                                "] = " + std::to_string(fij)});
      if (std::abs(sol.lambda[i][j] - fij / sol.t0) > kTolerance)
        out.push_back({"receive rate", "lambda[" + std::to_string(i) + "][" + std::to_string(j) +
                                           "] != f/t0"});
      if (sol.gamma[i][j] < fij / sol.t0 - kTolerance)
        out.push_back({"compute rate too small",
                       "gamma[" + std::to_string(i) + "][" + std::to_string(j) + "] cannot finish " +
                           std::to_string(fij) + " by t0"});
      if (sol.gamma[i][j] > sol.lambda[i][j] + kTolerance)
        out.push_back({"compute rate exceeds receive rate",
                       "gamma[" + std::to_string(i) + "][" + std::to_string(j) + "] > lambda"});
    }
    if (std::abs(row - sol.delta[sol.senders[i]]) > kTolerance)
      out.push_back({"transfer row sum", "sender " + std::to_string(sol.senders[i]) + " ships " +
                                             std::to_string(row) + ", imbalance " +
                                             std::to_string(sol.delta[sol.senders[i]])});
  }
  for (std::size_t j = 0; j < nr; ++j) {
    double col = 0;
    for (std::size_t i = 0; i < ns; ++i) col += sol.f[i][j];
    if (std::abs(col - (-sol.delta[sol.receivers[j]])) > kTolerance)
      out.push_back({"transfer column sum",
                     "receiver " + std::to_string(sol.receivers[j]) + " gets " + std::to_string(col) +
                         ", deficit " + std::to_string(-sol.delta[sol.receivers[j]])});
  }

  if (sol.initial_rate.size() != sol.delta.size()) {
    out.push_back({"shape", "initial_rate size mismatch"});
    return out;
  }
  for (std::size_t j = 0; j < nr; ++j) {
    std::size_t r = sol.receivers[j];
    const DivisibleWorker& w = p.workers[r];
    if (std::abs(sol.initial_rate[r] - w.alpha / sol.t0) > kTolerance)
      out.push_back({"initial rate", "receiver " + std::to_string(r) + " must keep rate alpha/t0"});
    double total = w.alpha / sol.t0;
    for (std::size_t i = 0; i < ns; ++i) total += sol.gamma[i][j];
    if (total > w.speed + kTolerance)
      out.push_back({"capacity exceeded", "receiver " + std::to_string(r) + " computes at rate " +
                                              std::to_string(total) + " > s = " +
                                              std::to_string(w.speed)});
  }
  return out;
}

}  // namespace starsched::divisible
