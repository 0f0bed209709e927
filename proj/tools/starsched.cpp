// Command-line front end: solve / oracle / ordering / divisible / bench /
// gantt over platform JSON files. Machine-readable JSON on stdout,
// diagnostics on stderr; exit 0 on success, 2 on bad input, 1 on
// internal failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include <starsched/io/csv.hpp>
#include <starsched/io/serialize.hpp>
#include <starsched/starsched.hpp>

namespace {

using namespace starsched;
using nlohmann::json;

void write_gantt(const std::string& path, const core::Platform& p, const core::MovePlan& plan) {
  std::ofstream out(path);
  if (!out) throw Error("io", "cannot write " + path);
  io::write_timeline_csv(out, core::simulate(p, plan));
}

struct SolveArgs {
  std::string algo;
  std::string platform_path;
  std::string makespan;
  long long max_moves = -1;
  bool restricted = false;
  long long budget = 10'000'000;
  std::string gantt_path;
};

int run_solve(const SolveArgs& a) {
  core::Platform p = io::load_platform(a.platform_path);
  json out;
  out["algorithm"] = a.algo;
  core::MovePlan plan;

  if (!a.makespan.empty()) {
    if (a.algo != "mbbsa" && a.algo != "rbsa")
      throw ParseError("bad-arguments", "--makespan only applies to mbbsa and rbsa");
    core::Rational target = core::parse_rational(a.makespan);
    algo::FeasibilityResult r = a.algo == "mbbsa" ? algo::mbbsa_feasible(p, target)
                                                  : algo::rbsa_feasible(p, target);
    out["target"] = core::format_rational(target);
    out["feasible"] = r.feasible;
    out["scheduled"] = r.scheduled;
    if (r.feasible) {
      plan = r.plan;
      out["makespan"] = core::format_rational(core::simulate_makespan(p, plan));
      out["moves"] = io::plan_to_json(plan);
    }
  } else if (a.algo == "bba") {
    auto r = algo::bba(p);
    plan = r.plan;
    out["makespan"] = core::format_rational(r.makespan);
    out["moves"] = io::plan_to_json(plan);
  } else if (a.algo == "mbbsa" || a.algo == "rbsa") {
    auto r = algo::optimize_makespan(
        p, a.algo == "mbbsa" ? algo::mbbsa_feasible : algo::rbsa_feasible);
    plan = r.plan;
    out["makespan"] = core::format_rational(r.makespan);
    out["moves"] = io::plan_to_json(plan);
  } else if (a.algo == "oracle") {
    algo::OracleOptions opt;
    opt.max_moves = a.max_moves >= 0 ? a.max_moves : p.total_tasks();
    opt.restrict_no_send_and_receive = a.restricted;
    opt.budget = a.budget;
    auto r = algo::brute_force(p, opt);
    plan = r.plan;
    out["makespan"] = core::format_rational(r.makespan);
    out["moves"] = io::plan_to_json(plan);
  } else {
    throw ParseError("bad-arguments", "unknown algorithm '" + a.algo + "'");
  }

  if (!a.gantt_path.empty()) write_gantt(a.gantt_path, p, plan);
  std::cout << out.dump() << "\n";
  return 0;
}

std::vector<long long> parse_delta(const std::string& text) {
  std::vector<long long> delta;
  std::string cleaned;
  for (char ch : text)
    if (ch != '[' && ch != ']' && ch != ' ') cleaned += ch;
  std::size_t pos = 0;
  while (pos <= cleaned.size()) {
    std::size_t comma = cleaned.find(',', pos);
    std::string item = cleaned.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      delta.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw ParseError("bad-arguments", "--delta entries must be integers, got '" + item + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return delta;
}

int run_ordering(const std::string& platform_path, const std::string& delta_text,
                 const std::string& gantt_path) {
  core::Platform p = io::load_platform(platform_path);
  algo::ImbalanceSpec spec{parse_delta(delta_text)};
  auto r = algo::order_redistribution(p, spec);
  json out;
  out["completion"] = core::format_rational(r.completion);
  out["moves"] = io::plan_to_json(r.plan);
  if (!gantt_path.empty()) {
    core::Platform zero = p;
    for (core::Worker& w : zero.workers) w.w = 0;
    write_gantt(gantt_path, zero, r.plan);
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int run_divisible(const std::string& platform_path) {
  divisible::DivisiblePlatform p = io::load_divisible_platform(platform_path);
  auto min_time = divisible::solve_min_time(p);
  auto sol = divisible::build_plan(p, min_time.t0, min_time.delta);
  auto bad = divisible::verify_solution(p, sol);
  if (!bad.empty())
    throw Error("internal", "constructed solution fails its own checks: " + bad.front().rule);
  std::cout << io::solution_to_json(sol).dump() << "\n";
  return 0;
}

int run_bench(const std::string& family, const std::string& regime, int count,
              std::size_t workers, std::uint64_t seed, const std::string& out_path,
              const std::string& format) {
  bench::PlatformFamily fam;
  if (family == "hom-hom")
    fam = {bench::Dim::hom, bench::Dim::hom, bench::Regime::general};
  else if (family == "hom-het")
    fam = {bench::Dim::hom, bench::Dim::het, bench::Regime::general};
  else if (family == "het-hom")
    fam = {bench::Dim::het, bench::Dim::hom, bench::Regime::general};
  else if (family == "het-het")
    fam = {bench::Dim::het, bench::Dim::het, bench::Regime::general};
  else
    throw ParseError("bad-arguments", "--family must be one of hom-hom, hom-het, het-hom, het-het");

  if (regime == "general")
    fam.regime = bench::Regime::general;
  else if (regime == "comm-le-comp")
    fam.regime = bench::Regime::comm_le_comp;
  else if (regime == "comm-ge-comp")
    fam.regime = bench::Regime::comm_ge_comp;
  else
    throw ParseError("bad-arguments",
                     "--regime must be one of general, comm-le-comp, comm-ge-comp");

  auto result = bench::run_benchmark(fam, count, workers, seed);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw Error("io", "cannot write " + out_path);
    io::write_bench_csv(out, result.records);
  }
  if (format == "csv") {
    io::write_bench_csv(std::cout, result.records);
    return 0;
  }
  if (format != "json")
    throw ParseError("bad-arguments", "--format must be json or csv");

  json out;
  out["family"] = family;
  out["regime"] = regime;
  out["count"] = count;
  out["workers"] = workers;
  out["seed"] = seed;
  for (const auto& [name, stats] : result.stats) {
    out["algorithms"][name] = {
        {"mean", stats.mean}, {"stddev", stats.stddev}, {"cdf", stats.cdf}};
  }
  std::cout << out.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Load redistribution scheduling on master-worker star platforms"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Schedule a platform with one algorithm");
  solve->add_option("--algo", solve_args.algo, "bba | mbbsa | rbsa | oracle")->required();
  solve->add_option("--platform", solve_args.platform_path, "platform JSON file")->required();
  solve->add_option("--makespan", solve_args.makespan,
                    "fixed target: run a single feasibility query (mbbsa/rbsa)");
  solve->add_option("--max-moves", solve_args.max_moves, "oracle: plan length cap (default: task count)");
  solve->add_flag("--restricted", solve_args.restricted,
                  "oracle: forbid any worker from both sending and receiving");
  solve->add_option("--budget", solve_args.budget, "oracle: max simulated plans");
  solve->add_option("--gantt", solve_args.gantt_path, "write the timeline CSV here");

  SolveArgs oracle_args;
  oracle_args.algo = "oracle";
  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive optimum for small instances");
  oracle->add_option("--platform", oracle_args.platform_path, "platform JSON file")->required();
  oracle->add_option("--max-moves", oracle_args.max_moves, "plan length cap (default: task count)");
  oracle->add_flag("--restricted", oracle_args.restricted,
                   "forbid any worker from both sending and receiving");
  oracle->add_option("--budget", oracle_args.budget, "max simulated plans");
  oracle->add_option("--gantt", oracle_args.gantt_path, "write the timeline CSV here");

  std::string ord_platform, ord_delta, ord_gantt;
  CLI::App* ordering = app.add_subcommand("ordering", "Minimal-time redistribution, computations neglected");
  ordering->add_option("--platform", ord_platform, "platform JSON file")->required();
  ordering->add_option("--delta", ord_delta, "imbalances, e.g. \"2,1,-3\" or \"[2,1,-3]\"")->required();
  ordering->add_option("--gantt", ord_gantt, "write the redistribution timeline CSV here");

  std::string div_platform;
  CLI::App* div = app.add_subcommand("divisible", "Fluid-load solver for switch platforms");
  div->add_option("--platform", div_platform, "divisible platform JSON file")->required();

  std::string bench_family = "het-het", bench_regime = "general", bench_out;
  std::string bench_format = "json";
  int bench_count = 100;
  std::size_t bench_workers = 10;
  std::uint64_t bench_seed = 42;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Distance-to-best study on random platforms");
  bench_cmd->add_option("--family", bench_family, "hom-hom | hom-het | het-hom | het-het");
  bench_cmd->add_option("--regime", bench_regime, "general | comm-le-comp | comm-ge-comp");
  bench_cmd->add_option("--count", bench_count, "instances per family");
  bench_cmd->add_option("--workers", bench_workers, "workers per platform");
  bench_cmd->add_option("--seed", bench_seed, "base RNG seed");
  bench_cmd->add_option("--out", bench_out, "write per-instance CSV here");
  bench_cmd->add_option("--format", bench_format, "stdout format: json summary or csv records");

  SolveArgs gantt_args;
  CLI::App* gantt = app.add_subcommand("gantt", "Solve and export the timeline CSV");
  gantt->add_option("--algo", gantt_args.algo, "bba | mbbsa | rbsa | oracle")->required();
  gantt->add_option("--platform", gantt_args.platform_path, "platform JSON file")->required();
  gantt->add_option("--makespan", gantt_args.makespan, "fixed target (mbbsa/rbsa)");
  gantt->add_option("--max-moves", gantt_args.max_moves, "oracle: plan length cap");
  gantt->add_option("--budget", gantt_args.budget, "oracle: max simulated plans");
  gantt->add_option("--out", gantt_args.gantt_path, "output CSV file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (oracle->parsed()) return run_solve(oracle_args);
    if (ordering->parsed()) return run_ordering(ord_platform, ord_delta, ord_gantt);
    if (div->parsed()) return run_divisible(div_platform);
    if (bench_cmd->parsed())
      return run_bench(bench_family, bench_regime, bench_count, bench_workers, bench_seed,
                       bench_out, bench_format);
    if (gantt->parsed()) return run_solve(gantt_args);
  } catch (const Error& e) {
    std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
    return e.code() == "internal" || e.code() == "io" ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
