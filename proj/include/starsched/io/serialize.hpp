#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include <starsched/core/errors.hpp>
#include <starsched/core/plan.hpp>
#include <starsched/core/platform.hpp>
#include <starsched/divisible/divisible.hpp>

namespace starsched::io {

using nlohmann::json;

/// Platform files carry link/compute costs as exact strings ("2",
/// "2.5" or "5/2") so that a serialize/load round trip is bit-identical.
inline json platform_to_json(const core::Platform& p) {
  json workers = json::array();
  for (const core::Worker& w : p.workers) {
    workers.push_back({{"c", core::format_rational(w.c)},
                       {"w", core::format_rational(w.w)},
                       {"load", w.load}});
  }
  return json{{"workers", workers}};
}

namespace detail {

inline core::Rational rational_field(const json& obj, const char* key) {
  if (!obj.contains(key))
    throw ParseError("invalid-platform", std::string("worker entry misses '") + key + "'");
  const json& v = obj.at(key);
  if (v.is_string()) {
    auto r = core::try_parse_rational(v.get<std::string>());
    if (!r)
      throw ParseError("invalid-platform",
                       std::string("'") + key + "' is not a rational: " + v.get<std::string>());
    return *r;
  }
  if (v.is_number_integer()) return core::Rational(v.get<long long>());
  throw ParseError("invalid-platform",
                   std::string("'") + key + "' must be a rational string or an integer");
}

}  // namespace detail

inline core::Platform platform_from_json(const json& j) {
  if (!j.is_object() || !j.contains("workers") || !j.at("workers").is_array())
    throw ParseError("invalid-platform", "expected an object with a 'workers' array");
  core::Platform p;
  for (const json& wj : j.at("workers")) {
    if (!wj.is_object()) throw ParseError("invalid-platform", "worker entries must be objects");
    core::Worker w;
    w.c = detail::rational_field(wj, "c");
    w.w = detail::rational_field(wj, "w");
    if (!wj.contains("load") || !wj.at("load").is_number_integer())
      throw ParseError("invalid-platform", "worker entry misses an integer 'load'");
    w.load = wj.at("load").get<long long>();
    p.workers.push_back(std::move(w));
  }
  auto bad = core::platform_violations(p);
  if (!bad.empty()) throw InvalidPlatform(bad.front());
  return p;
}

inline json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("malformed-json", "cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed-json", "invalid JSON in " + path);
  return j;
}

inline core::Platform load_platform(const std::string& path) {
  return platform_from_json(parse_file(path));
}

inline json plan_to_json(const core::MovePlan& plan) {
  json moves = json::array();
  for (const core::Move& m : plan.moves) moves.push_back({m.sender, m.receiver});
  return moves;
}

inline json divisible_platform_to_json(const divisible::DivisiblePlatform& p) {
  json workers = json::array();
  for (const divisible::DivisibleWorker& w : p.workers)
    workers.push_back({{"bandwidth", w.bandwidth}, {"speed", w.speed}, {"alpha", w.alpha}});
  return json{{"workers", workers}};
}

inline divisible::DivisiblePlatform divisible_platform_from_json(const json& j) {
  if (!j.is_object() || !j.contains("workers") || !j.at("workers").is_array())
    throw ParseError("invalid-platform", "expected an object with a 'workers' array");
  divisible::DivisiblePlatform p;
  for (const json& wj : j.at("workers")) {
    divisible::DivisibleWorker w;
    for (const char* key : {"bandwidth", "speed", "alpha"}) {
      if (!wj.contains(key) || !wj.at(key).is_number())
        throw ParseError("invalid-platform", std::string("worker entry misses numeric '") + key + "'");
    }
    w.bandwidth = wj.at("bandwidth").get<double>();
    w.speed = wj.at("speed").get<double>();
    w.alpha = wj.at("alpha").get<double>();
    p.workers.push_back(w);
  }
  auto bad = divisible::platform_violations(p);
  if (!bad.empty()) throw InvalidPlatform(bad.front());
  return p;
}

inline divisible::DivisiblePlatform load_divisible_platform(const std::string& path) {
  return divisible_platform_from_json(parse_file(path));
}

inline json solution_to_json(const divisible::DivisibleSolution& sol) {
  json j;
  j["t0"] = sol.t0;
  j["delta"] = sol.delta;
  j["senders"] = sol.senders;
  j["receivers"] = sol.receivers;
  j["total_transfer"] = sol.total_transfer;
  j["f"] = sol.f;
  j["lambda"] = sol.lambda;
  j["gamma"] = sol.gamma;
  j["initial_rate"] = sol.initial_rate;
  return j;
}

}  // namespace starsched::io
