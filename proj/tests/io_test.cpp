#include <gtest/gtest.h>

#include <starsched/core/simulate.hpp>
#include <starsched/io/csv.hpp>
#include <starsched/io/serialize.hpp>

#include <sstream>

#include "testutil.hpp"

using namespace starsched;
using core::Rational;
using nlohmann::json;

TEST(Rationals, ParseForms) {
  EXPECT_EQ(core::parse_rational("13"), Rational(13));
  EXPECT_EQ(core::parse_rational("5/2"), Rational(5, 2));
  EXPECT_EQ(core::parse_rational("2.5"), Rational(5, 2));
  EXPECT_EQ(core::parse_rational(".5"), Rational(1, 2));
  EXPECT_EQ(core::parse_rational("-3/4"), Rational(-3, 4));
  EXPECT_EQ(core::parse_rational("0.125"), Rational(1, 8));
  EXPECT_FALSE(core::try_parse_rational("1/0").has_value());
  EXPECT_FALSE(core::try_parse_rational("abc").has_value());
  EXPECT_FALSE(core::try_parse_rational("1/2/3").has_value());
  EXPECT_FALSE(core::try_parse_rational("").has_value());
}

TEST(Rationals, FormatIsExact) {
  EXPECT_EQ(core::format_rational(Rational(13)), "13");
  EXPECT_EQ(core::format_rational(Rational(5, 2)), "5/2");
  EXPECT_EQ(core::format_rational(Rational(-1, 3)), "-1/3");
  EXPECT_EQ(core::format_rational(Rational(0)), "0");
  // round trip
  testutil::Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    Rational r(rng.uniform(-1000, 1000), rng.uniform(1, 997));
    EXPECT_EQ(core::parse_rational(core::format_rational(r)), r);
  }
}

TEST(PlatformJson, RoundTripIsIdentity) {
  core::Platform p = testutil::make_platform(
      {{Rational(5, 2), Rational(1, 3), 4}, {2, 3, 0}, {Rational(7, 5), 1, 9}});
  auto j = io::platform_to_json(p);
  core::Platform back = io::platform_from_json(j);
  EXPECT_EQ(p.workers, back.workers);
  EXPECT_EQ(io::platform_to_json(back), j);
}

TEST(PlatformJson, AcceptsDecimalStringsAndIntegers) {
  auto j = json::parse(R"({"workers":[{"c":"2.5","w":3,"load":1}]})");
  core::Platform p = io::platform_from_json(j);
  EXPECT_EQ(p.workers[0].c, Rational(5, 2));
  EXPECT_EQ(p.workers[0].w, Rational(3));
}

TEST(PlatformJson, RejectsBadInput) {
  EXPECT_THROW(io::platform_from_json(json::parse("[]")), ParseError);
  EXPECT_THROW(io::platform_from_json(json::parse(R"({"workers":[{"c":"x","w":"1","load":1}]})")),
               ParseError);
  EXPECT_THROW(io::platform_from_json(json::parse(R"({"workers":[{"c":"1","load":1}]})")),
               ParseError);
  // non-positive costs violate the platform contract
  EXPECT_THROW(io::platform_from_json(json::parse(R"({"workers":[{"c":"0","w":"1","load":1}]})")),
               InvalidPlatform);
  EXPECT_THROW(io::platform_from_json(json::parse(R"({"workers":[{"c":"1","w":"-2","load":1}]})")),
               InvalidPlatform);
}

TEST(PlanJson, MovesAreIndexPairs) {
  core::MovePlan plan{{{0, 1}, {2, 0}}};
  EXPECT_EQ(io::plan_to_json(plan).dump(), "[[0,1],[2,0]]");
}

TEST(DivisibleJson, RoundTrip) {
  divisible::DivisiblePlatform p;
  p.workers = {{1.5, 2.0, 10.0}, {0.5, 1.0, 0.0}};
  auto j = io::divisible_platform_to_json(p);
  auto back = io::divisible_platform_from_json(j);
  ASSERT_EQ(back.workers.size(), 2u);
  EXPECT_EQ(back.workers[0].bandwidth, 1.5);
  EXPECT_EQ(back.workers[1].alpha, 0.0);
  EXPECT_THROW(
      io::divisible_platform_from_json(json::parse(R"({"workers":[{"speed":1,"alpha":1}]})")),
      ParseError);
}

TEST(TimelineCsv, ExactRowsPerInterval) {
  core::Platform p = testutil::make_platform({{Rational(1, 2), Rational(3, 2), 2}, {1, 1, 0}});
  core::MovePlan plan{{{0, 1}}};
  auto tl = core::simulate(p, plan);
  std::ostringstream out;
  io::write_timeline_csv(out, tl);
  std::string text = out.str();
  EXPECT_NE(text.find("kind,worker,start,end"), std::string::npos);
  EXPECT_NE(text.find("uplink,0,0,1/2"), std::string::npos);
  EXPECT_NE(text.find("downlink,1,1/2,3/2"), std::string::npos);
  EXPECT_NE(text.find("compute,0,0,3/2"), std::string::npos);
  EXPECT_NE(text.find("compute,1,3/2,5/2"), std::string::npos);
}
