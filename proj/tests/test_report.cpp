#include "hopf/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

using namespace hopf;

TEST_CASE("splitmix64 produces the canonical sequence from seed 0") {
  std::uint64_t state = 0;
  CHECK(splitmix64_next(state) == 0xE220A8397B1DCDAFULL);
  CHECK(splitmix64_next(state) == 0x6E789E6AA1B965F4ULL);
  CHECK(splitmix64_next(state) == 0x06C45D188009454FULL);
}

TEST_CASE("sample sets are deterministic and end with the fixed points") {
  auto pts = sample_sphere_points(4, 5, 0);
  REQUIRE(pts.size() == 5 + 8);
  auto again = sample_sphere_points(4, 5, 0);
  for (size_t i = 0; i < pts.size(); ++i) {
    CHECK(pts[i].coords == again[i].coords);
  }
  auto other = sample_sphere_points(4, 5, 1);
  bool all_same = true;
  for (size_t i = 0; i < 5; ++i) {
    if (pts[i].coords != other[i].coords) all_same = false;
  }
  CHECK_FALSE(all_same);

  // After the random block: +e0, -e0, +e1, -e1, ...
  CHECK(pts[5].coords == RatVec{rat(1), rat(0), rat(0), rat(0)});
  CHECK(pts[6].coords == RatVec{rat(-1), rat(0), rat(0), rat(0)});
  CHECK(pts[7].coords == RatVec{rat(0), rat(1), rat(0), rat(0)});

  auto pts8 = sample_sphere_points(8, 3, 42);
  REQUIRE(pts8.size() == 3 + 16 + 1);
  CHECK(pts8.back().coords ==
        RatVec{rat(1, 2), rat(1, 2), rat(0), rat(0), rat(1, 2), rat(1, 2),
               rat(0), rat(0)});

  CHECK_THROWS_AS(sample_sphere_points(5, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(sample_sphere_points(4, 0, 0), std::invalid_argument);
}

TEST_CASE("algebra suite passes completely") {
  SuiteConfig config;
  config.suite = "algebra";
  config.samples = 5;
  VerificationReport r = run_suite(config);
  CHECK(r.total > 0);
  CHECK(r.failed == 0);
  CHECK(r.passed == r.total);
  CHECK(std::is_sorted(r.checks.begin(), r.checks.end(),
                       [](const CheckResult& a, const CheckResult& b) {
                         return a.id < b.id;
                       }));
  for (const auto& c : r.checks) CHECK(c.status == "pass");
}

TEST_CASE("s3 suite reports exactly the known red check") {
  SuiteConfig config;
  config.suite = "s3";
  config.samples = 5;
  VerificationReport r = run_suite(config);
  CHECK(r.failed == 1);
  for (const auto& c : r.checks) {
    if (c.status == "fail") CHECK(c.id == "s3.bracket.XY=2V");
  }
}

TEST_CASE("the aggregate suite is the union of the individual suites") {
  SuiteConfig config;
  config.samples = 2;
  config.suite = "all";
  VerificationReport all = run_suite(config);

  int sum = 0;
  for (const char* name : {"algebra", "s3", "s3-cr", "s3-hopf", "s7-frame",
                           "s7-cr", "s7-quat"}) {
    config.suite = name;
    sum += run_suite(config).total;
  }
  CHECK(all.total == sum);
  CHECK(all.failed == 2);  // the two documented sign discrepancies
}

TEST_CASE("unknown suites and bad sample counts are rejected") {
  SuiteConfig config;
  config.suite = "nope";
  CHECK_THROWS_AS(run_suite(config), std::invalid_argument);
  config.suite = "algebra";
  config.samples = 0;
  CHECK_THROWS_AS(run_suite(config), std::invalid_argument);
}

TEST_CASE("json rendering is stable, ordered, and machine-readable") {
  SuiteConfig config;
  config.suite = "s3";
  config.samples = 3;
  config.seed = 7;
  VerificationReport r1 = run_suite(config);
  VerificationReport r2 = run_suite(config);
  std::string j1 = render_json(r1);
  std::string j2 = render_json(r2);
  CHECK(j1 == j2);
  CHECK(j1.back() == '\n');

  nlohmann::json parsed = nlohmann::json::parse(j1);
  CHECK(parsed["suite"] == "s3");
  CHECK(parsed["seed"] == 7);
  CHECK(parsed["samples"] == 3);
  CHECK(parsed["summary"]["total"] == r1.total);
  CHECK(parsed["summary"]["failed"] == 1);
  CHECK(parsed["checks"].size() == static_cast<size_t>(r1.total));
  for (const auto& c : parsed["checks"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("paper_ref"));
    CHECK(c.contains("status"));
    CHECK(c.contains("details"));
    if (c["status"] == "pass") CHECK_FALSE(c.contains("counterexample"));
  }

  std::string text = render_text(r1);
  CHECK(text.find("suite: s3") != std::string::npos);
  CHECK(text.find("summary: total=") != std::string::npos);
  CHECK(text.find("[fail] s3.bracket.XY=2V") != std::string::npos);
}

TEST_CASE("golden tables") {
  std::string oct = emit_table("oct-mult");
  std::istringstream lines(oct);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 9);
  CHECK(rows[0] == ",e0,e1,e2,e3,e4,e5,e6,e7");
  CHECK(rows[1] == "e0,e0,e1,e2,e3,e4,e5,e6,e7");
  CHECK(rows[2] == "e1,e1,-e0,e3,-e2,e5,-e4,-e7,e6");
  CHECK(oct.back() == '\n');

  std::string comm = emit_table("commutators");
  std::istringstream clines(comm);
  rows.clear();
  while (std::getline(clines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 21);
  CHECK(rows[0].rfind("1,2,", 0) == 0);
  for (const auto& r : rows) {
    CHECK(std::count(r.begin(), r.end(), ',') == 65);
  }

  CHECK_THROWS_AS(emit_table("nope"), std::invalid_argument);
}
