#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "pinnacle/bench.hpp"
#include "pinnacle/errors.hpp"

using namespace pinnacle;

TEST_CASE("single set, every applicable algorithm") {
  BenchSpec spec;
  spec.sets = {ValueSet{3}};
  spec.n = 9;
  spec.algorithms = {Algorithm::kDale, Algorithm::kComposition, Algorithm::kVale,
                     Algorithm::kClosed, Algorithm::kBrute};
  spec.repetitions = 2;
  spec.warmup = 0;
  const BenchReport report = run_benchmark(spec);
  REQUIRE(report.rows.size() == 5);
  for (const auto& row : report.rows) {
    CHECK(row.count == "128");  // exhaustive tally over S_9
    CHECK(row.repetitions == 2);
    CHECK(row.min_s <= row.mean_s);
  }
}

TEST_CASE("S = {3} at n = 10 gives four identical rows") {
  BenchSpec spec;
  spec.sets = {ValueSet{3}};
  spec.n = 10;
  spec.algorithms = {Algorithm::kDale, Algorithm::kComposition, Algorithm::kVale,
                     Algorithm::kClosed};
  spec.repetitions = 1;
  const BenchReport report = run_benchmark(spec);
  REQUIRE(report.rows.size() == 4);
  for (const auto& row : report.rows) CHECK(row.count == "256");
}

TEST_CASE("inapplicable algorithms are skipped") {
  BenchSpec spec;
  spec.sets = {ValueSet{3, 5, 7}, ValueSet{3, 5}};
  spec.n = 12;
  spec.algorithms = {Algorithm::kClosed, Algorithm::kBrute, Algorithm::kComposition};
  spec.repetitions = 1;
  const BenchReport report = run_benchmark(spec);
  REQUIRE(report.rows.size() == 3);
  CHECK(report.rows[0].algorithm == Algorithm::kComposition);
  CHECK(report.rows[1].algorithm == Algorithm::kClosed);
}

TEST_CASE("csv and json") {
  BenchSpec spec;
  spec.sets = {ValueSet{3, 5}};
  spec.n = 8;
  spec.algorithms = {Algorithm::kDale};
  spec.repetitions = 1;
  const BenchReport report = run_benchmark(spec);
  std::ostringstream csv;
  report.write_csv(csv);
  const std::string text = csv.str();
  CHECK(text.rfind("set,algo,n,reps,mean_s,min_s,count\n", 0) == 0);
  CHECK(text.find("\"3,5\",dale,8,1,") != std::string::npos);
  const auto json = nlohmann::json::parse(report.to_json());
  CHECK(json["rows"][0]["count"] == report.rows[0].count);
  CHECK(json["rows"][0]["count"].is_string());
}

TEST_CASE("invalid specs") {
  BenchSpec spec;
  spec.sets = {ValueSet{3}};
  spec.n = 10;
  spec.repetitions = 0;
  CHECK_THROWS_AS(run_benchmark(spec), DomainError);
  spec.repetitions = 1;
  spec.warmup = -1;
  CHECK_THROWS_AS(run_benchmark(spec), DomainError);
  spec.warmup = 0;
  spec.sets = {ValueSet{3, 4}};
  CHECK_THROWS_AS(run_benchmark(spec), DomainError);
  spec.sets = {ValueSet{11}};
  CHECK_THROWS_AS(run_benchmark(spec), DomainError);
}

TEST_CASE("time budget truncates the timed runs") {
  BenchSpec spec;
  spec.sets = {ValueSet{3, 5, 7, 9, 11}};
  spec.n = 200;
  spec.algorithms = {Algorithm::kComposition};
  spec.repetitions = 1000;
  spec.warmup = 0;
  spec.time_budget_s = 0.0;
  const BenchReport report = run_benchmark(spec);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].repetitions >= 1);
  CHECK(report.rows[0].repetitions < 1000);
}

TEST_CASE("preset tables") {
  const auto equal = equal_gap_sets();
  REQUIRE(equal.size() == 4);
  CHECK(equal[0].to_string() == "3,5,7,9,11,13,15,17,19,21");
  CHECK(equal[3].to_string() == "3,8,13,18,23,28,33,38,43,48");
  CHECK(growing_last_gap_sets().back() == ValueSet{3, 5, 7, 9, 41});
  CHECK(growing_first_gap_sets().back() == ValueSet{33, 35, 37, 39, 41});
}
