#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pinnacle/counting.hpp"
#include "pinnacle/permutation.hpp"

namespace pinnacle {

struct BenchSpec {
  std::vector<ValueSet> sets;
  int n = 1000;
  std::vector<Algorithm> algorithms{Algorithm::kVale, Algorithm::kComposition};
  int repetitions = 10;
  int warmup = 1;
  /// Once an algorithm has spent this long on a set, its remaining warmup
  /// and timed runs are dropped and the row reports the runs completed.
  std::optional<double> time_budget_s;
};

struct BenchRow {
  ValueSet set;
  Algorithm algorithm = Algorithm::kDale;
  int n = 0;
  int repetitions = 0;  // timed runs actually completed
  double mean_s = 0.0;
  double min_s = 0.0;
  std::string count;  // decimal
};

struct BenchReport {
  std::vector<BenchRow> rows;

  /// Header "set,algo,n,reps,mean_s,min_s,count"; sets are quoted.
  void write_csv(std::ostream& out) const;
  std::string to_json() const;
};

/// Throws DomainError when the spec is invalid and IntegrityError when two
/// algorithms disagree on a set. Algorithms that do not apply to a set
/// (closed for |S| > 2, brute beyond its guard) are skipped for that set.
BenchReport run_benchmark(const BenchSpec& spec);

/// The four sets of ten pinnacles with equal inner gaps 1, 2, 3, 4.
std::vector<ValueSet> equal_gap_sets();
/// {3,5,7,9,m} for m = 11, 21, 31, 41: only n_4 grows.
std::vector<ValueSet> growing_last_gap_sets();
/// {3,5,7,9,11} shifted by 0, 10, 20, 30: only n_0 grows.
std::vector<ValueSet> growing_first_gap_sets();

}  // namespace pinnacle
