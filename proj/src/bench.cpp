#include "pinnacle/bench.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "pinnacle/admissible.hpp"
#include "pinnacle/errors.hpp"
#include "pinnacle/oracle.hpp"

namespace pinnacle {

namespace {

bool applies(Algorithm algo, const ValueSet& s, int n) {
  if (algo == Algorithm::kClosed) return s.size() <= 2;
  if (algo == Algorithm::kBrute) return n <= kBruteGuard;
  return true;
}

std::string csv_quote(const std::string& field) {
  return "\"" + field + "\"";
}

std::string seconds(double s) {
  std::ostringstream os;
  os.precision(6);
  os << std::scientific << s;
  return os.str();
}

}  // namespace

BenchReport run_benchmark(const BenchSpec& spec) {
  if (spec.repetitions < 1) throw DomainError("repetitions must be >= 1");
  if (spec.warmup < 0) throw DomainError("warmup must be >= 0");
  if (spec.algorithms.empty()) throw DomainError("no algorithms selected");
  for (const auto& s : spec.sets) require_admissible(s, spec.n);

  using Clock = std::chrono::steady_clock;
  BenchReport report;
  for (const auto& s : spec.sets) {
    std::optional<std::string> agreed;
    for (Algorithm algo : spec.algorithms) {
      if (!applies(algo, s, spec.n)) continue;
      const auto started = Clock::now();
      const auto over_budget = [&] {
        return spec.time_budget_s &&
               std::chrono::duration<double>(Clock::now() - started).count() >
                   *spec.time_budget_s;
      };

      Count value;
      for (int w = 0; w < spec.warmup && !over_budget(); ++w)
        value = count_pinnacle_set(s, spec.n, algo);

      BenchRow row{s, algo, spec.n, 0, 0.0, 0.0, {}};
      double total = 0.0;
      for (int r = 0; r < spec.repetitions; ++r) {
        if (r > 0 && over_budget()) break;
        const auto t0 = Clock::now();
        value = count_pinnacle_set(s, spec.n, algo);
        const double elapsed =
            std::chrono::duration<double>(Clock::now() - t0).count();
        total += elapsed;
        row.min_s = r == 0 ? elapsed : std::min(row.min_s, elapsed);
        ++row.repetitions;
      }
      row.mean_s = total / row.repetitions;
      row.count = to_decimal(value);
      if (agreed && *agreed != row.count)
        throw IntegrityError("algorithms disagree on {" + s.to_string() +
                             "}: " + std::string(algorithm_name(algo)) +
                             " gives a different count");
      agreed = row.count;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

void BenchReport::write_csv(std::ostream& out) const {
  out << "set,algo,n,reps,mean_s,min_s,count\n";
  for (const auto& r : rows)
    out << csv_quote(r.set.to_string()) << ',' << algorithm_name(r.algorithm)
        << ',' << r.n << ',' << r.repetitions << ',' << seconds(r.mean_s) << ','
        << seconds(r.min_s) << ',' << r.count << '\n';
}

std::string BenchReport::to_json() const {
  nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    rows_json.push_back({{"set", r.set.to_string()},
                         {"algo", std::string(algorithm_name(r.algorithm))},
                         {"n", r.n},
                         {"reps", r.repetitions},
                         {"mean_s", r.mean_s},
                         {"min_s", r.min_s},
                         {"count", r.count}});
  }
  return nlohmann::ordered_json{{"rows", rows_json}}.dump(2);
}

namespace {

ValueSet progression(int first, int step, int count) {
  std::vector<int> v;
  for (int i = 0; i < count; ++i) v.push_back(first + i * step);
  return ValueSet(std::move(v));
}

}  // namespace

std::vector<ValueSet> equal_gap_sets() {
  return {progression(3, 2, 10), progression(3, 3, 10), progression(3, 4, 10),
          progression(3, 5, 10)};
}

std::vector<ValueSet> growing_last_gap_sets() {
  return {ValueSet{3, 5, 7, 9, 11}, ValueSet{3, 5, 7, 9, 21},
          ValueSet{3, 5, 7, 9, 31}, ValueSet{3, 5, 7, 9, 41}};
}

std::vector<ValueSet> growing_first_gap_sets() {
  return {progression(3, 2, 5), progression(13, 2, 5), progression(23, 2, 5),
          progression(33, 2, 5)};
}

}  // namespace pinnacle
