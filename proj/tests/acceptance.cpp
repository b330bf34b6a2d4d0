// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pinnacle/admissible.hpp"
#include "pinnacle/bench.hpp"
#include "pinnacle/bijections.hpp"
#include "pinnacle/counting.hpp"
#include "pinnacle/dales.hpp"
#include "pinnacle/oracle.hpp"
#include "pinnacle/orderings.hpp"
#include "pinnacle/permutation.hpp"

using namespace pinnacle;

namespace {

// Collects failed checks for one criterion; `note` carries the summary line.
struct Outcome {
  std::vector<std::string> failures;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 20) failures.push_back(what);
  }
};

std::string str(const Count& c) { return to_decimal(c); }

// Every k-subset of {lo..hi}, lexicographic.
std::vector<ValueSet> subsets(int lo, int hi, int k) {
  std::vector<ValueSet> out;
  std::vector<int> pick;
  std::function<void(int)> grow = [&](int from) {
    if (static_cast<int>(pick.size()) == k) {
      out.emplace_back(pick);
      return;
    }
    for (int v = from; v <= hi; ++v) {
      pick.push_back(v);
      grow(v + 1);
      pick.pop_back();
    }
  };
  grow(lo);
  return out;
}

Outcome oracle_equivalence() {
  Outcome o;
  int sets = 0;
  for (int n = 1; n <= 8; ++n) {
    const Distribution dist = distribution(n);
    for (const auto& s : enumerate_admissible(n)) {
      ++sets;
      const Count brute = dist.table.count(s) ? dist.table.at(s) : Count(0);
      const std::string tag = "{" + s.to_string() + "} n=" + std::to_string(n);
      o.expect(count_dale(s, n) == brute, "dale " + tag);
      o.expect(count_composition(s, n) == brute, "comp " + tag);
      o.expect(count_vale(s, n) == brute, "vale " + tag);
      if (s.size() <= 2) o.expect(count_closed(s, n) == brute, "closed " + tag);
    }
    o.expect(dist.table.size() == enumerate_admissible(n).size(),
             "realized sets n=" + std::to_string(n));
  }
  o.note = std::to_string(sets) + " (S, n) pairs";
  return o;
}

Outcome mass_check() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) {
    Count total = 0;
    for (const auto& s : enumerate_admissible(n)) total += count_dale(s, n);
    o.expect(total == factorial(static_cast<unsigned>(n)), "n=" + std::to_string(n));
  }
  o.note = "n = 1..8";
  return o;
}

Outcome admissible_cardinality() {
  Outcome o;
  for (int n = 1; n <= 12; ++n) {
    const Count expected = binomial(n - 1, (n - 1) / 2);
    const auto listed = enumerate_admissible(n);
    o.expect(Count(listed.size()) == expected, "enumeration n=" + std::to_string(n));
    o.expect(count_admissible(n) == expected, "count n=" + std::to_string(n));
    if (n >= 2) {
      std::set<ValueSet> image;
      for (const auto& a : subsets(2, n, (n - 1) / 2)) image.insert(psi(a, n));
      o.expect(Count(image.size()) == expected, "psi image n=" + std::to_string(n));
      o.expect(image == std::set<ValueSet>(listed.begin(), listed.end()),
               "psi image equals admissible sets n=" + std::to_string(n));
    }
  }
  o.note = "n = 1..12";
  return o;
}

Outcome phi_equals_psi() {
  Outcome o;
  int checked = 0;
  for (int n = 2; n <= 12; ++n)
    for (const auto& a : subsets(2, n, (n - 1) / 2)) {
      ++checked;
      o.expect(phi(a, n) == psi(a, n), "A={" + a.to_string() + "} n=" + std::to_string(n));
    }
  o.note = std::to_string(checked) + " subsets";
  return o;
}

Outcome ballot_numbers() {
  Outcome o;
  for (int m = 1; m <= 14; ++m) {
    std::vector<int> by_size(static_cast<std::size_t>(m + 1), 0);
    for (const auto& s : enumerate_admissible(m))
      if (!s.empty() && s.max() == m) ++by_size[s.size()];
    for (int d = 1; d <= m; ++d) {
      const std::string tag = "m=" + std::to_string(m) + " d=" + std::to_string(d);
      o.expect(pinnacle_count(m, d) == by_size[static_cast<std::size_t>(d)], "enum " + tag);
      if (m > 2 * d) {
        o.expect(pinnacle_count(m, d) == count_ballot(m - d, d - 1), "ballot " + tag);
        o.expect(Rational(pinnacle_count(m, d)) == pd_polynomial(d, Rational(m)),
                 "p_d " + tag);
      }
    }
  }
  for (int d = 1; d <= 10; ++d) {
    const Count catalan = binomial(2 * d, d) / (d + 1);
    o.expect(pinnacle_count(2 * d + 1, d) == catalan, "Catalan d=" + std::to_string(d));
  }
  for (int d = 2; d <= 8; ++d)
    for (int m = 2 * d + 1; m <= 2 * d + 12; ++m)
      o.expect(pd_polynomial(d, Rational(m + 1)) - pd_polynomial(d, Rational(m)) ==
                   pd_polynomial(d - 1, Rational(m)),
               "difference d=" + std::to_string(d) + " m=" + std::to_string(m));
  o.note = "m <= 14, Catalan d <= 10, differences d = 2..8";
  return o;
}

Outcome eta_bijection() {
  Outcome o;
  const ValueSet example = eta(BallotSequence("XXXYXXYX"), 9);
  o.expect(example.to_string() == "4,7,9", "eta(XXXYXXYX) = {" + example.to_string() + "}");
  int sets = 0, words = 0;
  for (const auto& s : enumerate_admissible(12))
    if (!s.empty()) {
      ++sets;
      o.expect(eta(eta_inv(s), s.max()) == s, "set {" + s.to_string() + "}");
    }
  // eta is defined for m > 2d, i.e. p >= q + 2.
  for (int p = 1; p <= 11; ++p)
    for (int q = 0; q + 1 < p && p + q <= 11; ++q)
      for_each_ballot(p, q, [&](const BallotSequence& b) {
        ++words;
        o.expect(eta_inv(eta(b, p + q + 1)) == b, "word " + b.letters());
      });
  o.note = std::to_string(sets) + " sets, " + std::to_string(words) + " words";
  return o;
}

Outcome orderings() {
  Outcome o;
  int compared = 0;
  for (const auto& s : enumerate_admissible(15)) {
    ++compared;
    o.expect(count_orderings(s) == count_orderings_composition(s),
             "composition {" + s.to_string() + "}");
  }
  for (int m = 3; m <= 9; ++m) {
    const auto table = ordering_table(m);
    for (const auto& s : enumerate_admissible(m))
      if (!s.empty() && s.max() == m)
        o.expect(count_orderings(s) == Count(table.at(s).size()),
                 "brute {" + s.to_string() + "}");
  }
  const ValueSet s357{3, 5, 7};
  o.expect(is_admissible_ordering(s357, std::vector<int>{5, 3, 7}), "537 admissible");
  o.expect(!is_admissible_ordering(s357, std::vector<int>{3, 7, 5}), "375 inadmissible");
  o.expect(count_orderings(s357) == 4, "#O({3,5,7}) = 4");
  for (int d = 1; d <= 6; ++d) {
    std::vector<int> v;
    for (int i = 1; i <= d; ++i) v.push_back(2 * i + 1);
    o.expect(count_orderings(ValueSet(v), DaleFilter::kAll) ==
                 factorial(static_cast<unsigned>(d)),
             "no filter d=" + std::to_string(d));
  }
  o.note = std::to_string(compared) + " sets with max <= 15";
  return o;
}

Outcome per_ordering() {
  Outcome o;
  for (int n = 1; n <= 8; ++n)
    for (const auto& s : enumerate_admissible(n)) {
      Count total = 0;
      std::vector<int> sigma(s.begin(), s.end());
      do total += count_by_ordering(s, n, sigma);
      while (std::next_permutation(sigma.begin(), sigma.end()));
      o.expect(total == count_dale(s, n), "{" + s.to_string() + "} n=" + std::to_string(n));
    }
  o.expect(count_by_ordering(ValueSet{3, 5}, 5, std::vector<int>{3, 5}) == 2,
           "({3,5}, 5, (3,5)) = 2");
  o.note = "n <= 8";
  return o;
}

Outcome worked_examples() {
  Outcome o;
  const Permutation pi = Permutation::parse("1 8 5 2 4 3 7 6");
  o.expect(pinnacle_set(pi).to_string() == "4,7,8", "Pin");
  o.expect(peak_set(pi).to_string() == "2,5,7", "Pk");
  o.expect(interleaved_from_subset(ValueSet{2, 3, 7, 9}, 9).to_compact_string() ==
               "124357698",
           "interleaved");
  o.expect(right_canonical(ValueSet{4, 7, 9}, 9).to_compact_string() == "124357698",
           "right canonical");
  o.expect(lattice_path_from_subset(ValueSet{2, 3, 7, 9}, 9).steps() == "DDUUUDUD",
           "lattice path");
  o.expect(phi(ValueSet{2, 3, 7, 9}, 9).to_string() == "4,7,9", "phi");
  const DaleSelection dales = dale_rank_set(std::vector<int>{7, 6, 1, 2, 3, 5, 4});
  o.expect(dales.to_string() == "{1_l,1_r,2_r,3_r,4_l,4_r,6_l}", "dale set");
  o.expect(dales.rank_multiplicities() == std::vector<int>{2, 1, 1, 2, 0, 1},
           "dale composition");
  const DaleSelection b(4, std::vector<DaleSymbol>{{1, DaleSide::kLeft},
                                                   {3, DaleSide::kLeft},
                                                   {3, DaleSide::kRight},
                                                   {4, DaleSide::kRight}});
  o.expect(b.ranks() == std::vector<int>{1, 3, 3, 4}, "r vector");
  o.expect(b.suffix_counts() == std::vector<int>{4, 3, 3, 1, 0}, "b vector");
  o.note = "11 literals";
  return o;
}

Outcome benchmark() {
  Outcome o;
  BenchSpec spec;
  spec.sets = equal_gap_sets();
  spec.n = 1000;
  spec.algorithms = {Algorithm::kVale, Algorithm::kComposition};
  spec.repetitions = 3;
  spec.warmup = 1;
  spec.time_budget_s = 60.0;
  const BenchReport report = run_benchmark(spec);

  std::vector<double> vale, comp;
  std::vector<std::string> counts;
  for (const auto& row : report.rows) {
    (row.algorithm == Algorithm::kVale ? vale : comp).push_back(row.min_s);
    counts.push_back(row.count);
  }
  if (vale.size() != 4 || comp.size() != 4) {
    o.expect(false, "expected four rows per algorithm");
    return o;
  }
  // run_benchmark already throws on disagreement; confirm per set anyway.
  for (std::size_t i = 0; i + 1 < report.rows.size(); i += 2)
    o.expect(report.rows[i].count == report.rows[i + 1].count,
             "count mismatch on {" + report.rows[i].set.to_string() + "}");

  const auto [cmin, cmax] = std::minmax_element(comp.begin(), comp.end());
  const double comp_spread = *cmax / *cmin;
  const double vale_growth = vale.back() / vale.front();
  const double crossover = vale.back() / comp.back();
  o.expect(comp_spread <= 3.0, "composition spread " + std::to_string(comp_spread));
  o.expect(vale_growth >= 1000.0, "vale growth " + std::to_string(vale_growth));
  o.expect(crossover >= 10.0, "composition speedup on last set " + std::to_string(crossover));

  char buf[256];
  std::snprintf(buf, sizeof buf,
                "comp spread %.2fx, vale growth %.0fx, last-set speedup %.0fx, %zu-digit counts",
                comp_spread, vale_growth, crossover, counts.front().size());
  o.note = buf;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"mass check", mass_check},
      {"admissible set count", admissible_cardinality},
      {"phi equals psi", phi_equals_psi},
      {"ballot numbers", ballot_numbers},
      {"eta bijection", eta_bijection},
      {"orderings", orderings},
      {"per-ordering decomposition", per_ordering},
      {"worked examples", worked_examples},
      {"benchmark shape", benchmark},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, check] = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = outcome.failures.empty();
    failed += !ok;
    std::printf("%s [%zu] %s (%s; %.2fs)\n", ok ? "PASS" : "FAIL", i + 1, name,
                outcome.note.c_str(), secs);
    for (const auto& f : outcome.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
