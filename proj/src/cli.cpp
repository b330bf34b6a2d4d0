#include "pinnacle/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "pinnacle/admissible.hpp"
#include "pinnacle/bench.hpp"
#include "pinnacle/bijections.hpp"
#include "pinnacle/counting.hpp"
#include "pinnacle/errors.hpp"
#include "pinnacle/oracle.hpp"
#include "pinnacle/orderings.hpp"
#include "pinnacle/selftest.hpp"

namespace pinnacle {

namespace {

using Json = nlohmann::ordered_json;

std::string braces(const ValueSet& s) { return "{" + s.to_string() + "}"; }

struct Options {
  std::string set;
  std::vector<std::string> sets;
  int n = 0;
  std::string perm;
  std::string algo = "dale";
  std::vector<std::string> algos;
  std::string ordering;
  std::string vale_factor = "falling";
  std::string table;
  std::string csv;
  int max_n = 7;
  int reps = 10;
  int warmup = 1;
  double budget = 0.0;
  bool json = false;
  bool distribution = false;
  bool override_guards = false;

  GuardPolicy policy() const {
    return override_guards ? GuardPolicy::kOverride : GuardPolicy::kEnforce;
  }
};

int cmd_stats(const Options& o, std::ostream& out) {
  const Permutation p = Permutation::parse(o.perm);
  const ValueSet pins = pinnacle_set(p);
  const ValueSet peaks = peak_set(p);
  const ValueSet vales = vale_set(p, ValeBoundary::kInterior);
  const ValueSet sentinel = vale_set(p, ValeBoundary::kSentinel);
  const CyclicPermutation lifted = lift_to_cyclic(p);
  const ValueSet cyclic = cyclic_pinnacle_set(lifted);
  if (o.json) {
    out << Json{{"perm", p.to_string()},
                {"pinnacles", pins.to_string()},
                {"peaks", peaks.to_string()},
                {"vales", vales.to_string()},
                {"sentinel_vales", sentinel.to_string()},
                {"lift", lifted.representative().to_string()},
                {"lift_pinnacles", cyclic.to_string()}}
               .dump()
        << '\n';
    return kExitOk;
  }
  out << "permutation:     " << p.to_string() << '\n'
      << "pinnacles:       " << braces(pins) << '\n'
      << "peaks:           " << braces(peaks) << '\n'
      << "vales:           " << braces(vales) << '\n'
      << "sentinel vales:  " << braces(sentinel) << '\n'
      << "cyclic lift:     [" << lifted.representative().to_string() << "]\n"
      << "lift pinnacles:  " << braces(cyclic) << '\n';
  return kExitOk;
}

int cmd_admissible(const Options& o, std::ostream& out) {
  if (o.set.empty() && o.n == 0)
    throw UsageError("admissible needs --set or --n");
  Json j = Json::object();
  if (!o.set.empty() || o.n == 0) {
    const ValueSet s = parse_set(o.set);
    const bool ok = is_admissible(s) && (o.n == 0 || s.empty() || s.max() <= o.n);
    j["set"] = s.to_string();
    j["admissible"] = ok;
    if (ok && !s.empty()) j["ballot"] = eta_inv(s).letters();
    if (ok && o.n > 0) j["right_canonical"] = right_canonical(s, o.n).to_string();
  } else {
    j["n"] = o.n;
    j["count"] = to_decimal(count_admissible(o.n));
  }
  if (o.json) {
    out << j.dump() << '\n';
    return kExitOk;
  }
  for (const auto& [key, value] : j.items())
    out << key << ": "
        << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("enumerate needs --n >= 1");
  if (o.distribution) {
    const Distribution dist = distribution(o.n, o.policy());
    if (o.json) {
      out << dist.to_json() << '\n';
    } else {
      for (const auto& [s, c] : dist.table)
        out << braces(s) << ' ' << to_decimal(c) << '\n';
    }
    return kExitOk;
  }
  const auto sets = enumerate_admissible(o.n);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& s : sets) arr.push_back(s.to_string());
    out << Json{{"n", o.n},
                {"count", to_decimal(count_admissible(o.n))},
                {"sets", arr}}
               .dump()
        << '\n';
    return kExitOk;
  }
  for (const auto& s : sets) out << braces(s) << '\n';
  out << "total: " << sets.size() << '\n';
  return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("count needs --n >= 1");
  const ValueSet s = parse_set(o.set);
  const Algorithm algo = parse_algorithm(o.algo);
  Count value;
  if (!o.ordering.empty()) {
    value = count_by_ordering(s, o.n, parse_ordering(o.ordering));
  } else if (algo == Algorithm::kBrute) {
    require_admissible(s, o.n);
    value = brute_count(s, o.n, o.policy());
  } else if (algo == Algorithm::kVale) {
    if (o.vale_factor != "falling" && o.vale_factor != "binomial")
      throw UsageError("--vale-factor must be falling or binomial");
    value = count_vale(s, o.n,
                       o.vale_factor == "binomial" ? ValeFactor::kBinomial
                                                   : ValeFactor::kFallingFactorial);
  } else {
    value = count_pinnacle_set(s, o.n, algo);
  }
  if (o.json) {
    Json j{{"set", s.to_string()},
           {"n", o.n},
           {"algo", o.ordering.empty() ? std::string(algorithm_name(algo))
                                       : std::string("ordering")},
           {"count", to_decimal(value)}};
    if (!o.ordering.empty()) j["ordering"] = o.ordering;
    out << j.dump() << '\n';
  } else {
    out << to_decimal(value) << '\n';
  }
  return kExitOk;
}

int cmd_orderings(const Options& o, std::ostream& out) {
  const ValueSet s = parse_set(o.set);
  const Count count = count_orderings(s);
  const auto list = enumerate_orderings(s, o.policy());
  if (o.json) {
    Json arr = Json::array();
    for (const auto& sigma : list) arr.push_back(format_ordering(sigma));
    out << Json{{"set", s.to_string()},
                {"count", to_decimal(count)},
                {"orderings", arr}}
               .dump()
        << '\n';
    return kExitOk;
  }
  out << "count: " << to_decimal(count) << '\n';
  for (const auto& sigma : list) out << format_ordering(sigma) << '\n';
  return kExitOk;
}

int cmd_valesets(const Options& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("valesets needs --n >= 1");
  const ValueSet s = parse_set(o.set);
  const auto family = enumerate_vale_sets(s, o.n);
  const Count count = count_vale_sets(s, o.n);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& t : family) arr.push_back(t.to_string());
    out << Json{{"set", s.to_string()},
                {"n", o.n},
                {"count", to_decimal(count)},
                {"vale_sets", arr}}
               .dump()
        << '\n';
    return kExitOk;
  }
  out << "count: " << to_decimal(count) << '\n';
  for (const auto& t : family) out << braces(t) << '\n';
  return kExitOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
  BenchSpec spec;
  spec.n = o.n > 0 ? o.n : 1000;
  spec.repetitions = o.reps;
  spec.warmup = o.warmup;
  if (o.budget > 0) spec.time_budget_s = o.budget;
  for (const auto& text : o.sets) spec.sets.push_back(parse_set(text));
  if (o.table == "equal" || (o.table.empty() && spec.sets.empty())) {
    for (auto& s : equal_gap_sets()) spec.sets.push_back(s);
  } else if (o.table == "last-gap") {
    for (auto& s : growing_last_gap_sets()) spec.sets.push_back(s);
  } else if (o.table == "first-gap") {
    for (auto& s : growing_first_gap_sets()) spec.sets.push_back(s);
  } else if (!o.table.empty()) {
    throw UsageError("--table must be equal, last-gap or first-gap");
  }
  if (!o.algos.empty()) {
    spec.algorithms.clear();
    for (const auto& a : o.algos) spec.algorithms.push_back(parse_algorithm(a));
  }
  const BenchReport report = run_benchmark(spec);
  if (!o.csv.empty()) {
    std::ofstream file(o.csv);
    if (!file) throw UsageError("cannot write " + o.csv);
    report.write_csv(file);
  }
  if (o.json)
    out << report.to_json() << '\n';
  else
    report.write_csv(out);
  return kExitOk;
}

int cmd_selftest(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.max_n < 1) throw UsageError("--max-n must be >= 1");
  if (o.max_n > kBruteGuard && !o.override_guards)
    throw SizeGuardError("selftest beyond n = " + std::to_string(kBruteGuard) +
                         " needs --override-guards");
  const SelftestResult result = run_selftest(o.max_n);
  for (const auto& f : result.failures) err << "MISMATCH " << f << '\n';
  out << "selftest n<=" << o.max_n << ": " << result.checks << " checks, "
      << result.failures.size() << " failures\n";
  return result.ok() ? kExitOk : kExitDomain;
}

}  // namespace

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
  Options o;
  CLI::App app{"Pinnacle sets of permutations: exact counts and checks",
               "pinnacle"};
  app.require_subcommand(1);

  const auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", o.json, "Machine-readable output");
  };
  const auto add_guard = [&](CLI::App* cmd) {
    cmd->add_flag("--override-guards", o.override_guards,
                  "Allow exhaustive sweeps beyond the default size guards");
  };

  auto* stats = app.add_subcommand("stats", "Pinnacles, peaks and vales of a permutation");
  stats->add_option("--perm", o.perm, "Permutation, e.g. \"1 8 5 2 4 3 7 6\"")->required();
  add_json(stats);

  auto* admissible = app.add_subcommand("admissible", "Admissibility of a set, or #A_n");
  admissible->add_option("--set", o.set, "Comma-separated set");
  admissible->add_option("--n", o.n, "Ambient size");
  add_json(admissible);

  auto* enumerate = app.add_subcommand("enumerate", "List the admissible sets of [n]");
  enumerate->add_option("--n", o.n, "Ambient size")->required();
  enumerate->add_flag("--distribution", o.distribution,
                      "Exhaustive count of S_n per pinnacle set");
  add_json(enumerate);
  add_guard(enumerate);

  auto* count = app.add_subcommand("count", "Permutations of [n] with pinnacle set S");
  count->add_option("--set", o.set, "Comma-separated set")->required();
  count->add_option("--n", o.n, "Ambient size")->required();
  count->add_option("--algo", o.algo, "dale | comp | vale | closed | brute");
  count->add_option("--ordering", o.ordering, "Left-to-right pinnacle order, e.g. 5,3,7");
  count->add_option("--vale-factor", o.vale_factor, "falling | binomial");
  add_json(count);
  add_guard(count);

  auto* orderings = app.add_subcommand("orderings", "Admissible orderings of S");
  orderings->add_option("--set", o.set, "Comma-separated set")->required();
  add_json(orderings);
  add_guard(orderings);

  auto* valesets = app.add_subcommand("valesets", "Vale sets compatible with S in [n]");
  valesets->add_option("--set", o.set, "Comma-separated set")->required();
  valesets->add_option("--n", o.n, "Ambient size")->required();
  add_json(valesets);

  auto* bench = app.add_subcommand("bench", "Time the counting algorithms");
  bench->add_option("--set", o.sets, "Set to time (repeatable)");
  bench->add_option("--table", o.table, "equal | last-gap | first-gap");
  bench->add_option("--n", o.n, "Ambient size (default 1000)");
  bench->add_option("--algo", o.algos, "Algorithms (repeatable; default vale, comp)");
  bench->add_option("--reps", o.reps, "Timed repetitions")->check(CLI::PositiveNumber);
  bench->add_option("--warmup", o.warmup, "Untimed warmup runs")->check(CLI::NonNegativeNumber);
  bench->add_option("--budget", o.budget, "Seconds per set and algorithm before runs are cut short");
  bench->add_option("--csv", o.csv, "Also write the CSV report to this file");
  add_json(bench);

  auto* selftest = app.add_subcommand("selftest", "Formula/oracle agreement sweep");
  selftest->add_option("--max-n", o.max_n, "Largest n swept (default 7)");
  add_guard(selftest);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (stats->parsed()) return cmd_stats(o, out);
    if (admissible->parsed()) return cmd_admissible(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (count->parsed()) return cmd_count(o, out);
    if (orderings->parsed()) return cmd_orderings(o, out);
    if (valesets->parsed()) return cmd_valesets(o, out);
    if (bench->parsed()) return cmd_bench(o, out);
    if (selftest->parsed()) return cmd_selftest(o, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // DomainError, SizeGuardError and UnsupportedSizeError.
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace pinnacle
