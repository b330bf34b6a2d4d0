#include "pinnacle/oracle.hpp"

#include <cstdlib>
#include <numeric>
#include <thread>

#include "json.hpp"

#include "pinnacle/errors.hpp"

namespace pinnacle {

namespace {

void check_guard(int n, int guard, GuardPolicy policy, const char* what) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (n > guard && policy == GuardPolicy::kEnforce)
    throw SizeGuardError(std::string(what) + ": refusing n = " +
                         std::to_string(n) + " (guard n <= " +
                         std::to_string(guard) + ")");
}

// Visits the permutations of [n] starting with `first`, lexicographically.
template <class Visitor>
void for_each_with_first(int n, int first, Visitor&& visit) {
  std::vector<int> word;
  word.push_back(first);
  for (int v = 1; v <= n; ++v)
    if (v != first) word.push_back(v);
  do {
    visit(std::span<const int>(word));
  } while (std::next_permutation(word.begin() + 1, word.end()));
}

}  // namespace

unsigned worker_count() {
  if (const char* env = std::getenv("PINNACLE_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

Count Distribution::total() const {
  Count t = 0;
  for (const auto& [key, value] : table) t += value;
  return t;
}

std::string Distribution::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table) j[key.to_string()] = to_decimal(value);
  return j.dump();
}

Count brute_count(const ValueSet& s, int n, GuardPolicy policy) {
  check_guard(n, kBruteGuard, policy, "brute_count");
  check_permutation_guard(n, policy);
  std::uint64_t hits = 0;
  for_each_permutation(
      n, [&](std::span<const int> w) { hits += pinnacle_set(w) == s; }, policy);
  return hits;
}

Distribution distribution(int n, GuardPolicy policy) {
  check_guard(n, kBruteGuard, policy, "distribution");
  check_permutation_guard(n, policy);
  const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(n));
  std::vector<std::map<ValueSet, std::uint64_t>> shards(workers);
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (int first = static_cast<int>(w) + 1; first <= n;
             first += static_cast<int>(workers))
          for_each_with_first(n, first, [&](std::span<const int> word) {
            ++shards[w][pinnacle_set(word)];
          });
      });
    }
  }
  Distribution out;
  out.n = n;
  for (const auto& shard : shards)
    for (const auto& [key, value] : shard) out.table[key] += value;
  return out;
}

std::set<std::vector<int>> brute_orderings(const ValueSet& s,
                                           GuardPolicy policy) {
  const int n = s.empty() ? 1 : s.max();
  check_guard(n, kBruteGuard, policy, "brute_orderings");
  std::set<std::vector<int>> out;
  for_each_permutation(
      n,
      [&](std::span<const int> w) {
        std::vector<int> order;
        for (std::size_t i = 1; i + 1 < w.size(); ++i)
          if (w[i - 1] < w[i] && w[i] > w[i + 1]) {
            if (!s.contains(w[i])) return;
            order.push_back(w[i]);
          }
        if (order.size() == s.size()) out.insert(std::move(order));
      },
      policy);
  return out;
}

std::map<ValueSet, std::set<std::vector<int>>> ordering_table(
    int n, GuardPolicy policy) {
  check_guard(n, kBruteGuard, policy, "ordering_table");
  check_permutation_guard(n, policy);
  std::map<ValueSet, std::set<std::vector<int>>> out;
  std::vector<int> order;
  for_each_permutation(
      n,
      [&](std::span<const int> w) {
        order.clear();
        for (std::size_t i = 1; i + 1 < w.size(); ++i)
          if (w[i - 1] < w[i] && w[i] > w[i + 1]) order.push_back(w[i]);
        out[ValueSet::from_unsorted(order)].insert(order);
      },
      policy);
  return out;
}

std::set<ValueSet> brute_vale_family(const ValueSet& s, int n,
                                     GuardPolicy policy) {
  check_guard(n, kValeFamilyGuard, policy, "brute_vale_family");
  std::set<ValueSet> out;
  for_each_permutation(
      n,
      [&](std::span<const int> w) {
        if (pinnacle_set(w) == s)
          out.insert(vale_set(w, ValeBoundary::kSentinel));
      },
      policy);
  return out;
}

}  // namespace pinnacle
