#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pinnacle/count.hpp"
#include "pinnacle/permutation.hpp"

namespace pinnacle {

// Exhaustive ground truth over small symmetric groups. Guards keep default
// runs at desk scale; GuardPolicy::kOverride lifts them.

inline constexpr int kBruteGuard = 9;
inline constexpr int kValeFamilyGuard = 8;

/// Pinnacle-set distribution of S_n: every realized S with its count.
struct Distribution {
  int n = 0;
  std::map<ValueSet, Count> table;

  Count total() const;
  /// {"4,7,9": "4128", ...}; the empty set is keyed by "".
  std::string to_json() const;
};

/// Scans S_n for permutations with pinnacle set exactly S.
Count brute_count(const ValueSet& s, int n,
                  GuardPolicy policy = GuardPolicy::kEnforce);

/// Sharded over first letters across up to worker_count() threads.
Distribution distribution(int n, GuardPolicy policy = GuardPolicy::kEnforce);

/// Left-to-right pinnacle orders realized in S_{max S} with pinnacle set S.
std::set<std::vector<int>> brute_orderings(
    const ValueSet& s, GuardPolicy policy = GuardPolicy::kEnforce);

/// brute_orderings for every pinnacle set realized in S_n, in one sweep.
std::map<ValueSet, std::set<std::vector<int>>> ordering_table(
    int n, GuardPolicy policy = GuardPolicy::kEnforce);

/// Sentinel vale sets of the permutations of [n] with pinnacle set S.
std::set<ValueSet> brute_vale_family(const ValueSet& s, int n,
                                     GuardPolicy policy = GuardPolicy::kEnforce);

/// PINNACLE_THREADS if set to a positive integer, else hardware concurrency.
unsigned worker_count();

}  // namespace pinnacle
