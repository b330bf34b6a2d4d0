#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pinnacle {

/// Whether an exhaustive sweep may exceed its default size guard.
enum class GuardPolicy { kEnforce, kOverride };

/// Strictly increasing set of positive integers. Houses pinnacle, peak and
/// vale sets as well as candidate pinnacle sets S and vale families T.
class ValueSet {
 public:
  ValueSet() = default;
  /// Throws DomainError unless `values` is strictly increasing and positive.
  explicit ValueSet(std::vector<int> values);
  ValueSet(std::initializer_list<int> values)
      : ValueSet(std::vector<int>(values)) {}

  /// Sorts and deduplicates; still rejects values < 1.
  static ValueSet from_unsorted(std::vector<int> values);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  int operator[](std::size_t i) const { return values_[i]; }
  int max() const { return values_.back(); }
  bool contains(int v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
  }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }
  const std::vector<int>& values() const { return values_; }

  /// Comma separated, "4,7,9"; the empty set renders as "".
  std::string to_string() const;

  friend bool operator==(const ValueSet&, const ValueSet&) = default;
  friend auto operator<=>(const ValueSet& a, const ValueSet& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<int> values_;
};

/// Permutation of [n] in one-line notation.
class Permutation {
 public:
  /// Throws DomainError unless `word` uses each of 1..n exactly once, n >= 1.
  explicit Permutation(std::vector<int> word);
  Permutation(std::initializer_list<int> word)
      : Permutation(std::vector<int>(word)) {}

  static Permutation identity(int n);
  /// Accepts space- and/or comma-separated values: "1 8 5 2 4 3 7 6".
  static Permutation parse(std::string_view text);

  int n() const { return static_cast<int>(word_.size()); }
  /// 0-based access.
  int operator[](std::size_t i) const { return word_[i]; }
  std::span<const int> word() const { return word_; }

  /// "1 8 5 2 4 3 7 6".
  std::string to_string() const;
  /// Digits run together, "18524376"; only unambiguous for n <= 9.
  std::string to_compact_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<int> word_;
};

/// Cyclic class [pi]; stored as the rotation that starts with 1.
class CyclicPermutation {
 public:
  explicit CyclicPermutation(const Permutation& any_rotation);

  const Permutation& representative() const { return representative_; }
  int n() const { return representative_.n(); }

  friend bool operator==(const CyclicPermutation&,
                         const CyclicPermutation&) = default;

 private:
  Permutation representative_;
};

/// Comma-separated positive integers, deduplicated and sorted: "9,4,7" and
/// "4,7,9,9" both give {4,7,9}. The empty string is the empty set. Throws
/// UsageError on a malformed token and on zero or negative values.
ValueSet parse_set(std::string_view text);

enum class ValeBoundary {
  kInterior,  // only positions 2..n-1 qualify
  kSentinel,  // word is padded with +infinity on both sides
};

ValueSet pinnacle_set(std::span<const int> word);
ValueSet pinnacle_set(const Permutation& p);
/// Positions (1-based) of the peaks.
ValueSet peak_set(std::span<const int> word);
ValueSet peak_set(const Permutation& p);
ValueSet vale_set(std::span<const int> word, ValeBoundary boundary);
ValueSet vale_set(const Permutation& p, ValeBoundary boundary);

/// Pinnacles with indices taken modulo n. For n >= 2 always contains n.
ValueSet cyclic_pinnacle_set(const CyclicPermutation& c);

/// [pi_1 ... pi_n (n+1)]; its cyclic pinnacle set is Pin(pi) plus {n+1}.
CyclicPermutation lift_to_cyclic(const Permutation& p);

inline constexpr int kPermutationGuard = 12;

/// Visits every permutation of [n] once, in lexicographic order. The visitor
/// sees a view of the current word that is only valid during the call.
template <class Visitor>
void for_each_permutation(int n, Visitor&& visit,
                          GuardPolicy policy = GuardPolicy::kEnforce);

/// Materialized form of for_each_permutation.
std::vector<Permutation> all_permutations(
    int n, GuardPolicy policy = GuardPolicy::kEnforce);

void check_permutation_guard(int n, GuardPolicy policy);

template <class Visitor>
void for_each_permutation(int n, Visitor&& visit, GuardPolicy policy) {
  check_permutation_guard(n, policy);
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    visit(std::span<const int>(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

}  // namespace pinnacle
