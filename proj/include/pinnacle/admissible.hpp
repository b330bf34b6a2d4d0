#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pinnacle/count.hpp"
#include "pinnacle/permutation.hpp"

namespace pinnacle {

/// s_i > 2i for every i (1-based). The empty set is admissible.
bool is_admissible(const ValueSet& s);

/// Throws DomainError naming the first violated bound when s is not
/// admissible, or when it does not fit in [3, n] (pass n = 0 to skip that).
void require_admissible(const ValueSet& s, int n = 0);

/// All admissible S in [n] (so within [3, n]), including the empty set, in
/// lexicographic order.
std::vector<ValueSet> enumerate_admissible(int n);

/// binom(n-1, floor((n-1)/2)).
Count count_admissible(int n);

/// Number of admissible sets with maximum m and d elements:
/// (m-2d+1)/(m-1) * binom(m-1, d-1), zero when m <= 2d.
Count pinnacle_count(int m, int d);

/// ((m-2d+1)/(d-1)!) * prod_{i=2}^{d-1} (m-i), evaluated exactly. For d = 1
/// the polynomial is the constant 1 (see README: the printed product form
/// degenerates there).
Rational pd_polynomial(int d, const Rational& m);

/// A word over {X, Y} in which every nonempty prefix has more X than Y.
class BallotSequence {
 public:
  /// Throws DomainError if `letters` is not a ballot sequence.
  explicit BallotSequence(std::string letters);

  const std::string& letters() const { return letters_; }
  int x_count() const { return x_count_; }
  int y_count() const { return y_count_; }
  std::size_t size() const { return letters_.size(); }

  friend bool operator==(const BallotSequence&, const BallotSequence&) =
      default;

 private:
  std::string letters_;
  int x_count_ = 0;
  int y_count_ = 0;
};

bool is_ballot_word(std::string_view letters);

/// (p-q)/(p+q) * binom(p+q, q). Requires p > q >= 0.
Count count_ballot(int p, int q);

inline constexpr int kBallotGuard = 24;

/// Every (p, q) ballot sequence once, lexicographic with X < Y.
void for_each_ballot(int p, int q,
                     const std::function<void(const BallotSequence&)>& visit,
                     GuardPolicy policy = GuardPolicy::kEnforce);
std::vector<BallotSequence> enumerate_ballot(
    int p, int q, GuardPolicy policy = GuardPolicy::kEnforce);

/// {i : beta_i = Y} plus {m}; beta must have length m - 1.
ValueSet eta(const BallotSequence& beta, int m);
/// Inverse of eta: X at i not in S, Y at i in S, for i < max S.
BallotSequence eta_inv(const ValueSet& s);

}  // namespace pinnacle
