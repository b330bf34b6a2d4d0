#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pinnacle/count.hpp"
#include "pinnacle/permutation.hpp"

namespace pinnacle {

/// Gap vector of an admissible S = {s_1 < ... < s_d} inside [n]:
/// n_i = s_{i+1} - s_i - 1 for 0 <= i <= d, with s_0 = 0, s_{d+1} = n + 1.
class GapProfile {
 public:
  /// Throws DomainError unless S is admissible and fits in [3, n].
  GapProfile(ValueSet s, int n);

  const ValueSet& set() const { return s_; }
  int n() const { return n_; }
  int d() const { return static_cast<int>(s_.size()); }
  const std::vector<int>& gaps() const { return gaps_; }
  int gap(int i) const { return gaps_[static_cast<std::size_t>(i)]; }
  /// n_0 + ... + n_{k-1}: the non-pinnacles below s_k.
  int gaps_below(int k) const;

 private:
  ValueSet s_;
  int n_;
  std::vector<int> gaps_;
};

enum class DaleSide { kLeft, kRight };

/// One element i_l or i_r of the master dale rank set D.
struct DaleSymbol {
  int rank;
  DaleSide side;

  /// Position in the order 1_l < 1_r < 2_l < ... < d_r, starting at 0.
  int ordinal() const { return 2 * (rank - 1) + (side == DaleSide::kRight); }
  std::string to_string() const;

  friend bool operator==(const DaleSymbol&, const DaleSymbol&) = default;
};

/// Subset B of D = {1_l, 1_r, ..., d_l, d_r}, stored as a bit per symbol.
class DaleSelection {
 public:
  DaleSelection(int d, std::uint64_t mask);
  DaleSelection(int d, std::span<const DaleSymbol> members);

  int d() const { return d_; }
  std::uint64_t mask() const { return mask_; }
  /// b = #B.
  int size() const;
  std::vector<DaleSymbol> members() const;
  bool contains(DaleSymbol symbol) const {
    return (mask_ >> symbol.ordinal()) & 1U;
  }
  /// r_1 <= ... <= r_b: rank of the j-th smallest member.
  std::vector<int> ranks() const;
  /// b_1, ..., b_{d+1}: members with rank at least i.
  std::vector<int> suffix_counts() const;
  /// Number of members of each rank, alpha_1..alpha_d.
  std::vector<int> rank_multiplicities() const;

  /// "{1_l,3_l,3_r,4_r}".
  std::string to_string() const;

  friend bool operator==(const DaleSelection&, const DaleSelection&) = default;

 private:
  int d_;
  std::uint64_t mask_;
};

/// Weak composition alpha_1..alpha_d with parts in {0, 1, 2}; stands for the
/// 2^o dale selections having alpha_i members of rank i.
class GapComposition {
 public:
  explicit GapComposition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int d() const { return static_cast<int>(parts_.size()); }
  /// |alpha|.
  int total() const;
  /// Number of parts equal to 1.
  int ones() const;
  /// r_j = min{ i : alpha_1 + ... + alpha_i >= j }, j = 1..|alpha|.
  std::vector<int> ranks() const;
  /// b_i = alpha_i + ... + alpha_d for i = 1..d+1.
  std::vector<int> suffix_counts() const;

 private:
  std::vector<int> parts_;
};

/// Dale rank set of a cyclic ordering tau of the indices 1..d+1: for each
/// cyclically adjacent pair the smaller index is the rank, marked l when the
/// dale sits to the left of that pinnacle and r when it sits to the right.
DaleSelection dale_rank_set(std::span<const int> tau);

/// (d-b)! * prod_{i=0}^{b-1} (d+1-i-r_{b-i}): the number of cyclic orderings
/// tau of [d+1] whose dale rank set contains B. Requires b <= d.
Count orderings_containing(int d, std::span<const int> ranks);

/// prod_{i=0}^{d} (d+1-i-b_{i+1})^{n_i}, with 0^0 = 1.
Count placement_product(const GapProfile& gaps, std::span<const int> suffix);

}  // namespace pinnacle
