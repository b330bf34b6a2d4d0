#pragma once

#include <string>
#include <vector>

#include "pinnacle/permutation.hpp"

namespace pinnacle {

/// Up-down path whose steps are indexed 2..n; U is +1, D is -1.
class LatticePath {
 public:
  explicit LatticePath(std::string steps);

  const std::string& steps() const { return steps_; }
  /// Number of steps (n - 1).
  std::size_t size() const { return steps_.size(); }
  /// Step with index i in [2, n].
  char step(int i) const { return steps_[static_cast<std::size_t>(i - 2)]; }
  /// Height before step i; height_before(2) == 0.
  int height_before(int i) const { return heights_[static_cast<std::size_t>(i - 2)]; }
  int height_after(int i) const { return heights_[static_cast<std::size_t>(i - 1)]; }

 private:
  std::string steps_;
  std::vector<int> heights_;  // heights_[k] is the height after k steps
};

/// Even positions 2, 4, ..., 2*floor((n-1)/2) hold A ascending; the other
/// positions hold [n] - A ascending. Requires A in [2, n] of that size.
Permutation interleaved_from_subset(const ValueSet& a, int n);

/// Greedy right-to-left construction whose pinnacle set is S, with the
/// pinnacles pushed as far right as they go. For even n the last two
/// positions both take non-pinnacles before any pinnacle is placed.
Permutation right_canonical(const ValueSet& s, int n);

/// Pinnacle set of the interleaved permutation of A.
ValueSet psi(const ValueSet& a, int n);

/// Step i is D when i is in A, U otherwise.
LatticePath lattice_path_from_subset(const ValueSet& a, int n);

/// How "strictly below" / "weakly above" the x-axis is read for a step.
enum class StepPlacement {
  kWholeStep,    // both endpoints satisfy the bound
  kStartHeight,  // only the starting height is tested
};

/// Indices of U steps strictly below the axis and D steps weakly above it.
/// Only the whole-step reading agrees with psi.
ValueSet phi(const ValueSet& a, int n,
             StepPlacement placement = StepPlacement::kWholeStep);

}  // namespace pinnacle
