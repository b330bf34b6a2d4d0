#pragma once

#include <span>
#include <string>
#include <vector>

#include "pinnacle/count.hpp"
#include "pinnacle/permutation.hpp"

namespace pinnacle {

// Orderings are linear arrangements of S. Each is lifted to a cyclic ordering
// of S + {n+1} by appending the maximum; only the gaps n_0..n_{d-1} matter,
// so none of these functions take an ambient n.

/// Whether some permutation has pinnacle set S with its pinnacles appearing
/// left to right in the order `sigma`. Throws DomainError unless sigma is a
/// rearrangement of an admissible S.
bool is_admissible_ordering(const ValueSet& s, std::span<const int> sigma);

/// Whether count_orderings applies the fillability test to each dale set.
enum class DaleFilter {
  kFillable,  // count admissible orderings
  kAll,       // count every ordering, which gives d!
};

/// #O(S), summed over dale sets B + {1_l, 1_r} with B of size d - 1 drawn
/// from the ranks 2..d. The empty set has the single empty ordering.
Count count_orderings(const ValueSet& s,
                      DaleFilter filter = DaleFilter::kFillable);

/// Same count grouped into compositions alpha in {0,1,2}^{d-1} with
/// |alpha| = d - 1, weighted by 2^o; alpha_i counts dales of rank i + 1.
Count count_orderings_composition(const ValueSet& s);

inline constexpr int kOrderingGuard = 8;

/// Admissible orderings in lexicographic order. Guarded at d <= 8.
std::vector<std::vector<int>> enumerate_orderings(
    const ValueSet& s, GuardPolicy policy = GuardPolicy::kEnforce);

/// "5,3,7".
std::string format_ordering(std::span<const int> sigma);
/// Parses "5,3,7" keeping the given order; throws UsageError when malformed.
std::vector<int> parse_ordering(std::string_view text);

}  // namespace pinnacle
