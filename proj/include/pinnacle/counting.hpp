#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "pinnacle/count.hpp"
#include "pinnacle/dales.hpp"
#include "pinnacle/permutation.hpp"

namespace pinnacle {

// Every function here returns p_S(n) = #{pi in S_n : Pin(pi) = S} or a piece
// of it, and throws DomainError when S is not admissible inside [3, n].

/// Inclusion-exclusion over dale selections B of D with |B| <= d.
Count count_dale(const ValueSet& s, int n);

/// Same sum, grouped by rank multiplicities: compositions in {0,1,2}^d with
/// |alpha| <= d, each weighted by 2^o.
Count count_composition(const ValueSet& s, int n);

/// Closed forms for |S| <= 2. Throws UnsupportedSizeError otherwise.
Count count_closed(const ValueSet& s, int n);

/// Permutations with pinnacle set S whose pinnacles read left to right as
/// `sigma` (a rearrangement of S).
Count count_by_ordering(const ValueSet& s, int n, std::span<const int> sigma);

/// Factor applied per pinnacle in the vale-set formula.
enum class ValeFactor {
  kFallingFactorial,  // N (N - 1): agrees with exhaustive counts
  kBinomial,          // binom(N, 2): the printed form, off by 2^d
};

/// Sum over vale sets T in V_n(S) of per-pinnacle factors times N_ST(t)
/// over the remaining values, N_ST(i) = #{t < i} - #{s < i}.
Count count_vale(const ValueSet& s, int n,
                 ValeFactor factor = ValeFactor::kFallingFactorial);

/// V_n(S): every T = {1} plus alpha_1 values from [2, s_1 - 1] and alpha_i
/// values from (s_{i-1}, s_i), alpha in K(d). Always |T| = d + 1.
std::vector<ValueSet> enumerate_vale_sets(const ValueSet& s, int n);
/// Visitor form; the span is only valid during the call.
void for_each_vale_set(const ValueSet& s, int n,
                       const std::function<void(std::span<const int>)>& visit);

/// #V_n(S) = sum over K(d) of binom(n_0 - 1, alpha_1) prod binom(n_{i-1}, alpha_i).
Count count_vale_sets(const ValueSet& s, int n);

enum class Algorithm { kDale, kComposition, kVale, kClosed, kBrute };

std::string_view algorithm_name(Algorithm algo);
/// Accepts "dale", "comp"/"composition", "vale", "closed", "brute".
Algorithm parse_algorithm(std::string_view name);

/// Dispatches to one of the algorithms above (kBrute goes to the oracle).
Count count_pinnacle_set(const ValueSet& s, int n, Algorithm algo);

}  // namespace pinnacle
