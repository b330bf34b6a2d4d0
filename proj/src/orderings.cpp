#include "pinnacle/orderings.hpp"

#include <algorithm>
#include <bit>

#include "pinnacle/admissible.hpp"
#include "pinnacle/dales.hpp"
#include "pinnacle/errors.hpp"

namespace pinnacle {

namespace {

GapProfile profile_of(const ValueSet& s) {
  return GapProfile(s, s.empty() ? 1 : s.max());
}

// j <= n_0 + ... + n_{r_j - 1} for every j, ranks sorted ascending.
bool dales_fillable(const GapProfile& gaps, std::span<const int> ranks) {
  for (std::size_t j = 0; j < ranks.size(); ++j)
    if (static_cast<int>(j) + 1 > gaps.gaps_below(ranks[j])) return false;
  return true;
}

// prod_{i=0}^{d-2} (d+1-i-r_{d-1-i}) over the d-1 ranks of B.
Count linking_product(int d, std::span<const int> ranks) {
  Count result = 1;
  const int b = static_cast<int>(ranks.size());
  for (int i = 0; i < b; ++i) {
    const int factor = d + 1 - i - ranks[static_cast<std::size_t>(b - 1 - i)];
    if (factor <= 0) return 0;
    result *= factor;
  }
  return result;
}

std::vector<int> with_rank_one_pair(std::span<const int> ranks) {
  std::vector<int> out{1, 1};
  out.insert(out.end(), ranks.begin(), ranks.end());
  return out;
}

}  // namespace

bool is_admissible_ordering(const ValueSet& s, std::span<const int> sigma) {
  require_admissible(s);
  std::vector<int> sorted(sigma.begin(), sigma.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != s.values())
    throw DomainError("ordering is not a rearrangement of {" + s.to_string() +
                      "}");
  const int d = static_cast<int>(s.size());
  if (d == 0) return true;
  const GapProfile gaps = profile_of(s);
  std::vector<int> tau;
  for (int v : sigma)
    tau.push_back(
        static_cast<int>(std::lower_bound(s.begin(), s.end(), v) - s.begin()) +
        1);
  tau.push_back(d + 1);
  return dales_fillable(gaps, dale_rank_set(tau).ranks());
}

Count count_orderings(const ValueSet& s, DaleFilter filter) {
  require_admissible(s);
  const int d = static_cast<int>(s.size());
  if (d == 0) return 1;
  const GapProfile gaps = profile_of(s);
  // Symbols of D' = D - {1_l, 1_r}: ordinals 0..2d-3 stand for 2_l..d_r.
  const int symbols = 2 * (d - 1);
  Count total = 0;
  std::vector<int> ranks;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << symbols); ++mask) {
    if (std::popcount(mask) != d - 1) continue;
    ranks.clear();
    for (int k = 0; k < symbols; ++k)
      if ((mask >> k) & 1U) ranks.push_back(k / 2 + 2);
    if (filter == DaleFilter::kFillable &&
        !dales_fillable(gaps, with_rank_one_pair(ranks)))
      continue;
    total += linking_product(d, ranks);
  }
  return total;
}

Count count_orderings_composition(const ValueSet& s) {
  require_admissible(s);
  const int d = static_cast<int>(s.size());
  if (d == 0) return 1;
  const GapProfile gaps = profile_of(s);
  Count total = 0;
  std::vector<int> alpha(static_cast<std::size_t>(d - 1), 0);
  std::vector<int> ranks;
  while (true) {
    int size = 0;
    int ones = 0;
    for (int a : alpha) {
      size += a;
      ones += a == 1;
    }
    if (size == d - 1) {
      ranks.clear();
      for (std::size_t i = 0; i < alpha.size(); ++i)
        for (int k = 0; k < alpha[i]; ++k)
          ranks.push_back(static_cast<int>(i) + 2);
      if (dales_fillable(gaps, with_rank_one_pair(ranks)))
        total += linking_product(d, ranks) << ones;
    }
    std::size_t k = alpha.size();
    while (k > 0 && alpha[k - 1] == 2) alpha[--k] = 0;
    if (k == 0) break;
    ++alpha[k - 1];
  }
  return total;
}

std::vector<std::vector<int>> enumerate_orderings(const ValueSet& s,
                                                  GuardPolicy policy) {
  require_admissible(s);
  if (static_cast<int>(s.size()) > kOrderingGuard &&
      policy == GuardPolicy::kEnforce)
    throw SizeGuardError("refusing to enumerate orderings of more than " +
                         std::to_string(kOrderingGuard) + " pinnacles");
  std::vector<std::vector<int>> out;
  std::vector<int> sigma(s.begin(), s.end());
  do {
    if (is_admissible_ordering(s, sigma)) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::string format_ordering(std::span<const int> sigma) {
  std::string out;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sigma[i]);
  }
  return out;
}

std::vector<int> parse_ordering(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string field(text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos));
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(field, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed ordering token '" + field + "'");
    }
    if (field.find_first_not_of(" \t", used) != std::string::npos || value < 1)
      throw UsageError("malformed ordering token '" + field + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace pinnacle
