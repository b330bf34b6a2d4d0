#include "pinnacle/counting.hpp"

#include <bit>
#include <limits>

#include "pinnacle/admissible.hpp"
#include "pinnacle/errors.hpp"
#include "pinnacle/oracle.hpp"

namespace pinnacle {

namespace {

// base^{n_i} for every gap i and base in [0, d + 1]. Bases outside that range
// only occur in terms whose ordering factor already vanished.
class PowerTable {
 public:
  explicit PowerTable(const GapProfile& gaps) : d_(gaps.d()) {
    table_.resize(static_cast<std::size_t>(d_ + 1));
    for (int i = 0; i <= d_; ++i)
      for (int base = 0; base <= d_ + 1; ++base)
        table_[static_cast<std::size_t>(i)].push_back(
            power(base, static_cast<unsigned>(gaps.gap(i))));
  }

  // prod_{i=0}^{d} (d+1-i-b_{i+1})^{n_i}; suffix[i] holds b_{i+1}.
  Count product(std::span<const int> suffix) const {
    Count result = 1;
    for (int i = 0; i <= d_; ++i) {
      const int base = d_ + 1 - i - suffix[static_cast<std::size_t>(i)];
      if (base < 0 || base > d_ + 1)
        throw IntegrityError("placement base out of range");
      const Count& p = table_[static_cast<std::size_t>(i)]
                             [static_cast<std::size_t>(base)];
      if (p == 0) return 0;
      if (p != 1) result *= p;
    }
    return result;
  }

 private:
  int d_;
  std::vector<std::vector<Count>> table_;
};

Count finish(const GapProfile& gaps, const Count& sum, std::string_view who) {
  if (sum < 0)
    throw IntegrityError(std::string(who) + ": negative inclusion-exclusion total");
  const int shift = gaps.n() - 2 * gaps.d() - 1;
  return sum << shift;
}

}  // namespace

Count count_dale(const ValueSet& s, int n) {
  const GapProfile gaps(s, n);
  const int d = gaps.d();
  if (d == 0) return pow2(static_cast<unsigned>(n - 1));
  if (d > 31) throw SizeGuardError("count_dale supports d <= 31");
  const PowerTable powers(gaps);
  const std::uint64_t limit = std::uint64_t{1} << (2 * d);

  Count sum = 0;
  std::vector<int> ranks;
  std::vector<int> suffix(static_cast<std::size_t>(d) + 1);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const int b = std::popcount(mask);
    if (b > d) continue;
    ranks.clear();
    std::fill(suffix.begin(), suffix.end(), 0);
    for (int k = 0; k < 2 * d; ++k) {
      if (!((mask >> k) & 1U)) continue;
      const int rank = k / 2 + 1;
      ranks.push_back(rank);
      for (int i = 0; i < rank; ++i) ++suffix[static_cast<std::size_t>(i)];
    }
    const Count orderings = orderings_containing(d, ranks);
    if (orderings == 0) continue;
    const Count term = orderings * powers.product(suffix);
    if (b % 2)
      sum -= term;
    else
      sum += term;
  }
  return finish(gaps, sum, "count_dale");
}

Count count_composition(const ValueSet& s, int n) {
  const GapProfile gaps(s, n);
  const int d = gaps.d();
  if (d == 0) return pow2(static_cast<unsigned>(n - 1));
  const PowerTable powers(gaps);

  Count sum = 0;
  std::vector<int> parts(static_cast<std::size_t>(d), 0);
  while (true) {
    const GapComposition alpha(parts);
    const int b = alpha.total();
    if (b <= d) {
      const Count orderings = orderings_containing(d, alpha.ranks());
      if (orderings != 0) {
        Count term = orderings * powers.product(alpha.suffix_counts());
        term <<= alpha.ones();
        if (b % 2)
          sum -= term;
        else
          sum += term;
      }
    }
    // Next vector in {0,1,2}^d, last coordinate fastest.
    std::size_t k = parts.size();
    while (k > 0 && parts[k - 1] == 2) parts[--k] = 0;
    if (k == 0) break;
    ++parts[k - 1];
  }
  return finish(gaps, sum, "count_composition");
}

Count count_closed(const ValueSet& s, int n) {
  const GapProfile gaps(s, n);
  const auto u = [](int e) { return static_cast<unsigned>(e); };
  switch (s.size()) {
    case 0:
      return pow2(u(n - 1));
    case 1: {
      const int l = s[0];
      return pow2(u(n - 2)) * (pow2(u(l - 2)) - 1);
    }
    case 2: {
      const int l = s[0];
      const int m = s[1];
      return pow2(u(n + m - l - 5)) * (power(3, u(l - 1)) - pow2(u(l)) + 1) -
             pow2(u(n - 3)) * (pow2(u(l - 2)) - 1);
    }
    default:
      throw UnsupportedSizeError("closed forms cover |S| <= 2, got |S| = " +
                                 std::to_string(s.size()));
  }
}

Count count_by_ordering(const ValueSet& s, int n, std::span<const int> sigma) {
  const GapProfile gaps(s, n);
  const int d = gaps.d();
  std::vector<int> sorted(sigma.begin(), sigma.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != s.values())
    throw DomainError("ordering is not a rearrangement of {" + s.to_string() + "}");
  if (d == 0) return pow2(static_cast<unsigned>(n - 1));

  // Cut the cyclic ordering of S + {n+1} at the sentinel index d + 1.
  std::vector<int> tau;
  for (int v : sigma) {
    const auto it = std::lower_bound(s.begin(), s.end(), v);
    tau.push_back(static_cast<int>(it - s.begin()) + 1);
  }
  tau.push_back(d + 1);
  const DaleSelection dales = dale_rank_set(tau);
  const std::vector<DaleSymbol> members = dales.members();
  const PowerTable powers(gaps);

  Count sum = 0;
  const std::uint64_t limit = std::uint64_t{1} << members.size();
  std::vector<int> suffix(static_cast<std::size_t>(d) + 1);
  for (std::uint64_t pick = 0; pick < limit; ++pick) {
    std::fill(suffix.begin(), suffix.end(), 0);
    for (std::size_t k = 0; k < members.size(); ++k)
      if ((pick >> k) & 1U)
        for (int i = 0; i < members[k].rank; ++i)
          ++suffix[static_cast<std::size_t>(i)];
    if (suffix[0] == d + 1) continue;  // the whole rank set: product is 0
    const Count term = powers.product(suffix);
    if (std::popcount(pick) % 2)
      sum -= term;
    else
      sum += term;
  }
  return finish(gaps, sum, "count_by_ordering");
}

namespace {

// Chooses `want` values from [lo, hi] into `chosen`, calling `next` for each.
void choose_range(int lo, int hi, int want, std::vector<int>& chosen,
                  const std::function<void()>& next) {
  if (want == 0) {
    next();
    return;
  }
  for (int v = lo; v <= hi - want + 1; ++v) {
    chosen.push_back(v);
    choose_range(v + 1, hi, want - 1, chosen, next);
    chosen.pop_back();
  }
}

// Gap k (1-based) spans [2, s_1 - 1] for k = 1 and (s_{k-1}, s_k) after that;
// after gap k at least k values besides 1 must have been chosen.
void grow_vale_sets(const ValueSet& s, int k, std::vector<int>& t,
                    const std::function<void(std::span<const int>)>& visit) {
  const int d = static_cast<int>(s.size());
  const int have = static_cast<int>(t.size()) - 1;
  if (k > d) {
    if (have == d) visit(t);
    return;
  }
  const int lo = k == 1 ? 2 : s[static_cast<std::size_t>(k - 2)] + 1;
  const int hi = s[static_cast<std::size_t>(k - 1)] - 1;
  for (int take = std::max(0, k - have); take <= d - have; ++take) {
    if (take > hi - lo + 1) break;
    choose_range(lo, hi, take, t, [&] { grow_vale_sets(s, k + 1, t, visit); });
  }
}

}  // namespace

void for_each_vale_set(const ValueSet& s, int n,
                       const std::function<void(std::span<const int>)>& visit) {
  const GapProfile gaps(s, n);
  std::vector<int> t{1};
  grow_vale_sets(s, 1, t, visit);
}

std::vector<ValueSet> enumerate_vale_sets(const ValueSet& s, int n) {
  std::vector<ValueSet> out;
  for_each_vale_set(s, n, [&](std::span<const int> t) {
    out.emplace_back(std::vector<int>(t.begin(), t.end()));
  });
  std::sort(out.begin(), out.end());
  return out;
}

Count count_vale_sets(const ValueSet& s, int n) {
  const GapProfile gaps(s, n);
  const int d = gaps.d();
  if (d == 0) return 1;
  // Sum over K(d): prefix sums of alpha at least their index, total d.
  Count total = 0;
  std::vector<int> alpha;
  std::function<void(int, Count)> grow = [&](int sum, Count weight) {
    const int k = static_cast<int>(alpha.size());
    if (k == d) {
      if (sum == d) total += weight;
      return;
    }
    const int available = k == 0 ? gaps.gap(0) - 1 : gaps.gap(k);
    for (int a = std::max(0, k + 1 - sum); a <= d - sum; ++a) {
      const Count c = binomial(available, a);
      if (c == 0) break;
      alpha.push_back(a);
      grow(sum + a, weight * c);
      alpha.pop_back();
    }
  };
  grow(0, 1);
  return total;
}

namespace {

// Multiplies small factors into a 64-bit accumulator, spilling into `out`
// before it would overflow.
class FactorAccumulator {
 public:
  explicit FactorAccumulator(Count& out) : out_(out) {}
  ~FactorAccumulator() { flush(); }

  void mul(std::uint64_t f) {
    if (f == 1) return;
    if (acc_ > std::numeric_limits<std::uint64_t>::max() / f) flush();
    acc_ *= f;
  }

 private:
  void flush() {
    if (acc_ != 1) out_ *= acc_;
    acc_ = 1;
  }

  Count& out_;
  std::uint64_t acc_ = 1;
};

}  // namespace

Count count_vale(const ValueSet& s, int n, ValeFactor factor) {
  const GapProfile gaps(s, n);
  const int d = gaps.d();
  if (d == 0) return pow2(static_cast<unsigned>(n - 1));
  const int top = s.max();

  Count sum = 0;
  Count term;
  for_each_vale_set(s, n, [&](std::span<const int> t) {
    term = 1;
    bool zero = false;
    {
      FactorAccumulator acc(term);
      std::size_t ti = 0;
      std::size_t si = 0;
      int below_t = 0;  // #T_i
      int below_s = 0;  // #S_i
      // Above max S every N_ST equals (d + 1) - d = 1.
      for (int v = 1; v <= top && !zero; ++v) {
        const int big_n = below_t - below_s;
        if (si < s.size() && s[si] == v) {
          std::uint64_t f = static_cast<std::uint64_t>(big_n) *
                            static_cast<std::uint64_t>(big_n - 1);
          if (factor == ValeFactor::kBinomial) f /= 2;
          if (big_n < 2) zero = true;
          acc.mul(f);
          ++si;
          ++below_s;
        } else if (ti < t.size() && t[ti] == v) {
          ++ti;
          ++below_t;
        } else {
          if (big_n <= 0) zero = true;
          acc.mul(static_cast<std::uint64_t>(big_n));
        }
      }
    }
    if (!zero) sum += term;
  });
  const int shift = n - 2 * d - 1;
  return sum << shift;
}

std::string_view algorithm_name(Algorithm algo) {
  switch (algo) {
    case Algorithm::kDale: return "dale";
    case Algorithm::kComposition: return "comp";
    case Algorithm::kVale: return "vale";
    case Algorithm::kClosed: return "closed";
    case Algorithm::kBrute: return "brute";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "dale") return Algorithm::kDale;
  if (name == "comp" || name == "composition") return Algorithm::kComposition;
  if (name == "vale") return Algorithm::kVale;
  if (name == "closed") return Algorithm::kClosed;
  if (name == "brute") return Algorithm::kBrute;
  throw UsageError("unknown algorithm '" + std::string(name) + "'");
}

Count count_pinnacle_set(const ValueSet& s, int n, Algorithm algo) {
  switch (algo) {
    case Algorithm::kDale: return count_dale(s, n);
    case Algorithm::kComposition: return count_composition(s, n);
    case Algorithm::kVale: return count_vale(s, n);
    case Algorithm::kClosed: return count_closed(s, n);
    case Algorithm::kBrute: return brute_count(s, n);
  }
  throw UsageError("unknown algorithm");
}

}  // namespace pinnacle
