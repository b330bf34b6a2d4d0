#include "pinnacle/dales.hpp"

#include <bit>

#include "pinnacle/admissible.hpp"
#include "pinnacle/errors.hpp"

namespace pinnacle {

GapProfile::GapProfile(ValueSet s, int n) : s_(std::move(s)), n_(n) {
  if (n < 1) throw DomainError("n must be >= 1");
  require_admissible(s_, n);
  int previous = 0;
  for (int v : s_) {
    gaps_.push_back(v - previous - 1);
    previous = v;
  }
  gaps_.push_back(n + 1 - previous - 1);
}

int GapProfile::gaps_below(int k) const {
  int total = 0;
  for (int i = 0; i < k; ++i) total += gaps_[static_cast<std::size_t>(i)];
  return total;
}

std::string DaleSymbol::to_string() const {
  return std::to_string(rank) + (side == DaleSide::kLeft ? "_l" : "_r");
}

DaleSelection::DaleSelection(int d, std::uint64_t mask) : d_(d), mask_(mask) {
  if (d < 0 || d > 31) throw DomainError("dale selections support d <= 31");
  if (d < 32 && (mask >> (2 * d)) != 0)
    throw DomainError("dale selection has a symbol of rank > d");
}

DaleSelection::DaleSelection(int d, std::span<const DaleSymbol> members)
    : DaleSelection(d, 0) {
  for (const auto& m : members) {
    if (m.rank < 1 || m.rank > d)
      throw DomainError("dale rank " + std::to_string(m.rank) +
                        " outside [1, " + std::to_string(d) + "]");
    mask_ |= std::uint64_t{1} << m.ordinal();
  }
}

int DaleSelection::size() const { return std::popcount(mask_); }

std::vector<DaleSymbol> DaleSelection::members() const {
  std::vector<DaleSymbol> out;
  for (int k = 0; k < 2 * d_; ++k)
    if ((mask_ >> k) & 1U)
      out.push_back({k / 2 + 1, k % 2 ? DaleSide::kRight : DaleSide::kLeft});
  return out;
}

std::vector<int> DaleSelection::ranks() const {
  std::vector<int> out;
  for (int k = 0; k < 2 * d_; ++k)
    if ((mask_ >> k) & 1U) out.push_back(k / 2 + 1);
  return out;
}

std::vector<int> DaleSelection::rank_multiplicities() const {
  std::vector<int> out(static_cast<std::size_t>(d_), 0);
  for (int k = 0; k < 2 * d_; ++k)
    if ((mask_ >> k) & 1U) ++out[static_cast<std::size_t>(k / 2)];
  return out;
}

std::vector<int> DaleSelection::suffix_counts() const {
  return GapComposition(rank_multiplicities()).suffix_counts();
}

std::string DaleSelection::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& m : members()) {
    if (!first) out += ',';
    out += m.to_string();
    first = false;
  }
  return out + "}";
}

GapComposition::GapComposition(std::vector<int> parts)
    : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0 || p > 2) throw DomainError("composition parts must be 0, 1 or 2");
}

int GapComposition::total() const {
  int t = 0;
  for (int p : parts_) t += p;
  return t;
}

int GapComposition::ones() const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), 1));
}

std::vector<int> GapComposition::ranks() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    for (int k = 0; k < parts_[i]; ++k) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<int> GapComposition::suffix_counts() const {
  std::vector<int> out(parts_.size() + 1, 0);
  for (std::size_t i = parts_.size(); i-- > 0;) out[i] = out[i + 1] + parts_[i];
  return out;
}

DaleSelection dale_rank_set(std::span<const int> tau) {
  const int size = static_cast<int>(tau.size());
  if (size < 1) throw DomainError("a cyclic ordering needs at least one index");
  std::vector<bool> seen(static_cast<std::size_t>(size) + 1, false);
  for (int t : tau) {
    if (t < 1 || t > size || seen[static_cast<std::size_t>(t)])
      throw DomainError("tau is not an ordering of [d+1]");
    seen[static_cast<std::size_t>(t)] = true;
  }
  const int d = size - 1;
  std::vector<DaleSymbol> members;
  if (d == 0) return DaleSelection(0, std::uint64_t{0});
  for (int k = 0; k < size; ++k) {
    const int left = tau[static_cast<std::size_t>(k)];
    const int right = tau[static_cast<std::size_t>((k + 1) % size)];
    // The dale between them sits right of `left` and left of `right`.
    if (left < right)
      members.push_back({left, DaleSide::kRight});
    else
      members.push_back({right, DaleSide::kLeft});
  }
  return DaleSelection(d, members);
}

Count orderings_containing(int d, std::span<const int> ranks) {
  const int b = static_cast<int>(ranks.size());
  if (b > d) throw DomainError("orderings_containing needs b <= d");
  Count result = factorial(static_cast<unsigned>(d - b));
  for (int i = 0; i < b; ++i) {
    const int factor = d + 1 - i - ranks[static_cast<std::size_t>(b - 1 - i)];
    if (factor <= 0) return 0;
    result *= factor;
  }
  return result;
}

Count placement_product(const GapProfile& gaps, std::span<const int> suffix) {
  const int d = gaps.d();
  Count result = 1;
  for (int i = 0; i <= d; ++i) {
    const int base = d + 1 - i - suffix[static_cast<std::size_t>(i)];
    const int exponent = gaps.gap(i);
    if (exponent == 0 || base == 1) continue;
    if (base == 0) return 0;
    result *= power(base, static_cast<unsigned>(exponent));
  }
  return result;
}

}  // namespace pinnacle
