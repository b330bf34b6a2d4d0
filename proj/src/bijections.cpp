#include "pinnacle/bijections.hpp"

#include "pinnacle/admissible.hpp"
#include "pinnacle/errors.hpp"

namespace pinnacle {

LatticePath::LatticePath(std::string steps) : steps_(std::move(steps)) {
  heights_.reserve(steps_.size() + 1);
  heights_.push_back(0);
  for (char c : steps_) {
    if (c != 'U' && c != 'D')
      throw DomainError("lattice path steps must be U or D");
    heights_.push_back(heights_.back() + (c == 'U' ? 1 : -1));
  }
}

namespace {

void require_subset_of_2n(const ValueSet& a, int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (!a.empty() && (a[0] < 2 || a.max() > n))
    throw DomainError("A = {" + a.to_string() + "} is not a subset of [2, " +
                      std::to_string(n) + "]");
}

void require_interleaving_size(const ValueSet& a, int n) {
  require_subset_of_2n(a, n);
  const std::size_t k = static_cast<std::size_t>((n - 1) / 2);
  if (a.size() != k)
    throw DomainError("A must have floor((n-1)/2) = " + std::to_string(k) +
                      " elements, got " + std::to_string(a.size()));
}

}  // namespace

Permutation interleaved_from_subset(const ValueSet& a, int n) {
  require_interleaving_size(a, n);
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < a.size(); ++i) word[2 * i + 1] = a[i];
  int next = 1;
  for (int& slot : word) {
    if (slot) continue;
    while (a.contains(next)) ++next;
    slot = next++;
  }
  return Permutation(std::move(word));
}

Permutation right_canonical(const ValueSet& s, int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  require_admissible(s, n);
  // Both pools are consumed from the largest value down.
  std::vector<int> pinnacles(s.begin(), s.end());
  std::vector<int> others;
  for (int v = 1; v <= n; ++v)
    if (!s.contains(v)) others.push_back(v);

  std::vector<int> word(static_cast<std::size_t>(n));
  bool last_was_other = false;
  int last_value = 0;
  for (int p = n; p >= 1; --p) {
    const bool even_tail = n % 2 == 0 && p == n - 1;
    const bool place_pinnacle = !pinnacles.empty() && last_was_other &&
                                last_value < pinnacles.back() && !even_tail;
    if (place_pinnacle) {
      last_value = pinnacles.back();
      pinnacles.pop_back();
      last_was_other = false;
    } else {
      if (others.empty())
        throw IntegrityError("right_canonical ran out of non-pinnacles");
      last_value = others.back();
      others.pop_back();
      last_was_other = true;
    }
    word[static_cast<std::size_t>(p - 1)] = last_value;
  }
  return Permutation(std::move(word));
}

ValueSet psi(const ValueSet& a, int n) {
  return pinnacle_set(interleaved_from_subset(a, n));
}

LatticePath lattice_path_from_subset(const ValueSet& a, int n) {
  require_subset_of_2n(a, n);
  std::string steps;
  for (int i = 2; i <= n; ++i) steps.push_back(a.contains(i) ? 'D' : 'U');
  return LatticePath(std::move(steps));
}

ValueSet phi(const ValueSet& a, int n, StepPlacement placement) {
  require_interleaving_size(a, n);
  const LatticePath path = lattice_path_from_subset(a, n);
  std::vector<int> out;
  for (int i = 2; i <= n; ++i) {
    const int from = path.height_before(i);
    const int to = path.height_after(i);
    const bool whole = placement == StepPlacement::kWholeStep;
    if (path.step(i) == 'U') {
      if (from < 0 && (!whole || to < 0)) out.push_back(i);
    } else {
      if (from >= 0 && (!whole || to >= 0)) out.push_back(i);
    }
  }
  return ValueSet(std::move(out));
}

}  // namespace pinnacle
