#include "pinnacle/permutation.hpp"

#include <charconv>
#include <limits>

#include "pinnacle/errors.hpp"

namespace pinnacle {

namespace {

int parse_positive(std::string_view token) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw UsageError("malformed integer token '" + std::string(token) + "'");
  if (value < 1)
    throw UsageError("values must be positive, got " + std::string(token));
  return value;
}

std::vector<int> split_integers(std::string_view text, std::string_view seps) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (seps.find(text[pos]) != std::string_view::npos) {
      ++pos;
      continue;
    }
    std::size_t end = text.find_first_of(seps, pos);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(parse_positive(text.substr(pos, end - pos)));
    pos = end;
  }
  return out;
}

}  // namespace

ValueSet::ValueSet(std::vector<int> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 1) throw DomainError("set values must be positive");
    if (i > 0 && values_[i] <= values_[i - 1])
      throw DomainError("set values must be strictly increasing");
  }
}

ValueSet ValueSet::from_unsorted(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return ValueSet(std::move(values));
}

std::string ValueSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

ValueSet parse_set(std::string_view text) {
  // Empty fields ("4,,7") are malformed; surrounding blanks are tolerated.
  std::vector<int> values;
  std::size_t first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  std::size_t last = text.find_last_not_of(" \t");
  text = text.substr(first, last - first + 1);
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    std::size_t b = field.find_first_not_of(" \t");
    if (b == std::string_view::npos)
      throw UsageError("empty field in set '" + std::string(text) + "'");
    std::size_t e = field.find_last_not_of(" \t");
    values.push_back(parse_positive(field.substr(b, e - b + 1)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return ValueSet::from_unsorted(std::move(values));
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  if (n < 1) throw DomainError("a permutation needs n >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw DomainError("word is not a permutation of [" + std::to_string(n) +
                        "]");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> word(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

Permutation Permutation::parse(std::string_view text) {
  return Permutation(split_integers(text, " ,\t"));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word_[i]);
  }
  return out;
}

std::string Permutation::to_compact_string() const {
  std::string out;
  for (int v : word_) out += std::to_string(v);
  return out;
}

namespace {

Permutation rotate_to_one(const Permutation& p) {
  std::vector<int> word(p.word().begin(), p.word().end());
  std::rotate(word.begin(), std::find(word.begin(), word.end(), 1), word.end());
  return Permutation(std::move(word));
}

}  // namespace

CyclicPermutation::CyclicPermutation(const Permutation& any_rotation)
    : representative_(rotate_to_one(any_rotation)) {}

ValueSet pinnacle_set(std::span<const int> w) {
  std::vector<int> out;
  for (std::size_t i = 1; i + 1 < w.size(); ++i)
    if (w[i - 1] < w[i] && w[i] > w[i + 1]) out.push_back(w[i]);
  return ValueSet::from_unsorted(std::move(out));
}

ValueSet pinnacle_set(const Permutation& p) { return pinnacle_set(p.word()); }

ValueSet peak_set(std::span<const int> w) {
  std::vector<int> out;
  for (std::size_t i = 1; i + 1 < w.size(); ++i)
    if (w[i - 1] < w[i] && w[i] > w[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return ValueSet(std::move(out));
}

ValueSet peak_set(const Permutation& p) { return peak_set(p.word()); }

ValueSet vale_set(std::span<const int> w, ValeBoundary boundary) {
  constexpr int kInf = std::numeric_limits<int>::max();
  const std::size_t n = w.size();
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i) {
    const bool interior = i > 0 && i + 1 < n;
    if (!interior && boundary == ValeBoundary::kInterior) continue;
    const int left = i > 0 ? w[i - 1] : kInf;
    const int right = i + 1 < n ? w[i + 1] : kInf;
    if (left > w[i] && w[i] < right) out.push_back(w[i]);
  }
  return ValueSet::from_unsorted(std::move(out));
}

ValueSet vale_set(const Permutation& p, ValeBoundary boundary) {
  return vale_set(p.word(), boundary);
}

ValueSet cyclic_pinnacle_set(const CyclicPermutation& c) {
  const auto w = c.representative().word();
  const std::size_t n = w.size();
  std::vector<int> out;
  if (n < 2) return {};
  for (std::size_t i = 0; i < n; ++i) {
    const int left = w[(i + n - 1) % n];
    const int right = w[(i + 1) % n];
    if (left < w[i] && w[i] > right) out.push_back(w[i]);
  }
  return ValueSet::from_unsorted(std::move(out));
}

CyclicPermutation lift_to_cyclic(const Permutation& p) {
  std::vector<int> word(p.word().begin(), p.word().end());
  word.push_back(p.n() + 1);
  return CyclicPermutation(Permutation(std::move(word)));
}

void check_permutation_guard(int n, GuardPolicy policy) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (n > kPermutationGuard && policy == GuardPolicy::kEnforce)
    throw SizeGuardError("refusing to sweep " + std::to_string(n) +
                         "! permutations (guard n <= " +
                         std::to_string(kPermutationGuard) + ")");
}

std::vector<Permutation> all_permutations(int n, GuardPolicy policy) {
  std::vector<Permutation> out;
  for_each_permutation(
      n,
      [&](std::span<const int> w) {
        out.emplace_back(std::vector<int>(w.begin(), w.end()));
      },
      policy);
  return out;
}

}  // namespace pinnacle
