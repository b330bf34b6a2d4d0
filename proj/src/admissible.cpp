#include "pinnacle/admissible.hpp"

#include "pinnacle/errors.hpp"

namespace pinnacle {

bool is_admissible(const ValueSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] <= 2 * static_cast<int>(i + 1)) return false;
  return true;
}

void require_admissible(const ValueSet& s, int n) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int bound = 2 * static_cast<int>(i + 1);
    if (s[i] <= bound)
      throw DomainError("set {" + s.to_string() + "} is not admissible: s_" +
                        std::to_string(i + 1) + " = " + std::to_string(s[i]) +
                        " must exceed " + std::to_string(bound));
  }
  if (n > 0 && !s.empty() && s.max() > n)
    throw DomainError("set {" + s.to_string() + "} does not fit in [3, " +
                      std::to_string(n) + "]");
}

namespace {

// Extends `prefix` with values > `from`; position k (1-based) needs value > 2k.
void grow_admissible(int n, int from, std::vector<int>& prefix,
                     std::vector<ValueSet>& out) {
  out.emplace_back(prefix);
  for (int v = from + 1; v <= n; ++v) {
    if (v <= 2 * static_cast<int>(prefix.size() + 1)) continue;
    prefix.push_back(v);
    grow_admissible(n, v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<ValueSet> enumerate_admissible(int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  std::vector<ValueSet> out;
  std::vector<int> prefix;
  grow_admissible(n, 0, prefix, out);
  return out;  // depth-first with increasing values is lexicographic
}

Count count_admissible(int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  return binomial(n - 1, (n - 1) / 2);
}

Count pinnacle_count(int m, int d) {
  if (m < 1 || d < 1) throw DomainError("pinnacle_count needs m, d >= 1");
  if (m <= 2 * d) return 0;
  Count numerator = binomial(m - 1, d - 1) * (m - 2 * d + 1);
  Count quotient, remainder;
  boost::multiprecision::divide_qr(numerator, Count(m - 1), quotient,
                                   remainder);
  if (remainder != 0)
    throw IntegrityError("pinnacle_count: (m-1) does not divide the numerator");
  return quotient;
}

Rational pd_polynomial(int d, const Rational& m) {
  if (d < 1) throw DomainError("pd_polynomial needs d >= 1");
  if (d == 1) return Rational(1);
  Rational value = (m - (2 * d - 1)) / Rational(factorial(static_cast<unsigned>(d - 1)));
  for (int i = 2; i <= d - 1; ++i) value *= (m - i);
  return value;
}

bool is_ballot_word(std::string_view letters) {
  int balance = 0;
  for (char c : letters) {
    if (c == 'X')
      ++balance;
    else if (c == 'Y')
      --balance;
    else
      return false;
    if (balance <= 0) return false;
  }
  return true;
}

BallotSequence::BallotSequence(std::string letters)
    : letters_(std::move(letters)) {
  if (!is_ballot_word(letters_))
    throw DomainError("'" + letters_ + "' is not a ballot sequence");
  for (char c : letters_) (c == 'X' ? x_count_ : y_count_)++;
}

Count count_ballot(int p, int q) {
  if (q < 0 || p <= q)
    throw DomainError("count_ballot needs p > q >= 0");
  Count numerator = binomial(p + q, q) * (p - q);
  return numerator / (p + q);
}

namespace {

void grow_ballot(int p, int q, int xs, int ys, std::string& word,
                 const std::function<void(const BallotSequence&)>& visit) {
  if (xs == p && ys == q) {
    visit(BallotSequence(word));
    return;
  }
  if (xs < p) {
    word.push_back('X');
    grow_ballot(p, q, xs + 1, ys, word, visit);
    word.pop_back();
  }
  if (ys < q && xs > ys + 1) {
    word.push_back('Y');
    grow_ballot(p, q, xs, ys + 1, word, visit);
    word.pop_back();
  }
}

}  // namespace

void for_each_ballot(int p, int q,
                     const std::function<void(const BallotSequence&)>& visit,
                     GuardPolicy policy) {
  if (q < 0 || p <= q) throw DomainError("ballot sequences need p > q >= 0");
  if (p + q > kBallotGuard && policy == GuardPolicy::kEnforce)
    throw SizeGuardError("refusing to enumerate ballot sequences with p+q > " +
                         std::to_string(kBallotGuard));
  std::string word;
  grow_ballot(p, q, 0, 0, word, visit);
}

std::vector<BallotSequence> enumerate_ballot(int p, int q, GuardPolicy policy) {
  std::vector<BallotSequence> out;
  for_each_ballot(p, q, [&](const BallotSequence& b) { out.push_back(b); },
                  policy);
  return out;
}

ValueSet eta(const BallotSequence& beta, int m) {
  if (m < 1 || beta.size() != static_cast<std::size_t>(m - 1))
    throw DomainError("eta: ballot sequence of length " +
                      std::to_string(beta.size()) + " does not match m - 1 = " +
                      std::to_string(m - 1));
  std::vector<int> out;
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (beta.letters()[i] == 'Y') out.push_back(static_cast<int>(i) + 1);
  out.push_back(m);
  // Defined only when m > 2d, i.e. the word has at least two more X's than Y's.
  const int d = static_cast<int>(out.size());
  if (m <= 2 * d)
    throw DomainError("eta: m = " + std::to_string(m) + " must exceed 2d = " +
                      std::to_string(2 * d));
  return ValueSet(std::move(out));
}

BallotSequence eta_inv(const ValueSet& s) {
  if (s.empty()) throw DomainError("eta_inv needs a nonempty set");
  require_admissible(s);
  std::string letters;
  for (int i = 1; i < s.max(); ++i) letters.push_back(s.contains(i) ? 'Y' : 'X');
  return BallotSequence(std::move(letters));
}

}  // namespace pinnacle
