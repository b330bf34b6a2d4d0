#include "pinnacle/selftest.hpp"

#include <algorithm>

#include "pinnacle/admissible.hpp"
#include "pinnacle/counting.hpp"
#include "pinnacle/oracle.hpp"
#include "pinnacle/orderings.hpp"

namespace pinnacle {

namespace {

class Checker {
 public:
  explicit Checker(SelftestResult& out) : out_(out) {}

  void expect(bool ok, const std::string& what) {
    ++out_.checks;
    if (!ok) out_.failures.push_back(what);
  }

 private:
  SelftestResult& out_;
};

}  // namespace

SelftestResult run_selftest(int max_n) {
  SelftestResult result;
  Checker check(result);
  const GuardPolicy policy =
      max_n > kBruteGuard ? GuardPolicy::kOverride : GuardPolicy::kEnforce;
  for (int n = 1; n <= max_n; ++n) {
    const Distribution dist = distribution(n, policy);
    const auto where = [&](const ValueSet& s) {
      return "n=" + std::to_string(n) + " S={" + s.to_string() + "}";
    };
    check.expect(dist.total() == factorial(static_cast<unsigned>(n)),
                 "distribution mass for n=" + std::to_string(n));

    Count mass = 0;
    const auto sets = enumerate_admissible(n);
    check.expect(Count(sets.size()) == count_admissible(n),
                 "admissible set count for n=" + std::to_string(n));
    const auto orders = ordering_table(n, policy);
    for (const auto& s : sets) {
      const auto it = dist.table.find(s);
      const Count brute = it == dist.table.end() ? Count(0) : it->second;
      const Count dale = count_dale(s, n);
      mass += dale;
      check.expect(dale == brute, "dale vs brute at " + where(s));
      check.expect(count_composition(s, n) == brute,
                   "composition vs brute at " + where(s));
      check.expect(count_vale(s, n) == brute, "vale vs brute at " + where(s));
      if (s.size() <= 2)
        check.expect(count_closed(s, n) == brute,
                     "closed form vs brute at " + where(s));

      Count by_order = 0;
      std::vector<int> sigma(s.begin(), s.end());
      do {
        by_order += count_by_ordering(s, n, sigma);
      } while (std::next_permutation(sigma.begin(), sigma.end()));
      check.expect(by_order == dale, "ordering decomposition at " + where(s));

      check.expect(Count(enumerate_vale_sets(s, n).size()) ==
                       count_vale_sets(s, n),
                   "vale family size at " + where(s));

      if (!s.empty() && s.max() == n) {
        const auto found = orders.find(s);
        const std::size_t realized =
            found == orders.end() ? 0 : found->second.size();
        const Count formula = count_orderings(s);
        check.expect(formula == Count(realized),
                     "ordering count vs realized orders for S={" +
                         s.to_string() + "}");
        check.expect(count_orderings_composition(s) == formula,
                     "ordering composition form for S={" + s.to_string() + "}");
      }
    }
    check.expect(mass == factorial(static_cast<unsigned>(n)),
                 "dale mass for n=" + std::to_string(n));
  }
  return result;
}

}  // namespace pinnacle
