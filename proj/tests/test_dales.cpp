#include <algorithm>
#include <map>
#include <numeric>

#include "doctest.h"
#include "pinnacle/dales.hpp"
#include "pinnacle/errors.hpp"

using namespace pinnacle;

TEST_CASE("gap profile") {
  const GapProfile g(ValueSet{4, 7, 9}, 9);
  CHECK(g.gaps() == std::vector<int>{3, 2, 1, 0});
  CHECK(g.gaps_below(2) == 5);
  CHECK(std::accumulate(g.gaps().begin(), g.gaps().end(), 0) == 9 - 3);
  CHECK(GapProfile(ValueSet{}, 5).gaps() == std::vector<int>{5});
  CHECK_THROWS_AS(GapProfile(ValueSet{3, 4}, 9), DomainError);
  CHECK_THROWS_AS(GapProfile(ValueSet{3, 10}, 9), DomainError);
}

TEST_CASE("dale rank set of the worked cyclic ordering") {
  const std::vector<int> tau{7, 6, 1, 2, 3, 5, 4};
  const DaleSelection dales = dale_rank_set(tau);
  CHECK(dales.to_string() == "{1_l,1_r,2_r,3_r,4_l,4_r,6_l}");
  CHECK(dales.size() == 7);
  CHECK(dales.rank_multiplicities() == std::vector<int>{2, 1, 1, 2, 0, 1});
  // Rotating tau does not move the dales.
  std::vector<int> rotated = tau;
  std::rotate(rotated.begin(), rotated.begin() + 3, rotated.end());
  CHECK(dale_rank_set(rotated) == dales);
}

TEST_CASE("small dale rank sets") {
  CHECK(dale_rank_set(std::vector<int>{1, 2}).to_string() == "{1_l,1_r}");
  CHECK(dale_rank_set(std::vector<int>{1, 3, 2}).to_string() == "{1_l,1_r,2_l}");
  CHECK(dale_rank_set(std::vector<int>{1}).size() == 0);
  CHECK_THROWS_AS(dale_rank_set(std::vector<int>{1, 1}), DomainError);
}

TEST_CASE("selection parameters of B = {1_l,3_l,3_r,4_r}") {
  const std::vector<DaleSymbol> members{{1, DaleSide::kLeft},
                                        {3, DaleSide::kLeft},
                                        {3, DaleSide::kRight},
                                        {4, DaleSide::kRight}};
  const DaleSelection b(4, members);
  CHECK(b.size() == 4);
  CHECK(b.ranks() == std::vector<int>{1, 3, 3, 4});
  CHECK(b.suffix_counts() == std::vector<int>{4, 3, 3, 1, 0});
  CHECK(b.contains({3, DaleSide::kRight}));
  CHECK_FALSE(b.contains({2, DaleSide::kLeft}));

  const GapComposition alpha(b.rank_multiplicities());
  CHECK(alpha.parts() == std::vector<int>{1, 0, 2, 1});
  CHECK(alpha.ranks() == b.ranks());
  CHECK(alpha.suffix_counts() == b.suffix_counts());
  CHECK(alpha.ones() == 2);
  CHECK(alpha.total() == 4);
  CHECK_THROWS_AS(GapComposition({3}), DomainError);
}

TEST_CASE("orderings_containing matches enumeration of cyclic orderings, d <= 6") {
  for (int d = 1; d <= 6; ++d) {
    // Fix index d+1 last; the rest run over all d! arrangements.
    std::vector<int> rest(static_cast<std::size_t>(d));
    std::iota(rest.begin(), rest.end(), 1);
    std::vector<std::uint64_t> rank_sets;
    do {
      std::vector<int> tau = rest;
      tau.push_back(d + 1);
      const DaleSelection dales = dale_rank_set(tau);
      CHECK(dales.size() == d + 1);
      CHECK(dales.contains({1, DaleSide::kLeft}));
      CHECK(dales.contains({1, DaleSide::kRight}));
      rank_sets.push_back(dales.mask());
    } while (std::next_permutation(rest.begin(), rest.end()));

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (2 * d)); ++mask) {
      const DaleSelection b(d, mask);
      if (b.size() > d) continue;
      const auto contained = std::count_if(
          rank_sets.begin(), rank_sets.end(),
          [&](std::uint64_t full) { return (full & mask) == mask; });
      CHECK(orderings_containing(d, b.ranks()) == contained);
    }
  }
}

TEST_CASE("placement product") {
  const GapProfile g(ValueSet{3}, 4);  // gaps 2, 1
  CHECK(placement_product(g, std::vector<int>{0, 0}) == 4);  // 2^2 * 1^1
  CHECK(placement_product(g, std::vector<int>{1, 0}) == 1);  // 1^2 * 1^1
  CHECK(placement_product(g, std::vector<int>{2, 0}) == 0);
  const GapProfile tight(ValueSet{5, 6}, 6);  // gaps 4, 0, 0
  CHECK(placement_product(tight, std::vector<int>{2, 2, 0}) == 1);  // 0^0 == 1
  CHECK(placement_product(tight, std::vector<int>{0, 0, 0}) == 81);
}
