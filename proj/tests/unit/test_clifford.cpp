#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "cgt/catalog.hpp"
#include "cgt/clifford.hpp"
#include "cgt/error.hpp"
#include "cgt/metrics.hpp"

using namespace cgt;

namespace {

std::vector<std::size_t> sorted_sizes(const std::vector<CharacterOrbit>& orbits) {
  std::vector<std::size_t> out;
  for (const auto& o : orbits) out.push_back(o.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t row_of_degree(const CharacterTable& t, std::uint64_t d) {
  for (std::size_t r = 0; r < t.size(); ++r)
    if (t.degrees[r] == d) return r;
  FAIL("no row of that degree");
  return 0;
}

}  // namespace

TEST_CASE("linear characters") {
  const auto G = analyze(direct_product(cyclic(3), cyclic(5)));
  const auto N = normal_data(G.group, G.classes, Subgroup::whole(G.group));
  CHECK(linear_characters(N).size() == 15);

  const auto Q = analyze(quaternion());
  const auto NQ = normal_data(Q.group, Q.classes, Subgroup::whole(Q.group));
  const auto lin = linear_characters(NQ);
  CHECK(lin.size() == 4);
  for (const auto& l : lin) CHECK(l.order <= 2);

  const auto A5 = analyze(alternating(5));
  CHECK(linear_characters(normal_data(A5.group, A5.classes, Subgroup::whole(A5.group))).size() == 1);

  CHECK(LinearCharacter{0, 6}.square_free());
  CHECK_FALSE(LinearCharacter{0, 12}.square_free());
}

TEST_CASE("orbits and inertia over the Fitting subgroup of S3 x F5") {
  const auto G = analyze(direct_product(symmetric(3), frobenius_agl1(5)));
  const auto V = fitting_subgroup(G.group, G.classes);
  REQUIRE(V.order() == 15);
  const auto N = normal_data(G.group, G.classes, V);
  const auto orbits = orbits_on_irr(G.group, N);
  CHECK(sorted_sizes(orbits) == std::vector<std::size_t>{1, 2, 4, 8});
  for (const auto& o : orbits) {
    const auto I = inertia_group(G.group, N, o.representative);
    CHECK(G.group.order() / I.order() == o.size());
    CHECK(V.is_subset_of(I));
    // Clifford: every constituent over lambda has degree at least the orbit size
    for (auto r : irr_over(G.table, N, o.representative)) CHECK(G.table.degrees[r] >= o.size());
  }
  // fibres over orbit representatives partition Irr(G)
  std::vector<std::size_t> all;
  for (const auto& o : orbits)
    for (auto r : irr_over(G.table, N, o.representative)) all.push_back(r);
  std::sort(all.begin(), all.end());
  std::vector<std::size_t> expected(G.table.size());
  std::iota(expected.begin(), expected.end(), 0);
  CHECK(all == expected);

  // conjugate characters have the same fibre average
  for (const auto& o : orbits)
    for (auto m : o.members) CHECK(acd_over(G.table, N, m) == acd_over(G.table, N, o.representative));

  CHECK(inertia_group(G.group, N, 0).order() == G.group.order());
}

TEST_CASE("averages over and above") {
  const auto G = analyze(symmetric(4));
  const auto V = fitting_subgroup(G.group, G.classes);
  const auto N = normal_data(G.group, G.classes, V);
  // the trivial character of V carries the characters of S4/V = S3
  CHECK(acd_over(G.table, N, 0) == Rational(4, 3));
  std::vector<std::size_t> every(N.table.size());
  std::iota(every.begin(), every.end(), 0);
  CHECK(acd_over_set(G.table, N, every) == acd(G.table));
  CHECK(acd_above(G.table, G.classes, V) == 3);
  CHECK(acd_above(G.table, G.classes, Subgroup::whole(G.group)) == Rational(9, 4));
  CHECK_THROWS_AS(acd_above(G.table, G.classes, Subgroup::trivial(G.group)), Error);
  CHECK_THROWS_AS(acd_over_set(G.table, N, std::vector<std::size_t>{}), Error);
  CHECK(average_degree(G.table, std::vector<std::size_t>{3, 4}) == 3);

  const auto H = subgroup_generated(G.group, std::vector<PermGroup::Index>{G.group.index_of(Permutation::from_cycles(4, {{0, 1}}))});
  CHECK_THROWS_AS(normal_data(G.group, G.classes, H), Error);
}

TEST_CASE("extension of characters") {
  const auto S5 = analyze(symmetric(5));
  const auto A5 = socle_trivial_radical(S5.group, S5.classes);
  const auto N = normal_data(S5.group, S5.classes, A5);
  CHECK(extends(S5.table, N, row_of_degree(N.table, 4)));
  CHECK(extends(S5.table, N, row_of_degree(N.table, 5)));
  // the two degree-3 characters are swapped by S5, so neither extends
  CHECK_FALSE(extends(S5.table, N, row_of_degree(N.table, 3)));

  const auto whole = normal_data(S5.group, S5.classes, Subgroup::whole(S5.group));
  for (std::size_t r = 0; r < whole.table.size(); ++r) CHECK(extends(S5.table, whole, r));
}

TEST_CASE("central subgroups have singleton orbits") {
  const auto G = analyze(direct_product(symmetric(3), cyclic(4)));
  const auto Z = centralizer(G.group, Subgroup::whole(G.group));
  REQUIRE(Z.order() == 4);
  for (const auto& o : orbits_on_irr(G.group, normal_data(G.group, G.classes, Z))) CHECK(o.size() == 1);
}
