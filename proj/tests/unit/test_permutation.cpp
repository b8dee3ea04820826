#include "doctest.h"

#include <set>

#include "cgt/catalog.hpp"
#include "cgt/conjugacy.hpp"
#include "cgt/error.hpp"
#include "cgt/perm_group.hpp"
#include "cgt/permutation.hpp"

using namespace cgt;

TEST_CASE("permutations compose left to right") {
  const auto a = Permutation::from_cycles(3, {{0, 1}});
  const auto b = Permutation::from_cycles(3, {{1, 2}});
  // a first: 0 -> 1 -> 2
  CHECK((a * b)(0) == 2);
  CHECK((a * b).cycle_string() == "(0 2 1)");
  CHECK(conjugate(a, b) == b.inverse() * a * b);
  CHECK(conjugate(a, b).cycle_string() == "(0 2)");
  CHECK(Permutation::identity(4).cycle_string() == "()");
  CHECK(Permutation::from_cycles(6, {{0, 1, 2}, {3, 4}}).order() == 6);
  CHECK(a.pow(-3) == a);
  CHECK(commutator(a, b).order() == 3);
}

TEST_CASE("invalid permutations are rejected") {
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), Error);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 3}), Error);
}

TEST_CASE("enumeration is deterministic and complete") {
  const auto S4 = symmetric(4);
  CHECK(S4.order() == 24);
  CHECK(S4.element(0).is_identity());
  CHECK(S4.exponent() == 12);
  std::set<std::vector<Point>> seen;
  for (PermGroup::Index i = 0; i < S4.order(); ++i) {
    auto im = S4.images(i);
    seen.emplace(im.begin(), im.end());
    CHECK(S4.multiply(i, S4.inverse(i)) == 0);
  }
  CHECK(seen.size() == 24);
  const auto again = symmetric(4);
  for (PermGroup::Index i = 0; i < S4.order(); ++i) CHECK(S4.element(i) == again.element(i));
}

TEST_CASE("order cap and degree mismatch") {
  CHECK_THROWS_AS(symmetric(6, 100), Error);
  try {
    symmetric(6, 100);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OrderCapExceeded);
    CHECK(is_resource_cap(e.code()));
  }
  const auto a = Permutation::from_cycles(3, {{0, 1}});
  const auto b = Permutation::from_cycles(4, {{0, 1}});
  CHECK_THROWS_AS(group_from_generators(3, {a, b}), Error);
}

namespace {

// Brute force: orbits of the conjugation action.
std::size_t class_count_oracle(const PermGroup& G) {
  std::vector<bool> seen(G.order(), false);
  std::size_t count = 0;
  for (PermGroup::Index x = 0; x < G.order(); ++x) {
    if (seen[x]) continue;
    ++count;
    for (PermGroup::Index g = 0; g < G.order(); ++g) seen[G.conjugate(x, g)] = true;
  }
  return count;
}

}  // namespace

TEST_CASE("conjugacy classes in canonical order") {
  const auto S4 = symmetric(4);
  const auto cl = conjugacy_classes(S4);
  REQUIRE(cl.size() == 5);
  CHECK(cl.orders == std::vector<std::uint32_t>{1, 2, 2, 3, 4});
  CHECK(cl.sizes == std::vector<std::uint64_t>{1, 3, 6, 8, 6});
  CHECK(cl.reps[0] == 0);
  CHECK(cl.inverse_class(3) == 3);
  CHECK(cl.power_map(4, 2) == 1);  // a 4-cycle squares to a double transposition

  for (const auto& G : {alternating(5), dihedral(6), quaternion(), frobenius_agl1(7)})
    CHECK(conjugacy_classes(G).size() == class_count_oracle(G));
}
