#include "doctest.h"

#include "cgt/catalog.hpp"
#include "cgt/conjugacy.hpp"
#include "cgt/error.hpp"
#include "cgt/subgroup.hpp"

using namespace cgt;

namespace {

std::vector<std::size_t> orders(const std::vector<Subgroup>& series) {
  std::vector<std::size_t> out;
  for (const auto& H : series) out.push_back(H.order());
  return out;
}

// Brute-force normality of a set closed under multiplication.
bool normal_oracle(const PermGroup& G, const Subgroup& N) {
  for (auto x : N.elements())
    for (PermGroup::Index g = 0; g < G.order(); ++g)
      if (!N.contains(G.conjugate(x, g))) return false;
  return true;
}

}  // namespace

TEST_CASE("derived series and solvability") {
  const auto S4 = symmetric(4);
  CHECK(orders(derived_series(S4)) == std::vector<std::size_t>{24, 12, 4, 1});
  CHECK(derived_length(S4) == 3);
  CHECK(is_solvable(S4));

  const auto S5 = symmetric(5);
  CHECK(orders(derived_series(S5)) == std::vector<std::size_t>{120, 60});
  CHECK_FALSE(is_solvable(S5));
  CHECK_THROWS_AS(derived_length(S5), Error);
}

TEST_CASE("Fitting subgroup and radical") {
  const auto S4 = symmetric(4);
  const auto cS4 = conjugacy_classes(S4);
  CHECK(fitting_subgroup(S4, cS4).order() == 4);
  CHECK(solvable_radical(S4, cS4).order() == 24);

  const auto F13 = frobenius_agl1(13);
  CHECK(fitting_subgroup(F13, conjugacy_classes(F13)).order() == 13);

  const auto G = direct_product(alternating(5), cyclic(2));
  const auto cG = conjugacy_classes(G);
  const auto R = solvable_radical(G, cG);
  CHECK(R.order() == 2);
  CHECK(fitting_subgroup(G, cG).order() == 2);
  CHECK(normal_oracle(G, R));
  CHECK_THROWS_AS(socle_trivial_radical(G, cG), Error);
}

TEST_CASE("socle of a group with trivial radical") {
  const auto S5 = symmetric(5);
  const auto soc = socle_trivial_radical(S5, conjugacy_classes(S5));
  CHECK(soc.order() == 60);
  const auto A5xA5 = direct_product(alternating(5), alternating(5));
  CHECK(socle_trivial_radical(A5xA5, conjugacy_classes(A5xA5)).order() == 3600);
}

TEST_CASE("normal subgroup lattice") {
  const auto S4 = symmetric(4);
  const auto lattice = normal_subgroups(S4, conjugacy_classes(S4));
  CHECK(orders(lattice) == std::vector<std::size_t>{1, 4, 12, 24});
  for (const auto& N : lattice) CHECK(normal_oracle(S4, N));

  const auto D8 = dihedral(4);
  CHECK(normal_subgroups(D8, conjugacy_classes(D8)).size() == 6);
  const auto E8 = elementary_abelian(2, 3);
  CHECK_THROWS_AS(normal_subgroups(E8, conjugacy_classes(E8), 5), Error);
}

TEST_CASE("quotients") {
  const auto S4 = symmetric(4);
  const auto V = fitting_subgroup(S4, conjugacy_classes(S4));
  const auto Q = quotient_group(S4, V);
  CHECK(Q.order() == 6);
  CHECK_FALSE(Q.is_abelian());
  const auto H = subgroup_generated(S4, std::vector<PermGroup::Index>{S4.index_of(Permutation::from_cycles(4, {{0, 1}}))});
  CHECK(H.order() == 2);
  CHECK_FALSE(H.is_normal());
  CHECK_THROWS_AS(quotient_group(S4, H), Error);
}

TEST_CASE("Frattini subgroup of nilpotent groups") {
  const auto C4 = cyclic(4);
  CHECK(frattini_nilpotent(C4, Subgroup::whole(C4)).order() == 2);
  const auto Q8 = quaternion();
  CHECK(frattini_nilpotent(Q8, Subgroup::whole(Q8)).order() == 2);
  const auto E8 = elementary_abelian(2, 3);
  CHECK(frattini_nilpotent(E8, Subgroup::whole(E8)).order() == 1);
  const auto S3 = symmetric(3);
  CHECK_THROWS_AS(frattini_nilpotent(S3, Subgroup::whole(S3)), Error);
}

TEST_CASE("closures, joins and centralisers") {
  const auto S4 = symmetric(4);
  const auto t = S4.index_of(Permutation::from_cycles(4, {{0, 1}}));
  CHECK(normal_closure(S4, std::vector<PermGroup::Index>{t}).order() == 24);
  const auto dbl = S4.index_of(Permutation::from_cycles(4, {{0, 1}, {2, 3}}));
  CHECK(normal_closure(S4, std::vector<PermGroup::Index>{dbl}).order() == 4);
  const auto V = normal_closure(S4, std::vector<PermGroup::Index>{dbl});
  CHECK(centralizer(S4, V).order() == 4);
  CHECK(centralizer(S4, Subgroup::trivial(S4)).order() == 24);
  const auto H = subgroup_generated(S4, std::vector<PermGroup::Index>{t});
  CHECK(join(S4, V, H).order() == 8);
  CHECK(is_nilpotent(S4, join(S4, V, H)));
  CHECK_FALSE(is_nilpotent(S4, Subgroup::whole(S4)));

  const auto emb = embed(S4, V);
  CHECK(emb.group.order() == 4);
  for (PermGroup::Index i = 0; i < emb.group.order(); ++i) CHECK(emb.to_local(emb.to_parent[i], S4) == i);
}
