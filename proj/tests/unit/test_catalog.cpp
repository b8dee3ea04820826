#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "cgt/catalog.hpp"
#include "cgt/error.hpp"

using namespace cgt;

namespace {

const std::filesystem::path kData = std::filesystem::path(CGT_DATA_DIR);

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::ConfigError;
}

}  // namespace

TEST_CASE("constructor orders") {
  CHECK(alternating(5).order() == 60);
  CHECK(symmetric(4).order() == 24);
  CHECK(dihedral(4).order() == 8);
  CHECK(dihedral(2).order() == 4);
  CHECK(cyclic(7).order() == 7);
  CHECK(frobenius_agl1(5).order() == 20);
  CHECK(frobenius_pq(7, 3).order() == 21);
  CHECK(quaternion().order() == 8);
  CHECK(elementary_abelian(3, 3).order() == 27);
  CHECK(direct_product(symmetric(3), frobenius_agl1(5)).order() == 120);
  const auto W = wreath_imprimitive(symmetric(4), 3);
  CHECK(W.order() == 82944);
  CHECK(W.degree() == 12);
  CHECK(wreath_imprimitive(cyclic(2), 3).order() == 48);
  CHECK(code_of([] { frobenius_agl1(4); }) == Errc::NotPrime);
  CHECK(code_of([] { frobenius_agl1(2); }) == Errc::NotPrime);
  CHECK(code_of([] { frobenius_pq(7, 5); }) == Errc::ConfigError);
  CHECK(code_of([] { symmetric(8, 1000); }) == Errc::OrderCapExceeded);
}

TEST_CASE("group files") {
  CHECK(load_group(kData / "groups" / "a5.grp").order() == 60);
  CHECK(load_group(kData / "groups" / "psl27.grp").order() == 168);
  CHECK(parse_group("# comment\ndegree: 3\n1 2 0\n\n1 0 2\n").order() == 6);
  CHECK(code_of([] { parse_group("degree: 3\n0 0 1\n"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_group("degree: 3\n0 1\n"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_group("1 2 0\n"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_group("degree: 3\n0 x 1\n"); }) == Errc::ParseError);
  CHECK_THROWS_AS(load_group(kData / "groups" / "missing.grp"), Error);

  const auto pack = load_simple_data(kData / "simple_groups.txt");
  REQUIRE(pack.size() == 3);
  CHECK(pack[0].name == "A5");
  CHECK(code_of([] { parse_simple_data("name: A5\norder: 60\ndegrees: 1 3 3 4 4\nalpha_index: 4\n"); }) ==
        Errc::ValidationFailed);
}

TEST_CASE("specs and manifests") {
  CHECK(group_from_spec("direct(symmetric(3),frobenius(5))").order() == 120);
  CHECK(group_from_spec("wreath(cyclic(2),3)").order() == 48);
  CHECK(group_from_spec("file(groups/a5.grp)", kDefaultOrderCap, kData).order() == 60);
  CHECK(group_from_spec("frobenius_pq(7,3)").order() == 21);
  CHECK(code_of([] { group_from_spec("nonsense(3)"); }) == Errc::ConfigError);
  CHECK(code_of([] { group_from_spec("symmetric(3"); }) == Errc::ConfigError);
  CHECK(code_of([] { group_from_spec("direct(cyclic(2))"); }) == Errc::ConfigError);

  const auto entries = parse_manifest("# groups\nS3 symmetric(3) 6\nC5 cyclic(5)\n");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].expected_order == 6u);
  CHECK_FALSE(entries[1].expected_order.has_value());
  CHECK(code_of([] { parse_manifest("A cyclic(2)\nA cyclic(3)\n"); }) == Errc::ParseError);
  CHECK(build_entry(entries[0]).order() == 6);
  CHECK(code_of([] { build_entry({"X", "cyclic(5)", 6}); }) == Errc::ValidationFailed);
  CHECK(parse_manifest("").empty());

  for (const char* m : {"solvable.manifest", "full.manifest"})
    for (const auto& e : load_manifest(kData / m)) CHECK(e.expected_order.has_value());
}
