#include "doctest.h"

#include <functional>
#include <numeric>
#include <set>

#include "cgt/error.hpp"
#include "cgt/socle_transform.hpp"

using namespace cgt;

namespace {

const auto& pack() { return builtin_simple_data(); }

// A5 indices: 0 principal, 1 and 2 degree 3, 3 degree 4, 4 degree 5 = alpha.
constexpr std::size_t kAlpha = 4;
constexpr std::size_t kDeg4 = 3;

// Enumerate-and-merge oracle: closes each tuple under copy swaps and the
// outer automorphism on single copies, written without the model's generators.
std::size_t orbit_count_oracle(std::size_t u) {
  const std::vector<std::size_t> aut{0, 2, 1, 3, 4};
  std::size_t total = 1;
  for (std::size_t i = 0; i < u; ++i) total *= 5;
  auto code = [&](const std::vector<std::size_t>& t) {
    std::size_t c = 0;
    for (auto x : t) c = c * 5 + x;
    return c;
  };
  std::vector<bool> seen(total, false);
  std::size_t orbits = 0;
  for (std::size_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    ++orbits;
    std::vector<std::size_t> t(u);
    std::size_t c = start;
    for (std::size_t i = u; i-- > 0;) t[i] = c % 5, c /= 5;
    std::vector<std::vector<std::size_t>> stack{t};
    seen[start] = true;
    while (!stack.empty()) {
      auto cur = stack.back();
      stack.pop_back();
      std::vector<std::vector<std::size_t>> next;
      for (std::size_t i = 0; i < u; ++i) {
        auto a = cur;
        a[i] = aut[a[i]];
        next.push_back(a);
        for (std::size_t j = i + 1; j < u; ++j) {
          auto s = cur;
          std::swap(s[i], s[j]);
          next.push_back(s);
        }
      }
      for (auto& n : next)
        if (!seen[code(n)]) seen[code(n)] = true, stack.push_back(n);
    }
  }
  return orbits;
}

}  // namespace

TEST_CASE("shapes and simple-group data") {
  const auto shape = parse_shape("A5^2*A6", pack());
  REQUIRE(shape.size() == 2);
  CHECK(shape[0].copies == 2);
  CHECK(shape[1].group.name == "A6");
  CHECK(shape_string(shape) == "A5^2*A6^1");
  CHECK(pack()[0].m() == 3);
  const auto psl = parse_shape("PSL(2,7)^2,A5", pack());
  REQUIRE(psl.size() == 2);
  CHECK(psl[0].group.name == "PSL(2,7)");
  CHECK(psl[1].group.name == "A5");
  CHECK_THROWS_AS(parse_shape("A5*M11", pack()), Error);
  CHECK_THROWS_AS(parse_shape("A5*A5", pack()), Error);
  CHECK_THROWS_AS(parse_simple_data("name: X\norder: 60\ndegrees: 1 3 3 4 4\nalpha_index: 4\n"), Error);
  CHECK_THROWS_AS(parse_simple_data("name: X\norder: sixty\n"), Error);
}

TEST_CASE("degrees and the minimum-degree bound") {
  const auto a52 = parse_shape("A5^2", pack());
  CHECK(theta_degree(a52, {{0, 0}}) == 1);
  CHECK(theta_degree(a52, {{kDeg4, kAlpha}}) == 20);
  const auto mixed = parse_shape("A5*A6", pack());
  CHECK(theta_degree(mixed, {{1}, {0}}) == 3);

  CHECK(min_degree_bound(a52).str() == "3");
  CHECK(min_degree_bound(parse_shape("A5^4", pack())).str() == "9");
  const auto root3 = min_degree_bound(parse_shape("A5", pack()));
  CHECK(root3.square() == 3);
  CHECK(root3.le(Rational(2)));
  CHECK_FALSE(root3.le(Rational(17, 10)));
}

TEST_CASE("theta prime") {
  const auto s = parse_shape("A5^4", pack());
  auto p = theta_prime(s, {{0, 0, 0, kDeg4}});
  REQUIRE(p.has_value());
  CHECK(*p == FactorTuple{{kAlpha, kAlpha, kAlpha, kDeg4}});
  CHECK(theta_degree(s, *p) >= 9);
  CHECK_FALSE(theta_prime(s, {{0, 0, kAlpha, kAlpha}}).has_value());
  p = theta_prime(s, {{0, 0, 0, kAlpha}});
  REQUIRE(p.has_value());
  CHECK(*p == FactorTuple{{kAlpha, kAlpha, kAlpha, 0}});
  // never defined twice in a row
  CHECK_FALSE(theta_prime(s, *p).has_value());

  const auto one = parse_shape("A5", pack());
  CHECK(theta_prime(one, {{0}}) == FactorTuple{{kAlpha}});
  for (std::size_t i = 1; i < 5; ++i) CHECK_FALSE(theta_prime(one, {{i}}).has_value());
}

TEST_CASE("decomposition partitions") {
  const auto s3 = parse_shape("A5^3", pack());
  CHECK(decomposition_partition(s3, {{0, 0, 0}}).front().size() == 1);
  CHECK(decomposition_partition(s3, {{0, kAlpha, kDeg4}}).front().size() == 3);
  const FactorTuple t{{0, 0, kDeg4}};
  const auto tp = theta_prime(s3, t);
  REQUIRE(tp.has_value());
  auto blocks = [](auto part) {
    std::set<std::vector<std::size_t>> out(part.front().begin(), part.front().end());
    return out;
  };
  CHECK(blocks(decomposition_partition(s3, t)) == blocks(decomposition_partition(s3, *tp)));
}

TEST_CASE("orbit counts against brute force") {
  for (std::size_t u = 1; u <= 4; ++u) {
    const auto s = parse_shape("A5^" + std::to_string(u), pack());
    const auto orbits = model_orbits(s, ModelAction::full(s));
    CHECK(orbits.count() == orbit_count_oracle(u));
    std::uint64_t total = 0;
    for (auto sz : orbits.size) total += sz;
    CHECK(total == tuple_count(s));
  }
  const auto s = parse_shape("A5^2", pack());
  CHECK(model_orbits(s, ModelAction::full(s)).count() == 10);

  ModelAction bare = ModelAction::trivial_top(s);
  bare.include_aut = false;
  CHECK(model_orbits(s, bare).count() == 25);
  const auto a54 = parse_shape("A5^4", pack());
  CHECK_THROWS_AS(model_orbits(a54, ModelAction::full(a54), 100), Error);
}

TEST_CASE("encode and decode are inverse") {
  const auto s = parse_shape("A5^2*A6", pack());
  CHECK(tuple_count(s) == 175);
  for (std::uint64_t c = 0; c < tuple_count(s); ++c) CHECK(encode(s, decode(s, c)) == c);
}

TEST_CASE("pairing across two components") {
  // (1|1) and (1|alpha) are not conjugate, yet both map to (alpha|alpha):
  // the second replacement step only runs where the first one did.
  const auto s = parse_shape("A5*A6", pack());
  const std::size_t alpha6 = pack()[1].alpha_index;
  const auto a = theta_prime(s, {{0}, {0}});
  const auto b = theta_prime(s, {{0}, {alpha6}});
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(*a == *b);
  const auto r = simulate_socle(s, ModelAction::full(s));
  CHECK_FALSE(r.delta.perfect_matching);
  CHECK(r.delta.aggregate_pass);
}

TEST_CASE("simulation invariants") {
  for (std::size_t u = 1; u <= 4; ++u) {
    const auto s = parse_shape("A5^" + std::to_string(u), pack());
    const auto report = simulate_socle(s, ModelAction::full(s));
    CHECK(report.all_pass());
    // block averages at least half the bound, compared squared
    const auto half = report.bound;
    for (const auto& b : report.delta.blocks) {
      const Rational twice = 2 * b.average();
      CHECK(half.le(twice));
    }
    const auto orbits = model_orbits(s, ModelAction::full(s));
    for (const auto& b : report.delta.blocks)
      if (b.theta_prime) CHECK(orbits.orbit_of[b.theta] != orbits.orbit_of[*b.theta_prime]);
  }
  const auto s = parse_shape("A5^2", pack());
  CHECK(simulate_socle(s, ModelAction::full(s)).delta.block_minimum >= Rational(3, 2));
}
