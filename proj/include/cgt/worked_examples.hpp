#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgt/numeric.hpp"

namespace cgt {

/// One stated number: the expected value, what was computed, and whether they agree.
struct ExampleLine {
  std::string label;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ExampleReport {
  std::string title;
  std::vector<ExampleLine> lines;
  double seconds = 0;

  bool all_pass() const;
  const ExampleLine* find(const std::string& label) const;
};

/// G = S_3 x F_p with V = F(G) = C_3 x C_p.
struct FrobeniusExampleData {
  std::uint64_t p = 0;
  std::uint64_t order = 0;
  std::uint64_t fitting_order = 0;
  std::uint64_t fitting_index = 0;
  bool quotient_abelian = false;
  std::vector<std::uint64_t> orbit_sizes;  // sorted
  // Indexed lambda (order 3), mu (order p), lambda x mu (order 3p).
  std::uint64_t fiber_count[3] = {0, 0, 0};
  std::vector<std::uint64_t> fiber_degrees[3];
  std::uint64_t inertia_quotient_order[3] = {0, 0, 0};
  Rational acd_above = 0;
  bool above_is_nonlinear = false;
  Rational acd_over_lambda_mu_set = 0;
};

FrobeniusExampleData example_s3_frobenius_data(std::uint64_t p);
ExampleReport example_s3_frobenius(std::uint64_t p);

/// G = S_4 wr S_3, V = F(G) = 2^6, lambda = mu x mu x mu.
struct WreathExampleData {
  std::uint64_t order = 0;
  std::uint64_t fitting_order = 0;
  bool fitting_elementary_abelian = false;
  std::uint64_t fitting_index = 0;
  std::vector<std::uint64_t> orbit_sizes;  // sorted
  std::uint64_t lambda_orbit_size = 0;
  std::uint64_t inertia_order = 0;
  std::uint64_t inertia_quotient_order = 0;
  std::vector<std::uint64_t> inertia_quotient_degrees;
  Rational inertia_quotient_acd = 0;
  bool quotient_matches_c2_wreath_s3 = false;
  bool lambda_extends = false;
  std::uint64_t fiber_count_in_inertia = 0;
  std::uint64_t inertia_quotient_classes = 0;
  Rational acd_lambda = 0;  // inertia route
  bool conjC = false;
  // Full-table route.
  std::optional<Rational> acd_lambda_full;
  std::optional<std::uint64_t> b;
};

WreathExampleData example_s4_wreath_s3_data(bool full_table);
ExampleReport example_s4_wreath_s3(bool full_table);

}  // namespace cgt
