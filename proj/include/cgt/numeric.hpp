#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cgt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

BigInt pow(const BigInt& base, std::uint64_t exponent);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
bool is_prime_u64(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// A non-negative exponent p/q in lowest terms.
struct RationalExponent {
  std::uint64_t num = 1;
  std::uint64_t den = 1;

  static RationalExponent parse(const std::string& text);
  std::string str() const;
};

/// Exact x <= y^(p/q) for integer x >= 0 and rational y >= 0, decided as x^q <= y^p.
bool leq_rational_power(const BigInt& x, const Rational& y, RationalExponent exponent);

enum class Verdict { Pass, Fail, Indeterminate };

std::string to_string(Verdict v);

/// x <= y^alpha for alpha = log(6 * 24^(1/3)) / log 3, the large-orbit exponent.
/// Decided by certified rational brackets around alpha; Indeterminate only if the
/// finest bracket straddles the comparison.
Verdict leq_power_large_orbit_alpha(const BigInt& x, const Rational& y);

/// Certified bracket lo < alpha < hi (refinement level 0 is the coarsest).
std::pair<RationalExponent, RationalExponent> large_orbit_alpha_bracket(int level);
int large_orbit_alpha_levels();

}  // namespace cgt
