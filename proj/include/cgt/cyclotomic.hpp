#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cgt/numeric.hpp"

namespace cgt {

/// Data for Q(zeta_n): the cyclotomic polynomial and the trace of each power of zeta.
struct CyclotomicField {
  std::uint64_t n = 1;
  std::size_t phi = 1;
  std::vector<std::int64_t> poly;  // Phi_n, low to high, monic of degree phi
  std::vector<std::pair<std::size_t, std::int64_t>> tail;  // nonzero (i, c_i) for i < phi
  std::vector<std::int64_t> ramanujan;  // Tr(zeta^m) for 0 <= m < n

  std::int64_t trace_of_power(std::int64_t m) const {
    const auto nn = static_cast<std::int64_t>(n);
    return ramanujan[static_cast<std::size_t>(((m % nn) + nn) % nn)];
  }
  /// Reduces a polynomial in zeta (any degree) to power-basis coordinates.
  std::vector<BigInt> reduce(std::vector<BigInt> coeffs) const;
};

/// Shared, immutable field data for conductor n (cached, thread-safe).
const CyclotomicField& cyclotomic_field(std::uint64_t n);

/// An element of Z[zeta_n] (or Q(zeta_n) restricted to integer coordinates) stored
/// in the power basis {zeta_n^k : 0 <= k < phi(n)}.
///
/// Values with different conductors compare and combine after embedding in the
/// lcm of the conductors.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(BigInt(0)) {}
  Cyclotomic(const BigInt& integer);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long long integer) : Cyclotomic(BigInt(integer)) {}  // NOLINT

  static Cyclotomic root_of_unity(std::uint64_t n, std::int64_t k);
  /// sum_m coeffs[m] * zeta_n^m for any number of coefficients.
  static Cyclotomic from_powers(std::uint64_t n, std::vector<BigInt> coeffs);
  static Cyclotomic from_coords(std::uint64_t n, std::vector<BigInt> coords);

  std::uint64_t conductor() const noexcept { return n_; }
  const std::vector<BigInt>& coords() const noexcept { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<BigInt> as_integer() const;

  Cyclotomic embed(std::uint64_t target) const;
  Cyclotomic conj() const;
  /// Galois automorphism zeta_n -> zeta_n^k, k coprime to n.
  Cyclotomic galois(std::int64_t k) const;

  /// Lexicographic order on coordinates; both values must share a conductor.
  int compare_coords(const Cyclotomic& other) const;

  /// "n:c0,c1,..." (the conductor and power-basis coordinates).
  std::string str() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(std::uint64_t n, std::vector<BigInt> coords) : n_(n), coords_(std::move(coords)) {}

  std::uint64_t n_ = 1;
  std::vector<BigInt> coords_;
};

/// Tr_{Q(zeta_n)/Q}(a * conj(b)) for two values of the same conductor n.
BigInt trace_of_product_conj(const Cyclotomic& a, const Cyclotomic& b);

}  // namespace cgt
