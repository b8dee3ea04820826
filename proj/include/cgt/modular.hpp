#pragma once

#include <cstdint>
#include <vector>

namespace cgt::modp {

using u64 = std::uint64_t;

/// Arithmetic in F_p for a prime p < 2^32.
struct PrimeField {
  u64 p;

  u64 add(u64 a, u64 b) const { const u64 s = a + b; return s >= p ? s - p : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const;
  u64 from_signed(long long v) const;
};

/// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  u64& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  u64 operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<u64> data_;
};

Matrix multiply(const PrimeField& F, const Matrix& a, const Matrix& b);

/// In-place reduced row echelon form; returns the pivot columns. Zero rows are dropped.
std::vector<std::size_t> row_reduce(const PrimeField& F, Matrix& m);

/// Basis (as rows) of {u : u * A = 0}.
Matrix left_nullspace(const PrimeField& F, const Matrix& a);

/// Characteristic polynomial det(xI - A), coefficients low to high (monic).
std::vector<u64> charpoly(const PrimeField& F, Matrix a);

/// Distinct roots in F_p, sorted. Splits gcd(f, x^p - x) by random-free Cantor-Zassenhaus.
std::vector<u64> roots(const PrimeField& F, const std::vector<u64>& poly);

/// Smallest generator of the multiplicative group of F_p.
u64 primitive_root(u64 p);

}  // namespace cgt::modp
