#include "cgt/modular.hpp"

#include <algorithm>

#include "cgt/error.hpp"
#include "cgt/numeric.hpp"

namespace cgt::modp {

u64 PrimeField::pow(u64 a, u64 e) const {
  u64 result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

u64 PrimeField::inv(u64 a) const {
  if (a % p == 0) throw Error(Errc::VerificationFailed, "inverse of zero in F_p");
  return pow(a, p - 2);
}

u64 PrimeField::from_signed(long long v) const {
  const auto pp = static_cast<long long>(p);
  return static_cast<u64>(((v % pp) + pp) % pp);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix multiply(const PrimeField& F, const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const u64 x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = (c(i, j) + x * b(k, j)) % F.p;
    }
  return c;
}

std::vector<std::size_t> row_reduce(const PrimeField& F, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    const u64 inv = F.inv(m(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = F.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const u64 f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix trimmed(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) trimmed(i, j) = m(i, j);
  m = std::move(trimmed);
  return pivots;
}

Matrix left_nullspace(const PrimeField& F, const Matrix& a) {
  // u A = 0  <=>  A^T u^T = 0: reduce A^T and read off the free variables.
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  const auto pivots = row_reduce(F, t);
  const std::size_t n = a.rows();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis(n - pivots.size(), n);
  std::size_t row = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(row, free) = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) basis(row, pivots[k]) = F.neg(t(k, free));
    ++row;
  }
  return basis;
}

std::vector<u64> charpoly(const PrimeField& F, Matrix h) {
  const std::size_t n = h.rows();
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    const u64 inv = F.inv(h(m, m - 1));
    for (std::size_t r = m + 1; r < n; ++r) {
      const u64 u = F.mul(h(r, m - 1), inv);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h(r, j) = F.sub(h(r, j), F.mul(u, h(m, j)));
      for (std::size_t j = 0; j < n; ++j) h(j, m) = F.add(h(j, m), F.mul(u, h(j, r)));
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_i (prod of subdiagonal) h_{i,k} p_{i-1}
  std::vector<std::vector<u64>> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<u64> next(k + 1, 0);
    const auto& prev = p[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = F.add(next[d + 1], prev[d]);
      next[d] = F.sub(next[d], F.mul(h(k - 1, k - 1), prev[d]));
    }
    u64 t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = F.mul(t, h(k - i, k - i - 1));
      const u64 coeff = F.mul(t, h(k - i - 1, k - 1));
      if (coeff == 0) continue;
      const auto& q = p[k - i - 1];
      for (std::size_t d = 0; d < q.size(); ++d) next[d] = F.sub(next[d], F.mul(coeff, q[d]));
    }
    p[k] = std::move(next);
  }
  return p[n];
}

namespace {

using Poly = std::vector<u64>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of a modulo b; b is nonzero.
Poly poly_mod(const PrimeField& F, Poly a, const Poly& b) {
  trim(a);
  const u64 lead_inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    const u64 q = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(q, b[i]));
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const PrimeField& F, const Poly& a, const Poly& b, const Poly& m) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % F.p;
  }
  return poly_mod(F, std::move(c), m);
}

Poly poly_powmod(const PrimeField& F, Poly base, u64 e, const Poly& m) {
  Poly result = poly_mod(F, {1}, m);
  base = poly_mod(F, std::move(base), m);
  while (e > 0) {
    if (e & 1U) result = poly_mulmod(F, result, base, m);
    e >>= 1U;
    if (e > 0) base = poly_mulmod(F, base, base, m);
  }
  return result;
}

Poly monic(const PrimeField& F, Poly f) {
  trim(f);
  if (f.empty()) return f;
  const u64 inv = F.inv(f.back());
  for (auto& c : f) c = F.mul(c, inv);
  return f;
}

Poly poly_gcd(const PrimeField& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, std::move(a));
}

Poly poly_div(const PrimeField& F, Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1, 0);
  const u64 lead_inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    const u64 c = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    trim(a);
  }
  return q;
}

// f is monic, squarefree and splits into distinct linear factors over F_p.
void split_linear(const PrimeField& F, const Poly& f, std::vector<u64>& out) {
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    out.push_back(F.neg(f[0]));
    return;
  }
  for (u64 a = 0;; ++a) {
    Poly h = poly_powmod(F, {a % F.p, 1}, (F.p - 1) / 2, f);
    if (h.empty()) h = {0};
    h[0] = F.sub(h[0], 1);
    const Poly g = poly_gcd(F, f, h);
    if (g.size() > 1 && g.size() < f.size()) {
      split_linear(F, g, out);
      split_linear(F, poly_div(F, f, g), out);
      return;
    }
  }
}

}  // namespace

std::vector<u64> roots(const PrimeField& F, const std::vector<u64>& poly) {
  Poly f = monic(F, poly);
  std::vector<u64> out;
  if (f.size() <= 1) return out;
  if (f[0] == 0) {
    out.push_back(0);
    std::size_t k = 0;
    while (f[k] == 0) ++k;
    f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(k));
  }
  if (F.p == 2) {
    if (!f.empty()) {
      u64 s = 0;
      for (auto c : f) s ^= c & 1U;
      if (s == 0) out.push_back(1);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  // Product of the distinct nonzero linear factors: gcd(f, x^(p-1) - 1).
  Poly xp = poly_powmod(F, {0, 1}, F.p - 1, f);
  if (xp.empty()) xp = {0};
  xp[0] = F.sub(xp[0], 1);
  const Poly g = poly_gcd(F, f, xp);
  split_linear(F, g, out);
  std::sort(out.begin(), out.end());
  return out;
}

u64 primitive_root(u64 p) {
  if (p == 2) return 1;
  const PrimeField F{p};
  const auto factors = prime_divisors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : factors)
      if (F.pow(g, (p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw Error(Errc::NoSuitablePrime, "no primitive root found");
}

}  // namespace cgt::modp
