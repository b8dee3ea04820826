#include "cgt/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "cgt/error.hpp"

namespace cgt {

namespace {

// Phi_n = prod_{d | n} (x^d - 1)^mu(n/d): multiply the mu = +1 factors, divide by the rest.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t n) {
  std::vector<std::int64_t> poly{1};
  std::vector<std::uint64_t> divide_by;
  for (std::uint64_t d : divisors(n)) {
    const int mu = moebius(n / d);
    if (mu == 1) {
      std::vector<std::int64_t> next(poly.size() + d, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + d] += poly[i];
        next[i] -= poly[i];
      }
      poly = std::move(next);
    } else if (mu == -1) {
      divide_by.push_back(d);
    }
  }
  for (std::uint64_t d : divide_by) {
    // Exact division by x^d - 1.
    std::vector<std::int64_t> quotient(poly.size() - d, 0);
    for (std::size_t i = poly.size() - 1; i >= d; --i) {
      quotient[i - d] = poly[i];
      poly[i - d] += poly[i];
      poly[i] = 0;
    }
    for (std::size_t i = 0; i < d; ++i)
      if (poly[i] != 0) throw Error(Errc::VerificationFailed, "cyclotomic polynomial division");
    poly = std::move(quotient);
  }
  return poly;
}

}  // namespace

std::vector<BigInt> CyclotomicField::reduce(std::vector<BigInt> coeffs) const {
  for (std::size_t deg = coeffs.size(); deg-- > phi;) {
    if (coeffs[deg].is_zero()) continue;
    const BigInt c = coeffs[deg];
    coeffs[deg] = 0;
    // zeta^phi = -sum_{i<phi} c_i zeta^i
    for (const auto& [i, ci] : tail) coeffs[deg - phi + i] -= c * ci;
  }
  coeffs.resize(phi);
  return coeffs;
}

const CyclotomicField& cyclotomic_field(std::uint64_t n) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::unique_ptr<const CyclotomicField>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    auto field = std::make_unique<CyclotomicField>();
    field->n = n;
    field->poly = cyclotomic_polynomial(n);
    field->phi = field->poly.size() - 1;
    for (std::size_t i = 0; i < field->phi; ++i)
      if (field->poly[i] != 0) field->tail.emplace_back(i, field->poly[i]);
    // Ramanujan sum: Tr(zeta_n^m) = mu(n/g) phi(n) / phi(n/g), g = gcd(m, n).
    field->ramanujan.resize(n);
    const auto phi_n = static_cast<std::int64_t>(euler_phi(n));
    for (std::uint64_t m = 0; m < n; ++m) {
      const std::uint64_t g = gcd_u64(m, n);
      const std::uint64_t q = n / g;
      field->ramanujan[m] = moebius(q) * phi_n / static_cast<std::int64_t>(euler_phi(q));
    }
    slot = std::move(field);
  }
  return *slot;
}

Cyclotomic::Cyclotomic(const BigInt& integer) : n_(1), coords_{integer} {}

Cyclotomic Cyclotomic::root_of_unity(std::uint64_t n, std::int64_t k) {
  const auto nn = static_cast<std::int64_t>(n);
  std::vector<BigInt> coeffs(static_cast<std::size_t>(((k % nn) + nn) % nn) + 1);
  coeffs.back() = 1;
  return from_powers(n, std::move(coeffs));
}

Cyclotomic Cyclotomic::from_powers(std::uint64_t n, std::vector<BigInt> coeffs) {
  const auto& field = cyclotomic_field(n);
  // Fold exponents modulo n first so the reduction never sees degree >= n.
  if (coeffs.size() > n) {
    for (std::size_t m = n; m < coeffs.size(); ++m) coeffs[m % n] += coeffs[m];
    coeffs.resize(n);
  }
  return Cyclotomic(n, field.reduce(std::move(coeffs)));
}

Cyclotomic Cyclotomic::from_coords(std::uint64_t n, std::vector<BigInt> coords) {
  const auto& field = cyclotomic_field(n);
  if (coords.size() != field.phi) throw Error(Errc::ParseError, "coordinate count does not match phi(n)");
  return Cyclotomic(n, std::move(coords));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) return false;
  return true;
}

std::optional<BigInt> Cyclotomic::as_integer() const {
  if (!is_rational()) return std::nullopt;
  return coords_[0];
}

Cyclotomic Cyclotomic::embed(std::uint64_t target) const {
  if (target == n_) return *this;
  if (target % n_ != 0) throw Error(Errc::VerificationFailed, "embedding into a non-multiple conductor");
  const std::uint64_t step = target / n_;
  std::vector<BigInt> coeffs(coords_.empty() ? 1 : (coords_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < coords_.size(); ++i) coeffs[i * step] = coords_[i];
  return from_powers(target, std::move(coeffs));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  if (n_ <= 2) return *this;
  const auto nn = static_cast<std::int64_t>(n_);
  std::vector<BigInt> coeffs(n_);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    const std::int64_t e = ((static_cast<std::int64_t>(i) * k) % nn + nn) % nn;
    coeffs[static_cast<std::size_t>(e)] += coords_[i];
  }
  return from_powers(n_, std::move(coeffs));
}

int Cyclotomic::compare_coords(const Cyclotomic& other) const {
  const std::size_t n = std::min(coords_.size(), other.coords_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (coords_[i] < other.coords_[i]) return -1;
    if (coords_[i] > other.coords_[i]) return 1;
  }
  if (coords_.size() != other.coords_.size()) return coords_.size() < other.coords_.size() ? -1 : 1;
  return 0;
}

std::string Cyclotomic::str() const {
  std::string out = std::to_string(n_) + ":";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += coords_[i].str();
  }
  return out;
}

namespace {

std::pair<Cyclotomic, Cyclotomic> common(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() == b.conductor()) return {a, b};
  const std::uint64_t n = lcm_u64(a.conductor(), b.conductor());
  return {a.embed(n), b.embed(n)};
}

}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) {
    auto [x, y] = common(a, b);
    return x + y;
  }
  Cyclotomic r = a;
  for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
  return r;
}

Cyclotomic operator-(const Cyclotomic& a) {
  Cyclotomic r = a;
  for (auto& c : r.coords_) c = -c;
  return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) {
    auto [x, y] = common(a, b);
    return x * y;
  }
  const std::size_t phi = a.coords_.size();
  std::vector<BigInt> prod(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.coords_[i].is_zero()) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.coords_[j].is_zero()) continue;
      prod[i + j] += a.coords_[i] * b.coords_[j];
    }
  }
  return Cyclotomic(a.n_, cyclotomic_field(a.n_).reduce(std::move(prod)));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) {
    auto [x, y] = common(a, b);
    return x.coords_ == y.coords_;
  }
  return a.coords_ == b.coords_;
}

BigInt trace_of_product_conj(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor())
    throw Error(Errc::VerificationFailed, "trace form needs a common conductor");
  const auto& field = cyclotomic_field(a.conductor());
  BigInt total = 0;
  const auto& x = a.coords();
  const auto& y = b.coords();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero()) continue;
      total += x[i] * y[j] * field.trace_of_power(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j));
    }
  }
  return total;
}

}  // namespace cgt
