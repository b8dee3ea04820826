#include "cgt/numeric.hpp"

#include <cmath>
#include <mutex>
#include <numeric>

#include "cgt/error.hpp"

namespace cgt {

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (auto p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

int moebius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      low.push_back(d);
      if (d * d != n) high.push_back(n / d);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

RationalExponent RationalExponent::parse(const std::string& text) {
  // Accepts "p", "p/q" or a finite decimal such as "2.596".
  auto fail = [&]() -> RationalExponent {
    throw Error(Errc::ConfigError, "cannot parse exponent '" + text + "'");
  };
  if (text.empty()) return fail();
  std::uint64_t num = 0, den = 1;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    try {
      num = std::stoull(text.substr(0, slash));
      den = std::stoull(text.substr(slash + 1));
    } catch (const std::exception&) {
      return fail();
    }
  } else {
    bool seen_dot = false;
    for (char c : text) {
      if (c == '.') {
        if (seen_dot) return fail();
        seen_dot = true;
      } else if (c >= '0' && c <= '9') {
        num = num * 10 + static_cast<std::uint64_t>(c - '0');
        if (seen_dot) den *= 10;
      } else {
        return fail();
      }
    }
  }
  if (den == 0) return fail();
  const auto g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string RationalExponent::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

bool leq_rational_power(const BigInt& x, const Rational& y, RationalExponent e) {
  const BigInt a = boost::multiprecision::numerator(y);
  const BigInt b = boost::multiprecision::denominator(y);
  return pow(x, e.den) * pow(b, e.num) <= pow(a, e.num);
}

namespace {

// alpha = 4/3 + 2 log_3 2, since (6 * 24^(1/3))^3 = 5184 = 2^6 3^4.
// a/b < alpha  <=>  3^(3a - 4b) < 2^(6b).
int compare_with_alpha(std::uint64_t a, std::uint64_t b) {
  const std::int64_t shift = 3 * static_cast<std::int64_t>(a) - 4 * static_cast<std::int64_t>(b);
  if (shift < 0) return -1;
  const BigInt lhs = pow(BigInt(3), static_cast<std::uint64_t>(shift));
  const BigInt rhs = pow(BigInt(2), 6 * b);
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

struct AlphaBrackets {
  std::vector<std::pair<RationalExponent, RationalExponent>> levels;
};

const AlphaBrackets& alpha_brackets() {
  static const AlphaBrackets brackets = [] {
    AlphaBrackets out;
    const long double alpha = 4.0L / 3.0L + 2.0L * std::log(2.0L) / std::log(3.0L);
    // Continued-fraction convergents, certified exactly; stop once long double
    // precision is exhausted or the denominator grows past 10^4.
    std::uint64_t h_prev = 1, h = static_cast<std::uint64_t>(alpha);
    std::uint64_t k_prev = 0, k = 1;
    long double frac = alpha - static_cast<long double>(h);
    std::vector<RationalExponent> below, above;
    for (int step = 0; step < 40; ++step) {
      const int cmp = compare_with_alpha(h, k);
      if (cmp < 0) below.push_back({h, k});
      if (cmp > 0) above.push_back({h, k});
      if (frac < 1e-15L) break;
      const long double inv = 1.0L / frac;
      const auto term = static_cast<std::uint64_t>(inv);
      frac = inv - static_cast<long double>(term);
      const std::uint64_t h_next = term * h + h_prev;
      const std::uint64_t k_next = term * k + k_prev;
      if (k_next > 10'000) break;
      h_prev = h;
      h = h_next;
      k_prev = k;
      k = k_next;
    }
    const std::size_t n = std::min(below.size(), above.size());
    for (std::size_t i = 0; i < n; ++i) out.levels.emplace_back(below[i], above[i]);
    return out;
  }();
  return brackets;
}

}  // namespace

int large_orbit_alpha_levels() { return static_cast<int>(alpha_brackets().levels.size()); }

std::pair<RationalExponent, RationalExponent> large_orbit_alpha_bracket(int level) {
  return alpha_brackets().levels.at(static_cast<std::size_t>(level));
}

Verdict leq_power_large_orbit_alpha(const BigInt& x, const Rational& y) {
  if (y == 1) return x <= 1 ? Verdict::Pass : Verdict::Fail;
  const bool grows = y > 1;
  for (const auto& [lo, hi] : alpha_brackets().levels) {
    // For y > 1: y^lo < y^alpha < y^hi; the order flips for y < 1.
    const auto& weak = grows ? lo : hi;
    const auto& strong = grows ? hi : lo;
    if (leq_rational_power(x, y, weak)) return Verdict::Pass;
    if (!leq_rational_power(x, y, strong)) return Verdict::Fail;
  }
  return Verdict::Indeterminate;
}

}  // namespace cgt
