#include "cgt/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "cgt/error.hpp"
#include "cgt/numeric.hpp"

namespace cgt {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string strip_comment(std::string line) {
  const auto hash = line.find('#');
  if (hash != std::string::npos) line.resize(hash);
  return trim(line);
}

Permutation cycle_on(std::size_t degree, std::vector<Point> cycle) {
  return Permutation::from_cycles(degree, std::vector<std::vector<Point>>{std::move(cycle)});
}

std::uint64_t parse_count(const std::string& text, const std::string& context) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::ConfigError, "expected a nonnegative integer in " + context + ", got '" + text + "'");
  }
}

void require_positive(std::size_t n, const char* family) {
  if (n == 0) throw Error(Errc::ConfigError, std::string(family) + " needs n >= 1");
}

/// Splits "name(a,b(c,d),e)" into the name and its top-level arguments.
std::pair<std::string, std::vector<std::string>> split_call(std::string_view spec) {
  const std::string s = trim(spec);
  const auto open = s.find('(');
  if (open == std::string::npos) return {s, {}};
  if (s.back() != ')') throw Error(Errc::ConfigError, "unbalanced parentheses in '" + s + "'");
  std::vector<std::string> args;
  int depth = 0;
  std::string current;
  for (std::size_t i = open + 1; i + 1 < s.size(); ++i) {
    const char c = s[i];
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) throw Error(Errc::ConfigError, "unbalanced parentheses in '" + s + "'");
    if (c == ',' && depth == 0) {
      args.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (depth != 0) throw Error(Errc::ConfigError, "unbalanced parentheses in '" + s + "'");
  if (!trim(current).empty() || !args.empty()) args.push_back(trim(current));
  return {trim(s.substr(0, open)), args};
}

}  // namespace

PermGroup symmetric(std::size_t n, std::size_t cap) {
  require_positive(n, "symmetric");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(cycle_on(n, {0, 1}));
  if (n >= 3) {
    std::vector<Point> c(n);
    std::iota(c.begin(), c.end(), 0U);
    gens.push_back(cycle_on(n, c));
  }
  return group_from_generators(n, gens, cap);
}

PermGroup alternating(std::size_t n, std::size_t cap) {
  require_positive(n, "alternating");
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i) gens.push_back(cycle_on(n, {0, 1, static_cast<Point>(i)}));
  return group_from_generators(n, gens, cap);
}

PermGroup cyclic(std::size_t n, std::size_t cap) {
  require_positive(n, "cyclic");
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<Point> c(n);
    std::iota(c.begin(), c.end(), 0U);
    gens.push_back(cycle_on(n, c));
  }
  return group_from_generators(n, gens, cap);
}

PermGroup dihedral(std::size_t n, std::size_t cap) {
  require_positive(n, "dihedral");
  if (n == 1) return cyclic(2, cap);
  if (n == 2)
    return group_from_generators(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                     Permutation::from_cycles(4, {{0, 2}, {1, 3}})}, cap);
  std::vector<Point> rotation(n), reflection(n);
  for (std::size_t i = 0; i < n; ++i) {
    rotation[i] = static_cast<Point>((i + 1) % n);
    reflection[i] = static_cast<Point>((n - i) % n);
  }
  return group_from_generators(n, {Permutation(rotation), Permutation(reflection)}, cap);
}

PermGroup frobenius_agl1(std::uint64_t p, std::size_t cap) {
  if (p < 3 || !is_prime_u64(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not an odd prime");
  return frobenius_pq(p, p - 1, cap);
}

PermGroup frobenius_pq(std::uint64_t p, std::uint64_t q, std::size_t cap) {
  if (!is_prime_u64(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (q == 0 || (p - 1) % q != 0)
    throw Error(Errc::ConfigError, std::to_string(q) + " does not divide " + std::to_string(p - 1));
  const std::uint64_t g = [&] {
    for (std::uint64_t r = 2; r < p; ++r) {
      bool primitive = true;
      for (auto f : prime_divisors(p - 1)) {
        std::uint64_t acc = 1;
        for (std::uint64_t e = 0; e < (p - 1) / f; ++e) acc = acc * r % p;
        if (acc == 1) primitive = false;
      }
      if (primitive) return r;
    }
    return std::uint64_t{1};
  }();
  std::uint64_t a = 1;  // an element of order q in F_p^*
  for (std::uint64_t e = 0; e < (p - 1) / q; ++e) a = a * g % p;
  std::vector<Point> shift(p), scale(p);
  for (std::uint64_t x = 0; x < p; ++x) {
    shift[x] = static_cast<Point>((x + 1) % p);
    scale[x] = static_cast<Point>(a * x % p);
  }
  return group_from_generators(p, {Permutation(shift), Permutation(scale)}, cap);
}

PermGroup quaternion(std::size_t cap) {
  // Elements s*u with s in {+1,-1}, u in {1,i,j,k}, indexed 4*(s<0) + u.
  static constexpr int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static constexpr int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  auto right_mult = [](int y) {
    std::vector<Point> images(8);
    for (int x = 0; x < 8; ++x) {
      const int ux = x % 4, uy = y % 4;
      const int sign = (x >= 4 ? -1 : 1) * (y >= 4 ? -1 : 1) * unit_sign[ux][uy];
      images[static_cast<std::size_t>(x)] = static_cast<Point>((sign < 0 ? 4 : 0) + unit_prod[ux][uy]);
    }
    return Permutation(images);
  };
  return group_from_generators(8, {right_mult(1), right_mult(2)}, cap);
}

PermGroup elementary_abelian(std::uint64_t p, std::size_t d, std::size_t cap) {
  if (!is_prime_u64(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  PermGroup G = cyclic(p, cap);
  for (std::size_t i = 1; i < d; ++i) G = direct_product(G, cyclic(p, cap), cap);
  return G;
}

PermGroup direct_product(const PermGroup& G, const PermGroup& H, std::size_t cap) {
  const std::size_t n = G.degree(), m = H.degree();
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) {
    std::vector<Point> images(n + m);
    std::iota(images.begin(), images.end(), 0U);
    for (std::size_t x = 0; x < n; ++x) images[x] = g(static_cast<Point>(x));
    gens.emplace_back(images);
  }
  for (const auto& h : H.generators()) {
    std::vector<Point> images(n + m);
    std::iota(images.begin(), images.end(), 0U);
    for (std::size_t x = 0; x < m; ++x) images[n + x] = static_cast<Point>(n + h(static_cast<Point>(x)));
    gens.emplace_back(images);
  }
  return group_from_generators(n + m, gens, cap);
}

PermGroup wreath_imprimitive(const PermGroup& G, std::size_t n, std::size_t cap) {
  require_positive(n, "wreath");
  const std::size_t m = G.degree();
  const std::size_t degree = m * n;
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), 0U);
    for (std::size_t x = 0; x < m; ++x) images[x] = g(static_cast<Point>(x));
    gens.emplace_back(images);
  }
  auto block_perm = [&](const std::vector<std::size_t>& blocks) {
    std::vector<Point> images(degree);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t x = 0; x < m; ++x) images[b * m + x] = static_cast<Point>(blocks[b] * m + x);
    return Permutation(images);
  };
  if (n >= 2) {
    std::vector<std::size_t> swap(n);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    gens.push_back(block_perm(swap));
  }
  if (n >= 3) {
    std::vector<std::size_t> cycle(n);
    for (std::size_t b = 0; b < n; ++b) cycle[b] = (b + 1) % n;
    gens.push_back(block_perm(cycle));
  }
  return group_from_generators(degree, gens, cap);
}

PermGroup parse_group(std::string_view text, std::size_t cap) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip_comment(line);
    if (body.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (!degree) {
      if (body.rfind("degree:", 0) != 0) throw Error(Errc::ParseError, where + ": expected 'degree: n'");
      try {
        const std::string value = trim(body.substr(7));
        std::size_t used = 0;
        degree = std::stoul(value, &used);
        if (used != value.size() || *degree == 0) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        throw Error(Errc::ParseError, where + ": bad degree");
      }
      continue;
    }
    std::istringstream row(body);
    std::vector<Point> images;
    std::string tok;
    while (row >> tok) {
      try {
        std::size_t used = 0;
        const auto v = std::stoul(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        images.push_back(static_cast<Point>(v));
      } catch (const std::exception&) {
        throw Error(Errc::ParseError, where + ": bad point '" + tok + "'");
      }
    }
    if (images.size() != *degree)
      throw Error(Errc::ParseError, where + ": expected " + std::to_string(*degree) + " images, got " +
                                        std::to_string(images.size()));
    try {
      gens.emplace_back(images);
    } catch (const Error& e) {
      throw Error(Errc::ParseError, where + ": " + e.what());
    }
  }
  if (!degree) throw Error(Errc::ParseError, "missing 'degree: n' header");
  return group_from_generators(*degree, gens, cap);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ConfigError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PermGroup load_group(const std::filesystem::path& path, std::size_t cap) {
  return parse_group(read_text_file(path), cap);
}

std::vector<SimpleGroupData> load_simple_data(const std::filesystem::path& path) {
  return parse_simple_data(read_text_file(path));
}

PermGroup group_from_spec(std::string_view spec, std::size_t cap, const std::filesystem::path& base_dir) {
  const auto [name, args] = split_call(spec);
  const std::string context(spec);
  auto arity = [&](std::size_t n) {
    if (args.size() != n)
      throw Error(Errc::ConfigError, name + " takes " + std::to_string(n) + " argument(s) in '" + context + "'");
  };
  auto num = [&](std::size_t i) { return parse_count(args[i], "'" + context + "'"); };
  if (name == "symmetric") return arity(1), symmetric(num(0), cap);
  if (name == "alternating") return arity(1), alternating(num(0), cap);
  if (name == "cyclic") return arity(1), cyclic(num(0), cap);
  if (name == "dihedral") return arity(1), dihedral(num(0), cap);
  if (name == "frobenius") return arity(1), frobenius_agl1(num(0), cap);
  if (name == "frobenius_pq") return arity(2), frobenius_pq(num(0), num(1), cap);
  if (name == "quaternion") return arity(0), quaternion(cap);
  if (name == "elementary") return arity(2), elementary_abelian(num(0), num(1), cap);
  if (name == "wreath") return arity(2), wreath_imprimitive(group_from_spec(args[0], cap, base_dir), num(1), cap);
  if (name == "direct") {
    if (args.size() < 2) throw Error(Errc::ConfigError, "direct takes at least two factors");
    PermGroup G = group_from_spec(args[0], cap, base_dir);
    for (std::size_t i = 1; i < args.size(); ++i) G = direct_product(G, group_from_spec(args[i], cap, base_dir), cap);
    return G;
  }
  if (name == "file") {
    arity(1);
    const std::filesystem::path p(args[0]);
    return load_group(p.is_absolute() ? p : base_dir / p, cap);
  }
  throw Error(Errc::ConfigError, "unknown group family '" + name + "'");
}

std::vector<CatalogEntry> parse_manifest(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip_comment(line);
    if (body.empty()) continue;
    std::istringstream row(body);
    CatalogEntry e;
    std::string order;
    row >> e.name >> e.spec >> order;
    std::string extra;
    if (e.spec.empty() || (row >> extra))
      throw Error(Errc::ParseError, "manifest line " + std::to_string(line_no) + ": expected '<name> <spec> [order]'");
    if (!order.empty()) e.expected_order = parse_count(order, "manifest line " + std::to_string(line_no));
    for (const auto& prev : out)
      if (prev.name == e.name) throw Error(Errc::ParseError, "duplicate manifest entry '" + e.name + "'");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> load_manifest(const std::filesystem::path& path) {
  return parse_manifest(read_text_file(path));
}

PermGroup build_entry(const CatalogEntry& entry, std::size_t cap, const std::filesystem::path& base_dir) {
  PermGroup G = group_from_spec(entry.spec, cap, base_dir);
  if (entry.expected_order && *entry.expected_order != G.order())
    throw Error(Errc::ValidationFailed, entry.name + ": order " + std::to_string(G.order()) + ", expected " +
                                            std::to_string(*entry.expected_order));
  return G;
}

}  // namespace cgt
