#include "cgt/socle_transform.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "cgt/error.hpp"

namespace cgt {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
std::vector<T> parse_numbers(const std::string& text, const std::string& field) {
  std::istringstream in(text);
  std::vector<T> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(static_cast<T>(v));
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad number '" + tok + "' in field " + field);
    }
  }
  return out;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  }
};

}  // namespace

std::uint64_t SimpleGroupData::m() const {
  std::uint64_t best = 0;
  for (auto d : degrees)
    if (d > 1 && (best == 0 || d < best)) best = d;
  return best;
}

void SimpleGroupData::validate() const {
  auto bad = [&](const std::string& what) { throw Error(Errc::ValidationFailed, name + ": " + what); };
  if (degrees.size() < 2 || degrees[0] != 1) bad("degree list must start with the principal degree 1");
  BigInt sum = 0;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i > 0 && degrees[i] <= 1) bad("a nonabelian simple group has a single linear character");
    sum += BigInt(degrees[i]) * degrees[i];
  }
  if (sum != order) bad("sum of squared degrees " + to_string(sum) + " differs from the order " + std::to_string(order));
  if (alpha_index == 0 || alpha_index >= degrees.size()) bad("alpha_index must name a nonprincipal character");
  for (const auto& g : aut_generators) {
    if (g.size() != degrees.size()) bad("automorphism action has the wrong length");
    std::vector<bool> hit(g.size(), false);
    for (auto x : g) {
      if (x >= g.size() || hit[x]) bad("automorphism action is not a permutation");
      hit[x] = true;
    }
    if (g[0] != 0 || g[alpha_index] != alpha_index) bad("automorphism action must fix the principal and alpha characters");
    for (std::size_t i = 0; i < g.size(); ++i)
      if (degrees[g[i]] != degrees[i]) bad("automorphism action does not preserve degrees");
  }
}

std::vector<SimpleGroupData> parse_simple_data(std::string_view text) {
  std::vector<SimpleGroupData> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto colon = body.find(':');
    if (colon == std::string::npos)
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected 'field: value'");
    const std::string key = trim(body.substr(0, colon));
    const std::string value = trim(body.substr(colon + 1));
    if (key == "name") {
      out.emplace_back();
      out.back().name = value;
      continue;
    }
    if (out.empty()) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": field before any name");
    auto& rec = out.back();
    if (key == "order") {
      const auto v = parse_numbers<std::uint64_t>(value, key);
      if (v.size() != 1) throw Error(Errc::ParseError, "order takes one number");
      rec.order = v[0];
    } else if (key == "degrees") {
      rec.degrees = parse_numbers<std::uint64_t>(value, key);
    } else if (key == "alpha_index") {
      const auto v = parse_numbers<std::size_t>(value, key);
      if (v.size() != 1) throw Error(Errc::ParseError, "alpha_index takes one number");
      rec.alpha_index = v[0];
    } else if (key == "aut") {
      rec.aut_generators.push_back(parse_numbers<std::size_t>(value, key));
    } else {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": unknown field '" + key + "'");
    }
  }
  for (const auto& rec : out) rec.validate();
  return out;
}

const std::vector<SimpleGroupData>& builtin_simple_data() {
  static const std::vector<SimpleGroupData> pack = parse_simple_data(
      "name: A5\norder: 60\ndegrees: 1 3 3 4 5\nalpha_index: 4\naut: 0 2 1 3 4\n"
      "name: A6\norder: 360\ndegrees: 1 5 5 8 8 9 10\nalpha_index: 5\naut: 0 2 1 3 4 5 6\naut: 0 1 2 4 3 5 6\n"
      "name: PSL(2,7)\norder: 168\ndegrees: 1 3 3 6 7 8\nalpha_index: 4\naut: 0 2 1 3 4 5\n");
  return pack;
}

SocleShape parse_shape(std::string_view spec, const std::vector<SimpleGroupData>& pack) {
  SocleShape shape;
  std::string text(spec);
  // ',' also separates factors, except inside names such as PSL(2,7)
  int depth = 0;
  for (char& ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) ch = '*';
  }
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, '*')) {
    part = trim(part);
    if (part.empty()) throw Error(Errc::ConfigError, "empty factor in shape '" + std::string(spec) + "'");
    std::string name = part;
    std::size_t copies = 1;
    const auto caret = part.rfind('^');
    if (caret != std::string::npos) {
      name = trim(part.substr(0, caret));
      const std::string count = trim(part.substr(caret + 1));
      try {
        std::size_t used = 0;
        copies = std::stoul(count, &used);
        if (used != count.size() || copies == 0) throw std::invalid_argument(count);
      } catch (const std::exception&) {
        throw Error(Errc::ConfigError, "bad multiplicity '" + count + "'");
      }
    }
    auto it = std::find_if(pack.begin(), pack.end(), [&](const SimpleGroupData& s) { return s.name == name; });
    if (it == pack.end()) throw Error(Errc::ConfigError, "unknown simple group '" + name + "'");
    for (const auto& c : shape)
      if (c.group.name == name) throw Error(Errc::ConfigError, "repeated simple group '" + name + "' in shape");
    shape.push_back({*it, copies});
  }
  if (shape.empty()) throw Error(Errc::ConfigError, "empty shape");
  return shape;
}

std::string shape_string(const SocleShape& shape) {
  std::string out;
  for (const auto& c : shape) {
    if (!out.empty()) out += '*';
    out += c.group.name + "^" + std::to_string(c.copies);
  }
  return out;
}

BigInt theta_degree(const SocleShape& shape, const FactorTuple& theta) {
  BigInt d = 1;
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (auto idx : theta[i]) d *= shape[i].group.degrees.at(idx);
  return d;
}

bool SqrtBound::le(const Rational& x) const {
  if (x < 0) return false;
  return x * x >= Rational(square());
}

std::string SqrtBound::str() const {
  if (radicand == 1) return to_string(coeff);
  if (coeff == 1) return "sqrt(" + to_string(radicand) + ")";
  return to_string(coeff) + "*sqrt(" + to_string(radicand) + ")";
}

SqrtBound min_degree_bound(const SocleShape& shape) {
  SqrtBound b;
  BigInt rest = 1;
  for (const auto& c : shape) {
    const BigInt m = c.group.m();
    b.coeff *= pow(m, c.copies / 2);
    if (c.copies % 2 == 1) rest *= m;
  }
  for (BigInt f = 2; f * f <= rest; ++f)
    while (rest % (f * f) == 0) {
      rest /= f * f;
      b.coeff *= f;
    }
  b.radicand = rest;
  return b;
}

std::size_t principal_count(const FactorTuple& theta, std::size_t component) {
  return static_cast<std::size_t>(std::count(theta[component].begin(), theta[component].end(), 0U));
}

bool has_principal_majority(const SocleShape& shape, const FactorTuple& theta) {
  for (std::size_t i = 0; i < shape.size(); ++i)
    if (2 * principal_count(theta, i) > shape[i].copies) return true;
  return false;
}

std::optional<FactorTuple> theta_prime(const SocleShape& shape, const FactorTuple& theta) {
  if (!has_principal_majority(shape, theta)) return std::nullopt;
  FactorTuple out = theta;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (2 * principal_count(theta, i) <= shape[i].copies) continue;
    const auto alpha = shape[i].group.alpha_index;
    for (auto& idx : out[i]) {
      if (idx == 0)
        idx = alpha;
      else if (idx == alpha)
        idx = 0;
    }
  }
  return out;
}

std::vector<std::vector<std::vector<std::size_t>>> decomposition_partition(const SocleShape& shape,
                                                                           const FactorTuple& theta) {
  std::vector<std::vector<std::vector<std::size_t>>> out(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) {
    std::vector<std::size_t> seen;
    for (std::size_t j = 0; j < theta[i].size(); ++j) {
      auto it = std::find(seen.begin(), seen.end(), theta[i][j]);
      if (it == seen.end()) {
        seen.push_back(theta[i][j]);
        out[i].push_back({j});
      } else {
        out[i][static_cast<std::size_t>(it - seen.begin())].push_back(j);
      }
    }
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

ModelAction ModelAction::full(const SocleShape& shape) {
  ModelAction a;
  for (const auto& c : shape) {
    std::vector<std::vector<std::size_t>> gens;
    const std::size_t u = c.copies;
    if (u >= 2) {
      std::vector<std::size_t> swap(u);
      std::iota(swap.begin(), swap.end(), 0);
      std::swap(swap[0], swap[1]);
      gens.push_back(swap);
    }
    if (u >= 3) {
      std::vector<std::size_t> cycle(u);
      for (std::size_t j = 0; j < u; ++j) cycle[j] = (j + 1) % u;
      gens.push_back(cycle);
    }
    a.top_generators.push_back(std::move(gens));
  }
  return a;
}

ModelAction ModelAction::trivial_top(const SocleShape& shape) {
  ModelAction a;
  a.top_generators.resize(shape.size());
  return a;
}

std::uint64_t tuple_count(const SocleShape& shape) {
  BigInt n = 1;
  for (const auto& c : shape) n *= pow(BigInt(c.group.degrees.size()), c.copies);
  if (n > BigInt(std::numeric_limits<std::uint64_t>::max() / 2)) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(n);
}

std::uint64_t encode(const SocleShape& shape, const FactorTuple& theta) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (auto idx : theta[i]) code = code * shape[i].group.degrees.size() + idx;
  return code;
}

FactorTuple decode(const SocleShape& shape, std::uint64_t code) {
  FactorTuple theta(shape.size());
  for (std::size_t i = shape.size(); i-- > 0;) {
    const auto k = shape[i].group.degrees.size();
    theta[i].resize(shape[i].copies);
    for (std::size_t j = shape[i].copies; j-- > 0;) {
      theta[i][j] = code % k;
      code /= k;
    }
  }
  return theta;
}

std::vector<ModelGenerator> model_generators(const SocleShape& shape, const ModelAction& action) {
  std::vector<ModelGenerator> out;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    for (const auto& t : action.top_generators.at(i)) out.push_back({i, true, 0, t});
    if (!action.include_aut) continue;
    for (const auto& a : shape[i].group.aut_generators)
      for (std::size_t copy = 0; copy < shape[i].copies; ++copy) out.push_back({i, false, copy, a});
  }
  return out;
}

FactorTuple apply(const FactorTuple& theta, const ModelGenerator& g) {
  FactorTuple out = theta;
  auto& comp = out[g.component];
  if (g.is_top) {
    for (std::size_t j = 0; j < comp.size(); ++j) comp[g.perm[j]] = theta[g.component][j];
  } else {
    comp[g.copy] = g.perm[comp[g.copy]];
  }
  return out;
}

ModelOrbits model_orbits(const SocleShape& shape, const ModelAction& action, std::uint64_t cap) {
  const std::uint64_t n = tuple_count(shape);
  if (n > cap)
    throw Error(Errc::TupleCapExceeded, shape_string(shape) + " has " + std::to_string(n) + " tuples, cap " +
                                            std::to_string(cap));
  const auto gens = model_generators(shape, action);
  UnionFind uf(n);
  for (std::uint64_t code = 0; code < n; ++code) {
    const FactorTuple theta = decode(shape, code);
    for (const auto& g : gens)
      uf.unite(static_cast<std::uint32_t>(code), static_cast<std::uint32_t>(encode(shape, apply(theta, g))));
  }
  ModelOrbits out;
  out.orbit_of.assign(n, 0);
  std::vector<std::int64_t> id_of_root(n, -1);
  for (std::uint64_t code = 0; code < n; ++code) {
    const auto root = uf.find(static_cast<std::uint32_t>(code));
    if (id_of_root[root] < 0) {
      id_of_root[root] = static_cast<std::int64_t>(out.representative.size());
      out.representative.push_back(code);
      out.size.push_back(0);
    }
    const auto id = static_cast<std::uint32_t>(id_of_root[root]);
    out.orbit_of[code] = id;
    ++out.size[id];
  }
  return out;
}

DeltaSystem delta_system(const SocleShape& shape, const ModelAction& action, const ModelOrbits& orbits) {
  (void)action;
  DeltaSystem delta;
  delta.bound = min_degree_bound(shape);
  std::set<std::uint32_t> images;
  std::vector<DeltaBlock> tail;
  for (std::size_t o = 0; o < orbits.count(); ++o) {
    const FactorTuple theta = decode(shape, orbits.representative[o]);
    const auto prime = theta_prime(shape, theta);
    if (!prime) continue;
    DeltaBlock block;
    block.theta = orbits.representative[o];
    block.theta_prime = encode(shape, *prime);
    block.degree_sum = theta_degree(shape, theta) + theta_degree(shape, *prime);
    block.members = 2;
    if (!images.insert(orbits.orbit_of[*block.theta_prime]).second) delta.perfect_matching = false;
    delta.blocks.push_back(std::move(block));
  }
  delta.paired = delta.blocks.size();
  for (std::size_t o = 0; o < orbits.count(); ++o) {
    const FactorTuple theta = decode(shape, orbits.representative[o]);
    if (has_principal_majority(shape, theta) || images.count(static_cast<std::uint32_t>(o))) continue;
    DeltaBlock block;
    block.theta = orbits.representative[o];
    block.degree_sum = theta_degree(shape, theta);
    delta.blocks.push_back(std::move(block));
  }
  bool first = true;
  for (const auto& b : delta.blocks) {
    const Rational avg = b.average();
    if (first || avg < delta.block_minimum) delta.block_minimum = avg;
    first = false;
    if (!delta.bound.le(2 * avg)) delta.aggregate_pass = false;
  }
  return delta;
}

bool SocleSimReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.pass; });
}

SocleSimReport simulate_socle(const SocleShape& shape, const ModelAction& action, std::uint64_t cap) {
  SocleSimReport report;
  report.shape = shape_string(shape);
  report.bound = min_degree_bound(shape);
  const ModelOrbits orbits = model_orbits(shape, action, cap);
  report.tuples = orbits.orbit_of.size();
  report.orbits = orbits.count();
  const auto gens = model_generators(shape, action);

  CheckLine defined{"defined_iff_majority"}, degree{"degree_bound"}, partition{"partition_coincidence"},
      twice{"double_prime_undefined"}, equivariant{"equivariance"}, stabilizer{"stabilizer_equal"},
      separate{"distinct_orbits"}, tail{"unpaired_degree_bound"};
  auto record = [](CheckLine& line, bool ok) {
    ++line.checked;
    if (!ok) {
      ++line.failures;
      line.pass = false;
    }
  };

  const BigInt bound_sq = report.bound.square();
  for (std::uint64_t code = 0; code < report.tuples; ++code) {
    const FactorTuple theta = decode(shape, code);
    bool majority = false;
    for (std::size_t i = 0; i < shape.size(); ++i) {
      std::size_t principal = 0;
      for (auto idx : theta[i]) principal += idx == 0 ? 1 : 0;
      majority = majority || principal * 2 > shape[i].copies;
    }
    const auto prime = theta_prime(shape, theta);
    record(defined, prime.has_value() == majority);
    if (!prime) {
      const BigInt d = theta_degree(shape, theta);
      record(tail, d * d >= bound_sq);
      for (const auto& g : gens) record(equivariant, !theta_prime(shape, apply(theta, g)).has_value());
      continue;
    }
    ++report.defined;
    const BigInt d = theta_degree(shape, *prime);
    record(degree, d * d >= bound_sq);
    record(partition, decomposition_partition(shape, theta) == decomposition_partition(shape, *prime));
    record(twice, !theta_prime(shape, *prime).has_value());
    for (const auto& g : gens) {
      const auto lhs = theta_prime(shape, apply(theta, g));
      record(equivariant, lhs.has_value() && *lhs == apply(*prime, g));
    }
    const auto o = orbits.orbit_of[code];
    const auto o_prime = orbits.orbit_of[encode(shape, *prime)];
    record(stabilizer, orbits.size[o] == orbits.size[o_prime]);
    record(separate, o != o_prime);
  }

  report.delta = delta_system(shape, action, orbits);
  CheckLine matching{"perfect_matching", report.delta.perfect_matching, report.delta.paired,
                     report.delta.perfect_matching ? 0U : 1U};
  CheckLine aggregate{"aggregate_bound", report.delta.aggregate_pass, report.delta.blocks.size(),
                      report.delta.aggregate_pass ? 0U : 1U};
  report.checks = {defined, degree, partition, twice, equivariant, stabilizer, separate, tail, matching, aggregate};
  return report;
}

}  // namespace cgt
