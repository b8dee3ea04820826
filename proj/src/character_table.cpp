#include "cgt/character_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "cgt/error.hpp"
#include "cgt/modular.hpp"

namespace cgt {

namespace {

using modp::Matrix;
using modp::PrimeField;
using modp::u64;
using Index = PermGroup::Index;

constexpr std::size_t kDualGroupMaxOrder = 1024;

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::VerificationFailed, what); }

u64 isqrt(u64 n) {
  u64 r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Matrix class_matrix(const PermGroup& G, const ConjugacyData& classes, std::size_t j, const PrimeField& F) {
  // Row l, column c counts x in C_j with x^-1 z_l in C_c, i.e. the structure
  // constant a_{j c l}; row vectors of central character values are left
  // eigenvectors.
  const std::size_t k = classes.size();
  Matrix T(k, k);
  for (std::size_t l = 0; l < k; ++l) {
    const Index z = classes.reps[l];
    for (Index x : classes.members[j]) {
      const Index y = G.multiply(G.inverse(x), z);
      auto& cell = T(l, classes.class_of[y]);
      cell = F.add(cell, 1);
    }
  }
  return T;
}

std::vector<Matrix> split_space(const PrimeField& F, const Matrix& space, const Matrix& T) {
  const std::size_t d = space.rows();
  std::vector<std::size_t> pivots(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t c = 0;
    while (space(i, c) == 0) ++c;
    pivots[i] = c;
  }
  const Matrix image = modp::multiply(F, space, T);
  Matrix restricted(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) restricted(i, j) = image(i, pivots[j]);

  const auto eigenvalues = modp::roots(F, modp::charpoly(F, restricted));
  std::vector<Matrix> parts;
  std::size_t total = 0;
  for (u64 r : eigenvalues) {
    Matrix shifted = restricted;
    for (std::size_t i = 0; i < d; ++i) shifted(i, i) = F.sub(shifted(i, i), r);
    const Matrix kernel_rows = modp::left_nullspace(F, shifted);
    Matrix part = modp::multiply(F, kernel_rows, space);
    modp::row_reduce(F, part);
    total += part.rows();
    parts.push_back(std::move(part));
  }
  if (total != d) fail("class matrix is not diagonalisable over F_p");
  return parts;
}

std::vector<std::uint32_t> row_kernel(const std::vector<Cyclotomic>& row, std::uint64_t degree) {
  std::vector<std::uint32_t> out;
  const BigInt d = degree;
  for (std::size_t c = 0; c < row.size(); ++c) {
    auto v = row[c].as_integer();
    if (v && *v == d) out.push_back(static_cast<std::uint32_t>(c));
  }
  return out;
}

CharacterTable finish_table(const ConjugacyData& classes, std::vector<std::vector<Cyclotomic>> rows,
                            std::vector<std::uint64_t> degrees, std::uint64_t prime) {
  const std::size_t k = rows.size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  auto is_trivial = [&](std::size_t r) {
    return std::all_of(rows[r].begin(), rows[r].end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
    for (std::size_t c = 0; c < rows[a].size(); ++c) {
      const int cmp = rows[a][c].compare_coords(rows[b][c]);
      if (cmp != 0) return cmp < 0;
    }
    return false;
  });

  CharacterTable table;
  table.group_order = classes.group_order;
  table.class_sizes = classes.sizes;
  table.class_orders = classes.orders;
  table.prime = prime;
  for (std::size_t r : order) {
    table.values.push_back(std::move(rows[r]));
    table.degrees.push_back(degrees[r]);
  }
  for (std::size_t r = 0; r < k; ++r) table.kernels.push_back(row_kernel(table.values[r], table.degrees[r]));
  return table;
}

CharacterTable dual_group_table(const PermGroup& G, const ConjugacyData& classes) {
  // Characters of <H, g> extend those of H: chi(g) must satisfy chi(g)^m = chi(g^m)
  // where m is the relative order of g over H. Values are exponents of zeta_e.
  const std::int64_t e = static_cast<std::int64_t>(G.exponent());
  std::vector<Index> elements{PermGroup::identity()};
  std::vector<std::int64_t> position(G.order(), -1);
  position[PermGroup::identity()] = 0;
  std::vector<std::vector<std::int64_t>> chars{{0}};

  for (Index g : G.generator_indices()) {
    if (position[g] >= 0) continue;
    std::int64_t m = 1;
    Index gm = g;
    while (position[gm] < 0) {
      gm = G.multiply(gm, g);
      ++m;
    }
    const std::size_t old = elements.size();
    std::vector<Index> grown = elements;
    Index gi = g;
    for (std::int64_t i = 1; i < m; ++i) {
      for (std::size_t h = 0; h < old; ++h) {
        const Index y = G.multiply(elements[h], gi);
        position[y] = static_cast<std::int64_t>(grown.size());
        grown.push_back(y);
      }
      gi = G.multiply(gi, g);
    }
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& chi : chars) {
      const std::int64_t a0 = chi[static_cast<std::size_t>(position[gm])];
      if (a0 % m != 0) fail("dual group extension has no solution");
      for (std::int64_t t = 0; t < m; ++t) {
        const std::int64_t a = (a0 / m + t * (e / m)) % e;
        std::vector<std::int64_t> ext(grown.size());
        for (std::int64_t i = 0; i < m; ++i)
          for (std::size_t h = 0; h < old; ++h)
            ext[static_cast<std::size_t>(i) * old + h] = (chi[h] + i * a) % e;
        next.push_back(std::move(ext));
      }
    }
    chars = std::move(next);
    elements = std::move(grown);
  }
  if (elements.size() != G.order()) fail("dual group construction did not reach every element");

  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<std::uint64_t> degrees;
  for (const auto& chi : chars) {
    std::vector<Cyclotomic> row;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const Index x = classes.reps[c];
      const std::int64_t o = classes.orders[c];
      const std::int64_t a = chi[static_cast<std::size_t>(position[x])];
      row.push_back(Cyclotomic::root_of_unity(static_cast<std::uint64_t>(o), a / (e / o)));
    }
    rows.push_back(std::move(row));
    degrees.push_back(1);
  }
  return finish_table(classes, std::move(rows), std::move(degrees), 0);
}

CharacterTable dixon_table(const PermGroup& G, const ConjugacyData& classes) {
  const std::size_t k = classes.size();
  const u64 n = classes.group_order;
  const u64 e = classes.exponent;
  const PrimeField F{dixon_prime(classes)};

  std::vector<Matrix> spaces{Matrix::identity(k)};
  for (std::size_t j = 1; j < k; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Matrix& s) { return s.rows() == 1; })) break;
    const Matrix T = class_matrix(G, classes, j, F);
    std::vector<Matrix> next;
    for (auto& space : spaces) {
      if (space.rows() == 1) {
        next.push_back(std::move(space));
        continue;
      }
      for (auto& part : split_space(F, space, T)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) fail("class matrices did not split the class algebra into lines");

  const u64 zeta_e = F.pow(modp::primitive_root(F.p), (F.p - 1) / e);
  const u64 max_degree = isqrt(n);
  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<std::uint64_t> degrees;
  for (const Matrix& line : spaces) {
    std::vector<u64> omega(k);
    const u64 scale = F.inv(line(0, 0));
    for (std::size_t c = 0; c < k; ++c) omega[c] = F.mul(line(0, c), scale);

    // chi(1)^2 = |G| / sum_c omega_c omega_{c^-1} / |C_c|
    u64 sum = 0;
    for (std::size_t c = 0; c < k; ++c)
      sum = F.add(sum, F.mul(F.mul(omega[c], omega[classes.inverse_class(c)]), F.inv(classes.sizes[c] % F.p)));
    const u64 target = F.mul(n % F.p, F.inv(sum));
    u64 degree = 0;
    for (u64 d = 1; d <= max_degree; ++d)
      if (d * d % F.p == target) {
        degree = d;
        break;
      }
    if (degree == 0) fail("no integer degree matches the central character");

    std::vector<u64> value(k);
    for (std::size_t c = 0; c < k; ++c)
      value[c] = F.mul(F.mul(omega[c], degree), F.inv(classes.sizes[c] % F.p));

    std::vector<Cyclotomic> row;
    row.reserve(k);
    for (std::size_t c = 0; c < k; ++c) {
      // Eigenvalue multiplicities of the representation at rep_c.
      const u64 o = classes.orders[c];
      const u64 z = F.pow(zeta_e, e / o);
      std::vector<u64> zpow(o);
      zpow[0] = 1;
      for (u64 t = 1; t < o; ++t) zpow[t] = F.mul(zpow[t - 1], z);
      const u64 inv_o = F.inv(o);
      std::vector<BigInt> mult(o);
      u64 total = 0;
      for (u64 s = 0; s < o; ++s) {
        u64 acc = 0;
        for (u64 j = 0; j < o; ++j)
          acc = F.add(acc, F.mul(value[classes.power_table[c][j]], zpow[(o - (j * s) % o) % o]));
        const u64 m = F.mul(acc, inv_o);
        if (m > degree) fail("eigenvalue multiplicity exceeds the degree");
        mult[s] = m;
        total += m;
      }
      if (total != degree) fail("eigenvalue multiplicities do not sum to the degree");
      row.push_back(Cyclotomic::from_powers(o, std::move(mult)));
    }
    rows.push_back(std::move(row));
    degrees.push_back(degree);
  }
  return finish_table(classes, std::move(rows), std::move(degrees), F.p);
}

// A generating set of (Z/o)^*. Checking the power maps on these for every
// class covers all units, since the check composes along products.
std::vector<std::int64_t> unit_generators(std::int64_t o) {
  std::vector<std::int64_t> gens;
  std::vector<bool> in(static_cast<std::size_t>(o), false);
  in[1] = true;
  std::vector<std::int64_t> members{1};
  for (std::int64_t k = 2; k < o; ++k) {
    if (std::gcd(k, o) != 1 || in[static_cast<std::size_t>(k)]) continue;
    gens.push_back(k);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::int64_t g : gens) {
        const std::int64_t y = members[i] * g % o;
        if (!in[static_cast<std::size_t>(y)]) {
          in[static_cast<std::size_t>(y)] = true;
          members.push_back(y);
        }
      }
  }
  return gens;
}

}  // namespace

std::uint64_t dixon_prime(const ConjugacyData& classes) {
  const u64 n = classes.group_order;
  const u64 e = classes.exponent;
  const u64 max_class = *std::max_element(classes.sizes.begin(), classes.sizes.end());
  for (u64 p = e + 1; p < (u64{1} << 31); p += e) {
    if (p * p <= 4 * n || p <= max_class) continue;
    if (is_prime_u64(p)) return p;
  }
  throw Error(Errc::NoSuitablePrime, "no prime = 1 mod " + std::to_string(e) + " below 2^31");
}

CharacterTable character_table(const PermGroup& G, const ConjugacyData& classes, TableMethod method) {
  const bool abelian = classes.size() == G.order();
  if (method == TableMethod::DualGroup && !abelian)
    throw Error(Errc::ConfigError, "dual-group construction needs an abelian group");
  const bool dual = method == TableMethod::DualGroup ||
                    (method == TableMethod::Auto && abelian && G.order() <= kDualGroupMaxOrder);
  CharacterTable table = dual ? dual_group_table(G, classes) : dixon_table(G, classes);
  verify_character_table(table, classes);
  return table;
}

void verify_character_table(const CharacterTable& table, const ConjugacyData& classes) {
  const std::size_t k = classes.size();
  if (table.size() != k) fail("row count differs from the class count");
  BigInt sum_squares = 0;
  for (std::size_t r = 0; r < k; ++r) {
    if (table.values[r].size() != k) fail("row length differs from the class count");
    const auto d = table.degrees[r];
    if (table(r, 0) != Cyclotomic(static_cast<long long>(d))) fail("value at the identity is not the degree");
    if (classes.group_order % d != 0) fail("degree does not divide the group order");
    sum_squares += BigInt(d) * d;
    for (std::size_t c = 0; c < k; ++c)
      if (table(r, c).conductor() != classes.orders[c]) fail("value stored at an unexpected conductor");
  }
  if (sum_squares != classes.group_order) fail("sum of squared degrees differs from |G|");
  for (std::size_t c = 0; c < k; ++c)
    if (table(0, c) != Cyclotomic(1)) fail("row 0 is not the trivial character");

  // Galois compatibility chi(g^k) = sigma_k(chi(g)); it makes every row inner
  // product Galois-invariant, hence rational, so the trace form below is exact.
  std::map<std::int64_t, std::vector<std::int64_t>> unit_gens;
  for (std::size_t c = 0; c < k; ++c) {
    const std::int64_t o = classes.orders[c];
    if (o <= 2) continue;
    auto it = unit_gens.find(o);
    if (it == unit_gens.end()) it = unit_gens.emplace(o, unit_generators(o)).first;
    for (std::int64_t g : it->second) {
      const std::uint32_t image = classes.power_map(c, g);
      for (std::size_t r = 0; r < k; ++r)
        if (table(r, image) != table(r, c).galois(g)) fail("values are not compatible with the power maps");
    }
  }

  std::uint64_t L = 1;
  for (std::size_t c = 0; c < k; ++c) L = lcm_u64(L, euler_phi(classes.orders[c]));
  std::vector<BigInt> weight(k);
  for (std::size_t c = 0; c < k; ++c) weight[c] = BigInt(classes.sizes[c]) * (L / euler_phi(classes.orders[c]));
  const BigInt norm = BigInt(classes.group_order) * L;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      BigInt total = 0;
      for (std::size_t c = 0; c < k; ++c) total += weight[c] * trace_of_product_conj(table(i, c), table(j, c));
      if (total != (i == j ? norm : BigInt(0))) fail("row orthogonality fails");
    }
  }
}

std::uint64_t b_of(const CharacterTable& table) {
  return *std::max_element(table.degrees.begin(), table.degrees.end());
}

std::vector<std::uint32_t> kernel(const CharacterTable& table, std::size_t row) {
  return table.kernels.at(row);
}

std::size_t linear_count(const CharacterTable& table) {
  return static_cast<std::size_t>(std::count(table.degrees.begin(), table.degrees.end(), 1U));
}

std::vector<std::uint32_t> class_fusion(const PermGroup& G, const ConjugacyData& classes_G,
                                        const EmbeddedSubgroup& H, const ConjugacyData& classes_H) {
  (void)G;
  std::vector<std::uint32_t> fusion(classes_H.size());
  for (std::size_t c = 0; c < classes_H.size(); ++c)
    fusion[c] = classes_G.class_of[H.to_parent[classes_H.reps[c]]];
  return fusion;
}

Rational restriction_inner_product(const CharacterTable& table_G, std::size_t chi,
                                   const CharacterTable& table_H, std::size_t eta,
                                   const std::vector<std::uint32_t>& fusion,
                                   const ConjugacyData& classes_H) {
  // The sum is an integer multiple of |H|, so projecting each term by Tr/phi is exact.
  std::uint64_t L = 1;
  for (auto o : classes_H.orders) L = lcm_u64(L, euler_phi(o));
  BigInt total = 0;
  for (std::size_t c = 0; c < classes_H.size(); ++c) {
    const BigInt w = BigInt(classes_H.sizes[c]) * (L / euler_phi(classes_H.orders[c]));
    total += w * trace_of_product_conj(table_G(chi, fusion[c]), table_H(eta, c));
  }
  return Rational(total, BigInt(classes_H.group_order) * L);
}

std::string export_table(const PermGroup& G, const ConjugacyData& classes, const CharacterTable& table) {
  std::ostringstream out;
  out << "order " << classes.group_order << "\n";
  out << "classes " << classes.size() << "\n";
  for (std::size_t c = 0; c < classes.size(); ++c)
    out << "class " << c << " order " << classes.orders[c] << " size " << classes.sizes[c] << " rep "
        << G.element(classes.reps[c]).cycle_string() << "\n";
  out << "degrees";
  for (auto d : table.degrees) out << ' ' << d;
  out << "\n";
  for (std::size_t r = 0; r < table.size(); ++r) {
    out << "chi " << r << " :";
    for (std::size_t c = 0; c < classes.size(); ++c) out << ' ' << table(r, c).str();
    out << "\n";
  }
  return out.str();
}

AnalyzedGroup analyze(PermGroup G, TableMethod method) {
  ConjugacyData classes = conjugacy_classes(G);
  CharacterTable table = character_table(G, classes, method);
  return AnalyzedGroup{std::move(G), std::move(classes), std::move(table)};
}

}  // namespace cgt
