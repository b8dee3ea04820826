#include "cgt/clifford.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "cgt/error.hpp"

namespace cgt {

namespace {

using Index = PermGroup::Index;

std::string row_key(const CharacterTable& table, std::size_t row, std::span<const std::size_t> perm) {
  std::string key;
  for (std::size_t c = 0; c < table.values[row].size(); ++c) {
    key += table(row, perm.empty() ? c : perm[c]).str();
    key += ';';
  }
  return key;
}

}  // namespace

NormalSubgroupData normal_data(const PermGroup& G, const ConjugacyData& classes_G, const Subgroup& N) {
  if (!N.is_normal()) throw Error(Errc::NotNormal, "subgroup is not normal");
  EmbeddedSubgroup embedded = embed(G, N);
  ConjugacyData classes = conjugacy_classes(embedded.group);
  CharacterTable table = character_table(embedded.group, classes);
  auto fusion = class_fusion(G, classes_G, embedded, classes);
  return NormalSubgroupData{N, std::move(embedded), std::move(classes), std::move(table), std::move(fusion)};
}

bool LinearCharacter::square_free() const {
  for (auto p : prime_divisors(order))
    if (order % (p * p) == 0) return false;
  return true;
}

std::vector<LinearCharacter> linear_characters(const NormalSubgroupData& N) {
  const auto& table = N.table;
  const auto& classes = N.classes;
  std::vector<LinearCharacter> out;
  for (std::size_t r = 0; r < table.size(); ++r) {
    if (table.degrees[r] != 1) continue;
    // lambda^m(x) = lambda(x^m) for a linear character.
    for (auto m : divisors(classes.exponent)) {
      bool trivial = true;
      for (std::size_t c = 0; c < classes.size() && trivial; ++c)
        trivial = table(r, classes.power_map(c, static_cast<std::int64_t>(m))) == Cyclotomic(1);
      if (trivial) {
        out.push_back({r, m});
        break;
      }
    }
  }
  return out;
}

std::vector<std::size_t> conjugation_action(const PermGroup& G, const NormalSubgroupData& N, Index g) {
  const auto& cls = N.classes;
  const Index g_inv = G.inverse(g);
  std::vector<std::size_t> class_perm(cls.size());
  for (std::size_t c = 0; c < cls.size(); ++c) {
    const Index x = N.embedded.to_parent[cls.reps[c]];
    const Index y = G.conjugate(x, g_inv);  // g x g^-1
    class_perm[c] = cls.class_of[N.embedded.to_local(y, G)];
  }
  std::map<std::string, std::size_t> by_values;
  for (std::size_t r = 0; r < N.table.size(); ++r) by_values.emplace(row_key(N.table, r, {}), r);
  std::vector<std::size_t> row_perm(N.table.size());
  for (std::size_t r = 0; r < N.table.size(); ++r) {
    auto it = by_values.find(row_key(N.table, r, class_perm));
    if (it == by_values.end()) throw Error(Errc::VerificationFailed, "conjugate character not found in the table");
    row_perm[r] = it->second;
  }
  return row_perm;
}

std::vector<CharacterOrbit> orbits_on_irr(const PermGroup& G, const NormalSubgroupData& N, bool linear_only) {
  const std::size_t k = N.table.size();
  std::vector<std::vector<std::size_t>> actions;
  for (Index g : G.generator_indices()) actions.push_back(conjugation_action(G, N, g));
  std::vector<bool> seen(k, false);
  std::vector<CharacterOrbit> out;
  for (std::size_t r = 0; r < k; ++r) {
    if (seen[r] || (linear_only && N.table.degrees[r] != 1)) continue;
    CharacterOrbit orbit;
    orbit.representative = r;
    orbit.members.push_back(r);
    seen[r] = true;
    for (std::size_t i = 0; i < orbit.members.size(); ++i)
      for (const auto& a : actions) {
        const std::size_t s = a[orbit.members[i]];
        if (!seen[s]) {
          seen[s] = true;
          orbit.members.push_back(s);
        }
      }
    std::sort(orbit.members.begin(), orbit.members.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

Subgroup inertia_group(const PermGroup& G, const NormalSubgroupData& N, std::size_t row) {
  const auto& gens = G.generator_indices();
  std::vector<std::vector<std::size_t>> actions;
  for (Index g : gens) actions.push_back(conjugation_action(G, N, g));
  std::map<std::size_t, Index> transversal{{row, PermGroup::identity()}};
  std::vector<std::size_t> queue{row};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const std::size_t image = actions[s][queue[i]];
      if (transversal.emplace(image, G.multiply(transversal[queue[i]], gens[s])).second) queue.push_back(image);
    }
  std::vector<Index> schreier(N.subgroup.generators());
  for (auto [point, t] : transversal)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const Index image_t = transversal.at(actions[s][point]);
      const Index x = G.multiply(G.multiply(t, gens[s]), G.inverse(image_t));
      if (x != PermGroup::identity()) schreier.push_back(x);
    }
  std::sort(schreier.begin(), schreier.end());
  schreier.erase(std::unique(schreier.begin(), schreier.end()), schreier.end());
  Subgroup I = subgroup_generated(G, schreier);
  if (I.order() * transversal.size() != G.order())
    throw Error(Errc::VerificationFailed, "inertia group index differs from the orbit size");
  return I;
}

std::vector<std::size_t> irr_over(const CharacterTable& table_G, const NormalSubgroupData& N, std::size_t eta) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < table_G.size(); ++r)
    if (restriction_inner_product(table_G, r, N.table, eta, N.fusion, N.classes) != 0) out.push_back(r);
  return out;
}

Rational average_degree(const CharacterTable& table, std::span<const std::size_t> rows) {
  if (rows.empty()) throw Error(Errc::EmptySet, "no characters to average");
  BigInt sum = 0;
  for (auto r : rows) sum += table.degrees[r];
  return Rational(sum, BigInt(rows.size()));
}

Rational acd_over(const CharacterTable& table_G, const NormalSubgroupData& N, std::size_t eta) {
  const auto rows = irr_over(table_G, N, eta);
  if (rows.empty()) throw Error(Errc::EmptyFiber, "no character lies over row " + std::to_string(eta));
  return average_degree(table_G, rows);
}

Rational acd_over_set(const CharacterTable& table_G, const NormalSubgroupData& N,
                      std::span<const std::size_t> rows) {
  std::vector<std::size_t> all;
  for (auto eta : rows)
    for (auto r : irr_over(table_G, N, eta)) all.push_back(r);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (all.empty()) throw Error(Errc::EmptySet, "the union of fibres is empty");
  return average_degree(table_G, all);
}

std::vector<std::size_t> irr_above(const CharacterTable& table_G, const ConjugacyData& classes_G, const Subgroup& N) {
  std::vector<bool> meets(classes_G.size(), false);
  for (auto x : N.elements()) meets[classes_G.class_of[x]] = true;
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < table_G.size(); ++r) {
    std::vector<bool> in_kernel(classes_G.size(), false);
    for (auto c : table_G.kernels[r]) in_kernel[c] = true;
    bool contains = true;
    for (std::size_t c = 0; c < classes_G.size() && contains; ++c) contains = !meets[c] || in_kernel[c];
    if (!contains) out.push_back(r);
  }
  return out;
}

Rational acd_above(const CharacterTable& table_G, const ConjugacyData& classes_G, const Subgroup& N) {
  if (N.is_trivial()) throw Error(Errc::TrivialN, "every character contains the trivial subgroup in its kernel");
  return average_degree(table_G, irr_above(table_G, classes_G, N));
}

bool extends(const CharacterTable& table_G, const NormalSubgroupData& N, std::size_t theta) {
  const auto d = N.table.degrees[theta];
  for (auto r : irr_over(table_G, N, theta))
    if (table_G.degrees[r] == d) return true;
  return false;
}

}  // namespace cgt
