#include "cgt/conjugacy.hpp"

#include <algorithm>
#include <numeric>

namespace cgt {

std::uint32_t ConjugacyData::power_map(std::size_t c, std::int64_t j) const {
  const auto n = static_cast<std::int64_t>(orders[c]);
  return power_table[c][static_cast<std::size_t>(((j % n) + n) % n)];
}

ConjugacyData conjugacy_classes(const PermGroup& G) {
  using Index = PermGroup::Index;
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  const std::size_t n = G.order();

  std::vector<std::uint32_t> raw_class(n, kUnset);
  std::vector<std::vector<Index>> raw_members;
  const auto& gens = G.generator_indices();

  for (Index start = 0; start < n; ++start) {
    if (raw_class[start] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(raw_members.size());
    std::vector<Index> orbit{start};
    raw_class[start] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (Index g : gens) {
        const Index y = G.conjugate(orbit[head], g);
        if (raw_class[y] == kUnset) {
          raw_class[y] = id;
          orbit.push_back(y);
        }
      }
    }
    raw_members.push_back(std::move(orbit));
  }

  const std::size_t k = raw_members.size();
  std::vector<Index> raw_rep(k);
  for (std::size_t c = 0; c < k; ++c) {
    raw_rep[c] = *std::min_element(raw_members[c].begin(), raw_members[c].end(),
                                   [&](Index a, Index b) { return G.lex_less(a, b); });
  }

  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto oa = G.element_order(raw_rep[a]);
    const auto ob = G.element_order(raw_rep[b]);
    if (oa != ob) return oa < ob;
    if (raw_members[a].size() != raw_members[b].size())
      return raw_members[a].size() < raw_members[b].size();
    return G.lex_less(raw_rep[a], raw_rep[b]);
  });

  ConjugacyData data;
  data.group_order = n;
  data.exponent = G.exponent();
  std::vector<std::uint32_t> new_id(k);
  for (std::size_t i = 0; i < k; ++i) new_id[perm[i]] = static_cast<std::uint32_t>(i);

  data.class_of.resize(n);
  for (std::size_t e = 0; e < n; ++e) data.class_of[e] = new_id[raw_class[e]];
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t c = perm[i];
    data.reps.push_back(raw_rep[c]);
    data.sizes.push_back(raw_members[c].size());
    data.orders.push_back(G.element_order(raw_rep[c]));
    std::sort(raw_members[c].begin(), raw_members[c].end());
    data.members.push_back(std::move(raw_members[c]));
  }

  data.power_table.resize(k);
  for (std::size_t c = 0; c < k; ++c) {
    const std::uint32_t o = data.orders[c];
    auto& row = data.power_table[c];
    row.resize(o);
    Index x = PermGroup::identity();
    for (std::uint32_t j = 0; j < o; ++j) {
      row[j] = data.class_of[x];
      x = G.multiply(x, data.reps[c]);
    }
  }
  return data;
}

}  // namespace cgt
