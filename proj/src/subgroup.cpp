#include "cgt/subgroup.hpp"

#include <algorithm>
#include <map>

#include "cgt/error.hpp"
#include "cgt/numeric.hpp"

namespace cgt {

using Index = PermGroup::Index;

namespace {

// Incremental closure: grows a subgroup one generator at a time.
class ClosureBuilder {
 public:
  explicit ClosureBuilder(const PermGroup& G) : G_(G), mask_(G.order(), false) {
    elements_.push_back(PermGroup::identity());
    mask_[PermGroup::identity()] = true;
  }

  ClosureBuilder(const PermGroup& G, const Subgroup& start)
      : G_(G), elements_(start.elements()), mask_(G.order(), false), gens_(start.generators()) {
    for (Index x : elements_) mask_[x] = true;
  }

  bool contains(Index x) const { return mask_[x]; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Index>& generators() const { return gens_; }

  void add_generator(Index t) {
    if (mask_[t]) return;
    gens_.push_back(t);
    const std::size_t old = elements_.size();
    // Everything new is reached from H * t and then by right multiplication.
    for (std::size_t i = 0; i < old; ++i) visit(G_.multiply(elements_[i], t));
    for (std::size_t head = old; head < elements_.size(); ++head)
      for (Index s : gens_) visit(G_.multiply(elements_[head], s));
  }

  Subgroup finish() && { return Subgroup(G_, std::move(elements_), std::move(gens_)); }

 private:
  void visit(Index y) {
    if (!mask_[y]) {
      mask_[y] = true;
      elements_.push_back(y);
    }
  }

  const PermGroup& G_;
  std::vector<Index> elements_;
  std::vector<bool> mask_;
  std::vector<Index> gens_;
};

Subgroup from_element_set(const PermGroup& G, const std::vector<Index>& elements) {
  ClosureBuilder b(G);
  for (Index x : elements) b.add_generator(x);
  if (b.size() != elements.size())
    throw Error(Errc::NotSubgroup, "element set is not closed under multiplication");
  return std::move(b).finish();
}

bool is_prime_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

Subgroup::Subgroup(const PermGroup& parent, std::vector<Index> elements, std::vector<Index> generators)
    : elements_(std::move(elements)), generators_(std::move(generators)), mask_(parent.order(), false) {
  std::sort(elements_.begin(), elements_.end());
  for (Index x : elements_) mask_[x] = true;
  normal_ = true;
  for (Index h : generators_) {
    for (Index g : parent.generator_indices()) {
      if (!mask_[parent.conjugate(h, g)]) {
        normal_ = false;
        return;
      }
    }
  }
}

Subgroup Subgroup::trivial(const PermGroup& parent) {
  return Subgroup(parent, {PermGroup::identity()}, {});
}

Subgroup Subgroup::whole(const PermGroup& parent) {
  std::vector<Index> all(parent.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Index>(i);
  return Subgroup(parent, std::move(all), parent.generator_indices());
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](Index x) { return other.contains(x); });
}

Subgroup subgroup_generated(const PermGroup& G, std::span<const Index> seeds) {
  ClosureBuilder b(G);
  for (Index s : seeds) b.add_generator(s);
  return std::move(b).finish();
}

Subgroup normal_closure(const PermGroup& G, const Subgroup& within, std::span<const Index> seeds) {
  ClosureBuilder b(G);
  for (Index s : seeds) b.add_generator(s);
  for (std::size_t i = 0; i < b.generators().size(); ++i) {
    if (2 * b.size() > within.order()) return within;
    const Index h = b.generators()[i];
    for (Index k : within.generators()) b.add_generator(G.conjugate(h, k));
  }
  return std::move(b).finish();
}

Subgroup normal_closure(const PermGroup& G, std::span<const Index> seeds) {
  return normal_closure(G, Subgroup::whole(G), seeds);
}

Subgroup join(const PermGroup& G, const Subgroup& a, const Subgroup& b) {
  if (b.is_subset_of(a)) return a;
  if (a.is_subset_of(b)) return b;
  ClosureBuilder builder(G, a);
  for (Index g : b.generators()) builder.add_generator(g);
  return std::move(builder).finish();
}

Subgroup derived_subgroup(const PermGroup& G, const Subgroup& H) {
  std::vector<Index> seeds;
  const auto& gens = H.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Index c = G.commutator(gens[i], gens[j]);
      if (c != PermGroup::identity()) seeds.push_back(c);
    }
  return normal_closure(G, H, seeds);
}

std::vector<Subgroup> derived_series(const PermGroup& G, const Subgroup& H) {
  std::vector<Subgroup> series{H};
  while (!series.back().is_trivial()) {
    Subgroup next = derived_subgroup(G, series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> derived_series(const PermGroup& G) { return derived_series(G, Subgroup::whole(G)); }

bool is_solvable(const PermGroup& G, const Subgroup& H) {
  return derived_series(G, H).back().is_trivial();
}

bool is_solvable(const PermGroup& G) { return is_solvable(G, Subgroup::whole(G)); }

std::size_t derived_length(const PermGroup& G, const Subgroup& H) {
  auto series = derived_series(G, H);
  if (!series.back().is_trivial()) throw Error(Errc::NotSolvable, "derived series stabilises above 1");
  return series.size() - 1;
}

std::size_t derived_length(const PermGroup& G) { return derived_length(G, Subgroup::whole(G)); }

bool is_nilpotent(const PermGroup& G, const Subgroup& H) {
  const std::uint64_t n = H.order();
  for (std::uint64_t p : prime_divisors(n)) {
    std::uint64_t sylow = 1;
    for (std::uint64_t m = n; m % p == 0; m /= p) sylow *= p;
    std::uint64_t count = 0;
    for (Index x : H.elements())
      if (is_prime_power_of(G.element_order(x), p)) ++count;
    if (count != sylow) return false;
  }
  return true;
}

namespace {

// Join of the normal closures of class representatives that satisfy `keep`.
template <class Pred>
Subgroup join_of_class_closures(const PermGroup& G, const ConjugacyData& classes, Pred keep) {
  const Subgroup whole = Subgroup::whole(G);
  std::optional<bool> whole_kept;
  Subgroup result = Subgroup::trivial(G);
  for (std::size_t c = 1; c < classes.size(); ++c) {
    const Index rep = classes.reps[c];
    if (result.contains(rep)) continue;
    const Index seed[] = {rep};
    Subgroup closure = normal_closure(G, whole, seed);
    bool kept;
    if (closure.order() == G.order()) {
      if (!whole_kept) whole_kept = keep(closure);
      kept = *whole_kept;
    } else {
      kept = keep(closure);
    }
    if (kept) result = join(G, result, closure);
  }
  return result;
}

}  // namespace

Subgroup fitting_subgroup(const PermGroup& G, const ConjugacyData& classes) {
  return join_of_class_closures(G, classes, [&](const Subgroup& N) { return is_nilpotent(G, N); });
}

Subgroup solvable_radical(const PermGroup& G, const ConjugacyData& classes) {
  return join_of_class_closures(G, classes, [&](const Subgroup& N) { return is_solvable(G, N); });
}

Subgroup socle_trivial_radical(const PermGroup& G, const ConjugacyData& classes) {
  if (!solvable_radical(G, classes).is_trivial())
    throw Error(Errc::NonTrivialRadical, "the solvable radical is not trivial");
  std::vector<Subgroup> closures;
  const Subgroup whole = Subgroup::whole(G);
  for (std::size_t c = 1; c < classes.size(); ++c) {
    const Index seed[] = {classes.reps[c]};
    Subgroup N = normal_closure(G, whole, seed);
    if (std::find(closures.begin(), closures.end(), N) == closures.end()) closures.push_back(std::move(N));
  }
  Subgroup socle = Subgroup::trivial(G);
  for (const auto& N : closures) {
    const bool minimal = std::none_of(closures.begin(), closures.end(), [&](const Subgroup& M) {
      return M.order() < N.order() && M.is_subset_of(N);
    });
    if (minimal) socle = join(G, socle, N);
  }
  return socle;
}

Subgroup centralizer(const PermGroup& G, const Subgroup& H) {
  std::vector<Index> elements;
  for (Index x = 0; x < G.order(); ++x) {
    bool commutes = true;
    for (Index h : H.generators()) {
      if (G.multiply(x, h) != G.multiply(h, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) elements.push_back(x);
  }
  return from_element_set(G, elements);
}

std::vector<Subgroup> normal_subgroups(const PermGroup& G, const ConjugacyData& classes,
                                       std::size_t cap) {
  std::vector<Subgroup> lattice;
  std::map<std::vector<Index>, std::size_t> seen;
  auto add = [&](Subgroup N) {
    if (seen.count(N.elements())) return;
    if (lattice.size() >= cap)
      throw Error(Errc::LatticeCapExceeded,
                  "more than " + std::to_string(cap) + " normal subgroups");
    seen.emplace(N.elements(), lattice.size());
    lattice.push_back(std::move(N));
  };
  add(Subgroup::trivial(G));
  const Subgroup whole = Subgroup::whole(G);
  for (std::size_t c = 1; c < classes.size(); ++c) {
    const Index seed[] = {classes.reps[c]};
    add(normal_closure(G, whole, seed));
  }
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(join(G, lattice[i], lattice[j]));
  std::sort(lattice.begin(), lattice.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return lattice;
}

PermGroup quotient_group(const PermGroup& G, const Subgroup& N) {
  if (!N.is_normal()) throw Error(Errc::NotNormal, "quotient by a subgroup that is not normal");
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> coset(G.order(), kUnset);
  std::vector<Index> reps;
  for (Index e = 0; e < G.order(); ++e) {
    if (coset[e] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(e);
    for (Index n : N.elements()) coset[G.multiply(e, n)] = id;
  }
  const std::size_t degree = reps.size();
  std::vector<Permutation> gens;
  for (Index g : G.generator_indices()) {
    std::vector<Point> images(degree);
    for (std::size_t c = 0; c < degree; ++c) images[c] = coset[G.multiply(reps[c], g)];
    Permutation p(std::move(images));
    if (!p.is_identity()) gens.push_back(std::move(p));
  }
  return group_from_generators(degree, gens, G.order());
}

Subgroup frattini_nilpotent(const PermGroup& G, const Subgroup& H) {
  if (!is_nilpotent(G, H)) throw Error(Errc::NotNilpotent, "Frattini formula needs a nilpotent group");
  Subgroup result = Subgroup::trivial(G);
  for (std::uint64_t p : prime_divisors(H.order())) {
    std::vector<Index> p_elements;
    for (Index x : H.elements())
      if (is_prime_power_of(G.element_order(x), p)) p_elements.push_back(x);
    const Subgroup P = from_element_set(G, p_elements);
    std::vector<Index> seeds;
    for (Index x : P.elements()) seeds.push_back(G.power(x, static_cast<std::int64_t>(p)));
    const auto& gens = P.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(G.commutator(gens[i], gens[j]));
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    result = join(G, result, normal_closure(G, P, seeds));
  }
  return result;
}

EmbeddedSubgroup embed(const PermGroup& G, const Subgroup& H, std::size_t cap) {
  std::vector<Permutation> gens;
  for (Index g : H.generators()) gens.push_back(G.element(g));
  EmbeddedSubgroup out{group_from_generators(G.degree(), gens, cap), {}};
  out.to_parent.resize(out.group.order());
  for (Index i = 0; i < out.group.order(); ++i) out.to_parent[i] = *G.find(out.group.images(i));
  return out;
}

PermGroup::Index EmbeddedSubgroup::to_local(PermGroup::Index parent_index, const PermGroup& parent) const {
  if (auto i = group.find(parent.images(parent_index))) return *i;
  throw Error(Errc::NotSubgroup, "element is not in the embedded subgroup");
}

}  // namespace cgt
