#include "cgt/perm_group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "cgt/error.hpp"

namespace cgt {

namespace {

std::uint64_t hash_images(std::span<const Point> images) {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ images.size();
  for (Point x : images) {
    h ^= x + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h *= 0xFF51AFD7ED558CCDULL;
  }
  return h ^ (h >> 29);
}

thread_local std::vector<Point> scratch;

}  // namespace

std::size_t ElementIndex::slot_for(std::span<const Point> images) const {
  return static_cast<std::size_t>(hash_images(images)) & (slots_.size() - 1);
}

void ElementIndex::rehash(std::size_t capacity, std::span<const Point> storage) {
  std::vector<std::uint32_t> old = std::move(slots_);
  slots_.assign(capacity, 0);
  for (std::uint32_t entry : old) {
    if (entry == 0) continue;
    const std::uint32_t index = entry - 1;
    std::span<const Point> key = storage.subspan(static_cast<std::size_t>(index) * degree_, degree_);
    std::size_t s = slot_for(key);
    while (slots_[s] != 0) s = (s + 1) & (slots_.size() - 1);
    slots_[s] = entry;
  }
}

void ElementIndex::reserve(std::size_t count, std::span<const Point> storage) {
  const std::size_t want = std::bit_ceil(std::max<std::size_t>(16, count * 2));
  if (want > slots_.size()) rehash(want, storage);
}

std::optional<std::uint32_t> ElementIndex::find(std::span<const Point> images,
                                                std::span<const Point> storage) const {
  if (slots_.empty()) return std::nullopt;
  std::size_t s = slot_for(images);
  while (slots_[s] != 0) {
    const std::uint32_t index = slots_[s] - 1;
    const Point* key = storage.data() + static_cast<std::size_t>(index) * degree_;
    if (std::equal(images.begin(), images.end(), key)) return index;
    s = (s + 1) & (slots_.size() - 1);
  }
  return std::nullopt;
}

void ElementIndex::insert(std::uint32_t index, std::span<const Point> storage) {
  if ((size_ + 1) * 2 > slots_.size()) reserve(size_ + 1, storage);
  std::span<const Point> key = storage.subspan(static_cast<std::size_t>(index) * degree_, degree_);
  std::size_t s = slot_for(key);
  while (slots_[s] != 0) s = (s + 1) & (slots_.size() - 1);
  slots_[s] = index + 1;
  ++size_;
}

Permutation PermGroup::element(Index i) const {
  auto im = images(i);
  return Permutation(std::vector<Point>(im.begin(), im.end()));
}

std::optional<PermGroup::Index> PermGroup::find(std::span<const Point> images) const {
  if (images.size() != degree_) return std::nullopt;
  return index_.find(images, storage_);
}

PermGroup::Index PermGroup::index_of(const Permutation& p) const {
  if (auto i = find(p)) return *i;
  throw Error(Errc::NotSubgroup, "permutation " + p.cycle_string() + " is not a group element");
}

PermGroup::Index PermGroup::multiply(Index a, Index b) const {
  scratch.resize(degree_);
  const Point* pa = storage_.data() + static_cast<std::size_t>(a) * degree_;
  const Point* pb = storage_.data() + static_cast<std::size_t>(b) * degree_;
  for (std::size_t i = 0; i < degree_; ++i) scratch[i] = pb[pa[i]];
  auto found = index_.find(scratch, storage_);
  if (!found) throw Error(Errc::VerificationFailed, "group is not closed under multiplication");
  return *found;
}

PermGroup::Index PermGroup::power(Index a, std::int64_t exponent) const {
  const std::int64_t n = element_order_[a];
  std::int64_t e = ((exponent % n) + n) % n;
  Index result = identity();
  Index base = a;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generator_indices_.size(); ++i)
    for (std::size_t j = i + 1; j < generator_indices_.size(); ++j)
      if (multiply(generator_indices_[i], generator_indices_[j]) !=
          multiply(generator_indices_[j], generator_indices_[i]))
        return false;
  return true;
}

bool PermGroup::lex_less(Index a, Index b) const {
  auto x = images(a);
  auto y = images(b);
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

PermGroup group_from_generators(std::size_t degree, std::span<const Permutation> gens,
                                std::size_t cap) {
  if (cap < 1) throw Error(Errc::ConfigError, "order cap must be at least 1");
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw Error(Errc::DegreeMismatch, "generator of degree " + std::to_string(g.degree()) +
                                            " in a group of degree " + std::to_string(degree));

  PermGroup G;
  G.degree_ = degree;
  G.generators_.assign(gens.begin(), gens.end());
  G.index_ = ElementIndex(degree);

  auto& storage = G.storage_;
  storage.resize(degree);
  std::iota(storage.begin(), storage.end(), Point{0});
  G.index_.insert(0, storage);
  std::size_t count = 1;

  std::vector<Point> product(degree);
  // Breadth-first over right multiplication by generators; storage doubles as the queue.
  for (std::size_t head = 0; head < count; ++head) {
    for (const auto& g : gens) {
      const Point* x = storage.data() + head * degree;
      auto gi = g.images();
      for (std::size_t i = 0; i < degree; ++i) product[i] = gi[x[i]];
      if (G.index_.find(product, storage)) continue;
      if (count >= cap)
        throw Error(Errc::OrderCapExceeded,
                    "group enumeration passed the cap of " + std::to_string(cap) + " elements");
      storage.insert(storage.end(), product.begin(), product.end());
      G.index_.insert(static_cast<std::uint32_t>(count), storage);
      ++count;
    }
  }
  G.order_ = count;

  G.generator_indices_.reserve(gens.size());
  for (const auto& g : gens) G.generator_indices_.push_back(*G.index_.find(g.images(), storage));

  G.inverse_.resize(count);
  G.element_order_.resize(count);
  std::uint64_t exponent = 1;
  for (std::size_t e = 0; e < count; ++e) {
    auto im = G.images(static_cast<PermGroup::Index>(e));
    for (std::size_t i = 0; i < degree; ++i) product[im[i]] = static_cast<Point>(i);
    G.inverse_[e] = *G.index_.find(product, storage);
    G.element_order_[e] = static_cast<std::uint32_t>(permutation_order(im));
    exponent = std::lcm(exponent, static_cast<std::uint64_t>(G.element_order_[e]));
  }
  G.exponent_ = exponent;
  return G;
}

}  // namespace cgt
