#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <memory>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "sqfree/bigint.hpp"
#include "sqfree/error.hpp"
#include "sqfree/perm_group.hpp"

namespace sqfree {

inline constexpr std::uint64_t kDefaultOrderBound = 1'000'000;

/// Every element of a small group stored flat, with an open-addressing
/// hash from element to its enumeration index.
class ElementIndex {
public:
  static constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

  explicit ElementIndex(const PermutationGroup& g) : degree_(g.degree()) {
    const auto n = static_cast<std::size_t>(g.order());
    data_.reserve(n * degree_);
    slots_.assign(std::bit_ceil(2 * n + 1), kAbsent);
    g.for_each_element([&](const Permutation& x) {
      const auto idx = static_cast<std::uint32_t>(size_);
      for (Point p : x.images()) data_.push_back(static_cast<std::uint16_t>(p));
      ++size_;
      insert(idx);
    });
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t degree() const noexcept { return degree_; }

  std::span<const std::uint16_t> element(std::size_t idx) const {
    return {data_.data() + idx * degree_, degree_};
  }

  Permutation permutation(std::size_t idx) const {
    auto e = element(idx);
    std::vector<Point> im(e.begin(), e.end());
    return Permutation::from_images(std::move(im));
  }

  std::uint32_t find(std::span<const std::uint16_t> images) const {
    std::size_t mask = slots_.size() - 1;
    for (std::size_t h = hash(images) & mask;; h = (h + 1) & mask) {
      std::uint32_t s = slots_[h];
      if (s == kAbsent) return kAbsent;
      if (std::equal(images.begin(), images.end(), element(s).begin())) return s;
    }
  }

  std::uint32_t find(const Permutation& p) const {
    std::vector<std::uint16_t> buf(p.images().begin(), p.images().end());
    return find(buf);
  }

private:
  static std::size_t hash(std::span<const std::uint16_t> v) {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

  void insert(std::uint32_t idx) {
    std::size_t mask = slots_.size() - 1;
    std::size_t h = hash(element(idx)) & mask;
    while (slots_[h] != kAbsent) h = (h + 1) & mask;
    slots_[h] = idx;
  }

  std::size_t degree_;
  std::size_t size_ = 0;
  std::vector<std::uint16_t> data_;
  std::vector<std::uint32_t> slots_;
};

/// Conjugacy classes of a permutation group together with the element
/// index used to locate arbitrary elements.
struct ConjugacyClasses {
  std::vector<Permutation> representatives;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> element_orders;
  /// prime -> (class c -> class of rep_c^prime), for primes dividing the exponent
  std::map<std::uint64_t, std::vector<std::size_t>> power_map;
  std::vector<std::size_t> inverse_map;
  std::uint64_t group_order = 0;

  /// class index of each element (by ElementIndex enumeration index)
  std::vector<std::uint32_t> class_of_element;
  std::shared_ptr<const ElementIndex> elements;

  std::size_t count() const noexcept { return representatives.size(); }

  std::size_t class_of(const Permutation& g) const {
    auto idx = elements->find(g);
    if (idx == ElementIndex::kAbsent) throw InputError("element " + to_cycle_string(g) + " is not in the group");
    return class_of_element[idx];
  }

  /// class of rep_c^k, by direct computation on the representative
  std::size_t power_class(std::size_t c, long long k) const { return class_of(representatives[c].pow(k)); }
};

inline void check_order_bound(const PermutationGroup& g, std::uint64_t bound) {
  if (g.order() > bound)
    throw BoundExceeded("group order " + to_string(g.order()) + " exceeds the computation bound " +
                        std::to_string(bound));
  if (g.degree() > std::numeric_limits<std::uint16_t>::max())
    throw BoundExceeded("degree too large for class computation");
}

/// Classes by conjugation-orbit closure, sweeping elements in chain
/// enumeration order; class 0 is the identity.
inline ConjugacyClasses conjugacy_classes(const PermutationGroup& g, std::uint64_t bound = kDefaultOrderBound) {
  check_order_bound(g, bound);
  ConjugacyClasses cc;
  auto index = std::make_shared<const ElementIndex>(g);
  const std::size_t n = index->size();
  cc.group_order = n;
  cc.class_of_element.assign(n, ElementIndex::kAbsent);

  std::vector<std::uint16_t> buf(g.degree());
  std::vector<std::uint32_t> queue;
  std::uint64_t covered = 0;
  for (std::size_t start = 0; start < n && covered < n; ++start) {
    if (cc.class_of_element[start] != ElementIndex::kAbsent) continue;
    const auto cls = static_cast<std::uint32_t>(cc.representatives.size());
    queue.assign(1, static_cast<std::uint32_t>(start));
    cc.class_of_element[start] = cls;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      auto x = index->element(queue[k]);
      for (const auto& s : g.generators()) {
        for (std::size_t i = 0; i < buf.size(); ++i) buf[s(static_cast<Point>(i))] = static_cast<std::uint16_t>(s(x[i]));
        auto y = index->find(buf);
        if (y == ElementIndex::kAbsent) throw DefectError("conjugate escaped the element index");
        if (cc.class_of_element[y] == ElementIndex::kAbsent) {
          cc.class_of_element[y] = cls;
          queue.push_back(y);
        }
      }
    }
    cc.representatives.push_back(index->permutation(start));
    cc.sizes.push_back(queue.size());
    covered += queue.size();
  }
  if (covered != n) throw DefectError("class sizes do not sum to the group order");
  cc.elements = index;

  std::uint64_t exponent = 1;
  for (const auto& r : cc.representatives) {
    cc.element_orders.push_back(r.order());
    exponent = std::lcm(exponent, cc.element_orders.back());
  }
  for (std::size_t c = 0; c < cc.count(); ++c) cc.inverse_map.push_back(cc.class_of(cc.representatives[c].inverse()));
  for (auto p : prime_divisors_u64(exponent)) {
    auto& row = cc.power_map[p];
    for (std::size_t c = 0; c < cc.count(); ++c) row.push_back(cc.power_class(c, static_cast<long long>(p)));
  }
  return cc;
}

/// lcm of representative element orders.
inline std::uint64_t exponent(const ConjugacyClasses& cc) {
  std::uint64_t e = 1;
  for (auto o : cc.element_orders) e = std::lcm(e, o);
  return e;
}

inline std::uint64_t exponent(const PermutationGroup&, const ConjugacyClasses& cc) { return exponent(cc); }

}  // namespace sqfree
