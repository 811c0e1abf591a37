#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sqfree/bigint.hpp"
#include "sqfree/error.hpp"
#include "sqfree/permutation.hpp"

namespace sqfree {

/// One level of a stabilizer chain: base point, strong generators fixing
/// all earlier base points, and the fundamental orbit with coset
/// representatives u[b] mapping the base point to b.
struct ChainLevel {
  Point base = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  std::vector<int> orbit_slot;            // point -> index into orbit / transversal, -1 if absent
  std::vector<Permutation> transversal;  // transversal[k] maps base to orbit[k]
};

/// A permutation group given by generators, with an eagerly computed
/// stabilizer chain. Immutable after construction.
class PermutationGroup {
public:
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
      : degree_(degree), generators_(std::move(generators)) {
    if (generators_.empty()) generators_.push_back(Permutation::identity(degree_));
    for (const auto& g : generators_)
      if (g.degree() != degree_) throw InputError("generator degree does not match group degree");
    build_chain();
  }

  static PermutationGroup trivial(std::size_t degree) {
    return PermutationGroup(degree, {Permutation::identity(degree)});
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<ChainLevel>& chain() const noexcept { return chain_; }
  const BigInt& order() const noexcept { return order_; }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto& l : chain_) b.push_back(l.base);
    return b;
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    auto [residue, level] = sift(g, 0);
    return level == chain_.size() && residue.is_identity();
  }

  /// Visits every element exactly once, identity first, in the order
  /// given by the chain's transversals (deterministic).
  void for_each_element(const std::function<void(const Permutation&)>& visit) const {
    enumerate(0, Permutation::identity(degree_), visit);
  }

private:
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const {
    for (std::size_t l = from; l < chain_.size(); ++l) {
      const auto& lev = chain_[l];
      Point b = g(lev.base);
      int slot = lev.orbit_slot[b];
      if (slot < 0) return {std::move(g), l};
      g = g * lev.transversal[static_cast<std::size_t>(slot)].inverse();
    }
    return {std::move(g), chain_.size()};
  }

  void compute_orbit(ChainLevel& lev) const {
    lev.orbit.assign(1, lev.base);
    lev.orbit_slot.assign(degree_, -1);
    lev.orbit_slot[lev.base] = 0;
    lev.transversal.assign(1, Permutation::identity(degree_));
    for (std::size_t k = 0; k < lev.orbit.size(); ++k) {
      for (const auto& s : lev.generators) {
        Point img = s(lev.orbit[k]);
        if (lev.orbit_slot[img] >= 0) continue;
        lev.orbit_slot[img] = static_cast<int>(lev.orbit.size());
        lev.orbit.push_back(img);
        lev.transversal.push_back(lev.transversal[k] * s);
      }
    }
  }

  static std::optional<Point> first_moved(const Permutation& g) {
    for (Point x = 0; x < g.degree(); ++x)
      if (g(x) != x) return x;
    return std::nullopt;
  }

  void build_chain() {
    for (const auto& g : generators_) {
      if (g.is_identity()) continue;
      bool fixes_base = true;
      for (const auto& l : chain_)
        if (g(l.base) != l.base) {
          fixes_base = false;
          break;
        }
      if (fixes_base) {
        ChainLevel lev;
        lev.base = *first_moved(g);
        chain_.push_back(std::move(lev));
      }
    }
    for (std::size_t l = 0; l < chain_.size(); ++l) {
      for (const auto& g : generators_) {
        if (g.is_identity()) continue;
        bool fixes_prefix = true;
        for (std::size_t m = 0; m < l; ++m)
          if (g(chain_[m].base) != chain_[m].base) fixes_prefix = false;
        if (fixes_prefix) chain_[l].generators.push_back(g);
      }
      compute_orbit(chain_[l]);
    }

    // Deterministic Schreier-Sims: test every Schreier generator of a level
    // against the chain below it, restarting at the deepest modified level.
    std::size_t i = chain_.size();
    while (i-- > 0) {
      bool modified = false;
      auto& lev = chain_[i];
      for (std::size_t k = 0; !modified && k < lev.orbit.size(); ++k) {
        for (std::size_t s = 0; !modified && s < lev.generators.size(); ++s) {
          const Permutation& gen = lev.generators[s];
          Point img = gen(lev.orbit[k]);
          const Permutation& u_img = lev.transversal[static_cast<std::size_t>(lev.orbit_slot[img])];
          Permutation h = lev.transversal[k] * gen * u_img.inverse();
          auto [y, j] = sift(std::move(h), i + 1);
          if (j == chain_.size() && y.is_identity()) continue;
          if (j == chain_.size()) {
            ChainLevel fresh;
            fresh.base = *first_moved(y);
            chain_.push_back(std::move(fresh));
          }
          for (std::size_t l = i + 1; l <= j; ++l) {
            chain_[l].generators.push_back(y);
            compute_orbit(chain_[l]);
          }
          i = j + 1;  // the loop decrement lands on level j
          modified = true;
        }
      }
    }

    order_ = 1;
    for (const auto& l : chain_) order_ *= l.orbit.size();
  }

  // Elements are h * u with u in the level transversal and h in the
  // stabilizer below, so deeper factors go on the left.
  void enumerate(std::size_t level, const Permutation& right,
                 const std::function<void(const Permutation&)>& visit) const {
    if (level == chain_.size()) {
      visit(right);
      return;
    }
    for (const auto& u : chain_[level].transversal) enumerate(level + 1, u * right, visit);
  }

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<ChainLevel> chain_;
  BigInt order_ = 1;
};

/// True iff n is a subgroup of g closed under conjugation by g's generators.
inline bool is_normal_subgroup(const PermutationGroup& g, const PermutationGroup& n) {
  if (g.degree() != n.degree()) return false;
  for (const auto& x : n.generators())
    if (!g.contains(x)) return false;
  for (const auto& x : n.generators())
    for (const auto& s : g.generators())
      if (!n.contains(x.conjugate_by(s))) return false;
  return true;
}

/// Smallest normal subgroup of g containing elems.
inline PermutationGroup normal_closure(const PermutationGroup& g, const std::vector<Permutation>& elems) {
  for (const auto& x : elems)
    if (!g.contains(x)) throw InputError("normal_closure: element " + to_cycle_string(x) + " is not in the group");
  std::vector<Permutation> gens;
  for (const auto& x : elems)
    if (!x.is_identity()) gens.push_back(x);
  PermutationGroup n(g.degree(), gens);
  std::deque<Permutation> pending(gens.begin(), gens.end());
  while (!pending.empty()) {
    Permutation x = std::move(pending.front());
    pending.pop_front();
    for (const auto& s : g.generators()) {
      Permutation c = x.conjugate_by(s);
      if (n.contains(c)) continue;
      gens.push_back(c);
      pending.push_back(c);
      n = PermutationGroup(g.degree(), gens);
    }
  }
  return n;
}

/// Commutator subgroup, as the normal closure of generator commutators.
inline PermutationGroup derived_subgroup(const PermutationGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      comms.push_back(gens[a].inverse() * gens[b].inverse() * gens[a] * gens[b]);
  return normal_closure(g, comms);
}

/// Direct product acting on the disjoint union of the two point sets.
inline PermutationGroup direct_product(const PermutationGroup& a, const PermutationGroup& b) {
  std::vector<Permutation> gens;
  const auto id_a = Permutation::identity(a.degree());
  const auto id_b = Permutation::identity(b.degree());
  for (const auto& x : a.generators()) gens.push_back(x.direct_sum(id_b));
  for (const auto& y : b.generators()) gens.push_back(id_a.direct_sum(y));
  return PermutationGroup(a.degree() + b.degree(), std::move(gens));
}

}  // namespace sqfree
