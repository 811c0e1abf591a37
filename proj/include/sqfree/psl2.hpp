#pragma once

// Groups H with S = PSL2(q) <= H <= Aut(S), q = p^f.
//
// Out(S) is generated by the diagonal automorphism delta (order gcd(2, q-1))
// and the field automorphism phi: x -> x^p (order f); it is abelian, so H is
// determined by a subgroup K of Out(S), stored as its list of elements
// delta^a phi^b.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sqfree/bigint.hpp"
#include "sqfree/error.hpp"
#include "sqfree/group_spec.hpp"

namespace sqfree {

struct OutElement {
  unsigned delta = 0;  // exponent of delta, 0 or 1
  unsigned phi = 0;    // exponent of phi, 0..f-1
  friend auto operator<=>(const OutElement&, const OutElement&) = default;
};

enum class CosetKind { Plain, FieldAuto, DeltaFieldAuto, Other };

struct CosetType {
  CosetKind kind = CosetKind::Plain;
  unsigned k = 0;  // H = S<phi^k> or S<delta phi^k>; unused otherwise
  friend bool operator==(const CosetType&, const CosetType&) = default;
};

inline std::string to_string(const CosetType& c) {
  switch (c.kind) {
    case CosetKind::Plain: return "plain";
    case CosetKind::FieldAuto: return c.k == 1 ? "S<phi>" : "S<phi^" + std::to_string(c.k) + ">";
    case CosetKind::DeltaFieldAuto: return c.k == 1 ? "S<delta phi>" : "S<delta phi^" + std::to_string(c.k) + ">";
    case CosetKind::Other: return "other";
  }
  return "other";
}

struct Psl2Config {
  std::uint64_t p = 0;
  unsigned f = 0;
  std::uint64_t q = 0;
  std::vector<OutElement> k;  // the subgroup H/S of Out(S), sorted
  bool contains_delta = false;  // always true for p = 2 (delta is trivial)
  std::uint64_t d = 1;          // |H : G|, G = PGL2(q) if delta in H, else S
  unsigned a = 0;               // d = 2^a m, m odd
  std::uint64_t m = 1;
  std::optional<int> eps;  // (-1)^((q-1)/2), odd p only
  CosetType coset;

  bool has(OutElement x) const { return std::binary_search(k.begin(), k.end(), x); }
  std::uint64_t out_order() const { return (p == 2 ? 1 : 2) * static_cast<std::uint64_t>(f); }
  /// |H| = |PSL2(q)| |K|.
  BigInt group_order() const {
    BigInt Q = q;
    return Q * (Q * Q - 1) / (p == 2 ? 1 : 2) * k.size();
  }
};

namespace detail {

inline unsigned out_delta_order(std::uint64_t p) { return p == 2 ? 1 : 2; }

inline std::vector<OutElement> out_closure(std::uint64_t p, unsigned f, const std::vector<OutElement>& gens) {
  const unsigned A = out_delta_order(p);
  std::set<OutElement> s{{0, 0}};
  std::vector<OutElement> frontier{{0, 0}};
  while (!frontier.empty()) {
    auto x = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      OutElement y{(x.delta + g.delta) % A, (x.phi + g.phi) % f};
      if (s.insert(y).second) frontier.push_back(y);
    }
  }
  return {s.begin(), s.end()};
}

inline std::vector<OutElement> field_part(std::uint64_t p, unsigned f, unsigned k) {
  return out_closure(p, f, {{0, k % f}});
}

}  // namespace detail

/// Builds the config for the subgroup K of Out(PSL2(p^f)); validates K.
inline Psl2Config psl2_config(std::uint64_t p, unsigned f, std::vector<OutElement> k) {
  if (!is_prime_u64(p) || f == 0) throw InputError("PSL2 config needs a prime p and f >= 1");
  BigInt Q = big_pow(BigInt(p), f);
  if (Q <= 3 || Q > BigInt(1) << 40) throw InputError("PSL2 config needs 3 < q <= 2^40");
  Psl2Config c;
  c.p = p;
  c.f = f;
  c.q = static_cast<std::uint64_t>(Q);
  const unsigned A = detail::out_delta_order(p);
  for (auto& x : k)
    if (x.delta >= A || x.phi >= f) throw InputError("element outside Out(PSL2(q))");
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  if (detail::out_closure(p, f, k) != k) throw InputError("element list is not a subgroup of Out(PSL2(q))");
  c.k = std::move(k);

  c.contains_delta = p == 2 || c.has({1, 0});
  c.d = (p != 2 && c.contains_delta) ? c.k.size() / 2 : c.k.size();
  c.m = c.d;
  while (c.m % 2 == 0) {
    c.m /= 2;
    ++c.a;
  }
  if (f % c.d != 0) throw InputError("inconsistent config: d does not divide f");
  if (p != 2) c.eps = (c.q % 4 == 1) ? 1 : -1;

  // Cyclic subgroups <phi^j> and <delta phi^j>, j = f / |K| or so.
  auto matches = [&](unsigned delta, unsigned j) { return detail::out_closure(p, f, {{delta, j % f}}) == c.k; };
  const bool within_delta = std::all_of(c.k.begin(), c.k.end(), [](const OutElement& x) { return x.phi == 0; });
  c.coset = {CosetKind::Other, 0};
  if (within_delta) {
    c.coset = {CosetKind::Plain, 0};
  } else {
    for (auto j : divisors_u64(f)) {
      if (j == f) continue;
      if (matches(0, static_cast<unsigned>(j))) {
        c.coset = {CosetKind::FieldAuto, static_cast<unsigned>(j)};
        break;
      }
      if (p != 2 && matches(1, static_cast<unsigned>(j))) {
        c.coset = {CosetKind::DeltaFieldAuto, static_cast<unsigned>(j)};
        break;
      }
    }
  }
  return c;
}

/// One config per subgroup of Out(PSL2(p^f)), ordered by |K| then elements.
inline std::vector<Psl2Config> psl2_enumerate_subgroups(std::uint64_t p, unsigned f) {
  if (!is_prime_u64(p) || f == 0) throw InputError("invalid p or f");
  const unsigned A = detail::out_delta_order(p);
  std::vector<OutElement> all;
  for (unsigned a = 0; a < A; ++a)
    for (unsigned b = 0; b < f; ++b) all.push_back({a, b});
  // Z_A x Z_f is generated by two elements, so pairs reach every subgroup.
  std::set<std::vector<OutElement>> subs;
  for (const auto& x : all)
    for (const auto& y : all) subs.insert(detail::out_closure(p, f, {x, y}));
  std::vector<std::vector<OutElement>> sorted(subs.begin(), subs.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& u, const auto& v) { return u.size() < v.size(); });
  std::vector<Psl2Config> out;
  for (auto& s : sorted) out.push_back(psl2_config(p, f, std::move(s)));
  return out;
}

inline std::vector<Psl2Config> psl2_enumerate_subgroups(std::uint64_t q) {
  auto pf = prime_power_decompose(q);
  if (!pf || q <= 3) throw InputError("q must be a prime power greater than 3");
  return psl2_enumerate_subgroups(pf->first, pf->second);
}

/// Short description such as "PSL2(9).<delta, phi>".
inline std::string describe(const Psl2Config& c) {
  std::string s = "PSL2(" + std::to_string(c.q) + ")";
  if (c.k.size() == 1) return s;
  std::string gens;
  auto add = [&](const std::string& g) { gens += (gens.empty() ? "" : ", ") + g; };
  const bool odd = c.p != 2;
  switch (c.coset.kind) {
    case CosetKind::Plain: add("delta"); break;
    case CosetKind::FieldAuto: add(c.coset.k == 1 ? "phi" : "phi^" + std::to_string(c.coset.k)); break;
    case CosetKind::DeltaFieldAuto: add(c.coset.k == 1 ? "delta phi" : "delta phi^" + std::to_string(c.coset.k)); break;
    case CosetKind::Other: {
      if (odd && c.has({1, 0})) add("delta");
      unsigned step = c.f;
      for (const auto& x : c.k)
        if (x.phi) step = std::gcd(step, x.phi);
      const bool plain_phi = c.has({0, step % c.f});
      std::string ph = step == 1 ? "phi" : "phi^" + std::to_string(step);
      add(plain_phi ? ph : "delta " + ph);
      break;
    }
  }
  return s + ".<" + gens + ">";
}

// ---------------------------------------------------------------------------
// Degree sets

enum class DegreeBranch { Unit, Q, Half, QMinus, QPlus };

struct DegreeSource {
  DegreeBranch branch;
  std::uint64_t param = 0;  // l for QMinus, j for QPlus
  friend bool operator==(const DegreeSource&, const DegreeSource&) = default;
};

inline std::string to_string(const DegreeSource& s) {
  switch (s.branch) {
    case DegreeBranch::Unit: return "unit";
    case DegreeBranch::Q: return "q";
    case DegreeBranch::Half: return "half";
    case DegreeBranch::QMinus: return "qMinus(l=" + std::to_string(s.param) + ")";
    case DegreeBranch::QPlus: return "qPlus(j=" + std::to_string(s.param) + ")";
  }
  return "?";
}

struct SuppressedDegree {
  std::uint64_t degree;
  int exception;  // 1..5
  friend bool operator==(const SuppressedDegree&, const SuppressedDegree&) = default;
};

struct DegreeSetResult {
  std::set<std::uint64_t> degrees;
  std::map<std::uint64_t, std::vector<DegreeSource>> provenance;
  std::vector<SuppressedDegree> suppressed;
};

/// cd(H) = {1, q, (q+eps)/2} u {(q-1) 2^a l : l | m} u {(q+1) j : j | d},
/// minus what exceptions 1-5 remove.
inline DegreeSetResult white_degree_set(const Psl2Config& c) {
  DegreeSetResult r;
  auto add = [&](std::uint64_t deg, DegreeSource src) {
    r.degrees.insert(deg);
    r.provenance[deg].push_back(src);
  };
  const bool odd_f = c.f % 2 == 1;
  const bool k_phi = c.coset == CosetType{CosetKind::FieldAuto, 1} || (c.f == 1 && c.k.size() == 1);
  const bool k_delta_phi = c.p != 2 && c.coset == CosetType{CosetKind::DeltaFieldAuto, 1};
  const bool k_all = c.k.size() == c.out_order();
  const bool k_in_phi = std::all_of(c.k.begin(), c.k.end(), [](const OutElement& x) { return x.delta == 0; });

  add(1, {DegreeBranch::Unit});
  add(c.q, {DegreeBranch::Q});
  if (c.eps) {
    const std::uint64_t half = (static_cast<std::int64_t>(c.q) + *c.eps) / 2;
    if (k_in_phi)
      add(half, {DegreeBranch::Half});
    else
      r.suppressed.push_back({half, 1});
  }  // p = 2: eps is undefined and the branch never exists
  for (auto l : divisors_u64(c.m)) {
    const std::uint64_t deg = (c.q - 1) * (std::uint64_t{1} << c.a) * l;
    if (l == 1 && c.p == 3 && odd_f && k_phi) {
      r.suppressed.push_back({deg, 2});
      continue;
    }
    add(deg, {DegreeBranch::QMinus, l});
  }
  for (auto j : divisors_u64(c.d)) {
    const std::uint64_t deg = (c.q + 1) * j;
    bool drop = false;
    if (j == 1 && c.p == 3 && odd_f && k_all) {
      r.suppressed.push_back({deg, 3});
      drop = true;
    }
    if (j == 1 && (c.p == 2 || c.p == 3 || c.p == 5) && odd_f && k_phi) {
      r.suppressed.push_back({deg, 4});
      drop = true;
    }
    if (j == 2 && (c.p == 2 || c.p == 3) && c.f % 4 == 2 && (k_phi || k_delta_phi)) {
      r.suppressed.push_back({deg, 5});
      drop = true;
    }
    if (!drop) add(deg, {DegreeBranch::QPlus, j});
  }
  return r;
}

// ---------------------------------------------------------------------------
// Square-free conditions

struct ConditionVerdict {
  bool satisfies = true;
  int failed_condition = 0;  // first failing condition (1-3), 0 if none
  bool exceptional = false;  // the two q = 9 groups where the conditions are not necessary
};

/// (1) p odd => p^2 does not divide d. (2) For each odd prime r | d, r != p:
/// r^2 does not divide d or r^4 does not divide d(q^2-1). (3) 4 does not divide d,
/// and 2 does not divide d when q is odd and (q = +-1 mod 8 or delta in H).
inline ConditionVerdict psl2_squarefree_conditions(const Psl2Config& c) {
  ConditionVerdict v;
  const BigInt d = c.d, Q = c.q;
  const bool c1 = c.p == 2 || d % (BigInt(c.p) * c.p) != 0;
  bool c2 = true;
  for (auto r : prime_divisors_u64(c.d)) {
    if (r == 2 || r == c.p) continue;
    const BigInt r2 = BigInt(r) * r;
    if (d % r2 == 0 && (d * (Q * Q - 1)) % (r2 * r2) == 0) c2 = false;
  }
  bool c3 = c.d % 4 != 0;
  if (c.p != 2 && (c.q % 8 == 1 || c.q % 8 == 7 || c.contains_delta) && c.d % 2 == 0) c3 = false;
  if (!c1)
    v.failed_condition = 1;
  else if (!c2)
    v.failed_condition = 2;
  else if (!c3)
    v.failed_condition = 3;
  const bool q9_pair = c.q == 9 && c.d == 2 && !c.contains_delta &&
                       (c.coset == CosetType{CosetKind::FieldAuto, 1} || c.coset == CosetType{CosetKind::DeltaFieldAuto, 1});
  v.exceptional = q9_pair;
  v.satisfies = v.failed_condition == 0 || v.exceptional;
  return v;
}

/// Verdict from the degree set alone: nonlinear characters of H are faithful,
/// so chi^c(1) = |H| / chi(1).
inline bool white_set_square_free(const Psl2Config& c) {
  const BigInt order = c.group_order();
  for (auto deg : white_degree_set(c).degrees) {
    if (deg == 1) continue;
    if (order % deg != 0) throw DefectError("degree does not divide |H|");
    if (!is_square_free(big_gcd(BigInt(deg), order / deg))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Realization as permutation groups on the projective line

/// H as a permutation group on the q+1 points of the projective line.
inline PermutationGroup realize(const Psl2Config& c) {
  if (c.q > 100000) throw BoundExceeded("q too large to realize as a permutation group");
  ProjectiveLine line(static_cast<std::uint32_t>(c.q));
  auto gens = line.psl_generators();
  for (const auto& x : c.k) {
    if (x.delta == 0 && x.phi == 0) continue;
    Permutation g = line.diagonal.pow(static_cast<long long>(x.delta)) * line.frobenius.pow(static_cast<long long>(x.phi));
    gens.push_back(std::move(g));
  }
  return PermutationGroup(c.q + 1, std::move(gens));
}

}  // namespace sqfree
