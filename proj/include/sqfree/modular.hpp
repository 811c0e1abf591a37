#pragma once

// Arithmetic in the prime field F_p for p < 2^32, plus the small amount of
// polynomial machinery needed to find the roots of a split polynomial.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "sqfree/bigint.hpp"
#include "sqfree/error.hpp"

namespace sqfree::mod {

using u64 = std::uint64_t;

class Field {
public:
  explicit Field(u64 p) : p_(p) {}

  u64 prime() const noexcept { return p_; }
  u64 add(u64 a, u64 b) const noexcept { return (a + b) % p_; }
  u64 sub(u64 a, u64 b) const noexcept { return (a + p_ - b) % p_; }
  u64 mul(u64 a, u64 b) const noexcept { return a * b % p_; }
  u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }

  u64 pow(u64 base, u64 e) const noexcept {
    u64 r = 1;
    base %= p_;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  u64 inv(u64 a) const {
    if (a % p_ == 0) throw DefectError("inverse of zero in F_p");
    return pow(a, p_ - 2);
  }

  u64 from(const BigInt& v) const {
    BigInt r = v % p_;
    if (r < 0) r += p_;
    return static_cast<u64>(r);
  }

  u64 from_signed(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<u64>(r);
  }

  /// Smallest generator of the multiplicative group.
  u64 primitive_root() const {
    if (p_ == 2) return 1;
    auto factors = prime_divisors_u64(p_ - 1);
    for (u64 g = 2; g < p_; ++g) {
      bool ok = std::all_of(factors.begin(), factors.end(),
                            [&](u64 q) { return pow(g, (p_ - 1) / q) != 1; });
      if (ok) return g;
    }
    throw DefectError("no primitive root found");
  }

private:
  u64 p_;
};

/// Smallest prime p with p = 1 (mod e) and p > lower.
inline u64 smallest_prime_1_mod(u64 e, u64 lower) {
  u64 k = lower / e + 1;
  for (;; ++k) {
    u64 cand = k * e + 1;
    if (cand > lower && is_prime_u64(cand)) return cand;
  }
}

// Polynomials are coefficient vectors, lowest degree first, trimmed.
using Poly = std::vector<u64>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& m, const Field& F) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const u64 lead_inv = F.inv(m.back());
  while (a.size() > dm) {
    u64 c = F.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, m[i]));
    trim(a);
  }
  return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, const Field& F) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  return poly_mod(std::move(r), m, F);
}

inline Poly poly_powmod(Poly base, u64 e, const Poly& m, const Field& F) {
  Poly r{1};
  base = poly_mod(std::move(base), m, F);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, F);
    base = poly_mulmod(base, base, m, F);
    e >>= 1;
  }
  return r;
}

inline Poly poly_monic(Poly a, const Field& F) {
  trim(a);
  if (a.empty()) return a;
  u64 li = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, li);
  return a;
}

inline Poly poly_gcd(Poly a, Poly b, const Field& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(std::move(a), F);
}

inline Poly poly_sub(Poly a, const Poly& b, const Field& F) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

inline Poly poly_divexact(Poly a, const Poly& b, const Field& F) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  Poly q(a.size() - db, 0);
  const u64 li = F.inv(b.back());
  while (a.size() >= b.size()) {
    u64 c = F.mul(a.back(), li);
    std::size_t shift = a.size() - 1 - db;
    q[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    trim(a);
  }
  return q;
}

namespace detail {

// Splits a monic squarefree product of distinct linear factors.
inline void split_linear(const Poly& g, const Field& F, std::vector<u64>& roots) {
  const std::size_t deg = g.size() - 1;
  if (deg == 0) return;
  if (deg == 1) {
    roots.push_back(F.neg(g[0]));
    return;
  }
  const u64 p = F.prime();
  if (p == 2) {
    for (u64 x = 0; x < 2; ++x) {
      u64 acc = 0;
      for (std::size_t i = g.size(); i-- > 0;) acc = F.add(F.mul(acc, x), g[i]);
      if (acc == 0) roots.push_back(x);
    }
    return;
  }
  // Deterministic Cantor-Zassenhaus: gcd(g, (x+a)^((p-1)/2) - 1) for a = 0, 1, ...
  for (u64 a = 0; a < p; ++a) {
    Poly h = poly_powmod(Poly{a, 1}, (p - 1) / 2, g, F);
    h = poly_sub(h, Poly{1}, F);
    Poly d = poly_gcd(g, h, F);
    if (d.size() > 1 && d.size() < g.size()) {
      split_linear(d, F, roots);
      split_linear(poly_divexact(g, d, F), F, roots);
      return;
    }
  }
  throw DefectError("failed to split polynomial over F_p");
}

}  // namespace detail

/// Distinct roots in F_p of a nonzero polynomial, ascending.
inline std::vector<u64> distinct_roots(Poly f, const Field& F) {
  f = poly_monic(std::move(f), F);
  if (f.size() <= 1) return {};
  Poly xp = poly_powmod(Poly{0, 1}, F.prime(), f, F);
  Poly g = poly_gcd(f, poly_sub(xp, Poly{0, 1}, F), F);
  std::vector<u64> roots;
  detail::split_linear(g, F, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace sqfree::mod
