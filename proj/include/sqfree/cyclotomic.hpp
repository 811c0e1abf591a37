#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sqfree/bigint.hpp"
#include "sqfree/error.hpp"

namespace sqfree {

namespace detail {

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw DefectError("cyclotomic coefficient overflow");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw DefectError("cyclotomic coefficient overflow");
  return r;
}

}  // namespace detail

/// Integer coefficients of the k-th cyclotomic polynomial, lowest degree first.
inline std::vector<long long> cyclotomic_polynomial(std::uint64_t k) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::vector<long long>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  if (k == 0) throw InputError("cyclotomic polynomial index must be positive");
  // x^k - 1 divided by Phi_d for every proper divisor d of k.
  std::vector<long long> num(k + 1, 0);
  num[0] = -1;
  num[k] = 1;
  for (auto d : divisors_u64(k)) {
    if (d == k) continue;
    auto den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<long long> quot(num.size() - dd, 0);
    for (std::size_t top = num.size() - 1;; --top) {
      const long long c = num[top];  // den is monic
      const std::size_t shift = top - dd;
      quot[shift] = c;
      if (c != 0)
        for (std::size_t j = 0; j <= dd; ++j)
          num[shift + j] = detail::checked_add(num[shift + j], -detail::checked_mul(c, den[j]));
      if (shift == 0) break;
    }
    for (std::size_t j = 0; j < dd; ++j)
      if (num[j] != 0) throw DefectError("inexact cyclotomic division");
    num = std::move(quot);
  }
  std::lock_guard lock(mu);
  cache.emplace(k, num);
  return num;
}

/// Power basis of Q(zeta_e): Phi_e and the reductions of x^j, j < e.
class CyclotomicBasis {
public:
  explicit CyclotomicBasis(std::uint64_t e) : e_(e), phi_poly_(cyclotomic_polynomial(e)) {
    const std::size_t dim = phi_poly_.size() - 1;
    reduced_.assign(e, std::vector<long long>(dim, 0));
    for (std::size_t j = 0; j < e && j < dim; ++j) reduced_[j][j] = 1;
    for (std::size_t j = dim; j < e; ++j) {
      const auto& prev = reduced_[j - 1];
      auto& cur = reduced_[j];
      long long top = prev[dim - 1];
      for (std::size_t i = dim; i-- > 1;) cur[i] = prev[i - 1];
      cur[0] = 0;
      for (std::size_t i = 0; i < dim; ++i)
        cur[i] = detail::checked_add(cur[i], -detail::checked_mul(top, phi_poly_[i]));
    }
  }

  static std::shared_ptr<const CyclotomicBasis> get(std::uint64_t e) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::shared_ptr<const CyclotomicBasis>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[e];
    if (!slot) slot = std::make_shared<const CyclotomicBasis>(e);
    return slot;
  }

  std::uint64_t order() const noexcept { return e_; }
  std::size_t dimension() const noexcept { return phi_poly_.size() - 1; }
  const std::vector<long long>& modulus() const noexcept { return phi_poly_; }

  /// Reduces sum c_j zeta^j (j < e) to power-basis coordinates.
  std::vector<long long> canonical(const std::vector<long long>& coeffs) const {
    std::vector<long long> out(dimension(), 0);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0) continue;
      const auto& r = reduced_[j % e_];
      for (std::size_t i = 0; i < out.size(); ++i)
        if (r[i]) out[i] = detail::checked_add(out[i], detail::checked_mul(coeffs[j], r[i]));
    }
    return out;
  }

private:
  std::uint64_t e_;
  std::vector<long long> phi_poly_;
  std::vector<std::vector<long long>> reduced_;
};

/// An element sum_j m_j zeta_e^j of Z[zeta_e], stored as the raw
/// coefficient vector of length e. Character values keep m_j >= 0 (the
/// eigenvalue multiplicities); arithmetic results may be any integers.
struct CyclotomicValue {
  std::uint64_t e = 1;
  std::vector<long long> coeffs{0};

  static CyclotomicValue integer(std::uint64_t e, long long v) {
    CyclotomicValue r{e, std::vector<long long>(e, 0)};
    r.coeffs[0] = v;
    return r;
  }

  static CyclotomicValue root_of_unity(std::uint64_t e, std::uint64_t j) {
    CyclotomicValue r{e, std::vector<long long>(e, 0)};
    r.coeffs[j % e] = 1;
    return r;
  }

  long long coefficient_sum() const {
    long long s = 0;
    for (auto c : coeffs) s = detail::checked_add(s, c);
    return s;
  }

  /// Complex conjugate: zeta^j -> zeta^(e-j).
  CyclotomicValue conj() const {
    CyclotomicValue r{e, std::vector<long long>(e, 0)};
    for (std::uint64_t j = 0; j < e; ++j) r.coeffs[(e - j) % e] = coeffs[j];
    return r;
  }

  /// Same number written over zeta_target, for e | target.
  CyclotomicValue lift_to(std::uint64_t target) const {
    if (target % e != 0) throw InputError("cyclotomic order does not divide the target order");
    CyclotomicValue r{target, std::vector<long long>(target, 0)};
    const std::uint64_t step = target / e;
    for (std::uint64_t j = 0; j < e; ++j) r.coeffs[j * step] = coeffs[j];
    return r;
  }

  std::vector<long long> canonical() const { return CyclotomicBasis::get(e)->canonical(coeffs); }

  /// The value as an integer if it is rational, else nullopt.
  std::optional<long long> as_integer() const {
    auto c = canonical();
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] != 0) return std::nullopt;
    return c.empty() ? 0 : c[0];
  }

  CyclotomicValue& operator+=(const CyclotomicValue& o) {
    if (o.e != e) throw InputError("adding cyclotomic values of different orders");
    for (std::uint64_t j = 0; j < e; ++j) coeffs[j] = detail::checked_add(coeffs[j], o.coeffs[j]);
    return *this;
  }

  CyclotomicValue scaled(long long k) const {
    CyclotomicValue r = *this;
    for (auto& c : r.coeffs) c = detail::checked_mul(c, k);
    return r;
  }

  friend CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b) {
    if (a.e != b.e) throw InputError("multiplying cyclotomic values of different orders");
    CyclotomicValue r{a.e, std::vector<long long>(a.e, 0)};
    for (std::uint64_t i = 0; i < a.e; ++i) {
      if (a.coeffs[i] == 0) continue;
      for (std::uint64_t j = 0; j < a.e; ++j) {
        if (b.coeffs[j] == 0) continue;
        auto& slot = r.coeffs[(i + j) % a.e];
        slot = detail::checked_add(slot, detail::checked_mul(a.coeffs[i], b.coeffs[j]));
      }
    }
    return r;
  }

  /// Equality as complex numbers (canonical forms), not as raw vectors.
  bool same_value(const CyclotomicValue& o) const {
    if (o.e == e) return canonical() == o.canonical();
    std::uint64_t l = std::lcm(e, o.e);
    return lift_to(l).canonical() == o.lift_to(l).canonical();
  }
};

/// Human-readable form of canonical coordinates: "3", "-1", "z^2+z^3"...
inline std::string format_canonical(const std::vector<long long>& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    long long v = c[i];
    if (v == 0) continue;
    std::string mag;
    long long a = v < 0 ? -v : v;
    if (i == 0) {
      mag = std::to_string(a);
    } else {
      if (a != 1) mag = std::to_string(a) + "*";
      mag += (i == 1) ? "z" : "z^" + std::to_string(i);
    }
    if (out.empty())
      out = (v < 0 ? "-" : "") + mag;
    else
      out += (v < 0 ? "-" : "+") + mag;
  }
  return out.empty() ? "0" : out;
}

}  // namespace sqfree
