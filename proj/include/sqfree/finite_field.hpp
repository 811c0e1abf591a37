#pragma once

#include <cstdint>
#include <vector>

#include "sqfree/bigint.hpp"
#include "sqfree/error.hpp"
#include "sqfree/modular.hpp"

namespace sqfree {

/// GF(p^f) with elements encoded as integers 0..q-1 (base-p digits are the
/// coefficients of 1, x, x^2, ... modulo the defining polynomial).
///
/// For f = 1 the primitive element is the smallest primitive root mod p.
/// For f > 1 the defining polynomial is the first monic primitive polynomial
/// of degree f in order of its encoded lower coefficients, and the primitive
/// element is x.
class FiniteField {
public:
  FiniteField(std::uint32_t p, std::uint32_t f) : p_(p), f_(f) {
    if (!is_prime_u64(p) || f == 0) throw InputError("GF(p^f) needs a prime p and f >= 1");
    q_ = 1;
    for (std::uint32_t i = 0; i < f; ++i) {
      q_ *= p;
      if (q_ > (1u << 20)) throw InputError("field too large");
    }
    if (f == 1) {
      build_tables(static_cast<std::uint32_t>(mod::Field(p).primitive_root()));
    } else {
      find_primitive_polynomial();
    }
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return f_; }
  std::uint32_t size() const noexcept { return q_; }
  std::uint32_t primitive_element() const noexcept { return exp_[1]; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0, place = 1;
    for (std::uint32_t i = 0; i < f_; ++i) {
      r += ((a % p_ + b % p_) % p_) * place;
      a /= p_;
      b /= p_;
      place *= p_;
    }
    return r;
  }

  std::uint32_t neg(std::uint32_t a) const {
    std::uint32_t r = 0, place = 1;
    for (std::uint32_t i = 0; i < f_; ++i) {
      r += ((p_ - a % p_) % p_) * place;
      a /= p_;
      place *= p_;
    }
    return r;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw DefectError("inverse of zero in GF(q)");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
  }

  /// Frobenius x -> x^p.
  std::uint32_t frobenius(std::uint32_t a) const { return pow(a, p_); }

  bool is_square(std::uint32_t a) const { return a == 0 || p_ == 2 || log_[a] % 2 == 0; }

private:
  // Multiplies the polynomial encoded by `a` by x, reducing with modulus_.
  std::uint32_t times_x(std::uint32_t a) const {
    std::vector<std::uint32_t> c(f_ + 1, 0);
    for (std::uint32_t i = 0; i < f_; ++i) {
      c[i + 1] = a % p_;
      a /= p_;
    }
    std::uint32_t top = c[f_];
    for (std::uint32_t i = 0; i < f_; ++i) c[i] = (c[i] + (p_ - top) * modulus_[i]) % p_;
    std::uint32_t r = 0, place = 1;
    for (std::uint32_t i = 0; i < f_; ++i) {
      r += c[i] * place;
      place *= p_;
    }
    return r;
  }

  void find_primitive_polynomial() {
    for (std::uint32_t code = 0; code < q_; ++code) {
      modulus_.assign(f_, 0);
      std::uint32_t t = code;
      for (std::uint32_t i = 0; i < f_; ++i) {
        modulus_[i] = t % p_;
        t /= p_;
      }
      if (modulus_[0] == 0) continue;
      // x is primitive iff its powers run through all q-1 nonzero elements.
      std::uint32_t x = 1, period = 0;
      do {
        x = times_x(x);
        ++period;
      } while (x != 1 && period < q_);
      if (period == q_ - 1) {
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        std::uint32_t y = 1;
        for (std::uint32_t k = 0; k < q_ - 1; ++k) {
          exp_[k] = y;
          log_[y] = k;
          y = times_x(y);
        }
        return;
      }
    }
    throw DefectError("no primitive polynomial found");
  }

  void build_tables(std::uint32_t g) {
    modulus_.assign(1, (p_ - g) % p_);
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    std::uint64_t y = 1;
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
      exp_[k] = static_cast<std::uint32_t>(y);
      log_[y] = k;
      y = y * g % p_;
    }
  }

  std::uint32_t p_, f_, q_;
  std::vector<std::uint32_t> modulus_;  // lower coefficients of the monic defining polynomial
  std::vector<std::uint32_t> exp_, log_;
};

}  // namespace sqfree
