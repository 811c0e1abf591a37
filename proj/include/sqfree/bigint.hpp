#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqfree/error.hpp"

namespace sqfree {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return a / big_gcd(a, b) * b;
}

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt big_pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

/// Parses a nonnegative decimal integer; throws InputError otherwise.
inline BigInt parse_bigint(const std::string& text) {
  if (text.empty()) throw InputError("empty integer literal");
  for (char c : text)
    if (c < '0' || c > '9') throw InputError("not a decimal integer: '" + text + "'");
  return BigInt(text);
}

using Factorization = std::vector<std::pair<BigInt, unsigned>>;

/// Trial-division factorization. Prime factors above `trial_limit` are
/// left in a final cofactor entry whose primality is not certified; the
/// second member reports whether the factorization is complete.
inline std::pair<Factorization, bool> factorize(BigInt n, std::uint64_t trial_limit = 1000000) {
  Factorization out;
  if (n < 0) n = -n;
  if (n <= 1) return {out, true};
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(BigInt(p), e);
  };
  strip(2);
  for (std::uint64_t p = 3; p <= trial_limit; p += 2) {
    if (BigInt(p) * p > n) break;
    strip(p);
  }
  if (n == 1) return {out, true};
  // Remaining cofactor: prime if it is below trial_limit^2.
  BigInt lim = BigInt(trial_limit) * trial_limit;
  bool complete = n < lim;
  out.emplace_back(n, 1);
  return {out, complete};
}

/// Smallest prime p with p^k dividing n, if any. Throws DefectError when
/// trial division cannot decide.
inline std::optional<BigInt> smallest_prime_power_divisor(const BigInt& n, unsigned k,
                                                          std::uint64_t trial_limit = 1000000) {
  auto [fac, complete] = factorize(n, trial_limit);
  if (!complete) {
    // Every uncertified prime factor exceeds trial_limit; p^k | cofactor
    // needs cofactor >= trial_limit^k.
    const BigInt& cof = fac.back().first;
    if (cof >= big_pow(BigInt(trial_limit), k))
      throw DefectError("cannot certify power-freeness of " + to_string(n) + " by trial division");
    fac.pop_back();
  }
  for (const auto& [p, e] : fac)
    if (e >= k) return p;
  return std::nullopt;
}

inline bool is_square_free(const BigInt& n) { return !smallest_prime_power_divisor(n, 2).has_value(); }

inline bool fourth_power_free(const BigInt& n) {
  return !smallest_prime_power_divisor(n, 4).has_value();
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Returns (p, f) with q = p^f if q is a prime power, else nullopt.
inline std::optional<std::pair<std::uint64_t, unsigned>> prime_power_decompose(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return std::make_pair(q, 1u);
  unsigned f = 0;
  while (q % p == 0) {
    q /= p;
    ++f;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(p, f);
}

inline std::vector<std::uint64_t> prime_divisors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::vector<std::uint64_t> divisors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> lo, hi;
  for (std::uint64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      lo.push_back(d);
      if (d != n / d) hi.push_back(n / d);
    }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

}  // namespace sqfree
