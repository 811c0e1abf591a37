#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "sqfree/bigint.hpp"
#include "sqfree/error.hpp"

namespace sqfree {

inline int moebius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

/// Phi_k(q) = prod over d | k of (q^d - 1)^mu(k/d), divided out exactly.
inline BigInt cyclotomic_poly_eval(std::uint64_t k, const BigInt& q) {
  if (k == 0) throw InputError("cyclotomic index must be positive");
  if (q < 2) throw InputError("cyclotomic evaluation needs q >= 2");
  BigInt num = 1, den = 1;
  for (auto d : divisors_u64(k)) {
    const int mu = moebius(k / d);
    if (mu == 0) continue;
    BigInt term = big_pow(q, static_cast<unsigned>(d)) - 1;
    (mu > 0 ? num : den) *= term;
  }
  if (num % den != 0) throw DefectError("cyclotomic value is not an integer");
  return num / den;
}

enum class LieFamily { A, B, C, D, A2, B2_2, D2, D3_4, G2, F4, E6, E7, E8, E6_2, F4_2, G2_2, Tits };

/// Tags as used in the witness data: A B C D 2A 2B2 2D 3D4 G2 F4 E6 E7 E8 2E6 2F4 2G2 2F4'.
inline std::optional<LieFamily> parse_lie_family(const std::string& tag) {
  static const std::map<std::string, LieFamily> tags = {
      {"A", LieFamily::A},       {"B", LieFamily::B},      {"C", LieFamily::C},     {"D", LieFamily::D},
      {"2A", LieFamily::A2},     {"2B2", LieFamily::B2_2}, {"2D", LieFamily::D2},   {"3D4", LieFamily::D3_4},
      {"G2", LieFamily::G2},     {"F4", LieFamily::F4},    {"E6", LieFamily::E6},   {"E7", LieFamily::E7},
      {"E8", LieFamily::E8},     {"2E6", LieFamily::E6_2}, {"2F4", LieFamily::F4_2}, {"2G2", LieFamily::G2_2},
      {"2F4'", LieFamily::Tits},
  };
  auto it = tags.find(tag);
  if (it == tags.end()) return std::nullopt;
  return it->second;
}

/// True for the families whose rank is a free parameter.
inline bool lie_family_has_rank(LieFamily f) {
  return f == LieFamily::A || f == LieFamily::B || f == LieFamily::C || f == LieFamily::D || f == LieFamily::A2 ||
         f == LieFamily::D2;
}

/// Order of the simple group of Lie type. Twisted groups are parametrized
/// by the q of their degree formulas: 2A_n(q) = PSU_{n+1}(q), 3D4(q) over
/// GF(q^3), 2E6(q) over GF(q^2), and 2B2, 2F4, 2G2 with q = 2^(2m+1) or 3^(2m+1).
inline BigInt lie_group_order(LieFamily fam, unsigned n, std::uint64_t q_in) {
  auto pf = prime_power_decompose(q_in);
  if (!pf) throw InputError("q must be a prime power");
  const auto [p, f] = *pf;
  const BigInt q = q_in;
  auto qp = [&](unsigned e) { return big_pow(q, e); };
  auto g = [](const BigInt& a, const BigInt& b) { return big_gcd(a, b); };
  BigInt o = 1;
  switch (fam) {
    case LieFamily::A:
      if (n < 1) throw InputError("A_n needs n >= 1");
      o = qp(n * (n + 1) / 2);
      for (unsigned i = 2; i <= n + 1; ++i) o *= qp(i) - 1;
      return o / g(n + 1, q - 1);
    case LieFamily::B:
    case LieFamily::C:
      if (n < 2) throw InputError("B_n and C_n need n >= 2");
      o = qp(n * n);
      for (unsigned i = 1; i <= n; ++i) o *= qp(2 * i) - 1;
      return o / g(2, q - 1);
    case LieFamily::D:
      if (n < 4) throw InputError("D_n needs n >= 4");
      o = qp(n * (n - 1)) * (qp(n) - 1);
      for (unsigned i = 1; i < n; ++i) o *= qp(2 * i) - 1;
      return o / g(4, qp(n) - 1);
    case LieFamily::A2: {
      if (n < 2) throw InputError("2A_n needs n >= 2");
      o = qp(n * (n + 1) / 2);
      for (unsigned i = 2; i <= n + 1; ++i) o *= (i % 2 == 0) ? qp(i) - 1 : qp(i) + 1;
      return o / g(n + 1, q + 1);
    }
    case LieFamily::D2:
      if (n < 4) throw InputError("2D_n needs n >= 4");
      o = qp(n * (n - 1)) * (qp(n) + 1);
      for (unsigned i = 1; i < n; ++i) o *= qp(2 * i) - 1;
      return o / g(4, qp(n) + 1);
    case LieFamily::D3_4:
      return qp(12) * (qp(8) + qp(4) + 1) * (qp(6) - 1) * (qp(2) - 1);
    case LieFamily::G2:
      return qp(6) * (qp(6) - 1) * (qp(2) - 1);
    case LieFamily::F4:
      return qp(24) * (qp(12) - 1) * (qp(8) - 1) * (qp(6) - 1) * (qp(2) - 1);
    case LieFamily::E6:
      o = qp(36);
      for (unsigned i : {2u, 5u, 6u, 8u, 9u, 12u}) o *= qp(i) - 1;
      return o / g(3, q - 1);
    case LieFamily::E7:
      o = qp(63);
      for (unsigned i : {2u, 6u, 8u, 10u, 12u, 14u, 18u}) o *= qp(i) - 1;
      return o / g(2, q - 1);
    case LieFamily::E8:
      o = qp(120);
      for (unsigned i : {2u, 8u, 12u, 14u, 18u, 20u, 24u, 30u}) o *= qp(i) - 1;
      return o;
    case LieFamily::E6_2:
      return qp(36) * (qp(12) - 1) * (qp(9) + 1) * (qp(8) - 1) * (qp(6) - 1) * (qp(5) + 1) * (qp(2) - 1) /
             g(3, q + 1);
    case LieFamily::B2_2:
      if (p != 2 || f % 2 == 0) throw InputError("2B2(q) needs q = 2^(2m+1)");
      return qp(2) * (qp(2) + 1) * (q - 1);
    case LieFamily::F4_2:
      if (p != 2 || f % 2 == 0) throw InputError("2F4(q) needs q = 2^(2m+1)");
      return qp(12) * (qp(6) + 1) * (qp(4) - 1) * (qp(3) + 1) * (q - 1);
    case LieFamily::G2_2:
      if (p != 3 || f % 2 == 0) throw InputError("2G2(q) needs q = 3^(2m+1)");
      return qp(3) * (qp(3) + 1) * (q - 1);
    case LieFamily::Tits:
      if (q_in != 2) throw InputError("the Tits group is 2F4(2)'");
      return lie_group_order(LieFamily::F4_2, 0, 2) / 2;
  }
  throw InputError("unsupported Lie family");
}

inline BigInt lie_group_order(const std::string& tag, unsigned n, std::uint64_t q) {
  auto fam = parse_lie_family(tag);
  if (!fam) throw InputError("unsupported Lie family '" + tag + "'");
  return lie_group_order(*fam, n, q);
}

}  // namespace sqfree
