#pragma once

#include <cstdint>
#include <regex>
#include <string>

#include "sqfree/bigint.hpp"
#include "sqfree/error.hpp"
#include "sqfree/lie.hpp"

namespace sqfree {

struct SimpleGroupId {
  enum class Kind { Alt, PSL2, Suzuki, J1, Lie };
  Kind kind = Kind::Alt;
  unsigned n = 0;        // Alt degree or Lie rank
  std::uint64_t q = 0;   // field parameter
  LieFamily family = LieFamily::A;
  std::string text;      // as written
};

struct SimpleGroupOrder {
  std::string tag;
  BigInt order;
};

/// Accepts Alt(n), PSL2(q), Sz(q), J1, and Lie names such as A2(3), A_2(3),
/// 2A3(2), D4(2), G2(3), 3D4(2), 2F4(2)'.
inline SimpleGroupId parse_simple_group_id(const std::string& text) {
  static const std::regex named(R"(^(Alt|PSL2|Sz)\((\d+)\)$)");
  static const std::regex lie(R"(^([23]?[A-G])_?(\d*)\((\d+)\)('?)$)");
  std::smatch m;
  SimpleGroupId id;
  id.text = text;
  if (text == "J1") {
    id.kind = SimpleGroupId::Kind::J1;
    return id;
  }
  if (std::regex_match(text, m, named)) {
    const auto v = std::stoull(m[2]);
    if (m[1] == "Alt") {
      id.kind = SimpleGroupId::Kind::Alt;
      id.n = static_cast<unsigned>(v);
    } else {
      id.kind = m[1] == "PSL2" ? SimpleGroupId::Kind::PSL2 : SimpleGroupId::Kind::Suzuki;
      id.q = v;
    }
    return id;
  }
  if (std::regex_match(text, m, lie)) {
    id.kind = SimpleGroupId::Kind::Lie;
    id.q = std::stoull(m[3]);
    const std::string letter = m[1], digits = m[2], prime = m[4];
    if (auto fixed = parse_lie_family(letter + digits + prime); fixed && !lie_family_has_rank(*fixed)) {
      id.family = *fixed;
      return id;
    }
    auto fam = parse_lie_family(letter);
    if (!fam || digits.empty() || !prime.empty() || !lie_family_has_rank(*fam))
      throw InputError("unknown simple group '" + text + "'");
    id.family = *fam;
    id.n = static_cast<unsigned>(std::stoul(digits));
    return id;
  }
  throw InputError("unknown simple group '" + text + "'");
}

inline SimpleGroupOrder simple_group_order(const SimpleGroupId& id) {
  switch (id.kind) {
    case SimpleGroupId::Kind::Alt:
      if (id.n < 5) throw InputError("Alt(n) is simple nonabelian only for n >= 5");
      return {"Alt(" + std::to_string(id.n) + ")", factorial(id.n) / 2};
    case SimpleGroupId::Kind::PSL2:
      if (!prime_power_decompose(id.q) || id.q <= 3) throw InputError("PSL2(q) needs a prime power q > 3");
      return {"PSL2(" + std::to_string(id.q) + ")", lie_group_order(LieFamily::A, 1, id.q)};
    case SimpleGroupId::Kind::Suzuki:
      if (id.q < 8) throw InputError("Sz(q) needs q = 2^(2m+1) >= 8");
      return {"Sz(" + std::to_string(id.q) + ")", lie_group_order(LieFamily::B2_2, 0, id.q)};
    case SimpleGroupId::Kind::J1:
      return {"J1", 175560};
    case SimpleGroupId::Kind::Lie:
      return {id.text, lie_group_order(id.family, id.n, id.q)};
  }
  throw InputError("unknown simple group");
}

inline SimpleGroupOrder simple_group_order(const std::string& text) {
  return simple_group_order(parse_simple_group_id(text));
}

}  // namespace sqfree
