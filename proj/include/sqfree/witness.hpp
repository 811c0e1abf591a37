#pragma once

// Witness rows: a simple group (or family), its order, a character degree
// and the square factor that should divide gcd(degree, codegree).
//
// File format, one record per line, tab-separated:
//
//   name <TAB> kind <TAB> order <TAB> constraint <TAB> degree <TAB> factor
//
//   kind        sporadic | lieFixed | lieFamily
//   order       decimal integer, or lie:<tag> / lie:<tag>,<rank> / lie:<tag>,n
//   constraint  '-' or comma-separated clauses: n=K n>K q=K q>K q%M==R p=K f%M==R f>K
//   degree      expression (see expr.hpp)
//   factor      expression; q in a factor stands for the characteristic p
//
// '#' starts a comment line. A file with records needs the header line
// "witness-format: 1" before them.

#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"  // vendored nlohmann/json

#include "sqfree/bigint.hpp"
#include "sqfree/error.hpp"
#include "sqfree/expr.hpp"
#include "sqfree/lie.hpp"

namespace sqfree {

enum class WitnessKind { Sporadic, LieFixed, LieFamily };

inline std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::Sporadic: return "sporadic";
    case WitnessKind::LieFixed: return "lieFixed";
    case WitnessKind::LieFamily: return "lieFamily";
  }
  return "?";
}

struct Clause {
  char var = 'q';        // 'n', 'q', 'p', 'f'
  enum class Rel { Eq, Gt, Mod } rel = Rel::Eq;
  std::uint64_t value = 0;    // K, or R for Mod
  std::uint64_t modulus = 0;  // M for Mod

  bool holds(std::uint64_t x) const {
    switch (rel) {
      case Rel::Eq: return x == value;
      case Rel::Gt: return x > value;
      case Rel::Mod: return x % modulus == value;
    }
    return false;
  }
};

inline std::string to_string(const Clause& c) {
  std::string v(1, c.var);
  switch (c.rel) {
    case Clause::Rel::Eq: return v + "=" + std::to_string(c.value);
    case Clause::Rel::Gt: return v + ">" + std::to_string(c.value);
    case Clause::Rel::Mod: return v + "%" + std::to_string(c.modulus) + "==" + std::to_string(c.value);
  }
  return v;
}

struct WitnessRecord {
  std::size_t line = 0;
  std::string name;
  WitnessKind kind = WitnessKind::Sporadic;
  std::optional<BigInt> order;  // explicit order
  std::string lie_tag;          // for lie: orders
  std::optional<unsigned> rank;  // fixed rank; absent with a rank-carrying tag means "n"
  std::vector<Clause> constraints;
  std::string degree_text, factor_text;
  ExprPtr degree, factor;

  bool uses_n() const { return !order && lie_family_has_rank(*parse_lie_family(lie_tag)) && !rank; }
  bool uses_q() const { return !order; }
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

inline std::uint64_t parse_u64(const std::string& s) {
  if (s.empty() || s.size() > 18 || s.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("expected a number, got '" + s + "'");
  return std::stoull(s);
}

inline Clause parse_clause(const std::string& text) {
  const std::string t = trim(text);
  if (t.size() < 3 || std::string("nqpf").find(t[0]) == std::string::npos) throw InputError("bad constraint '" + t + "'");
  Clause c;
  c.var = t[0];
  if (t[1] == '=') {
    c.rel = Clause::Rel::Eq;
    c.value = parse_u64(t.substr(2));
  } else if (t[1] == '>') {
    c.rel = Clause::Rel::Gt;
    c.value = parse_u64(t.substr(2));
  } else if (t[1] == '%') {
    auto eq = t.find("==");
    if (eq == std::string::npos) throw InputError("bad constraint '" + t + "'");
    c.rel = Clause::Rel::Mod;
    c.modulus = parse_u64(t.substr(2, eq - 2));
    c.value = parse_u64(t.substr(eq + 2));
    if (c.modulus == 0 || c.value >= c.modulus) throw InputError("bad modulus in '" + t + "'");
  } else {
    throw InputError("bad constraint '" + t + "'");
  }
  if (c.var == 'n' && c.rel == Clause::Rel::Mod) throw InputError("congruences on n are not supported");
  return c;
}

}  // namespace detail

inline WitnessRecord parse_witness_line(const std::string& line, std::size_t lineno) {
  auto fields = detail::split(line, '\t');
  if (fields.size() != 6)
    throw ParseError("expected 6 tab-separated fields, found " + std::to_string(fields.size()), lineno,
                     ParseError::Unit::Line);
  try {
    WitnessRecord r;
    r.line = lineno;
    r.name = detail::trim(fields[0]);
    const auto kind = detail::trim(fields[1]);
    if (kind == "sporadic")
      r.kind = WitnessKind::Sporadic;
    else if (kind == "lieFixed")
      r.kind = WitnessKind::LieFixed;
    else if (kind == "lieFamily")
      r.kind = WitnessKind::LieFamily;
    else
      throw InputError("unknown kind '" + kind + "'");
    const auto ord = detail::trim(fields[2]);
    if (ord.rfind("lie:", 0) == 0) {
      auto parts = detail::split(ord.substr(4), ',');
      if (parts.empty() || parts.size() > 2) throw InputError("bad order formula '" + ord + "'");
      r.lie_tag = detail::trim(parts[0]);
      auto fam = parse_lie_family(r.lie_tag);
      if (!fam) throw InputError("unknown Lie family '" + r.lie_tag + "'");
      if (lie_family_has_rank(*fam)) {
        if (parts.size() != 2) throw InputError("family " + r.lie_tag + " needs a rank");
        const auto rk = detail::trim(parts[1]);
        if (rk != "n") r.rank = static_cast<unsigned>(detail::parse_u64(rk));
      } else if (parts.size() != 1) {
        throw InputError("family " + r.lie_tag + " takes no rank");
      }
      if (r.kind != WitnessKind::LieFamily) throw InputError("order formulas are for lieFamily rows");
    } else {
      r.order = parse_bigint(ord);
      if (r.kind == WitnessKind::LieFamily) throw InputError("lieFamily rows need an order formula");
    }
    const auto cons = detail::trim(fields[3]);
    if (cons != "-" && !cons.empty())
      for (const auto& c : detail::split(cons, ',')) r.constraints.push_back(detail::parse_clause(c));
    r.degree_text = detail::trim(fields[4]);
    r.factor_text = detail::trim(fields[5]);
    r.degree = parse_degree_expr(r.degree_text);
    r.factor = parse_degree_expr(r.factor_text);
    return r;
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()), lineno, ParseError::Unit::Line);
  } catch (const InputError& e) {
    throw ParseError(e.what(), lineno, ParseError::Unit::Line);
  }
}

inline constexpr int kWitnessFormat = 1;

inline std::vector<WitnessRecord> parse_witnesses(std::istream& in) {
  std::vector<WitnessRecord> out;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("witness-format:", 0) == 0) {
      if (detail::trim(t.substr(15)) != std::to_string(kWitnessFormat))
        throw ParseError("unsupported witness-format", lineno, ParseError::Unit::Line);
      header = true;
      continue;
    }
    if (!header) throw ParseError("missing 'witness-format: 1' header", lineno, ParseError::Unit::Line);
    out.push_back(parse_witness_line(line, lineno));
  }
  return out;
}

inline std::vector<WitnessRecord> load_witnesses(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open witness file " + path);
  return parse_witnesses(in);
}

// ---------------------------------------------------------------------------
// Substitution and verification

struct WitnessPoint {
  std::optional<std::uint64_t> q, n;
};

inline std::string to_string(const WitnessPoint& s) {
  std::string out;
  if (s.n) out += "n=" + std::to_string(*s.n);
  if (s.q) out += (out.empty() ? "" : ",") + std::string("q=") + std::to_string(*s.q);
  return out.empty() ? "-" : out;
}

/// Whether the substitution meets every clause; violations are listed.
inline std::vector<std::string> constraint_violations(const WitnessRecord& r, const WitnessPoint& s) {
  std::vector<std::string> bad;
  std::optional<std::pair<std::uint64_t, unsigned>> pf;
  if (s.q) pf = prime_power_decompose(*s.q);
  if (r.uses_q() && (!s.q || !pf)) bad.push_back("q must be a prime power");
  if (r.uses_n() && !s.n) bad.push_back("n is required");
  for (const auto& c : r.constraints) {
    std::optional<std::uint64_t> x;
    if (c.var == 'n' && s.n) x = *s.n;
    if (c.var == 'q' && s.q) x = *s.q;
    if (c.var == 'p' && pf) x = pf->first;
    if (c.var == 'f' && pf) x = pf->second;
    if (!x || !c.holds(*x)) bad.push_back(to_string(c));
  }
  return bad;
}

/// Default sample points: n at its smallest admissible value, q running
/// through the smallest admissible prime powers.
inline std::vector<WitnessPoint> sample_points(const WitnessRecord& r, std::size_t count = 3) {
  if (!r.uses_q()) return {WitnessPoint{}};
  std::optional<std::uint64_t> n;
  if (r.uses_n()) {
    std::uint64_t lo = 1;
    for (const auto& c : r.constraints) {
      if (c.var != 'n') continue;
      if (c.rel == Clause::Rel::Eq) lo = std::max(lo, c.value);
      if (c.rel == Clause::Rel::Gt) lo = std::max(lo, c.value + 1);
    }
    n = lo;
  }
  std::vector<WitnessPoint> out;
  for (std::uint64_t q = 2; q < 100000000 && out.size() < count; ++q) {
    if (!prime_power_decompose(q)) continue;
    WitnessPoint s{q, n};
    if (constraint_violations(r, s).empty()) out.push_back(s);
  }
  return out;
}

enum class WitnessStatus { Confirmed, Discrepancy, SkippedNonintegral };

inline std::string to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::Confirmed: return "confirmed";
    case WitnessStatus::Discrepancy: return "discrepancy";
    case WitnessStatus::SkippedNonintegral: return "skipped-nonintegral";
  }
  return "?";
}

struct VerificationOutcome {
  std::string name;
  std::size_t line = 0;
  WitnessKind kind = WitnessKind::Sporadic;
  WitnessPoint point;
  std::optional<BigInt> degree;
  BigInt order = 0;
  std::optional<BigInt> codegree, gcd;
  BigInt factor = 0;
  bool divides = false;
  bool factor_holds = false;
  WitnessStatus status = WitnessStatus::Discrepancy;
  std::string note;
};

class ConstraintError : public InputError {
public:
  using InputError::InputError;
};

inline BigInt witness_order(const WitnessRecord& r, const WitnessPoint& s) {
  if (r.order) return *r.order;
  const unsigned rank = r.rank ? *r.rank : static_cast<unsigned>(s.n.value_or(0));
  return lie_group_order(r.lie_tag, rank, *s.q);
}

/// Evaluates the row at the substitution. The codegree is |H| / chi(1),
/// since nonlinear characters of a simple group are faithful.
inline VerificationOutcome verify_witness(const WitnessRecord& r, const WitnessPoint& s) {
  auto bad = constraint_violations(r, s);
  if (!bad.empty()) {
    std::string msg = r.name + ": substitution " + to_string(s) + " violates";
    for (const auto& b : bad) msg += " " + b;
    throw ConstraintError(msg);
  }
  VerificationOutcome o;
  o.name = r.name;
  o.line = r.line;
  o.kind = r.kind;
  o.point = s;
  o.order = witness_order(r, s);

  Substitution sub;
  if (s.q) sub.q = BigInt(*s.q);
  if (s.n) sub.n = BigInt(*s.n);
  Substitution factor_sub;  // q in a factor means p
  if (s.q) factor_sub.q = BigInt(prime_power_decompose(*s.q)->first);
  factor_sub.n = sub.n;
  o.factor = evaluate_integer(*r.factor, factor_sub);

  try {
    o.degree = evaluate_integer(*r.degree, sub);
  } catch (const NonIntegralError& e) {
    o.status = WitnessStatus::SkippedNonintegral;
    o.note = std::string("degree not integral: ") + e.what();
    return o;
  }
  if (*o.degree <= 0) {
    o.note = "degree is not positive";
    return o;
  }
  o.divides = o.order % *o.degree == 0;
  if (!o.divides) {
    o.note = "degree does not divide the order";
    return o;
  }
  o.codegree = o.order / *o.degree;
  o.gcd = big_gcd(*o.degree, *o.codegree);
  const bool square_factor = o.factor > 1 && smallest_prime_power_divisor(o.factor, 2).has_value();
  o.factor_holds = square_factor && *o.gcd % o.factor == 0;
  if (!square_factor)
    o.note = "claimed factor " + to_string(o.factor) + " is square-free";
  else if (!o.factor_holds)
    o.note = "factor " + to_string(o.factor) + " does not divide gcd " + to_string(*o.gcd);
  o.status = o.factor_holds ? WitnessStatus::Confirmed : WitnessStatus::Discrepancy;
  return o;
}

/// Every record at its sample points (one point for non-parametrized rows).
inline std::vector<VerificationOutcome> verify_all(const std::vector<WitnessRecord>& rows, std::size_t samples = 3) {
  std::vector<VerificationOutcome> out;
  for (const auto& r : rows) {
    const auto pts = sample_points(r, samples);
    if (pts.empty()) {
      VerificationOutcome o;
      o.name = r.name;
      o.line = r.line;
      o.kind = r.kind;
      o.note = "no admissible sample point";
      out.push_back(std::move(o));
      continue;
    }
    for (const auto& s : pts) out.push_back(verify_witness(r, s));
  }
  return out;
}

inline std::string format_outcomes(const std::vector<VerificationOutcome>& rows) {
  std::vector<std::vector<std::string>> cells{{"line", "name", "at", "degree", "order", "gcd", "factor", "status"}};
  auto opt = [](const std::optional<BigInt>& x) { return x ? to_string(*x) : std::string("-"); };
  for (const auto& o : rows)
    cells.push_back({std::to_string(o.line), o.name, to_string(o.point), opt(o.degree), to_string(o.order), opt(o.gcd),
                     to_string(o.factor), to_string(o.status) + (o.note.empty() ? "" : " (" + o.note + ")")});
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& line : cells)
    for (std::size_t k = 0; k + 1 < line.size(); ++k) width[k] = std::max(width[k], line[k].size());
  std::ostringstream out;
  for (const auto& line : cells) {
    for (std::size_t k = 0; k < line.size(); ++k) {
      out << line[k];
      if (k + 1 < line.size()) out << std::string(width[k] - line[k].size() + 2, ' ');
    }
    out << "\n";
  }
  return out.str();
}

inline nlohmann::json outcomes_json(const std::vector<VerificationOutcome>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  auto opt = [](const std::optional<BigInt>& x) { return x ? nlohmann::json(to_string(*x)) : nlohmann::json(nullptr); };
  for (const auto& o : rows) {
    nlohmann::json point = nlohmann::json::object();
    if (o.point.q) point["q"] = *o.point.q;
    if (o.point.n) point["n"] = *o.point.n;
    arr.push_back({{"line", o.line},
                   {"name", o.name},
                   {"kind", to_string(o.kind)},
                   {"substitution", point},
                   {"degree", opt(o.degree)},
                   {"order", to_string(o.order)},
                   {"codegree", opt(o.codegree)},
                   {"gcd", opt(o.gcd)},
                   {"factor", to_string(o.factor)},
                   {"divides", o.divides},
                   {"factorHolds", o.factor_holds},
                   {"status", to_string(o.status)},
                   {"note", o.note}});
  }
  return {{"verification-format", 1}, {"rows", arr}};
}

}  // namespace sqfree
