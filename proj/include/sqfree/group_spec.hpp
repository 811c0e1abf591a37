#pragma once

#include <cctype>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sqfree/bigint.hpp"
#include "sqfree/error.hpp"
#include "sqfree/finite_field.hpp"
#include "sqfree/perm_group.hpp"

#ifndef SQFREE_DATA_DIR
#define SQFREE_DATA_DIR "data"
#endif

namespace sqfree {

struct GroupSpec;

namespace spec {
struct Alt { unsigned n; };
struct Sym { unsigned n; };
struct PSL2 { std::uint32_t q; };
struct PGL2 { std::uint32_t q; };
struct Named { std::string id; };
struct Product { std::shared_ptr<const GroupSpec> left, right; };
struct Raw {
  std::size_t degree;
  std::vector<std::string> generators;  // cycle strings, 1-based
};
}  // namespace spec

/// Tagged description of a group; see parse_group_spec for the text grammar.
struct GroupSpec {
  std::variant<spec::Alt, spec::Sym, spec::PSL2, spec::PGL2, spec::Named, spec::Product, spec::Raw> value;
};

std::string to_string(const GroupSpec& s);

inline GroupSpec make_product(GroupSpec a, GroupSpec b) {
  return GroupSpec{spec::Product{std::make_shared<const GroupSpec>(std::move(a)),
                                 std::make_shared<const GroupSpec>(std::move(b))}};
}

namespace detail {

class SpecParser {
public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse_all() {
    GroupSpec s = parse_spec();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing characters in group spec", pos_);
    return s;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view word) {
    if (!accept(word)) throw ParseError("expected '" + std::string(word) + "'", pos_);
  }

  std::uint64_t parse_uint() {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > (1ull << 40)) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected an integer", start);
    return v;
  }

  std::uint64_t parenthesized_uint() {
    expect("(");
    auto v = parse_uint();
    expect(")");
    return v;
  }

  // One generator: a run of "(...)" groups.
  std::string parse_cycles() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || text_[pos_] != '(') throw ParseError("expected a cycle", pos_);
    while (pos_ < text_.size() && text_[pos_] == '(') {
      while (pos_ < text_.size() && text_[pos_] != ')') ++pos_;
      if (pos_ == text_.size()) throw ParseError("unterminated cycle", start);
      ++pos_;
      std::size_t save = pos_;
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != '(') pos_ = save;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  GroupSpec parse_spec() {
    skip_ws();
    std::size_t start = pos_;
    if (accept("Alt")) return GroupSpec{spec::Alt{checked_n(parenthesized_uint(), start)}};
    if (accept("Sym")) return GroupSpec{spec::Sym{checked_n(parenthesized_uint(), start)}};
    if (accept("PSL2")) return GroupSpec{spec::PSL2{checked_q(parenthesized_uint(), start)}};
    if (accept("PGL2")) return GroupSpec{spec::PGL2{checked_q(parenthesized_uint(), start)}};
    if (accept("named:")) {
      skip_ws();
      std::size_t s = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      if (pos_ == s) throw ParseError("expected a group identifier", s);
      return GroupSpec{spec::Named{std::string(text_.substr(s, pos_ - s))}};
    }
    if (accept("prod")) {
      expect("(");
      GroupSpec a = parse_spec();
      expect(",");
      GroupSpec b = parse_spec();
      expect(")");
      return make_product(std::move(a), std::move(b));
    }
    if (accept("perm:")) {
      expect("deg");
      expect("=");
      auto deg = parse_uint();
      if (deg == 0 || deg > 65535) throw ParseError("degree out of range", pos_);
      expect(";");
      expect("gens");
      expect("=");
      spec::Raw raw{static_cast<std::size_t>(deg), {}};
      raw.generators.push_back(parse_cycles());
      for (;;) {
        std::size_t save = pos_;
        if (!accept(",")) break;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '(') {
          raw.generators.push_back(parse_cycles());
        } else {
          pos_ = save;  // the comma belongs to an enclosing prod(...)
          break;
        }
      }
      for (const auto& c : raw.generators) (void)::sqfree::parse_cycles(c, raw.degree);
      return GroupSpec{std::move(raw)};
    }
    throw ParseError("unknown group spec", start);
  }

  static unsigned checked_n(std::uint64_t n, std::size_t at) {
    if (n < 1 || n > 1000) throw ParseError("n must be between 1 and 1000", at);
    return static_cast<unsigned>(n);
  }

  static std::uint32_t checked_q(std::uint64_t q, std::size_t at) {
    auto pf = prime_power_decompose(q);
    if (!pf || q <= 3) throw ParseError("q must be a prime power greater than 3", at);
    if (q > 100000) throw ParseError("q too large", at);
    return static_cast<std::uint32_t>(q);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar (whitespace-insensitive): Alt(n) | Sym(n) | PSL2(q) | PGL2(q) |
/// named:<id> | prod(<spec>,<spec>) | perm:deg=<d>;gens=<cycles>[,<cycles>...]
inline GroupSpec parse_group_spec(std::string_view text) { return detail::SpecParser(text).parse_all(); }

inline std::string to_string(const GroupSpec& s) {
  struct Visitor {
    std::string operator()(const spec::Alt& a) const { return "Alt(" + std::to_string(a.n) + ")"; }
    std::string operator()(const spec::Sym& a) const { return "Sym(" + std::to_string(a.n) + ")"; }
    std::string operator()(const spec::PSL2& a) const { return "PSL2(" + std::to_string(a.q) + ")"; }
    std::string operator()(const spec::PGL2& a) const { return "PGL2(" + std::to_string(a.q) + ")"; }
    std::string operator()(const spec::Named& a) const { return "named:" + a.id; }
    std::string operator()(const spec::Product& a) const {
      return "prod(" + to_string(*a.left) + "," + to_string(*a.right) + ")";
    }
    std::string operator()(const spec::Raw& a) const {
      std::string out = "perm:deg=" + std::to_string(a.degree) + ";gens=";
      for (std::size_t i = 0; i < a.generators.size(); ++i) {
        if (i) out += ",";
        out += to_cycle_string(parse_cycles(a.generators[i], a.degree));
      }
      return out;
    }
  };
  return std::visit(Visitor{}, s.value);
}

// ---------------------------------------------------------------------------
// Constructors

inline PermutationGroup symmetric_group(unsigned n) {
  if (n < 1) throw InputError("Sym(n) needs n >= 1");
  if (n == 1) return PermutationGroup::trivial(1);
  std::vector<Point> cyc(n);
  for (unsigned i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  std::vector<Point> tr(n);
  for (unsigned i = 0; i < n; ++i) tr[i] = i;
  std::swap(tr[0], tr[1]);
  return PermutationGroup(n, {Permutation::from_images(tr), Permutation::from_images(cyc)});
}

inline PermutationGroup alternating_group(unsigned n) {
  if (n < 1) throw InputError("Alt(n) needs n >= 1");
  if (n < 3) return PermutationGroup::trivial(n);
  std::vector<Point> three(n);
  for (unsigned i = 0; i < n; ++i) three[i] = i;
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  // long cycle through all points (n odd) or through points 2..n (n even)
  std::vector<Point> longc(n);
  for (unsigned i = 0; i < n; ++i) longc[i] = i;
  unsigned first = (n % 2 == 1) ? 0 : 1;
  for (unsigned i = first; i < n; ++i) longc[i] = (i + 1 < n) ? i + 1 : first;
  return PermutationGroup(n, {Permutation::from_images(three), Permutation::from_images(longc)});
}

/// Natural action of PGammaL(2, q) pieces on the projective line. Points
/// 0..q-1 are field elements (by encoding), point q is infinity.
struct ProjectiveLine {
  FiniteField field;
  Permutation unipotent;  // x -> x + 1
  Permutation square;     // x -> w^2 x, w the primitive element
  Permutation weyl;       // x -> -1/x
  Permutation diagonal;   // x -> w x   (outer diagonal automorphism for odd q)
  Permutation frobenius;  // x -> x^p

  explicit ProjectiveLine(std::uint32_t q) : field(make_field(q)) {
    const std::uint32_t n = field.size();
    const std::uint32_t w = field.primitive_element();
    auto build = [&](auto&& map) {
      std::vector<Point> im(n + 1);
      for (std::uint32_t x = 0; x <= n; ++x) im[x] = map(x);
      return Permutation::from_images(std::move(im));
    };
    unipotent = build([&](std::uint32_t x) { return x == n ? n : field.add(x, 1); });
    square = build([&](std::uint32_t x) { return x == n ? n : field.mul(field.mul(w, w), x); });
    weyl = build([&](std::uint32_t x) -> std::uint32_t {
      if (x == n) return 0;
      if (x == 0) return n;
      return field.neg(field.inv(x));
    });
    diagonal = build([&](std::uint32_t x) { return x == n ? n : field.mul(w, x); });
    frobenius = build([&](std::uint32_t x) { return x == n ? n : field.frobenius(x); });
  }

  std::vector<Permutation> psl_generators() const { return {unipotent, square, weyl}; }

private:
  static FiniteField make_field(std::uint32_t q) {
    auto pf = prime_power_decompose(q);
    if (!pf || q <= 3) throw InputError("q must be a prime power greater than 3");
    return FiniteField(static_cast<std::uint32_t>(pf->first), pf->second);
  }
};

inline PermutationGroup psl2(std::uint32_t q) {
  ProjectiveLine line(q);
  return PermutationGroup(q + 1, line.psl_generators());
}

inline PermutationGroup pgl2(std::uint32_t q) {
  ProjectiveLine line(q);
  auto gens = line.psl_generators();
  gens.push_back(line.diagonal);
  return PermutationGroup(q + 1, std::move(gens));
}

/// Generator file contents for a named group.
struct NamedGroupData {
  std::string name;
  std::size_t degree = 0;
  BigInt declared_order = 0;
  std::vector<std::string> generators;
};

inline NamedGroupData parse_named_group(std::istream& in) {
  NamedGroupData d;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto colon = line.find(':');
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    if (trim(line).empty()) continue;
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", lineno, ParseError::Unit::Line);
    std::string key = trim(line.substr(0, colon)), value = trim(line.substr(colon + 1));
    if (key == "group-format") {
      if (value != "1") throw ParseError("unsupported group-format " + value, lineno, ParseError::Unit::Line);
      header = true;
    } else if (key == "name") {
      d.name = value;
    } else if (key == "degree") {
      d.degree = static_cast<std::size_t>(parse_bigint(value));
    } else if (key == "order") {
      d.declared_order = parse_bigint(value);
    } else if (key == "gen") {
      d.generators.push_back(value);
    } else {
      throw ParseError("unknown key '" + key + "'", lineno, ParseError::Unit::Line);
    }
  }
  if (!header) throw ParseError("missing 'group-format: 1' header", lineno, ParseError::Unit::Line);
  if (d.degree == 0 || d.generators.empty()) throw ParseError("named group needs a degree and generators", lineno, ParseError::Unit::Line);
  return d;
}

struct ConstructOptions {
  std::filesystem::path data_dir = SQFREE_DATA_DIR;
};

inline PermutationGroup construct(const GroupSpec& s, const ConstructOptions& opts = {}) {
  struct Visitor {
    const ConstructOptions& opts;
    PermutationGroup operator()(const spec::Alt& a) const { return alternating_group(a.n); }
    PermutationGroup operator()(const spec::Sym& a) const { return symmetric_group(a.n); }
    PermutationGroup operator()(const spec::PSL2& a) const { return psl2(a.q); }
    PermutationGroup operator()(const spec::PGL2& a) const { return pgl2(a.q); }
    PermutationGroup operator()(const spec::Product& a) const {
      return direct_product(construct(*a.left, opts), construct(*a.right, opts));
    }
    PermutationGroup operator()(const spec::Raw& a) const {
      std::vector<Permutation> gens;
      for (const auto& c : a.generators) gens.push_back(parse_cycles(c, a.degree));
      return PermutationGroup(a.degree, std::move(gens));
    }
    PermutationGroup operator()(const spec::Named& a) const {
      auto path = opts.data_dir / "groups" / (a.id + ".gens");
      std::ifstream in(path);
      if (!in) throw InputError("unknown named group '" + a.id + "' (no " + path.string() + ")");
      NamedGroupData d = parse_named_group(in);
      std::vector<Permutation> gens;
      for (const auto& c : d.generators) gens.push_back(parse_cycles(c, d.degree));
      PermutationGroup g(d.degree, std::move(gens));
      if (d.declared_order != 0 && g.order() != d.declared_order)
        throw DefectError("named group '" + a.id + "' has order " + to_string(g.order()) + ", file declares " +
                          to_string(d.declared_order));
      return g;
    }
  };
  return std::visit(Visitor{opts}, s.value);
}

inline PermutationGroup construct(std::string_view text, const ConstructOptions& opts = {}) {
  return construct(parse_group_spec(text), opts);
}

}  // namespace sqfree
