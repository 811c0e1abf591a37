#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"  // vendored nlohmann/json

#include "sqfree/chartab.hpp"
#include "sqfree/error.hpp"

namespace sqfree {

struct KernelInfo {
  std::vector<std::size_t> classes;  // ascending class indices
  std::uint64_t order = 0;
};

/// Classes on which chi takes the value chi(1).
inline KernelInfo kernel(const CharacterTable& t, std::size_t row) {
  if (row >= t.rows.size()) throw InputError("row index out of range");
  const auto& chi = t.rows[row];
  KernelInfo k;
  for (std::size_t c = 0; c < t.class_count(); ++c) {
    if (detail::is_integer_vector(chi.values[c].canonical(), static_cast<long long>(chi.degree))) {
      k.classes.push_back(c);
      k.order += t.classes->sizes[c];
    }
  }
  return k;
}

/// |G : ker chi| / chi(1).
inline std::uint64_t codegree(const CharacterTable& t, std::size_t row) {
  const auto k = kernel(t, row);
  const std::uint64_t index = t.order / k.order;
  const std::uint64_t degree = t.rows[row].degree;
  if (t.order % k.order != 0 || index % degree != 0)
    throw DefectError("codegree of row " + std::to_string(row) + " is not an integer");
  return index / degree;
}

/// Smallest prime p with p^2 | n, for machine-size n.
inline std::optional<std::uint64_t> smallest_square_prime(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return p;
    while (n % p == 0) n /= p;
  }
  return std::nullopt;
}

struct GcdRow {
  std::uint64_t degree = 0;
  std::uint64_t kernel_index = 0;
  std::uint64_t codegree = 0;
  std::uint64_t gcd = 0;
  bool square_free = true;
  std::optional<std::uint64_t> offending_prime;
};

struct GcdReport {
  std::string group;
  std::uint64_t order = 0;
  std::vector<GcdRow> rows;
};

inline GcdReport gcd_report(const CharacterTable& t) {
  GcdReport r{t.group_spec, t.order, {}};
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    GcdRow row;
    row.degree = t.rows[i].degree;
    row.codegree = codegree(t, i);
    row.kernel_index = row.degree * row.codegree;
    row.gcd = std::gcd(row.degree, row.codegree);
    row.offending_prime = smallest_square_prime(row.gcd);
    row.square_free = !row.offending_prime;
    r.rows.push_back(row);
  }
  return r;
}

struct HypothesisWitness {
  std::size_t row = 0;
  std::uint64_t degree = 0;
  std::uint64_t codegree = 0;
  std::uint64_t gcd = 0;
  std::uint64_t prime = 0;
};

struct HypothesisVerdict {
  std::string group;
  bool satisfies = true;
  std::optional<HypothesisWitness> witness;  // first failing row in table order
};

inline HypothesisVerdict square_free_hypothesis(const GcdReport& report) {
  HypothesisVerdict v{report.group, true, std::nullopt};
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    if (r.square_free) continue;
    v.satisfies = false;
    v.witness = HypothesisWitness{i, r.degree, r.codegree, r.gcd, *r.offending_prime};
    break;
  }
  return v;
}

inline HypothesisVerdict square_free_hypothesis(const CharacterTable& t) {
  return square_free_hypothesis(gcd_report(t));
}

struct CliffordCheck {
  bool ok = true;
  std::optional<std::size_t> failing_row;  // row of the normal subgroup's table
  std::string message;
};

/// For every psi in Irr(N): some chi in Irr(G) lies over psi with
/// psi(1) | chi(1) and psi^c(1) | chi^c(1).
inline CliffordCheck clifford_divisibility_check(const PermutationGroup& n, const CharacterTable& tG,
                                                 const CharacterTable& tN) {
  require_normal(*tG.group, n);
  std::vector<std::uint64_t> cG, cN;
  for (std::size_t i = 0; i < tG.rows.size(); ++i) cG.push_back(codegree(tG, i));
  for (std::size_t i = 0; i < tN.rows.size(); ++i) cN.push_back(codegree(tN, i));
  std::vector<std::vector<bool>> over(tN.rows.size(), std::vector<bool>(tG.rows.size(), false));
  for (std::size_t chi = 0; chi < tG.rows.size(); ++chi)
    for (const auto& c : restrict_to_normal(tG, n, tN, chi)) over[c.row][chi] = true;

  CliffordCheck out;
  for (std::size_t psi = 0; psi < tN.rows.size(); ++psi) {
    bool found = false;
    for (std::size_t chi = 0; chi < tG.rows.size() && !found; ++chi)
      found = over[psi][chi] && tG.rows[chi].degree % tN.rows[psi].degree == 0 && cG[chi] % cN[psi] == 0;
    if (!found) {
      out.ok = false;
      out.failing_row = psi;
      out.message = "no character lies over row " + std::to_string(psi) + " (degree " +
                    std::to_string(tN.rows[psi].degree) + ", codegree " + std::to_string(cN[psi]) +
                    ") with both divisibilities";
      return out;
    }
  }
  return out;
}

inline CliffordCheck clifford_divisibility_check(const PermutationGroup& g, const PermutationGroup& n,
                                                 const CharacterTable& tG, const CharacterTable& tN) {
  if (tG.order != g.order() || tG.group->degree() != g.degree())
    throw InputError("table does not belong to the given group");
  return clifford_divisibility_check(n, tG, tN);
}

/// G/N acting regularly on the cosets of a normal subgroup N. Each coset is
/// keyed by its smallest element.
class QuotientGroup {
public:
  QuotientGroup(const PermutationGroup& g, const PermutationGroup& n, std::uint64_t bound = kDefaultOrderBound)
{
    require_normal(g, n);
    check_order_bound(g, bound);
    n.for_each_element([&](const Permutation& x) { n_elems_.push_back(x); });
    g.for_each_element([&](const Permutation& x) {
      auto key = canon(x);
      if (!index_.count(key)) {
        index_.emplace(key, keys_.size());
        keys_.push_back(key);
      }
    });
    std::vector<Permutation> gens;
    for (const auto& s : g.generators()) gens.push_back(image(s));
    group_ = std::make_shared<PermutationGroup>(keys_.size(), std::move(gens));
  }

  /// The permutation gN induces on the cosets by right multiplication.
  Permutation image(const Permutation& x) const {
    std::vector<Point> img(keys_.size());
    for (std::size_t i = 0; i < keys_.size(); ++i) img[i] = static_cast<Point>(index_.at(canon(keys_[i] * x)));
    return Permutation::from_images(std::move(img));
  }

  std::shared_ptr<const PermutationGroup> group() const { return group_; }

private:
  Permutation canon(const Permutation& x) const {
    Permutation best = x * n_elems_[0];
    for (const auto& y : n_elems_) best = std::min(best, x * y);
    return best;
  }

  std::vector<Permutation> n_elems_;
  std::vector<Permutation> keys_;
  std::map<Permutation, std::size_t> index_;
  std::shared_ptr<PermutationGroup> group_;
};

struct QuotientCheck {
  bool ok = true;
  std::size_t inflated = 0;  // rows of G with N in the kernel
  std::string message;
};

/// Characters of G with N in the kernel are exactly the inflations from
/// G/N, and inflation leaves the codegree unchanged.
inline QuotientCheck quotient_codegree_check(const PermutationGroup& n, const CharacterTable& tG,
                                             const QuotientGroup& quotient, const CharacterTable& tQ) {
  QuotientCheck out;
  std::vector<std::size_t> image_class;
  for (const auto& rep : tG.classes->representatives) image_class.push_back(tQ.classes->class_of(quotient.image(rep)));
  std::vector<bool> used(tQ.rows.size(), false);
  for (std::size_t chi = 0; chi < tG.rows.size(); ++chi) {
    const auto k = kernel(tG, chi);
    if (k.order % n.order() != 0) continue;
    bool contains_n = true;
    for (const auto& x : n.generators())
      contains_n = contains_n && std::binary_search(k.classes.begin(), k.classes.end(), tG.classes->class_of(x));
    if (!contains_n) continue;
    ++out.inflated;
    std::optional<std::size_t> match;
    for (std::size_t r = 0; r < tQ.rows.size() && !match; ++r) {
      if (used[r] || tQ.rows[r].degree != tG.rows[chi].degree) continue;
      bool same = true;
      for (std::size_t c = 0; c < tG.class_count() && same; ++c)
        same = tG.rows[chi].values[c].same_value(tQ.rows[r].values[image_class[c]]);
      if (same) match = r;
    }
    if (!match) {
      out.ok = false;
      out.message = "row " + std::to_string(chi) + " has N in its kernel but is not inflated from G/N";
      return out;
    }
    used[*match] = true;
    if (codegree(tG, chi) != codegree(tQ, *match)) {
      out.ok = false;
      out.message = "row " + std::to_string(chi) + " changes codegree under inflation";
      return out;
    }
  }
  if (out.inflated != tQ.rows.size()) {
    out.ok = false;
    out.message = "G/N has " + std::to_string(tQ.rows.size()) + " characters but only " +
                  std::to_string(out.inflated) + " rows of G contain N in their kernel";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Output

inline std::string format_report(const GcdReport& r) {
  std::ostringstream out;
  out << "group " << (r.group.empty() ? "(unnamed)" : r.group) << ", order " << r.order << "\n";
  const char* head[] = {"degree", "kernelIndex", "codegree", "gcd", "squareFree", "offendingPrime"};
  std::vector<std::vector<std::string>> cells{{head, head + 6}};
  for (const auto& row : r.rows)
    cells.push_back({std::to_string(row.degree), std::to_string(row.kernel_index), std::to_string(row.codegree),
                     std::to_string(row.gcd), row.square_free ? "yes" : "no",
                     row.offending_prime ? std::to_string(*row.offending_prime) : "-"});
  std::vector<std::size_t> width(6, 0);
  for (const auto& line : cells)
    for (std::size_t k = 0; k < 6; ++k) width[k] = std::max(width[k], line[k].size());
  for (const auto& line : cells) {
    for (std::size_t k = 0; k < 6; ++k) out << (k ? "  " : "") << std::string(width[k] - line[k].size(), ' ') << line[k];
    out << "\n";
  }
  return out.str();
}

inline nlohmann::json report_json(const GcdReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json j;
    j["degree"] = row.degree;
    j["kernelIndex"] = row.kernel_index;
    j["codegree"] = row.codegree;
    j["gcd"] = row.gcd;
    j["squareFree"] = row.square_free;
    j["offendingPrime"] = row.offending_prime ? nlohmann::json(*row.offending_prime) : nlohmann::json(nullptr);
    rows.push_back(std::move(j));
  }
  return {{"report-format", 1}, {"group", r.group}, {"order", r.order}, {"rows", rows}};
}

inline std::string format_verdict(const HypothesisVerdict& v) {
  std::ostringstream out;
  out << (v.group.empty() ? "(unnamed)" : v.group) << ": " << (v.satisfies ? "satisfies" : "fails");
  if (v.witness)
    out << " (degree " << v.witness->degree << ", codegree " << v.witness->codegree << ", gcd " << v.witness->gcd
        << ", prime " << v.witness->prime << ")";
  out << "\n";
  return out.str();
}

inline nlohmann::json verdict_json(const HypothesisVerdict& v) {
  nlohmann::json j{{"verdict-format", 1}, {"group", v.group}, {"satisfies", v.satisfies}};
  if (v.witness)
    j["witness"] = {{"row", v.witness->row},
                    {"degree", v.witness->degree},
                    {"codegree", v.witness->codegree},
                    {"gcd", v.witness->gcd},
                    {"offendingPrime", v.witness->prime}};
  else
    j["witness"] = nullptr;
  return j;
}

}  // namespace sqfree
