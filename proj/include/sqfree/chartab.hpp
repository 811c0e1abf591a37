#pragma once

// Exact character tables of small permutation groups.
//
// The class sums K_1..K_r span the centre of the group algebra, and every
// irreducible character chi gives a common eigenvector of the class
// multiplication matrices: the central character w_chi(K_k) = |C_k| chi(g_k) / chi(1).
// We find those eigenvectors over a prime field F_p with p = 1 (mod e), e the
// exponent, recover chi(1) from the orthogonality relation, and lift each value
// chi(g) to Z[zeta_e] through its eigenvalue multiplicities, which are integers
// in [0, chi(1)] and therefore determined by their residues mod p.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqfree/bigint.hpp"
#include "sqfree/conjugacy.hpp"
#include "sqfree/cyclotomic.hpp"
#include "sqfree/error.hpp"
#include "sqfree/modular.hpp"
#include "sqfree/perm_group.hpp"

namespace sqfree {

/// The common eigenspaces of the class matrices could not be separated.
class EigenspaceSplitError : public DefectError {
public:
  using DefectError::DefectError;
};

struct Character {
  std::uint64_t degree = 0;
  std::vector<CyclotomicValue> values;  // one per class
};

struct CharacterTable {
  std::string group_spec;  // textual spec, when known
  std::shared_ptr<const PermutationGroup> group;
  std::shared_ptr<const ConjugacyClasses> classes;
  std::uint64_t order = 0;
  std::uint64_t e = 1;  // exponent; values live in Z[zeta_e]
  std::uint64_t prime = 0;  // modulus used for the eigenvector computation
  std::vector<Character> rows;

  std::size_t class_count() const { return classes->count(); }
};

namespace detail {

using mod::u64;
using Matrix = std::vector<std::vector<u64>>;

/// Row-reduces in place; returns pivot columns. Zero rows are dropped.
inline std::vector<std::size_t> rref(Matrix& m, const mod::Field& F) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const u64 inv = F.inv(m[row][col]);
    for (auto& x : m[row]) x = F.mul(x, inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const u64 c = m[r][col];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = F.sub(m[r][k], F.mul(c, m[row][k]));
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

/// Basis (as rows) of { x : x * a = 0 } for a square matrix a.
inline Matrix left_nullspace(const Matrix& a, const mod::Field& F) {
  const std::size_t n = a.size();
  Matrix t(n, std::vector<u64>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
  auto piv = rref(t, F);
  std::vector<bool> is_pivot(n, false);
  for (auto p : piv) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.neg(t[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Characteristic polynomial det(x I - a), lowest degree first
/// (Faddeev-LeVerrier; needs n < p).
inline mod::Poly char_poly(const Matrix& a, const mod::Field& F) {
  const std::size_t n = a.size();
  mod::Poly c(n + 1, 0);
  c[n] = 1;
  Matrix m(n, std::vector<u64>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next(n, std::vector<u64>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] = F.add(next[i][j], F.mul(a[i][l], m[l][j]));
      }
    // next = a * m_{k-1} + c_{n-k+1} I, with m_0 = 0
    for (std::size_t i = 0; i < n; ++i) next[i][i] = F.add(next[i][i], c[n - k + 1]);
    m = std::move(next);
    u64 tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr = F.add(tr, F.mul(a[i][l], m[l][i]));
    c[n - k] = F.neg(F.mul(tr, F.inv(k % F.prime())));
  }
  return c;
}

struct ClassAlgebra {
  std::size_t r = 0;
  // coeff[j][k][l] = #{(x, y) in C_j x C_k : x y = g_l}
  std::vector<std::vector<std::vector<std::uint64_t>>> coeff;
};

inline ClassAlgebra class_algebra(const PermutationGroup& g, const ConjugacyClasses& cc) {
  ClassAlgebra ca;
  ca.r = cc.count();
  ca.coeff.assign(ca.r, std::vector<std::vector<std::uint64_t>>(ca.r, std::vector<std::uint64_t>(ca.r, 0)));
  const auto& idx = *cc.elements;
  const std::size_t deg = g.degree();
  std::vector<std::uint16_t> inv(deg), y(deg);
  for (std::size_t l = 0; l < ca.r; ++l) {
    const auto& gl = cc.representatives[l];
    for (std::size_t xi = 0; xi < idx.size(); ++xi) {
      auto x = idx.element(xi);
      for (std::size_t p = 0; p < deg; ++p) inv[x[p]] = static_cast<std::uint16_t>(p);
      for (std::size_t p = 0; p < deg; ++p) y[p] = static_cast<std::uint16_t>(gl(inv[p]));  // x^-1 g_l
      auto yi = idx.find(y);
      if (yi == ElementIndex::kAbsent) throw DefectError("product left the group");
      ++ca.coeff[cc.class_of_element[xi]][cc.class_of_element[yi]][l];
    }
  }
  return ca;
}

}  // namespace detail

struct CharacterTableOptions {
  std::uint64_t order_bound = kDefaultOrderBound;
  std::string spec_text;
};

/// Exact character table; rows sorted by degree, the trivial character
/// first, then lexicographically by canonical values.
inline CharacterTable character_table(std::shared_ptr<const PermutationGroup> group,
                                      const CharacterTableOptions& opts = {}) {
  using detail::Matrix;
  using detail::u64;
  const PermutationGroup& g = *group;
  check_order_bound(g, opts.order_bound);
  auto cc = std::make_shared<const ConjugacyClasses>(conjugacy_classes(g, opts.order_bound));
  const std::size_t r = cc->count();
  const u64 n = cc->group_order;

  CharacterTable table;
  table.group_spec = opts.spec_text;
  table.group = group;
  table.classes = cc;
  table.order = n;
  table.e = exponent(*cc);
  const u64 e = table.e;

  u64 root_n = 0;
  while (root_n * root_n < n) ++root_n;  // ceil(sqrt(n))
  const u64 prime = mod::smallest_prime_1_mod(e, 2 * root_n * e);
  table.prime = prime;
  const mod::Field F(prime);
  const u64 omega = F.pow(F.primitive_root(), (prime - 1) / e);

  const auto algebra = detail::class_algebra(g, *cc);

  // Common eigenvectors v (v_0 = 1) with v * B_j = lambda v, (B_j)_{l,k} = coeff[j][k][l].
  std::vector<Matrix> spaces;
  {
    Matrix full(r, std::vector<u64>(r, 0));
    for (std::size_t i = 0; i < r; ++i) full[i][i] = 1;
    spaces.push_back(std::move(full));
  }
  std::vector<std::size_t> order_of_use(r);
  std::iota(order_of_use.begin(), order_of_use.end(), std::size_t{0});
  std::stable_sort(order_of_use.begin(), order_of_use.end(),
                   [&](std::size_t a, std::size_t b) { return cc->sizes[a] < cc->sizes[b]; });

  for (std::size_t j : order_of_use) {
    if (j == 0) continue;  // identity class: scalar action
    if (std::all_of(spaces.begin(), spaces.end(), [](const Matrix& s) { return s.size() == 1; })) break;
    std::vector<Matrix> next;
    for (auto& w : spaces) {
      if (w.size() == 1) {
        next.push_back(std::move(w));
        continue;
      }
      const std::size_t dim = w.size();
      auto pivots = detail::rref(w, F);
      // a = (W B_j) restricted to pivot columns
      Matrix a(dim, std::vector<u64>(dim, 0));
      for (std::size_t row = 0; row < dim; ++row)
        for (std::size_t pc = 0; pc < dim; ++pc) {
          const std::size_t k = pivots[pc];
          u64 acc = 0;
          for (std::size_t l = 0; l < r; ++l)
            if (w[row][l]) acc = F.add(acc, F.mul(w[row][l], algebra.coeff[j][k][l] % prime));
          a[row][pc] = acc;
        }
      auto roots = mod::distinct_roots(detail::char_poly(a, F), F);
      std::size_t found = 0;
      for (u64 lambda : roots) {
        Matrix shifted = a;
        for (std::size_t i = 0; i < dim; ++i) shifted[i][i] = F.sub(shifted[i][i], lambda);
        Matrix x = detail::left_nullspace(shifted, F);
        Matrix sub(x.size(), std::vector<u64>(r, 0));
        for (std::size_t i = 0; i < x.size(); ++i)
          for (std::size_t k = 0; k < dim; ++k)
            if (x[i][k])
              for (std::size_t l = 0; l < r; ++l) sub[i][l] = F.add(sub[i][l], F.mul(x[i][k], w[k][l]));
        detail::rref(sub, F);
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != dim) throw EigenspaceSplitError("class matrix is not diagonalizable on a common eigenspace");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r)
    throw EigenspaceSplitError("could not split the common eigenspaces into " + std::to_string(r) + " lines");

  // Classes of g_k^t for t < ord(g_k).
  std::vector<std::vector<std::size_t>> powers(r);
  for (std::size_t k = 0; k < r; ++k) {
    const auto o = cc->element_orders[k];
    Permutation x = Permutation::identity(g.degree());
    for (u64 t = 0; t < o; ++t) {
      powers[k].push_back(cc->class_of(x));
      x = x * cc->representatives[k];
    }
  }

  for (auto& space : spaces) {
    auto v = space[0];
    if (v[0] == 0) throw DefectError("central character vanishes on the identity class");
    const u64 v0inv = F.inv(v[0]);
    for (auto& x : v) x = F.mul(x, v0inv);
    // sum_k w(K_k) w(K_k') / |C_k| = |G| / chi(1)^2
    u64 s = 0;
    for (std::size_t k = 0; k < r; ++k)
      s = F.add(s, F.mul(F.mul(v[k], v[cc->inverse_map[k]]), F.inv(cc->sizes[k] % prime)));
    if (s == 0) throw DefectError("degree relation degenerate");
    const u64 target = F.mul(n % prime, F.inv(s));
    u64 degree = 0;
    for (u64 d = 1; d * d <= n; ++d)
      if (F.mul(d, d) == target) {
        degree = d;
        break;
      }
    if (degree == 0) throw DefectError("no integer degree matches the central character");

    std::vector<u64> value_mod(r);
    for (std::size_t k = 0; k < r; ++k) value_mod[k] = F.mul(F.mul(v[k], degree), F.inv(cc->sizes[k] % prime));

    Character ch;
    ch.degree = degree;
    for (std::size_t k = 0; k < r; ++k) {
      const u64 o = cc->element_orders[k];
      const u64 z = F.pow(omega, e / o);
      const u64 o_inv = F.inv(o % prime);
      CyclotomicValue val{e, std::vector<long long>(e, 0)};
      u64 total = 0;
      for (u64 s_exp = 0; s_exp < o; ++s_exp) {
        u64 acc = 0;
        const u64 step = F.pow(z, (o - s_exp) % o);  // z^{-s}
        u64 zt = 1;
        for (u64 t = 0; t < o; ++t) {
          acc = F.add(acc, F.mul(value_mod[powers[k][t]], zt));
          zt = F.mul(zt, step);
        }
        const u64 m = F.mul(acc, o_inv);
        if (m > degree) throw DefectError("eigenvalue multiplicity out of range; modular lift failed");
        val.coeffs[s_exp * (e / o)] = static_cast<long long>(m);
        total += m;
      }
      if (total != degree) throw DefectError("eigenvalue multiplicities do not sum to the degree");
      ch.values.push_back(std::move(val));
    }
    table.rows.push_back(std::move(ch));
  }

  // Deterministic row order.
  struct Keyed {
    Character ch;
    bool trivial;
    std::vector<std::vector<long long>> key;
  };
  std::vector<Keyed> keyed;
  for (auto& ch : table.rows) {
    Keyed k{std::move(ch), true, {}};
    for (const auto& v : k.ch.values) {
      k.key.push_back(v.canonical());
      if (k.ch.degree != 1 || v.coeffs[0] != 1) k.trivial = false;
    }
    keyed.push_back(std::move(k));
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.ch.degree != b.ch.degree) return a.ch.degree < b.ch.degree;
    if (a.trivial != b.trivial) return a.trivial;
    return a.key < b.key;
  });
  table.rows.clear();
  for (auto& k : keyed) table.rows.push_back(std::move(k.ch));
  return table;
}

inline CharacterTable character_table(const PermutationGroup& g, const CharacterTableOptions& opts = {}) {
  return character_table(std::make_shared<const PermutationGroup>(g), opts);
}

// ---------------------------------------------------------------------------
// Verification

namespace detail {

// acc += weight * a * conj(b), over Z[zeta_e] raw coefficients.
inline void add_product_conj(std::vector<long long>& acc, const CyclotomicValue& a, const CyclotomicValue& b,
                             long long weight) {
  const std::uint64_t e = a.e;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (a.coeffs[i] == 0) continue;
    const long long wi = checked_mul(weight, a.coeffs[i]);
    for (std::uint64_t j = 0; j < e; ++j) {
      if (b.coeffs[j] == 0) continue;
      auto& slot = acc[(i + e - j) % e];
      slot = checked_add(slot, checked_mul(wi, b.coeffs[j]));
    }
  }
}

inline bool is_integer_vector(const std::vector<long long>& c, long long value) {
  if (c.empty()) return value == 0;
  if (c[0] != value) return false;
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return false;
  return true;
}

}  // namespace detail

struct TableVerification {
  bool ok = true;
  std::vector<std::string> diagnostics;  // first entry names the first failing relation

  void fail(std::string msg) {
    ok = false;
    diagnostics.push_back(std::move(msg));
  }
};

/// Checks every structural invariant plus exact row and column orthogonality.
inline TableVerification verify_table(const CharacterTable& t) {
  TableVerification out;
  const std::size_t r = t.class_count();
  const auto& cc = *t.classes;
  if (t.rows.size() != r) {
    out.fail("row count " + std::to_string(t.rows.size()) + " != class count " + std::to_string(r));
    return out;
  }
  BigInt sum_sq = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const auto& ch = t.rows[i];
    sum_sq += BigInt(ch.degree) * ch.degree;
    if (ch.degree == 0 || t.order % ch.degree != 0)
      out.fail("row " + std::to_string(i) + ": degree " + std::to_string(ch.degree) + " does not divide |G|");
    if (ch.values.size() != r) {
      out.fail("row " + std::to_string(i) + ": wrong number of values");
      return out;
    }
    for (std::size_t c = 0; c < r; ++c) {
      const auto& v = ch.values[c];
      if (v.e != t.e || v.coeffs.size() != t.e) {
        out.fail("row " + std::to_string(i) + " class " + std::to_string(c) + ": wrong cyclotomic order");
        return out;
      }
      long long s = 0;
      bool negative = false;
      for (auto m : v.coeffs) {
        s += m;
        negative |= m < 0;
      }
      if (negative || s != static_cast<long long>(ch.degree))
        out.fail("row " + std::to_string(i) + " class " + std::to_string(c) +
                 ": multiplicities do not sum to the degree");
    }
    if (!detail::is_integer_vector(ch.values[0].coeffs, static_cast<long long>(ch.degree)))
      out.fail("row " + std::to_string(i) + ": identity-class value is not the degree");
  }
  if (sum_sq != t.order) out.fail("sum of squared degrees " + to_string(sum_sq) + " != |G| " + std::to_string(t.order));
  if (r > 0) {
    const auto& triv = t.rows[0];
    bool trivial = triv.degree == 1;
    for (const auto& v : triv.values) trivial = trivial && v.coeffs[0] == 1;
    if (!trivial) out.fail("row 0 is not the trivial character");
  }
  if (!out.ok) return out;

  auto basis = CyclotomicBasis::get(t.e);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b) {
      std::vector<long long> acc(t.e, 0);
      for (std::size_t c = 0; c < r; ++c)
        detail::add_product_conj(acc, t.rows[a].values[c], t.rows[b].values[c], static_cast<long long>(cc.sizes[c]));
      long long expect = (a == b) ? static_cast<long long>(t.order) : 0;
      if (!detail::is_integer_vector(basis->canonical(acc), expect)) {
        out.fail("row orthogonality fails for rows " + std::to_string(a) + ", " + std::to_string(b));
        return out;
      }
    }
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t d = c; d < r; ++d) {
      std::vector<long long> acc(t.e, 0);
      for (std::size_t i = 0; i < r; ++i) detail::add_product_conj(acc, t.rows[i].values[c], t.rows[i].values[d], 1);
      long long expect = (c == d) ? static_cast<long long>(t.order / cc.sizes[c]) : 0;
      if (!detail::is_integer_vector(basis->canonical(acc), expect)) {
        out.fail("column orthogonality fails for classes " + std::to_string(c) + ", " + std::to_string(d));
        return out;
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Restriction to a normal subgroup

struct Constituent {
  std::size_t row;  // row index in the subgroup table
  std::uint64_t multiplicity;
  friend bool operator==(const Constituent&, const Constituent&) = default;
};

/// Class of the big group containing each class representative of the subgroup.
inline std::vector<std::size_t> class_fusion(const CharacterTable& t, const CharacterTable& tN) {
  std::vector<std::size_t> fusion;
  for (const auto& rep : tN.classes->representatives) fusion.push_back(t.classes->class_of(rep));
  return fusion;
}

inline void require_normal(const PermutationGroup& g, const PermutationGroup& n) {
  if (g.degree() != n.degree()) throw NotNormalError("subgroup acts on a different point set");
  for (const auto& x : n.generators())
    if (!g.contains(x)) throw NotNormalError("subgroup generator " + to_cycle_string(x) + " is not in the group");
  if (normal_closure(g, n.generators()).order() != n.order()) throw NotNormalError("subgroup is not normal");
}

/// Multiplicity of every irreducible of n in chi_n (only nonzero entries).
inline std::vector<Constituent> restrict_to_normal(const CharacterTable& t, const PermutationGroup& n,
                                                   const CharacterTable& tN, std::size_t row) {
  require_normal(*t.group, n);
  if (tN.order != n.order() || tN.group->degree() != n.degree())
    throw InputError("subgroup table does not belong to the given subgroup");
  if (row >= t.rows.size()) throw InputError("row index out of range");
  const auto fusion = class_fusion(t, tN);
  const std::uint64_t e = std::lcm(t.e, tN.e);
  auto basis = CyclotomicBasis::get(e);
  const auto& chi = t.rows[row];
  std::vector<Constituent> out;
  for (std::size_t i = 0; i < tN.rows.size(); ++i) {
    std::vector<long long> acc(e, 0);
    for (std::size_t c = 0; c < tN.class_count(); ++c)
      detail::add_product_conj(acc, chi.values[fusion[c]].lift_to(e), tN.rows[i].values[c].lift_to(e),
                               static_cast<long long>(tN.classes->sizes[c]));
    auto canon = basis->canonical(acc);
    for (std::size_t k = 1; k < canon.size(); ++k)
      if (canon[k] != 0) throw DefectError("inner product is not rational");
    if (canon[0] % static_cast<long long>(tN.order) != 0 || canon[0] < 0)
      throw DefectError("inner product is not a nonnegative integer");
    auto mult = static_cast<std::uint64_t>(canon[0] / static_cast<long long>(tN.order));
    if (mult) out.push_back({i, mult});
  }
  std::uint64_t total = 0;
  for (const auto& c : out) {
    total += c.multiplicity * tN.rows[c.row].degree;
    if (tN.rows[c.row].degree != tN.rows[out[0].row].degree || c.multiplicity != out[0].multiplicity)
      throw DefectError("restriction violates Clifford's theorem");
  }
  if (total != chi.degree) throw DefectError("restriction degrees do not add up");
  return out;
}

}  // namespace sqfree
