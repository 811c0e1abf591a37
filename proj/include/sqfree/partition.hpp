#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sqfree/bigint.hpp"
#include "sqfree/error.hpp"

namespace sqfree {

/// An integer partition, parts weakly decreasing.
class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InputError("partition needs at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] == 0) throw InputError("partition parts must be positive");
      if (i && parts_[i] > parts_[i - 1]) throw InputError("partition parts must be weakly decreasing");
      n_ += parts_[i];
    }
  }

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  unsigned n() const noexcept { return n_; }
  std::size_t length() const noexcept { return parts_.size(); }

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<unsigned> parts_;
  unsigned n_ = 0;
};

inline std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) s += (i ? "," : "") + std::to_string(p.parts()[i]);
  return s + ")";
}

inline Partition conjugate_partition(const Partition& p) {
  std::vector<unsigned> cols(p.parts().front(), 0);
  for (auto r : p.parts())
    for (unsigned j = 0; j < r; ++j) ++cols[j];
  return Partition(std::move(cols));
}

inline bool is_self_conjugate(const Partition& p) { return conjugate_partition(p) == p; }

/// Product over all cells of arm + leg + 1.
inline BigInt hook_length_product(const Partition& p) {
  const auto conj = conjugate_partition(p);
  BigInt h = 1;
  for (std::size_t i = 0; i < p.length(); ++i)
    for (unsigned j = 0; j < p.parts()[i]; ++j) {
      unsigned arm = p.parts()[i] - j - 1;
      unsigned leg = conj.parts()[j] - static_cast<unsigned>(i) - 1;
      h *= arm + leg + 1;
    }
  return h;
}

/// n! / H(lambda).
inline BigInt partition_degree(const Partition& p) {
  const BigInt f = factorial(p.n()), h = hook_length_product(p);
  if (f % h != 0) throw DefectError("hook product of " + to_string(p) + " does not divide n!");
  return f / h;
}

/// All partitions of n, in reverse lexicographic order starting with (n).
inline std::vector<Partition> partitions(unsigned n) {
  if (n == 0) throw InputError("partitions of 0 are not represented");
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned rest, unsigned cap) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (unsigned k = std::min(rest, cap); k >= 1; --k) {
      cur.push_back(k);
      self(self, rest - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// A character of Sym(n) whose restriction to Alt(n) stays irreducible,
/// together with the closed forms its degree and Alt(n)-codegree should match.
struct AnWitness {
  Partition partition;
  BigInt degree;
  BigInt closed_form_degree;
  BigInt codegree;  // (n!/2) / degree
  std::optional<BigInt> closed_form_codegree;
  bool self_conjugate = false;
};

/// Witnesses (n-3,2,1), (n-3,1,1,1), (n-2,2) for n >= 8. Closed-form
/// codegrees: 3/2 (n-1)(n-3)(n-5)! for the first, 3n (n-4)! for the second.
inline std::array<AnWitness, 3> an_witness(unsigned n) {
  if (n < 8) throw InputError("an_witness needs n >= 8");
  const BigInt N = n;
  const BigInt half_order = factorial(n) / 2;
  std::array<AnWitness, 3> w{{
      {Partition({n - 3, 2, 1}), 0, N * (N - 2) * (N - 4) / 3, 0, 3 * (N - 1) * (N - 3) * factorial(n - 5) / 2, false},
      {Partition({n - 3, 1, 1, 1}), 0, (N - 1) * (N - 2) * (N - 3) / 6, 0, 3 * N * factorial(n - 4), false},
      {Partition({n - 2, 2}), 0, N * (N - 3) / 2, 0, std::nullopt, false},
  }};
  for (auto& x : w) {
    x.degree = partition_degree(x.partition);
    x.self_conjugate = is_self_conjugate(x.partition);
    if (x.degree != x.closed_form_degree)
      throw DefectError("hook degree of " + to_string(x.partition) + " disagrees with its closed form");
    if (x.self_conjugate) throw DefectError(to_string(x.partition) + " is self-conjugate");
    if (half_order % x.degree != 0) throw DefectError("degree does not divide |Alt(n)|");
    x.codegree = half_order / x.degree;
    if (x.closed_form_codegree && *x.closed_form_codegree != x.codegree)
      throw DefectError("codegree of " + to_string(x.partition) + " disagrees with its closed form");
  }
  return w;
}

}  // namespace sqfree
