#pragma once

// Slow, independent reference computations used only by the tests.

#include <cmath>
#include <complex>
#include <cstdint>
#include <set>
#include <vector>

#include "sqfree/permutation.hpp"

namespace oracle {

using Images = std::vector<sqfree::Point>;

inline Images compose(const Images& a, const Images& b) {  // a first
  Images r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Images invert(const Images& a) {
  Images r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<sqfree::Point>(i);
  return r;
}

/// All elements by breadth-first closure under right multiplication.
inline std::set<Images> closure(const std::vector<sqfree::Permutation>& gens, std::size_t degree) {
  Images id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<sqfree::Point>(i);
  std::set<Images> seen{id};
  std::vector<Images> frontier{id};
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Images gi(g.images().begin(), g.images().end());
        auto y = compose(x, gi);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return seen;
}

/// Class sizes, sorted, by conjugating with every element.
inline std::multiset<std::size_t> class_sizes(const std::set<Images>& elems) {
  std::set<Images> done;
  std::multiset<std::size_t> sizes;
  for (const auto& x : elems) {
    if (done.count(x)) continue;
    std::set<Images> cls;
    for (const auto& h : elems) cls.insert(compose(compose(invert(h), x), h));
    for (const auto& y : cls) done.insert(y);
    sizes.insert(cls.size());
  }
  return sizes;
}

/// Numerical value of sum_j c_j exp(2 pi i j / e).
inline std::complex<double> evaluate(const std::vector<long long>& raw, std::uint64_t e) {
  std::complex<double> z = 0;
  for (std::size_t j = 0; j < raw.size(); ++j)
    z += static_cast<double>(raw[j]) * std::polar(1.0, 2 * M_PI * static_cast<double>(j) / static_cast<double>(e));
  return z;
}

}  // namespace oracle
