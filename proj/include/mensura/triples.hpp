#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mensura/error.hpp"

namespace mensura {

/// A Pythagorean triple l^2 + m^2 = n^2 with legs stored as l <= m.
class PythTriple {
 public:
  std::int64_t l() const { return l_; }
  std::int64_t m() const { return m_; }
  std::int64_t n() const { return n_; }

  friend bool operator==(const PythTriple&, const PythTriple&) = default;
  /// Orders by (n, l).
  friend auto operator<=>(const PythTriple& a, const PythTriple& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.l_ <=> b.l_;
  }

 private:
  friend PythTriple validate_triple(std::int64_t, std::int64_t, std::int64_t);
  PythTriple(std::int64_t l, std::int64_t m, std::int64_t n) : l_(l), m_(m), n_(n) {}

  std::int64_t l_;
  std::int64_t m_;
  std::int64_t n_;
};

using TriplePair = std::pair<PythTriple, PythTriple>;

/// Swaps the legs into canonical order if needed. Throws NotPythagorean when
/// the identity fails and InvalidFigure for non-positive entries.
PythTriple validate_triple(std::int64_t l, std::int64_t m, std::int64_t n);

/// Every triple (primitive or not) with n <= max_hypotenuse, sorted by (n, l).
std::vector<PythTriple> generate_triples(std::int64_t max_hypotenuse);

/// Unordered pairs of distinct triples with a common hypotenuse.
std::vector<TriplePair> hypotenuse_pairs(std::int64_t max_hypotenuse);

}  // namespace mensura
