#include "mensura/triples.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace mensura {

PythTriple validate_triple(std::int64_t l, std::int64_t m, std::int64_t n) {
  if (l < 1 || m < 1 || n < 1) throw InvalidFigure("triple entries must be positive");
  const __int128 lhs = static_cast<__int128>(l) * l + static_cast<__int128>(m) * m;
  const __int128 rhs = static_cast<__int128>(n) * n;
  if (lhs != rhs) {
    throw NotPythagorean("(" + std::to_string(l) + ", " + std::to_string(m) + ", " +
                         std::to_string(n) + ") is not a Pythagorean triple");
  }
  if (l > m) std::swap(l, m);
  return PythTriple(l, m, n);
}

std::vector<PythTriple> generate_triples(std::int64_t max_hypotenuse) {
  std::vector<PythTriple> out;
  // Euclid: primitive (p^2 - q^2, 2pq, p^2 + q^2) for coprime p > q of
  // opposite parity, then every multiple within bound.
  for (std::int64_t p = 2; p * p + 1 <= max_hypotenuse; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if ((p - q) % 2 == 0 || std::gcd(p, q) != 1) continue;
      const std::int64_t a = p * p - q * q;
      const std::int64_t b = 2 * p * q;
      const std::int64_t c = p * p + q * q;
      if (c > max_hypotenuse) break;
      for (std::int64_t k = 1; k * c <= max_hypotenuse; ++k) {
        out.push_back(validate_triple(k * a, k * b, k * c));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TriplePair> hypotenuse_pairs(std::int64_t max_hypotenuse) {
  const auto triples = generate_triples(max_hypotenuse);
  std::vector<TriplePair> out;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    for (std::size_t j = i + 1; j < triples.size() && triples[j].n() == triples[i].n(); ++j) {
      out.emplace_back(triples[i], triples[j]);
    }
  }
  return out;
}

}  // namespace mensura
