#include "mensura/sampling.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace mensura {

std::int64_t CaseGenerator::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

QuadSides CaseGenerator::quad(std::int64_t max_side) {
  while (true) {
    std::int64_t s[4];
    for (auto& x : s) x = uniform(1, max_side);
    const std::int64_t total = s[0] + s[1] + s[2] + s[3];
    if (std::all_of(std::begin(s), std::end(s), [&](std::int64_t x) { return 2 * x < total; })) {
      return QuadSides(s[0], s[1], s[2], s[3]);
    }
  }
}

Triangle CaseGenerator::triangle(std::int64_t max_side) {
  while (true) {
    const std::int64_t a = uniform(1, max_side), b = uniform(1, max_side), c = uniform(1, max_side);
    if (a + b > c && b + c > a && c + a > b) return Triangle(a, b, c);
  }
}

DiagQuad CaseGenerator::diag_quad(std::int64_t max_side) {
  while (true) {
    std::int64_t s[4];
    for (auto& x : s) x = uniform(1, max_side);
    const std::int64_t lower = std::max(std::abs(s[0] - s[1]), std::abs(s[2] - s[3]));
    const std::int64_t upper = std::min(s[0] + s[1], s[2] + s[3]);
    if (upper - lower < 2) continue;
    const std::int64_t diagonal = uniform(lower + 1, upper - 1);
    return DiagQuad(QuadSides(s[0], s[1], s[2], s[3]), diagonal);
  }
}

}  // namespace mensura
