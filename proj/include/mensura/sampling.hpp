#pragma once

#include <cstdint>
#include <random>

#include "mensura/mensuration.hpp"

namespace mensura {

/// Seeded generator of random integer figures. Draws straight from
/// mt19937_64 (no std distributions) so a seed yields the same cases on
/// every standard library.
class CaseGenerator {
 public:
  explicit CaseGenerator(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// Rejection-samples integer sides in [1, max_side] until closure holds.
  QuadSides quad(std::int64_t max_side);
  Triangle triangle(std::int64_t max_side);
  /// Integer sides plus an integer diagonal strictly inside diagonal_range.
  DiagQuad diag_quad(std::int64_t max_side);

 private:
  std::mt19937_64 engine_;
};

}  // namespace mensura
