// Diagonal scan over the hinge family of a quadrilateral. The OpenMP kernel
// and the serial reference share sample_at() and assemble(); only the loop
// driving them differs.

#include <exception>
#include <stdexcept>

#include "mensura/oracle.hpp"

namespace mensura {
namespace {

struct Grid {
  ExactScalar lower;
  ExactScalar upper;
  ExactScalar step;
};

Grid make_grid(const QuadSides& q, std::size_t steps) {
  if (steps < 3) throw std::invalid_argument("a scan needs at least 3 steps");
  auto [lower, upper] = diagonal_range(q);
  ExactScalar step = (upper - lower) / Surd(static_cast<long>(steps + 1));
  return {std::move(lower), std::move(upper), std::move(step)};
}

ScanSample sample_at(const QuadSides& q, const Grid& grid, std::size_t k, int digits) {
  const ExactScalar diagonal = grid.lower + grid.step * Surd(static_cast<long>(k));
  return {approx(diagonal, digits), shoelace_area(embed(DiagQuad(q, diagonal), digits))};
}

ScanResult assemble(std::vector<ScanSample> samples, Grid grid) {
  ScanResult result;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i].area > samples[result.argmax_index].area) result.argmax_index = i;
  }
  result.argmax_diagonal = samples[result.argmax_index].diagonal;
  result.max_area = samples[result.argmax_index].area;
  result.samples = std::move(samples);
  result.lower = std::move(grid.lower);
  result.upper = std::move(grid.upper);
  result.step = std::move(grid.step);
  return result;
}

}  // namespace

ExactScalar scan_diagonal(const QuadSides& q, std::size_t k, std::size_t steps) {
  const Grid grid = make_grid(q, steps);
  return grid.lower + grid.step * Surd(static_cast<long>(k));
}

ScanResult area_scan(const QuadSides& q, std::size_t steps, int digits) {
  Grid grid = make_grid(q, steps);
  std::vector<ScanSample> samples(steps);
  std::exception_ptr failure;
  const long count = static_cast<long>(steps);

#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < count; ++i) {
    try {
      samples[i] = sample_at(q, grid, static_cast<std::size_t>(i) + 1, digits);
    } catch (...) {
#pragma omp critical(mensura_scan_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return assemble(std::move(samples), std::move(grid));
}

namespace reference {

ScanResult area_scan(const QuadSides& q, std::size_t steps, int digits) {
  Grid grid = make_grid(q, steps);
  std::vector<ScanSample> samples;
  samples.reserve(steps);
  for (std::size_t k = 1; k <= steps; ++k) samples.push_back(sample_at(q, grid, k, digits));
  return assemble(std::move(samples), std::move(grid));
}

}  // namespace reference
}  // namespace mensura
