#pragma once

// Coordinate-embedding oracle: places figures in the plane at a chosen
// decimal precision and measures them independently of the closed-form
// rules in mensuration.hpp.

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mensura/exactnum.hpp"
#include "mensura/mensuration.hpp"

namespace mensura {

inline constexpr int kOracleDigits = ApproxScalar::kDefaultDigits;

struct Point {
  ApproxScalar x;
  ApproxScalar y;
};

/// points[0] at the origin and points[2] on the positive x-axis at the
/// diagonal's length; points[1] (apex of the (a, b) triangle) lies above the
/// axis and points[3] (apex of the (c, d) triangle) below it.
struct EmbeddedQuad {
  std::array<Point, 4> points;
  int digits;
  DiagQuad source;
};

EmbeddedQuad embed(const DiagQuad& dq, int digits = kOracleDigits);

/// Side c on the x-axis from the origin, apex above it at distance a from
/// the origin and b from (c, 0).
std::array<Point, 3> embed_triangle(const Triangle& t, int digits = kOracleDigits);

ApproxScalar shoelace_area(std::span<const Point> polygon);
ApproxScalar shoelace_area(const EmbeddedQuad& e);

ApproxScalar distance(const Point& p, const Point& q);

struct Circle {
  Point center;
  ApproxScalar radius;
};

/// Throws DegenerateCollinear when the points are collinear within tolerance.
Circle circumcircle(const Point& p0, const Point& p1, const Point& p2, const ApproxScalar& tolerance);

struct ConcyclicVerdict {
  bool concyclic;
  ApproxScalar radius;
  /// |dist(points[3], center) - radius|
  ApproxScalar deviation;
};

ConcyclicVerdict concyclic_verdict(const EmbeddedQuad& e, const ApproxScalar& tolerance);
/// True iff the fourth point lies on the circle through the first three,
/// within tolerance. Throws DegenerateCollinear.
bool concyclic(const EmbeddedQuad& e, const ApproxScalar& tolerance);

/// Open interval of diagonals giving valid DiagQuads for the (a, b) / (c, d)
/// split: (max(|a-b|, |c-d|), min(a+b, c+d)).
std::pair<ExactScalar, ExactScalar> diagonal_range(const QuadSides& q);

struct ScanSample {
  ApproxScalar diagonal;
  ApproxScalar area;
};

struct ScanResult {
  std::vector<ScanSample> samples;
  std::size_t argmax_index = 0;
  ApproxScalar argmax_diagonal;
  ApproxScalar max_area;
  ExactScalar lower;
  ExactScalar upper;
  /// (upper - lower) / (steps + 1)
  ExactScalar step;
};

/// Diagonal of the k-th grid point (1 <= k <= steps) of the scan.
ExactScalar scan_diagonal(const QuadSides& q, std::size_t k, std::size_t steps);

/// Samples `steps` evenly spaced interior diagonals of diagonal_range(q) and
/// measures each hinged configuration by embedding and shoelace. Samples are
/// evaluated in parallel and assembled in grid order. Throws
/// std::invalid_argument when steps < 3.
ScanResult area_scan(const QuadSides& q, std::size_t steps, int digits = kOracleDigits);

namespace reference {

/// Serial version of area_scan; the parallel kernel must match it exactly.
ScanResult area_scan(const QuadSides& q, std::size_t steps, int digits = kOracleDigits);

}  // namespace reference

}  // namespace mensura
