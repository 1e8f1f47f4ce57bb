#pragma once

// Area, diagonal and perpendicular rules for triangles and quadrilaterals,
// all evaluated exactly over ExactScalar.

#include <array>
#include <optional>
#include <utility>

#include "mensura/exactnum.hpp"

namespace mensura {

/// Three positive lengths satisfying the strict triangle inequality.
class Triangle {
 public:
  /// Throws InvalidTriangle.
  Triangle(ExactScalar a, ExactScalar b, ExactScalar c);

  const ExactScalar& a() const { return sides_[0]; }
  const ExactScalar& b() const { return sides_[1]; }
  const ExactScalar& c() const { return sides_[2]; }
  const std::array<ExactScalar, 3>& sides() const { return sides_; }

 private:
  std::array<ExactScalar, 3> sides_;
};

/// Four side lengths in cyclic order a, b, c, d. Each side is shorter than
/// the sum of the other three, and all four share one radicand so that sums
/// of sides stay exact.
class QuadSides {
 public:
  /// Throws InvalidFigure.
  QuadSides(ExactScalar a, ExactScalar b, ExactScalar c, ExactScalar d);
  explicit QuadSides(const std::array<ExactScalar, 4>& sides)
      : QuadSides(sides[0], sides[1], sides[2], sides[3]) {}

  const ExactScalar& a() const { return sides_[0]; }
  const ExactScalar& b() const { return sides_[1]; }
  const ExactScalar& c() const { return sides_[2]; }
  const ExactScalar& d() const { return sides_[3]; }
  const std::array<ExactScalar, 4>& sides() const { return sides_; }

  /// Sides starting at index `by`: rotated(1) of (a,b,c,d) is (b,c,d,a).
  QuadSides rotated(int by) const;

  ExactScalar semiperimeter() const;

  friend bool operator==(const QuadSides&, const QuadSides&) = default;

 private:
  std::array<ExactScalar, 4> sides_;
};

/// A quadrilateral with one diagonal. The diagonal always separates the
/// triangles (a, b, diagonal) and (c, d, diagonal); other splits are reached
/// by rotating the sides.
class DiagQuad {
 public:
  /// Throws InvalidFigure when either induced triangle is invalid.
  DiagQuad(QuadSides sides, ExactScalar diagonal);

  const QuadSides& sides() const { return sides_; }
  const ExactScalar& diagonal() const { return diagonal_; }
  Triangle first_triangle() const { return {sides_.a(), sides_.b(), diagonal_}; }
  Triangle second_triangle() const { return {sides_.c(), sides_.d(), diagonal_}; }

  friend bool operator==(const DiagQuad&, const DiagQuad&) = default;

 private:
  QuadSides sides_;
  ExactScalar diagonal_;
};

/// Parallel base and face, two legs, and the height between the parallels.
struct Trapezium {
  /// Throws InvalidFigure unless 0 < face <= base (equality is a parallelogram) and height <= each leg.
  Trapezium(ExactScalar base, ExactScalar face, ExactScalar left_leg, ExactScalar right_leg,
            ExactScalar height);

  ExactScalar base;
  ExactScalar face;
  std::array<ExactScalar, 2> legs;
  ExactScalar height;
};

/// Equilateral quadrilateral given by its side and one diagonal.
struct Rhombus {
  /// Throws DegenerateRhombus when d1 >= 2 * side, InvalidFigure when a
  /// length is not positive.
  Rhombus(ExactScalar side, ExactScalar d1);

  ExactScalar side;
  ExactScalar d1;
};

struct MensurationReport {
  ExactScalar semiperimeter;
  ExactScalar gross_area;
  ExactScalar sutra_area;
  std::optional<ExactScalar> split_area;
  /// Heights of the apexes of the two triangles over the diagonal.
  std::optional<std::pair<ExactScalar, ExactScalar>> perpendiculars;
};

/// Diagonals of the cyclic quadrilateral with the given sides: p separates
/// (a, b) from (c, d), q separates (b, c) from (d, a).
struct DiagonalPair {
  ExactScalar p;
  ExactScalar q;
  friend bool operator==(const DiagonalPair&, const DiagonalPair&) = default;
};

/// Foot of the perpendicular on the base, measured from the left flank's
/// end, with the height kept squared.
struct AbadhaFoot {
  ExactScalar segment_left;
  Rational height_squared;
};

struct AbadhaSplit {
  ExactScalar segment_left;
  ExactScalar segment_right;
  ExactScalar height;
};

/// Product of the half-sums of opposite sides.
ExactScalar gross_area(const QuadSides& q);

/// sqrt((s-a)(s-b)(s-c)(s-d)). Evaluated for every quadrilateral; it is the
/// true area only when the quadrilateral is cyclic.
ExactScalar sutra_area(const QuadSides& q);

/// Evaluated as sqrt(2a²b² + 2b²c² + 2c²a² - a⁴ - b⁴ - c⁴) / 4, which equals
/// sqrt(s(s-a)(s-b)(s-c)) and stays exact when the sides carry different
/// radicands.
ExactScalar heron_area(const Triangle& t);

ExactScalar trapezium_area(const Trapezium& t);

/// sqrt(4a² - d1²).
ExactScalar rhombus_second_diagonal(const Rhombus& r);
ExactScalar rhombus_area(const Rhombus& r);

/// Throws InvalidTriangle when the three lengths do not form a triangle.
AbadhaFoot abadha_foot(const ExactScalar& base, const ExactScalar& flank_left,
                       const ExactScalar& flank_right);
AbadhaSplit abadha_split(const ExactScalar& base, const ExactScalar& flank_left,
                         const ExactScalar& flank_right);

/// Gross and sutra fields only.
MensurationReport quad_report(const QuadSides& q);

/// Heron areas of the two triangles on either side of the diagonal.
std::pair<ExactScalar, ExactScalar> split_triangle_areas(const DiagQuad& dq);

/// Full report. Throws IncompatibleRadicands when the two triangle areas
/// cannot be added exactly.
MensurationReport area_by_diagonal(const DiagQuad& dq);

DiagonalPair cyclic_diagonal_pair(const QuadSides& q);

/// p * q == a*c + b*d.
bool ptolemy_check(const QuadSides& q, const DiagonalPair& d);

/// abc / (4 * area).
ExactScalar triangle_circumradius(const Triangle& t);

/// x + y > z for positive lengths, decided exactly.
bool sum_exceeds(const ExactScalar& x, const ExactScalar& y, const ExactScalar& z);

}  // namespace mensura
