#include "mensura/mensuration.hpp"

#include <string>

namespace mensura {
namespace {

void require_positive(const ExactScalar& x, const char* what) {
  if (x.sign() <= 0) throw InvalidFigure(std::string(what) + " must be positive, got " + x.to_string());
}

std::string triple_text(const ExactScalar& a, const ExactScalar& b, const ExactScalar& c) {
  return "(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")";
}

}  // namespace

bool sum_exceeds(const ExactScalar& x, const ExactScalar& y, const ExactScalar& z) {
  if (x.is_rational() && y.is_rational() && z.is_rational()) {
    return x.coefficient() + y.coefficient() > z.coefficient();
  }
  // (x + y)^2 > z^2  <=>  2xy > z^2 - x^2 - y^2, with the right side rational.
  return surd_cmp(Surd(2) * x * y, Surd(z.square() - x.square() - y.square())) > 0;
}

Triangle::Triangle(ExactScalar a, ExactScalar b, ExactScalar c) : sides_{std::move(a), std::move(b), std::move(c)} {
  for (const auto& s : sides_) {
    if (s.sign() <= 0) throw InvalidTriangle("triangle side must be positive, got " + s.to_string());
  }
  if (!sum_exceeds(sides_[0], sides_[1], sides_[2]) || !sum_exceeds(sides_[1], sides_[2], sides_[0]) ||
      !sum_exceeds(sides_[2], sides_[0], sides_[1])) {
    throw InvalidTriangle("triangle inequality violated by " + triple_text(sides_[0], sides_[1], sides_[2]));
  }
}

QuadSides::QuadSides(ExactScalar a, ExactScalar b, ExactScalar c, ExactScalar d)
    : sides_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  for (const auto& s : sides_) require_positive(s, "quadrilateral side");
  for (const auto& s : sides_) {
    if (s.radicand() != sides_[0].radicand()) {
      throw InvalidFigure("quadrilateral sides must share one radicand");
    }
  }
  const ExactScalar total = sides_[0] + sides_[1] + sides_[2] + sides_[3];
  for (const auto& s : sides_) {
    if (!(s < total - s)) {
      throw InvalidFigure("closure violated: side " + s.to_string() +
                          " is not shorter than the sum of the other three");
    }
  }
}

QuadSides QuadSides::rotated(int by) const {
  const int shift = ((by % 4) + 4) % 4;
  std::array<ExactScalar, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = sides_[(i + shift) % 4];
  return QuadSides(out);
}

ExactScalar QuadSides::semiperimeter() const {
  return (sides_[0] + sides_[1] + sides_[2] + sides_[3]) * Surd(Rational(1, 2));
}

DiagQuad::DiagQuad(QuadSides sides, ExactScalar diagonal) : sides_(std::move(sides)), diagonal_(std::move(diagonal)) {
  try {
    first_triangle();
    second_triangle();
  } catch (const InvalidTriangle& e) {
    throw InvalidFigure("diagonal " + diagonal_.to_string() + " does not fit: " + e.what());
  }
}

Trapezium::Trapezium(ExactScalar base_, ExactScalar face_, ExactScalar left_leg, ExactScalar right_leg,
                     ExactScalar height_)
    : base(std::move(base_)), face(std::move(face_)), legs{std::move(left_leg), std::move(right_leg)},
      height(std::move(height_)) {
  require_positive(base, "trapezium base");
  require_positive(face, "trapezium face");
  require_positive(legs[0], "trapezium leg");
  require_positive(legs[1], "trapezium leg");
  require_positive(height, "trapezium height");
  if (base < face) throw InvalidFigure("trapezium face must not be longer than its base");
  if (height > legs[0] || height > legs[1]) throw InvalidFigure("trapezium height exceeds a leg");
}

Rhombus::Rhombus(ExactScalar side_, ExactScalar d1_) : side(std::move(side_)), d1(std::move(d1_)) {
  require_positive(side, "rhombus side");
  require_positive(d1, "rhombus diagonal");
  if (d1.square() >= 4 * side.square()) {
    throw DegenerateRhombus("diagonal " + d1.to_string() + " is not shorter than twice the side " +
                            side.to_string());
  }
}

ExactScalar gross_area(const QuadSides& q) {
  const Surd half(Rational(1, 2));
  return (q.a() + q.c()) * half * ((q.b() + q.d()) * half);
}

ExactScalar sutra_area(const QuadSides& q) {
  const ExactScalar s = q.semiperimeter();
  ExactScalar product(1);
  for (const auto& side : q.sides()) product = product * (s - side);
  return Surd::sqrt(product.to_rational());
}

ExactScalar heron_area(const Triangle& t) {
  const Rational a2 = t.a().square();
  const Rational b2 = t.b().square();
  const Rational c2 = t.c().square();
  const Rational cross = a2 + b2 - c2;
  const Rational sixteen_area_sq = 4 * a2 * b2 - cross * cross;
  return Surd::sqrt(sixteen_area_sq / 16);
}

ExactScalar trapezium_area(const Trapezium& t) {
  return (t.base + t.face) * t.height * Surd(Rational(1, 2));
}

ExactScalar rhombus_second_diagonal(const Rhombus& r) {
  return Surd::sqrt(4 * r.side.square() - r.d1.square());
}

ExactScalar rhombus_area(const Rhombus& r) {
  return r.d1 * rhombus_second_diagonal(r) * Surd(Rational(1, 2));
}

AbadhaFoot abadha_foot(const ExactScalar& base, const ExactScalar& flank_left, const ExactScalar& flank_right) {
  Triangle check(base, flank_left, flank_right);
  const Rational numerator = base.square() + flank_left.square() - flank_right.square();
  ExactScalar segment_left = Surd(numerator) / (Surd(2) * base);
  Rational height_squared = flank_left.square() - segment_left.square();
  return {std::move(segment_left), std::move(height_squared)};
}

AbadhaSplit abadha_split(const ExactScalar& base, const ExactScalar& flank_left, const ExactScalar& flank_right) {
  auto foot = abadha_foot(base, flank_left, flank_right);
  ExactScalar segment_right = base - foot.segment_left;
  return {std::move(foot.segment_left), std::move(segment_right), Surd::sqrt(foot.height_squared)};
}

MensurationReport quad_report(const QuadSides& q) {
  return {q.semiperimeter(), gross_area(q), sutra_area(q), std::nullopt, std::nullopt};
}

std::pair<ExactScalar, ExactScalar> split_triangle_areas(const DiagQuad& dq) {
  return {heron_area(dq.first_triangle()), heron_area(dq.second_triangle())};
}

MensurationReport area_by_diagonal(const DiagQuad& dq) {
  MensurationReport report = quad_report(dq.sides());
  auto [first, second] = split_triangle_areas(dq);
  const Surd two(2);
  report.perpendiculars.emplace(two * first / dq.diagonal(), two * second / dq.diagonal());
  report.split_area = first + second;
  return report;
}

DiagonalPair cyclic_diagonal_pair(const QuadSides& q) {
  const Rational ac_bd = (q.a() * q.c() + q.b() * q.d()).to_rational();
  const Rational ad_bc = (q.a() * q.d() + q.b() * q.c()).to_rational();
  const Rational ab_cd = (q.a() * q.b() + q.c() * q.d()).to_rational();
  return {Surd::sqrt(ac_bd * ad_bc / ab_cd), Surd::sqrt(ac_bd * ab_cd / ad_bc)};
}

bool ptolemy_check(const QuadSides& q, const DiagonalPair& d) {
  return d.p * d.q == q.a() * q.c() + q.b() * q.d();
}

ExactScalar triangle_circumradius(const Triangle& t) {
  return t.a() * t.b() * t.c() / (Surd(4) * heron_area(t));
}

}  // namespace mensura
