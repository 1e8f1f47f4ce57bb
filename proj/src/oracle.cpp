#include "mensura/oracle.hpp"

#include <algorithm>

namespace mensura {
namespace {

Point apex(const ExactScalar& base, const ExactScalar& flank_left, const ExactScalar& flank_right, int digits,
           bool above) {
  const AbadhaFoot foot = abadha_foot(base, flank_left, flank_right);
  ApproxScalar height = approx_sqrt(foot.height_squared, digits);
  return {approx(foot.segment_left, digits), above ? height : -height};
}

ExactScalar abs_value(const ExactScalar& x) { return x.sign() < 0 ? -x : x; }

}  // namespace

EmbeddedQuad embed(const DiagQuad& dq, int digits) {
  const auto& s = dq.sides();
  const ApproxScalar zero(0, digits);
  return {{Point{zero, zero}, apex(dq.diagonal(), s.a(), s.b(), digits, true),
           Point{approx(dq.diagonal(), digits), zero}, apex(dq.diagonal(), s.d(), s.c(), digits, false)},
          digits,
          dq};
}

std::array<Point, 3> embed_triangle(const Triangle& t, int digits) {
  const ApproxScalar zero(0, digits);
  return {Point{zero, zero}, Point{approx(t.c(), digits), zero}, apex(t.c(), t.a(), t.b(), digits, true)};
}

ApproxScalar shoelace_area(std::span<const Point> polygon) {
  if (polygon.empty()) return {};
  ApproxScalar twice(0, polygon.front().x.digits());
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point& p = polygon[i];
    const Point& q = polygon[(i + 1) % polygon.size()];
    twice = twice + (p.x * q.y - q.x * p.y);
  }
  return twice.abs() / ApproxScalar::parse("2", twice.digits());
}

ApproxScalar shoelace_area(const EmbeddedQuad& e) { return shoelace_area(std::span<const Point>(e.points)); }

ApproxScalar distance(const Point& p, const Point& q) {
  const ApproxScalar dx = p.x - q.x;
  const ApproxScalar dy = p.y - q.y;
  return (dx * dx + dy * dy).sqrt();
}

Circle circumcircle(const Point& p0, const Point& p1, const Point& p2, const ApproxScalar& tolerance) {
  // Translate p0 to the origin; then the center solves
  //   2 (u . c) = |u|^2,  2 (v . c) = |v|^2  for u = p1 - p0, v = p2 - p0.
  const ApproxScalar ux = p1.x - p0.x, uy = p1.y - p0.y;
  const ApproxScalar vx = p2.x - p0.x, vy = p2.y - p0.y;
  const ApproxScalar det = ux * vy - uy * vx;
  if (det.abs() <= tolerance) throw DegenerateCollinear("first three points are collinear");
  const ApproxScalar two = ApproxScalar::parse("2", det.digits());
  const ApproxScalar uu = ux * ux + uy * uy;
  const ApproxScalar vv = vx * vx + vy * vy;
  const ApproxScalar denom = two * det;
  const ApproxScalar cx = (uu * vy - vv * uy) / denom;
  const ApproxScalar cy = (vv * ux - uu * vx) / denom;
  Point center{p0.x + cx, p0.y + cy};
  ApproxScalar radius = (cx * cx + cy * cy).sqrt();
  return {std::move(center), std::move(radius)};
}

ConcyclicVerdict concyclic_verdict(const EmbeddedQuad& e, const ApproxScalar& tolerance) {
  const auto& p = e.points;
  const Circle circle = circumcircle(p[0], p[1], p[2], tolerance);
  ApproxScalar deviation = (distance(p[3], circle.center) - circle.radius).abs();
  const bool on_circle = deviation <= tolerance;
  return {on_circle, circle.radius, std::move(deviation)};
}

bool concyclic(const EmbeddedQuad& e, const ApproxScalar& tolerance) {
  return concyclic_verdict(e, tolerance).concyclic;
}

std::pair<ExactScalar, ExactScalar> diagonal_range(const QuadSides& q) {
  ExactScalar lower = std::max(abs_value(q.a() - q.b()), abs_value(q.c() - q.d()));
  ExactScalar upper = std::min(q.a() + q.b(), q.c() + q.d());
  return {std::move(lower), std::move(upper)};
}

}  // namespace mensura
