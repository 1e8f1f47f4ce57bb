#include "mensura/construct.hpp"

namespace mensura {

DiagQuad CyclicQuadConstruction::glue_split() const { return DiagQuad(sides.rotated(3), glue_diagonal); }

Rhombus rhombus_from_triple(const PythTriple& t) { return Rhombus(t.n(), 2 * t.l()); }

CyclicQuadConstruction brahmagupta_quad(const PythTriple& t1, const PythTriple& t2) {
  const long n1 = t1.n();
  const long n2 = t2.n();
  QuadSides sides(t1.l() * n2, t2.l() * n1, t2.m() * n1, t1.m() * n2);
  const ExactScalar diagonal(n1 * n2);
  return {{t1, t2}, std::move(sides), diagonal, diagonal};
}

DiagQuad reflect_swap(const DiagQuad& dq, TriangleSide which) {
  const auto& s = dq.sides();
  if (which == TriangleSide::first) return DiagQuad(QuadSides(s.b(), s.a(), s.c(), s.d()), dq.diagonal());
  return DiagQuad(QuadSides(s.a(), s.b(), s.d(), s.c()), dq.diagonal());
}

}  // namespace mensura
