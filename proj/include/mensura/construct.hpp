#pragma once

#include <utility>

#include "mensura/mensuration.hpp"
#include "mensura/triples.hpp"

namespace mensura {

/// Integer cyclic quadrilateral glued from two right triangles.
///
/// Triple t1 is scaled by n2 and t2 by n1 so both hypotenuses become n1*n2;
/// the scaled triangles are then joined along that common hypotenuse, which
/// is a diameter of the circumscribed circle. Sides are kept in the order
/// (l1 n2, l2 n1, m2 n1, m1 n2), so the glue diagonal separates (d, a) from
/// (b, c).
struct CyclicQuadConstruction {
  TriplePair source;
  QuadSides sides;
  ExactScalar glue_diagonal;
  ExactScalar circumdiameter;

  /// The same figure as a DiagQuad split along the glue diagonal, i.e. with
  /// sides rotated to (m1 n2, l1 n2, l2 n1, m2 n1).
  DiagQuad glue_split() const;
};

enum class TriangleSide { first, second };

/// Rhombus of side n with diagonals 2l and 2m.
Rhombus rhombus_from_triple(const PythTriple& t);

CyclicQuadConstruction brahmagupta_quad(const PythTriple& t1, const PythTriple& t2);

/// Reflects one triangle in the perpendicular bisector of the diagonal,
/// which exchanges its two non-diagonal sides.
DiagQuad reflect_swap(const DiagQuad& dq, TriangleSide which);

}  // namespace mensura
