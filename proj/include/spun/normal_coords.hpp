#pragma once
#include "spun/matrix.hpp"
#include "spun/numbers.hpp"
#include "spun/triangulation.hpp"

#include <vector>

namespace spun {

// Coordinate layout for normal surface vectors: 7 coordinates per
// tetrahedron, triangles tri[0..3] first (tri[v] cuts off vertex v), then
// quads quad[0..2]. Quad q separates the vertex pair {0, q+1} from its
// complement. A NormalVector has length 7k, a QVector length 3k.
using NormalVector = IntVector;
using QVector = IntVector;

// Quad type with a corner on every edge except {a,b} and its opposite:
// the quad separating {a,b} from the complementary pair.
int quad_separating(int a, int b);

// Vertex paired with v by quad q's separation.
int quad_partner(int q, int v);

inline int tri_coord(int tet, int v) { return 7 * tet + v; }
inline int quad_coord_full(int tet, int q) { return 7 * tet + 4 + q; }
inline int quad_coord(int tet, int q) { return 3 * tet + q; }

struct CompatibilitySystem {
    IntMatrix matrix; // 6k x 7k, rows ordered by (tet, face, cut-off vertex)
};

// One row per normal arc type of each glued face pair, equating the
// triangle + quad counts on the two sides. Coefficients accumulate under
// self-identifications.
CompatibilitySystem compatibility_system(const Triangulation& tri);

// The functional that counts disk-type vertices on edge class i, weighted
// by 1/degree. Length 7k.
RatVector edge_functional(const Triangulation& tri, int edge_index);

// Tetrahedral solution: -1 on the four triangles and +1 on the three quads
// of tetrahedron t.
NormalVector tetra_solution(const Triangulation& tri, int tet);

// Edge solution for edge class i: -n on each triangle with n vertices on
// the edge, +1 on the separating quad for each slot incidence.
NormalVector edge_solution(const Triangulation& tri, int edge_index);

// The k tetrahedral solutions followed by the e edge solutions. Throws
// BasisDefect when k + e does not match the compatibility nullity.
std::vector<NormalVector> canonical_basis(const Triangulation& tri);

// Rational evaluation of a functional against an integer vector.
Rat evaluate(const RatVector& functional, const IntVector& v);

// Restriction to the 3k quad coordinates.
QVector q_project(const NormalVector& v);

// Vertex-linking surface of a cusp: one copy of every link triangle.
NormalVector vertex_link_vector(const Triangulation& tri, const CuspLink& cusp);

} // namespace spun
