#pragma once
#include "spun/linalg.hpp"
#include "spun/matrix.hpp"
#include "spun/normal_coords.hpp"
#include "spun/q_theory.hpp"
#include "spun/triangulation.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace spun {

// The cusp link as a 2-complex: faces are the link triangles (tet, vertex),
// edges the identified triangle-side pairs, vertices the identified corner
// orbits. Edge orientations run from the lesser to the greater endpoint in
// canonical vertex order (local corner order breaks ties). Boundary
// matrices and the Smith data of H1 are precomputed.
class CuspComplex {
public:
    struct Side {
        int tet, v, f;      // side of link triangle (tet, v) lying in face f
        int edge;           // identified edge index
        int from_w, to_w;   // edge direction expressed in this side's corners
    };

    CuspComplex(const Triangulation& tri, int cusp_index);

    int cusp_index() const { return cusp_; }
    CuspLink::Kind kind() const { return kind_; }
    const std::vector<std::pair<int, int>>& faces() const { return faces_; }
    std::size_t num_edges() const { return num_edges_; }
    std::size_t num_vertices() const { return num_vertices_; }
    const IntMatrix& d1() const { return d1_; }
    const IntMatrix& d2() const { return d2_; }

    const Side& side(int tet, int v, int f) const;

    std::size_t h1_rank() const { return free_rows_.size(); }
    const IntVector& h1_torsion_orders() const { return torsion_orders_; }

    bool is_cycle(const IntVector& chain) const;

    // Kernel-lattice coordinates of a cycle (exact; cycles always lie in
    // the saturated kernel of d1).
    IntVector cycle_coordinates(const IntVector& chain) const;

    // Smith-basis coordinates: y = U * w for the kernel coordinates w.
    IntVector smith_coordinates(const IntVector& chain) const;

    const std::vector<std::size_t>& free_rows() const { return free_rows_; }
    const std::vector<std::size_t>& torsion_rows() const { return torsion_rows_; }
    const IntMatrix& kernel() const { return kernel_; }
    const IntMatrix& u_x() const { return u_x_; }

private:
    int cusp_;
    CuspLink::Kind kind_;
    std::vector<std::pair<int, int>> faces_;
    std::map<std::tuple<int, int, int>, int> side_lookup_;
    std::vector<Side> sides_;
    std::size_t num_edges_ = 0, num_vertices_ = 0;
    IntMatrix d1_, d2_;
    IntMatrix kernel_; // columns span ker d1
    IntMatrix u_x_;    // Smith U factor of d2 expressed in the kernel basis
    IntVector x_diag_; // Smith diagonal, padded with zeros to the kernel rank
    std::vector<std::size_t> free_rows_;
    std::vector<std::size_t> torsion_rows_;
    IntVector torsion_orders_;
};

CuspComplex cusp_complex(const Triangulation& tri, int cusp_index);

// Integer coefficients on the oriented edges of one cusp complex.
using BoundaryChain = IntVector;

// Element of H1(cusp; Z) in the Smith basis: free coordinates plus
// (residue, modulus) torsion coordinates.
struct HomologyClass {
    IntVector free_part;
    std::vector<std::pair<Int, Int>> torsion;

    bool is_zero() const;
    Int free_gcd() const;
};

HomologyClass operator+(const HomologyClass& a, const HomologyClass& b);
HomologyClass operator-(const HomologyClass& a);
HomologyClass operator*(const Int& n, const HomologyClass& a);
bool operator==(const HomologyClass& a, const HomologyClass& b);

// The oriented quad-boundary 1-chain of a Q-matching solution on each cusp,
// one chain per cusp. Each quad contributes its four boundary arcs directed
// from the + corner to the - corner. Throws NotACycle when the corner-sign
// table fails to orient some arc (possible for non-orientable input) or
// when a produced chain is not a cycle.
std::vector<BoundaryChain> boundary_chain(const Triangulation& tri, const QVector& q);

// Class of a cycle; throws NotACycle otherwise.
HomologyClass homology_class(const CuspComplex& cc, const BoundaryChain& chain);

// Per-cusp boundary classes of a Q-matching solution. Orientable input is
// computed directly. For non-orientable input the solution is lifted to the
// orientable double cover: a torus cusp reports the class of its lesser
// covering cusp, and a Klein bottle cusp reports (m, 0 mod 2) where m is
// the coordinate of the cover class in the rank-one sublattice anti-fixed
// by the deck involution; the symmetrized projection to the Klein bottle
// itself carries no free part.
std::vector<HomologyClass> boundary_map(const Triangulation& tri, const QVector& q);

// Boundary classes on the double cover, per cover cusp; the cross-check
// route for non-orientable input.
std::vector<HomologyClass> cover_boundary_classes(const Triangulation& tri,
                                                  const DoubleCover& cover, const QVector& q);

// Index of the subgroup generated by the boundary classes of an integer
// basis of the Q-matching solution lattice inside the direct sum of the
// cusp homology groups.
SubgroupIndex image_index(const Triangulation& tri);

// Ambient group shape used by image_index: per-cusp free ranks and
// torsion orders, concatenated.
struct BoundaryAmbient {
    std::size_t free_rank = 0;
    IntVector torsion_orders;
};
BoundaryAmbient boundary_ambient(const Triangulation& tri);

// Flattens per-cusp classes into ambient coordinates: all free parts in
// cusp order, then all torsion residues in cusp order.
IntVector flatten_classes(const std::vector<HomologyClass>& classes);

} // namespace spun
