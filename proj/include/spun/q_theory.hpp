#pragma once
#include "spun/matrix.hpp"
#include "spun/normal_coords.hpp"
#include "spun/triangulation.hpp"

#include <vector>

namespace spun {

// Signs of the two quad corners at every edge-slot incidence. For an
// orientable triangulation the table is induced by the global orientation;
// otherwise each edge class carries its own consistent assignment obtained
// by transporting a local frame along the cyclic incidence walk.
struct CornerSigns {
    struct SlotEntry {
        int quad_plus = -1;  // quad type with corner sign +1 at this slot
        int quad_minus = -1; // quad type with corner sign -1
    };
    std::vector<SlotEntry> per_slot; // indexed by 6*tet + edge_slot_index
    bool from_global_orientation = false;

    // +1, -1, or 0 when the quad has no corner on the slot.
    int sign(int tet, int slot, int quad) const {
        const SlotEntry& e = per_slot[static_cast<std::size_t>(6 * tet + slot)];
        if (quad == e.quad_plus) return 1;
        if (quad == e.quad_minus) return -1;
        return 0;
    }
};

CornerSigns corner_signs(const Triangulation& tri);

struct QMatchingSystem {
    IntMatrix matrix; // k rows (one per edge class) x 3k columns
};

// Signed corner-incidence counts of each quad type around each edge.
QMatchingSystem q_matching_system(const Triangulation& tri);

// Rows divided by their gcd, sign fixed so the first nonzero entry is
// negative (the conventional -2,1,1 shape). Zero rows stay zero.
std::vector<IntVector> normalized_rows(const IntMatrix& m);

// Dimension of the solution space: 3k - rank. For orientable input the
// rank of the direct system is used; for non-orientable input the rank of
// the double-cover system restricted to sheet-antisymmetric vectors, which
// is what the 2k+c count refers to. Throws DimensionMismatch when the
// result differs from 2k + c.
int dim_W(const Triangulation& tri);

// True iff q is the quad part of a standard (compact) normal class, i.e.
// lies in the rational span of the canonical basis projections. Throws
// NotASolution when q violates the Q-matching system.
bool is_compact_class(const Triangulation& tri, const QVector& q);

// Duplicate coordinates along the covering projection. Requires a
// non-orientable base and a Q-matching solution; the result solves the
// cover's system.
QVector lift_to_cover(const Triangulation& tri, const DoubleCover& cover, const QVector& q);

// Verifies A q = 0 and throws NotASolution naming the violated row.
void require_solution(const IntMatrix& system, const QVector& q);

} // namespace spun
