#include "spun/q_theory.hpp"

#include "spun/errors.hpp"
#include "spun/linalg.hpp"


namespace spun {

void require_solution(const IntMatrix& system, const QVector& q) {
    if (q.size() != system.cols())
        throw NotASolution("vector length " + std::to_string(q.size()) +
                               " does not match the system",
                           -1);
    IntVector r = system.apply(q);
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] != 0)
            throw NotASolution("vector violates the Q-matching system", static_cast<int>(i));
}

CornerSigns corner_signs(const Triangulation& tri) {
    const int k = tri.num_tetrahedra();
    CornerSigns table;
    table.per_slot.resize(static_cast<std::size_t>(6 * k));

    auto oriented = orientation(tri);
    if (oriented) {
        table.from_global_orientation = true;
        for (int t = 0; t < k; ++t)
            for (int e = 0; e < 6; ++e) {
                auto [a, b] = kEdgePairs[static_cast<std::size_t>(e)];
                CornerSigns::SlotEntry& entry = table.per_slot[static_cast<std::size_t>(6 * t + e)];
                for (int q = 0; q < 3; ++q) {
                    if (q == quad_separating(a, b)) continue;
                    int x = quad_partner(q, a), y = quad_partner(q, b);
                    int s = (*oriented)[static_cast<std::size_t>(t)] * permutation_sign(a, b, x, y);
                    (s > 0 ? entry.quad_plus : entry.quad_minus) = q;
                }
            }
        return table;
    }

    // Non-orientable: transport a frame around each edge class. The quad
    // pairing the walked-from endpoint with the exit face gets +1.
    table.from_global_orientation = false;
    for (const auto& cls : edge_classes(tri)) {
        for (const auto& inc : cls.incidences) {
            int slot = edge_slot_index(inc.v0, inc.v1);
            CornerSigns::SlotEntry& entry =
                table.per_slot[static_cast<std::size_t>(6 * inc.tet + slot)];
            entry.quad_plus = quad_separating(inc.v0, inc.exit_face);
            entry.quad_minus = quad_separating(inc.v0, inc.entry_face);
        }
    }
    return table;
}

QMatchingSystem q_matching_system(const Triangulation& tri) {
    const int k = tri.num_tetrahedra();
    auto classes = edge_classes(tri);
    auto signs = corner_signs(tri);
    IntMatrix m(classes.size(), static_cast<std::size_t>(3 * k));
    for (const auto& cls : classes)
        for (const auto& inc : cls.incidences) {
            int slot = edge_slot_index(inc.v0, inc.v1);
            const auto& entry = signs.per_slot[static_cast<std::size_t>(6 * inc.tet + slot)];
            m(static_cast<std::size_t>(cls.index),
              static_cast<std::size_t>(quad_coord(inc.tet, entry.quad_plus))) += 1;
            m(static_cast<std::size_t>(cls.index),
              static_cast<std::size_t>(quad_coord(inc.tet, entry.quad_minus))) -= 1;
        }
    return {std::move(m)};
}

std::vector<IntVector> normalized_rows(const IntMatrix& m) {
    std::vector<IntVector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        IntVector r = m.row(i);
        Int g = vector_gcd(r);
        if (g != 0) {
            for (Int& x : r) x /= g;
            for (const Int& x : r) {
                if (x == 0) continue;
                if (x > 0)
                    for (Int& y : r) y = -y;
                break;
            }
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

namespace {

// Q-matching system of the orientable double cover restricted to vectors
// that change sign between the two sheets; its rank is the k - c count
// behind the 2k + c dimension statement.
IntMatrix sheet_antisymmetric_system(const Triangulation& tri, const DoubleCover& dc) {
    const int k = tri.num_tetrahedra();
    IntMatrix cover_q = q_matching_system(dc.cover).matrix;
    IntMatrix embed(static_cast<std::size_t>(6 * k), static_cast<std::size_t>(3 * k));
    for (int ct = 0; ct < 2 * k; ++ct) {
        int base = dc.projection[static_cast<std::size_t>(ct)];
        int sheet_sign = ct < k ? 1 : -1;
        for (int q = 0; q < 3; ++q)
            embed(static_cast<std::size_t>(quad_coord(ct, q)),
                  static_cast<std::size_t>(quad_coord(base, q))) = sheet_sign;
    }
    return cover_q * embed;
}

} // namespace

int dim_W(const Triangulation& tri) {
    validate_ideal(tri);
    const int k = tri.num_tetrahedra();
    const int c = static_cast<int>(cusps(tri).size());

    std::size_t r;
    if (orientation(tri)) {
        r = rank(q_matching_system(tri).matrix);
    } else {
        DoubleCover dc = double_cover(tri);
        r = rank(sheet_antisymmetric_system(tri, dc));
    }
    if (r != static_cast<std::size_t>(k - c))
        throw DimensionMismatch("Q-matching rank " + std::to_string(r) + " differs from k - c = " +
                                std::to_string(k - c));
    int dim = 3 * k - static_cast<int>(r);
    if (dim != 2 * k + c)
        throw DimensionMismatch("solution space dimension " + std::to_string(dim) +
                                " differs from 2k + c = " + std::to_string(2 * k + c));
    return dim;
}

bool is_compact_class(const Triangulation& tri, const QVector& q) {
    require_solution(q_matching_system(tri).matrix, q);
    std::vector<IntVector> projections;
    for (const auto& v : canonical_basis(tri)) projections.push_back(q_project(v));
    return in_rational_span(projections, q);
}

QVector lift_to_cover(const Triangulation& tri, const DoubleCover& cover, const QVector& q) {
    const int k = tri.num_tetrahedra();
    if (cover.cover.num_tetrahedra() != 2 * k)
        throw ValidationError("cover does not match the base triangulation");
    require_solution(q_matching_system(tri).matrix, q);
    QVector z(static_cast<std::size_t>(6 * k), Int(0));
    for (int ct = 0; ct < 2 * k; ++ct) {
        int base = cover.projection[static_cast<std::size_t>(ct)];
        for (int j = 0; j < 3; ++j)
            z[static_cast<std::size_t>(quad_coord(ct, j))] =
                q[static_cast<std::size_t>(quad_coord(base, j))];
    }
    require_solution(q_matching_system(cover.cover).matrix, z);
    return z;
}

} // namespace spun
