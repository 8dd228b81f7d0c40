#include "spun/normal_coords.hpp"

#include "spun/errors.hpp"
#include "spun/linalg.hpp"

#include <cassert>

namespace spun {

int quad_separating(int a, int b) {
    assert(a != b);
    // Quad index q separates {0, q+1}; normalize the pair through vertex 0.
    if (a > b) std::swap(a, b);
    if (a == 0) return b - 1;
    // {a,b} with 0 < a: the quad separating the complement pair {0, x}.
    int x = 6 - a - b; // the vertex besides 0, a, b
    return x - 1;
}

int quad_partner(int q, int v) {
    static constexpr int partner[3][4] = {
        {1, 0, 3, 2}, // q0: {0,1} | {2,3}
        {2, 3, 0, 1}, // q1: {0,2} | {1,3}
        {3, 2, 1, 0}, // q2: {0,3} | {1,2}
    };
    return partner[q][v];
}

CompatibilitySystem compatibility_system(const Triangulation& tri) {
    const int k = tri.num_tetrahedra();
    IntMatrix m(static_cast<std::size_t>(6 * k), static_cast<std::size_t>(7 * k));
    std::size_t row = 0;
    for (int t = 0; t < k; ++t) {
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = tri.gluing(t, f);
            int f2 = g.perm(f);
            // Count each glued face pair once, from its lesser side.
            if (std::pair{g.tet, f2} < std::pair{t, f}) continue;
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                int v2 = g.perm(v);
                m(row, static_cast<std::size_t>(tri_coord(t, v))) += 1;
                m(row, static_cast<std::size_t>(quad_coord_full(t, quad_separating(v, f)))) += 1;
                m(row, static_cast<std::size_t>(tri_coord(g.tet, v2))) -= 1;
                m(row, static_cast<std::size_t>(quad_coord_full(g.tet, quad_separating(v2, f2)))) -= 1;
                ++row;
            }
        }
    }
    assert(row == static_cast<std::size_t>(6 * k));
    return {std::move(m)};
}

namespace {

// Slot -> edge class index map.
std::vector<int> slot_classes(const Triangulation& tri, const std::vector<EdgeClass>& classes) {
    std::vector<int> cls(static_cast<std::size_t>(6 * tri.num_tetrahedra()), -1);
    for (const auto& c : classes)
        for (const auto& inc : c.incidences) {
            int slot = 6 * inc.tet + edge_slot_index(inc.v0, inc.v1);
            cls[static_cast<std::size_t>(slot)] = c.index;
        }
    return cls;
}

} // namespace

RatVector edge_functional(const Triangulation& tri, int edge_index) {
    auto classes = edge_classes(tri);
    if (edge_index < 0 || edge_index >= static_cast<int>(classes.size()))
        throw ValidationError("edge index out of range");
    auto cls = slot_classes(tri, classes);
    const int k = tri.num_tetrahedra();
    const Int d = classes[static_cast<std::size_t>(edge_index)].degree();

    RatVector phi(static_cast<std::size_t>(7 * k), Rat(0));
    for (int t = 0; t < k; ++t) {
        for (int v = 0; v < 4; ++v) {
            int n = 0;
            for (int w = 0; w < 4; ++w) {
                if (w == v) continue;
                if (cls[static_cast<std::size_t>(6 * t + edge_slot_index(v, w))] == edge_index)
                    ++n;
            }
            if (n) phi[static_cast<std::size_t>(tri_coord(t, v))] = Rat(n) / Rat(d);
        }
        for (int q = 0; q < 3; ++q) {
            int n = 0;
            for (int e = 0; e < 6; ++e) {
                auto [a, b] = kEdgePairs[static_cast<std::size_t>(e)];
                if (quad_separating(a, b) == q) continue; // no corner on the separated pair
                if (cls[static_cast<std::size_t>(6 * t + e)] == edge_index) ++n;
            }
            if (n) phi[static_cast<std::size_t>(quad_coord_full(t, q))] = Rat(n) / Rat(d);
        }
    }
    return phi;
}

NormalVector tetra_solution(const Triangulation& tri, int tet) {
    const int k = tri.num_tetrahedra();
    if (tet < 0 || tet >= k) throw ValidationError("tetrahedron index out of range");
    NormalVector v(static_cast<std::size_t>(7 * k), Int(0));
    for (int w = 0; w < 4; ++w) v[static_cast<std::size_t>(tri_coord(tet, w))] = -1;
    for (int q = 0; q < 3; ++q) v[static_cast<std::size_t>(quad_coord_full(tet, q))] = 1;
    return v;
}

NormalVector edge_solution(const Triangulation& tri, int edge_index) {
    auto classes = edge_classes(tri);
    if (edge_index < 0 || edge_index >= static_cast<int>(classes.size()))
        throw ValidationError("edge index out of range");
    auto cls = slot_classes(tri, classes);
    const int k = tri.num_tetrahedra();

    NormalVector beta(static_cast<std::size_t>(7 * k), Int(0));
    for (int t = 0; t < k; ++t)
        for (int v = 0; v < 4; ++v) {
            int n = 0;
            for (int w = 0; w < 4; ++w) {
                if (w == v) continue;
                if (cls[static_cast<std::size_t>(6 * t + edge_slot_index(v, w))] == edge_index)
                    ++n;
            }
            beta[static_cast<std::size_t>(tri_coord(t, v))] = -n;
        }
    for (const auto& inc : classes[static_cast<std::size_t>(edge_index)].incidences) {
        int q = quad_separating(inc.v0, inc.v1);
        beta[static_cast<std::size_t>(quad_coord_full(inc.tet, q))] += 1;
    }
    return beta;
}

std::vector<NormalVector> canonical_basis(const Triangulation& tri) {
    const int k = tri.num_tetrahedra();
    auto classes = edge_classes(tri);
    const int e = static_cast<int>(classes.size());

    std::vector<NormalVector> basis;
    basis.reserve(static_cast<std::size_t>(k + e));
    for (int t = 0; t < k; ++t) basis.push_back(tetra_solution(tri, t));
    for (int i = 0; i < e; ++i) basis.push_back(edge_solution(tri, i));

    auto compat = compatibility_system(tri);
    const std::size_t nullity = compat.matrix.cols() - rank(compat.matrix);
    if (nullity != static_cast<std::size_t>(k + e))
        throw BasisDefect("expected nullity " + std::to_string(k + e) + ", found " +
                          std::to_string(nullity));
    if (rank(IntMatrix::from_rows(basis)) != static_cast<std::size_t>(k + e))
        throw BasisDefect("tetrahedral and edge solutions are not independent");
    for (const auto& v : basis) {
        IntVector r = compat.matrix.apply(v);
        for (const Int& x : r)
            if (x != 0) throw BasisDefect("basis vector violates the compatibility system");
    }
    return basis;
}

Rat evaluate(const RatVector& functional, const IntVector& v) {
    if (functional.size() != v.size())
        throw ValidationError("functional and vector lengths differ");
    Rat sum(0);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) sum += functional[i] * Rat(v[i]);
    return sum;
}

QVector q_project(const NormalVector& v) {
    if (v.size() % 7 != 0)
        throw ValidationError("normal vector length must be a multiple of 7");
    const std::size_t k = v.size() / 7;
    QVector q(3 * k);
    for (std::size_t t = 0; t < k; ++t)
        for (std::size_t j = 0; j < 3; ++j) q[3 * t + j] = v[7 * t + 4 + j];
    return q;
}

NormalVector vertex_link_vector(const Triangulation& tri, const CuspLink& cusp) {
    NormalVector v(static_cast<std::size_t>(7 * tri.num_tetrahedra()), Int(0));
    for (auto [t, w] : cusp.triangles) v[static_cast<std::size_t>(tri_coord(t, w))] = 1;
    return v;
}

} // namespace spun
