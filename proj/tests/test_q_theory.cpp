#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spun/errors.hpp"
#include "spun/linalg.hpp"
#include "spun/normal_coords.hpp"
#include "spun/q_theory.hpp"
#include "spun/triangulation.hpp"

#include <algorithm>

using namespace spun;

namespace {

IntVector qv(std::initializer_list<int> xs) {
    IntVector v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

// Multiset of gcd-normalized rows, entries sorted within each row: the
// comparison shape used against the conventional systems.
std::vector<IntVector> sorted_normalized(const IntMatrix& m) {
    auto rows = normalized_rows(m);
    for (auto& r : rows) std::sort(r.begin(), r.end());
    std::sort(rows.begin(), rows.end());
    return rows;
}

} // namespace

TEST_CASE("figure-8 corner signs: one + and one - quad at every incidence") {
    auto signs = corner_signs(builtin_figure8());
    CHECK(signs.from_global_orientation);
    for (int t = 0; t < 2; ++t)
        for (int e = 0; e < 6; ++e) {
            const auto& entry = signs.per_slot[static_cast<std::size_t>(6 * t + e)];
            auto [a, b] = kEdgePairs[static_cast<std::size_t>(e)];
            CHECK(entry.quad_plus != entry.quad_minus);
            CHECK(entry.quad_plus != quad_separating(a, b));
            CHECK(entry.quad_minus != quad_separating(a, b));
        }
}

TEST_CASE("Gieseking corner signs exist per edge class") {
    auto signs = corner_signs(builtin_gieseking());
    CHECK(!signs.from_global_orientation);
    for (int e = 0; e < 6; ++e) {
        const auto& entry = signs.per_slot[static_cast<std::size_t>(e)];
        CHECK(entry.quad_plus >= 0);
        CHECK(entry.quad_minus >= 0);
        CHECK(entry.quad_plus != entry.quad_minus);
    }
}

TEST_CASE("figure-8 Q-matching system matches the conventional one") {
    auto qm = q_matching_system(builtin_figure8());
    CHECK(qm.matrix.rows() == 2);
    CHECK(qm.matrix.cols() == 6);
    IntMatrix reference{{-2, 1, 1, -2, 1, 1}, {2, -1, -1, 2, -1, -1}};
    CHECK(sorted_normalized(qm.matrix) == sorted_normalized(reference));
    CHECK(rank(qm.matrix) == 1);
}

TEST_CASE("figure-8 Q-matching rows sum to zero") {
    auto qm = q_matching_system(builtin_figure8());
    for (std::size_t j = 0; j < qm.matrix.cols(); ++j)
        CHECK(qm.matrix(0, j) + qm.matrix(1, j) == 0);
}

TEST_CASE("Gieseking Q-matching system is the conventional single equation") {
    auto qm = q_matching_system(builtin_gieseking());
    CHECK(qm.matrix.rows() == 1);
    CHECK(qm.matrix.cols() == 3);
    IntMatrix reference{{-2, 1, 1}};
    CHECK(sorted_normalized(qm.matrix) == sorted_normalized(reference));
    // Raw entries are signed corner counts; each quad has an even count
    // around the single edge.
    for (std::size_t j = 0; j < 3; ++j) CHECK(qm.matrix(0, j) % 2 == 0);
}

TEST_CASE("solution space dimensions are 2k + c") {
    CHECK(dim_W(builtin_figure8()) == 5);
    CHECK(dim_W(builtin_gieseking()) == 3);
    CHECK(dim_W(double_cover(builtin_gieseking()).cover) == 5);
}

TEST_CASE("canonical basis projections solve the Q-matching system") {
    std::vector<Triangulation> tris;
    tris.push_back(builtin_figure8());
    tris.push_back(builtin_gieseking());
    tris.push_back(double_cover(builtin_gieseking()).cover);
    for (const auto& t : tris) {
        auto qm = q_matching_system(t);
        for (const auto& v : canonical_basis(t)) require_solution(qm.matrix, q_project(v));
    }
}

TEST_CASE("compactness of Q-classes") {
    const Triangulation& t = builtin_figure8();
    CHECK(is_compact_class(t, q_project(tetra_solution(t, 0))));
    CHECK(is_compact_class(t, qv({1, 1, 1, 0, 0, 0})));
    CHECK(!is_compact_class(t, qv({1, 0, 0, 0, 0, 2})));
}

TEST_CASE("non-solutions are refused with the violated equation") {
    try {
        is_compact_class(builtin_figure8(), qv({1, 0, 0, 0, 0, 0}));
        FAIL("expected NotASolution");
    } catch (const NotASolution& e) {
        CHECK(e.equation() >= 0);
    }
}

TEST_CASE("lifting solutions to the double cover") {
    const Triangulation& g = builtin_gieseking();
    DoubleCover dc = double_cover(g);

    QVector t1 = lift_to_cover(g, dc, qv({1, 1, 1}));
    CHECK(t1 == qv({1, 1, 1, 1, 1, 1}));

    QVector zero = lift_to_cover(g, dc, qv({0, 0, 0}));
    CHECK(zero == qv({0, 0, 0, 0, 0, 0}));

    // t2 lifts to a solution of the cover system (also checked inside).
    QVector t2 = lift_to_cover(g, dc, qv({1, 2, 0}));
    require_solution(q_matching_system(dc.cover).matrix, t2);

    CHECK_THROWS_AS(lift_to_cover(g, dc, qv({1, 0, 0})), NotASolution);
}

TEST_CASE("orientable corner signs re-derive from the orientation") {
    // The stored table must agree with the local rule evaluated on the
    // orientation assignment, and negating the orientation swaps + and -.
    const Triangulation& t = builtin_figure8();
    auto signs = corner_signs(t);
    auto o = orientation(t);
    REQUIRE(o.has_value());
    for (int tet = 0; tet < 2; ++tet)
        for (int e = 0; e < 6; ++e) {
            auto [a, b] = kEdgePairs[static_cast<std::size_t>(e)];
            const auto& entry = signs.per_slot[static_cast<std::size_t>(6 * tet + e)];
            for (int q = 0; q < 3; ++q) {
                if (q == quad_separating(a, b)) continue;
                int s = (*o)[static_cast<std::size_t>(tet)] *
                        permutation_sign(a, b, quad_partner(q, a), quad_partner(q, b));
                CHECK((s > 0 ? entry.quad_plus : entry.quad_minus) == q);
                // Reversed orientation flips every sign.
                CHECK((-s > 0 ? entry.quad_plus : entry.quad_minus) != q);
            }
        }
}

TEST_CASE("normalized rows reduce the gcd and fix the sign") {
    IntMatrix m{{4, -2, -2}, {0, 0, 0}, {-3, 6, 0}};
    auto rows = normalized_rows(m);
    CHECK(rows[0] == qv({-2, 1, 1}));
    CHECK(rows[1] == qv({0, 0, 0}));
    CHECK(rows[2] == qv({-1, 2, 0}));
}
