#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spun/errors.hpp"
#include "spun/triangulation.hpp"

#include <random>

using namespace spun;

namespace {

// 1-tetrahedron gluing table whose vertex link is a sphere.
const char* kNonCusped = "tetrahedra: 1\n0: 0 1023 | 0 1023 | 0 0132 | 0 0132\n";

Triangulation relabel(const Triangulation& tri, const std::vector<int>& tmap,
                      const std::vector<Perm4>& g) {
    int k = tri.num_tetrahedra();
    std::vector<std::array<std::optional<FaceGluing>, 4>> glu(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& gl = tri.gluing(t, f);
            glu[static_cast<std::size_t>(tmap[static_cast<std::size_t>(t)])]
               [static_cast<std::size_t>(g[static_cast<std::size_t>(t)](f))] = FaceGluing{
                   tmap[static_cast<std::size_t>(gl.tet)],
                   g[static_cast<std::size_t>(gl.tet)] * gl.perm *
                       g[static_cast<std::size_t>(t)].inverse()};
        }
    return Triangulation(k, std::move(glu));
}

} // namespace

TEST_CASE("builtin figure-8 parses to two tetrahedra") {
    const Triangulation& t = builtin_figure8();
    CHECK(t.num_tetrahedra() == 2);
    for (int i = 0; i < 2; ++i)
        for (int f = 0; f < 4; ++f) CHECK(t.is_glued(i, f));
}

TEST_CASE("builtin Gieseking parses to one tetrahedron") {
    CHECK(builtin_gieseking().num_tetrahedra() == 1);
}

TEST_CASE("parser reports syntax errors with line numbers") {
    CHECK_THROWS_AS(parse_triangulation("nonsense\n"), ParseError);
    try {
        parse_triangulation("tetrahedra: 2\n0: 1 0123 | 1 0123 | 1 0123 | 1 0123\nbogus\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_triangulation("tetrahedra: 1\n0: 0 0123 | 0 0123\n"), ParseError);
    CHECK_THROWS_AS(parse_triangulation("tetrahedra: 1\n0: 0 0192 | 0 0123 | 0 0123 | 0 0123\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_triangulation("tetrahedra: 1\n"), ParseError);
}

TEST_CASE("a face glued to itself is rejected") {
    // Face 0 of tetrahedron 0 maps to itself (permutation fixing 0).
    CHECK_THROWS_AS(
        parse_triangulation("tetrahedra: 1\n0: 0 0132 | 0 0132 | 0 0123 | 0 0123\n"),
        ValidationError);
}

TEST_CASE("non-involutive gluings are rejected") {
    CHECK_THROWS_AS(parse_triangulation("tetrahedra: 2\n"
                                        "0: 1 0123 | 1 0123 | 1 0123 | 1 0123\n"
                                        "1: 0 0123 | 0 0123 | 0 0132 | 0 0123\n"),
                    ValidationError);
}

TEST_CASE("an unglued face is rejected") {
    CHECK_THROWS_AS(parse_triangulation("tetrahedra: 1\n0: - | 0 0312 | 0 3102 | 0 0231\n"),
                    ValidationError);
}

TEST_CASE("comments and blank lines are ignored") {
    std::string text = "% header comment\n\n" + builtin_gieseking_text();
    CHECK(isomorphic(parse_triangulation(text), builtin_gieseking()));
}

TEST_CASE("figure-8 edge classes: two of degree six") {
    auto ec = edge_classes(builtin_figure8());
    REQUIRE(ec.size() == 2);
    CHECK(ec[0].degree() == 6);
    CHECK(ec[1].degree() == 6);
}

TEST_CASE("Gieseking edge classes: one of degree six") {
    auto ec = edge_classes(builtin_gieseking());
    REQUIRE(ec.size() == 1);
    CHECK(ec[0].degree() == 6);
}

TEST_CASE("edge degrees always sum to 6k") {
    for (const Triangulation* t : {&builtin_figure8(), &builtin_gieseking()}) {
        int total = 0;
        for (const auto& e : edge_classes(*t)) total += e.degree();
        CHECK(total == 6 * t->num_tetrahedra());
    }
}

TEST_CASE("edge walk incidences are cyclically consistent") {
    for (const Triangulation* t : {&builtin_figure8(), &builtin_gieseking()}) {
        for (const auto& cls : edge_classes(*t)) {
            for (std::size_t i = 0; i < cls.incidences.size(); ++i) {
                const auto& cur = cls.incidences[i];
                const auto& nxt = cls.incidences[(i + 1) % cls.incidences.size()];
                const FaceGluing& g = t->gluing(cur.tet, cur.exit_face);
                CHECK(g.tet == nxt.tet);
                CHECK(g.perm(cur.v0) == nxt.v0);
                CHECK(g.perm(cur.v1) == nxt.v1);
                CHECK(g.perm(cur.exit_face) == nxt.entry_face);
            }
        }
    }
}

TEST_CASE("figure-8 has one torus cusp") {
    auto cu = cusps(builtin_figure8());
    REQUIRE(cu.size() == 1);
    CHECK(cu[0].kind == CuspLink::Kind::torus);
    CHECK(cu[0].triangles.size() == 8); // 4k link triangles
}

TEST_CASE("Gieseking has one Klein bottle cusp") {
    auto cu = cusps(builtin_gieseking());
    REQUIRE(cu.size() == 1);
    CHECK(cu[0].kind == CuspLink::Kind::klein_bottle);
    CHECK(cu[0].triangles.size() == 4);
}

TEST_CASE("a spherical vertex link is rejected") {
    Triangulation t = parse_triangulation(kNonCusped);
    CHECK_THROWS_AS(cusps(t), NonCuspedLink);
    CHECK_THROWS_AS(validate_ideal(t), NonCuspedLink);
}

TEST_CASE("figure-8 is orientable with compatible gluings") {
    auto o = orientation(builtin_figure8());
    REQUIRE(o.has_value());
    CHECK((*o)[0] == 1);
    const Triangulation& t = builtin_figure8();
    for (int tet = 0; tet < 2; ++tet)
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = t.gluing(tet, f);
            CHECK((*o)[static_cast<std::size_t>(tet)] * (*o)[static_cast<std::size_t>(g.tet)] ==
                  -g.perm.sign());
        }
}

TEST_CASE("Gieseking is non-orientable, also after relabeling") {
    CHECK(!orientation(builtin_gieseking()));
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 8; ++trial) {
        Perm4 g = Perm4::all()[rng() % 24];
        Triangulation t = relabel(builtin_gieseking(), {0}, {g});
        CHECK(!orientation(t));
    }
}

TEST_CASE("double cover of the Gieseking is the figure-8") {
    DoubleCover dc = double_cover(builtin_gieseking());
    CHECK(dc.cover.num_tetrahedra() == 2);
    CHECK(dc.sigma[0] == 1);
    CHECK(dc.sigma[1] == 0);
    CHECK(dc.projection[0] == 0);
    CHECK(dc.projection[1] == 0);
    CHECK(orientation(dc.cover).has_value());
    CHECK(isomorphic(dc.cover, builtin_figure8()));
}

TEST_CASE("double cover of an orientable triangulation is refused") {
    CHECK_THROWS_AS(double_cover(builtin_figure8()), AlreadyOrientable);
}

TEST_CASE("isomorphic is reflexive and detects size mismatches") {
    CHECK(isomorphic(builtin_figure8(), builtin_figure8()));
    CHECK(isomorphic(builtin_gieseking(), builtin_gieseking()));
    CHECK(!isomorphic(builtin_figure8(), builtin_gieseking()));
}

TEST_CASE("isomorphic is invariant under relabeling") {
    std::mt19937 rng(1414);
    const auto& perms = Perm4::all();
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<int> tmap = (rng() % 2) ? std::vector<int>{0, 1} : std::vector<int>{1, 0};
        Triangulation t =
            relabel(builtin_figure8(), tmap, {perms[rng() % 24], perms[rng() % 24]});
        CHECK(isomorphic(t, builtin_figure8()));
        CHECK(isomorphic(builtin_figure8(), t));
        CHECK(!isomorphic(t, builtin_gieseking()));
    }
}

TEST_CASE("builtins satisfy the full ideal-triangulation contract") {
    validate_ideal(builtin_figure8());
    validate_ideal(builtin_gieseking());
    validate_ideal(double_cover(builtin_gieseking()).cover);
}

TEST_CASE("regluing along every gluing twice is the identity") {
    for (const Triangulation* t : {&builtin_figure8(), &builtin_gieseking()}) {
        for (int tet = 0; tet < t->num_tetrahedra(); ++tet)
            for (int f = 0; f < 4; ++f) {
                const FaceGluing& g = t->gluing(tet, f);
                const FaceGluing& back = t->gluing(g.tet, g.perm(f));
                CHECK(back.tet == tet);
                CHECK(back.perm(g.perm(f)) == f);
                CHECK((back.perm * g.perm) == Perm4());
            }
    }
}
