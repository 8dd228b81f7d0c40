#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spun/errors.hpp"
#include "spun/hilbert.hpp"
#include "spun/q_theory.hpp"
#include "spun/triangulation.hpp"

#include <random>
#include <set>

using namespace spun;

namespace {

IntVector qv(std::initializer_list<int> xs) {
    IntVector v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

// Quad-coordinate images of the combinatorial symmetries of the builtin
// figure-8 table, derived once from its self-isomorphisms.
const int kFigure8QuadSymmetries[4][6] = {
    {0, 1, 2, 3, 4, 5},
    {0, 2, 1, 3, 5, 4},
    {3, 4, 5, 0, 1, 2},
    {3, 5, 4, 0, 2, 1},
};

} // namespace

TEST_CASE("Gieseking fundamental solutions are exactly the three generators") {
    auto fs = fundamental_solutions(q_matching_system(builtin_gieseking()).matrix);
    REQUIRE(fs.solutions.size() == 3);
    CHECK(fs.solutions[0] == qv({1, 0, 2}));
    CHECK(fs.solutions[1] == qv({1, 1, 1}));
    CHECK(fs.solutions[2] == qv({1, 2, 0}));
}

TEST_CASE("figure-8 has twenty fundamental solutions of the known shape") {
    auto fs = fundamental_solutions(q_matching_system(builtin_figure8()).matrix);
    REQUIRE(fs.solutions.size() == 20);
    for (const auto& s : fs.solutions) {
        CHECK(s[0] + s[3] == 1);
        CHECK(s[1] + s[2] + s[4] + s[5] == 2);
    }
    for (auto s : {qv({1, 0, 0, 0, 0, 2}), qv({1, 2, 0, 0, 0, 0}), qv({1, 1, 1, 0, 0, 0}),
                   qv({1, 1, 0, 0, 1, 0}), qv({1, 1, 0, 0, 0, 1}), qv({1, 0, 0, 0, 1, 1})})
        CHECK(fs.contains(s));
}

TEST_CASE("the six representatives sweep out all twenty solutions under symmetry") {
    auto fs = fundamental_solutions(q_matching_system(builtin_figure8()).matrix);
    std::set<IntVector> orbit;
    std::vector<IntVector> work = {qv({1, 0, 0, 0, 0, 2}), qv({1, 2, 0, 0, 0, 0}),
                                   qv({1, 1, 1, 0, 0, 0}), qv({1, 1, 0, 0, 1, 0}),
                                   qv({1, 1, 0, 0, 0, 1}), qv({1, 0, 0, 0, 1, 1})};
    while (!work.empty()) {
        IntVector v = work.back();
        work.pop_back();
        if (!orbit.insert(v).second) continue;
        for (const auto& sym : kFigure8QuadSymmetries) {
            IntVector w(6);
            for (int i = 0; i < 6; ++i) w[static_cast<std::size_t>(sym[i])] = v[static_cast<std::size_t>(i)];
            work.push_back(w);
        }
    }
    std::set<IntVector> all(fs.solutions.begin(), fs.solutions.end());
    CHECK(orbit == all);
}

TEST_CASE("an empty system generates the free orthant") {
    auto fs = fundamental_solutions(IntMatrix(0, 2));
    REQUIRE(fs.solutions.size() == 2);
    CHECK(fs.solutions[0] == qv({0, 1}));
    CHECK(fs.solutions[1] == qv({1, 0}));
}

TEST_CASE("verify_hilbert accepts the builtin sets") {
    auto gq = q_matching_system(builtin_gieseking()).matrix;
    CHECK(verify_hilbert(gq, fundamental_solutions(gq), 6));
    auto fq = q_matching_system(builtin_figure8()).matrix;
    CHECK(verify_hilbert(fq, fundamental_solutions(fq), 4));
}

TEST_CASE("verify_hilbert rejects an incomplete set") {
    auto gq = q_matching_system(builtin_gieseking()).matrix;
    FundamentalSet missing = fundamental_solutions(gq);
    missing.solutions.erase(
        std::find(missing.solutions.begin(), missing.solutions.end(), qv({1, 1, 1})));
    CHECK(!verify_hilbert(gq, missing, 6));
}

TEST_CASE("random small systems pass the brute-force oracle") {
    std::mt19937 rng(60901);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        IntMatrix a(2, 6);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 6; ++j) a(i, j) = d(rng);
        CAPTURE(trial);
        auto fs = fundamental_solutions(a);
        CHECK(verify_hilbert(a, fs, 5));
    }
}

TEST_CASE("column cap is enforced") {
    CHECK_THROWS_AS(fundamental_solutions(IntMatrix(1, 31)), ScaleLimit);
    CHECK_NOTHROW(fundamental_solutions(IntMatrix(0, 31), 40));
}
