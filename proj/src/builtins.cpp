#include "spun/triangulation.hpp"

namespace spun {

// Fixed gluing tables. The figure-8 table is the orientable double cover
// of the Gieseking table, relabeled once so that the documented quad
// coordinate order matches the conventional solution listing.

namespace {

const std::string kFigure8 = R"(% figure-8 knot complement, two ideal tetrahedra
tetrahedra: 2
0: 1 3120 | 1 0213 | 1 2103 | 1 0321
1: 0 2103 | 0 0321 | 0 0213 | 0 3120
)";

const std::string kGieseking = R"(% Gieseking manifold, one ideal tetrahedron
tetrahedra: 1
0: 0 2130 | 0 0312 | 0 3102 | 0 0231
)";

} // namespace

const std::string& builtin_figure8_text() { return kFigure8; }
const std::string& builtin_gieseking_text() { return kGieseking; }

const Triangulation& builtin_figure8() {
    static const Triangulation tri = parse_triangulation(kFigure8);
    return tri;
}

const Triangulation& builtin_gieseking() {
    static const Triangulation tri = parse_triangulation(kGieseking);
    return tri;
}

} // namespace spun
