#pragma once
#include "spun/perm4.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spun {

// Face f of a tetrahedron is the face opposite vertex f. A gluing of
// face f of tetrahedron t records the target tetrahedron and a vertex
// permutation p with p(f) the matching face of the target.
struct FaceGluing {
    int tet = -1;
    Perm4 perm;
    bool operator==(const FaceGluing& o) const { return tet == o.tet && perm == o.perm; }
};

class Triangulation {
public:
    Triangulation(int num_tetrahedra,
                  std::vector<std::array<std::optional<FaceGluing>, 4>> gluings);

    int num_tetrahedra() const noexcept { return k_; }
    const FaceGluing& gluing(int tet, int face) const;
    bool is_glued(int tet, int face) const;

    // Validates involutivity and the no-self-face rule; called by the
    // constructor. An unglued face is rejected here as well.
    void validate() const;

private:
    int k_;
    std::vector<std::array<std::optional<FaceGluing>, 4>> glu_;
};

// Edge slots: the 6 vertex pairs of a tetrahedron in the fixed order
// {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}.
inline constexpr std::array<std::pair<int, int>, 6> kEdgePairs = {
    std::pair<int, int>{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

int edge_slot_index(int a, int b);

struct EdgeClass {
    struct Incidence {
        int tet;
        int v0, v1;    // ordered as traversed; {v0,v1} is the slot
        int entry_face; // face through which the walk entered
        int exit_face;  // face through which the walk leaves
        bool reversed;  // v0 > v1: the walk carries the slot against slot order
    };
    int index = 0;
    std::vector<Incidence> incidences; // cyclic walk order, starts at the least slot
    int degree() const { return static_cast<int>(incidences.size()); }
};

struct CuspLink {
    enum class Kind { torus, klein_bottle };
    int index = 0;
    std::vector<std::pair<int, int>> triangles; // (tet, vertex) slots, sorted
    Kind kind = Kind::torus;
};

struct DoubleCover {
    Triangulation cover;          // 2k tetrahedra; (t,+) = t, (t,-) = t + k
    std::vector<int> sigma;       // involution on cover tetrahedra
    std::vector<int> projection;  // cover tetrahedron -> base tetrahedron
};

// Orbits of the 6k edge slots under the face gluings, each with its
// cyclic traversal order. Classes are numbered by their least slot.
std::vector<EdgeClass> edge_classes(const Triangulation& tri);

// Ideal vertex links. Throws NonCuspedLink when some link has nonzero
// Euler characteristic.
std::vector<CuspLink> cusps(const Triangulation& tri);

// +-1 per tetrahedron with every gluing orientation-compatible, tetrahedron
// 0 normalized to +1; nullopt when the manifold is non-orientable.
std::optional<std::vector<int>> orientation(const Triangulation& tri);

// Orientable double cover of a non-orientable triangulation.
// Throws AlreadyOrientable otherwise.
DoubleCover double_cover(const Triangulation& tri);

// Combinatorial isomorphism, decided by exhaustive search over the
// images of tetrahedron 0 with propagation.
bool isomorphic(const Triangulation& a, const Triangulation& b);

// Text format parser; see the file-format notes in the README.
Triangulation parse_triangulation(const std::string& text);
Triangulation load_triangulation(const std::string& path);

// Checks the full ideal-triangulation contract: all links have Euler
// characteristic zero and the edge count equals the tetrahedron count.
void validate_ideal(const Triangulation& tri);

const Triangulation& builtin_figure8();
const Triangulation& builtin_gieseking();
const std::string& builtin_figure8_text();
const std::string& builtin_gieseking_text();

} // namespace spun
