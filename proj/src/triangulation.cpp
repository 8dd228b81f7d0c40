#include "spun/triangulation.hpp"

#include "spun/errors.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace spun {

int edge_slot_index(int a, int b) {
    if (a > b) std::swap(a, b);
    for (std::size_t i = 0; i < kEdgePairs.size(); ++i)
        if (kEdgePairs[i].first == a && kEdgePairs[i].second == b)
            return static_cast<int>(i);
    return -1;
}

Triangulation::Triangulation(int num_tetrahedra,
                             std::vector<std::array<std::optional<FaceGluing>, 4>> gluings)
    : k_(num_tetrahedra), glu_(std::move(gluings)) {
    validate();
}

const FaceGluing& Triangulation::gluing(int tet, int face) const {
    return *glu_[static_cast<std::size_t>(tet)][static_cast<std::size_t>(face)];
}

bool Triangulation::is_glued(int tet, int face) const {
    return glu_[static_cast<std::size_t>(tet)][static_cast<std::size_t>(face)].has_value();
}

void Triangulation::validate() const {
    if (k_ <= 0) throw ValidationError("triangulation needs at least one tetrahedron");
    if (glu_.size() != static_cast<std::size_t>(k_))
        throw ValidationError("gluing table size does not match tetrahedron count");
    for (int t = 0; t < k_; ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = glu_[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
            if (!g)
                throw ValidationError("unglued face " + std::to_string(f) + " of tetrahedron " +
                                      std::to_string(t));
            if (g->tet < 0 || g->tet >= k_)
                throw ValidationError("gluing target out of range on tetrahedron " +
                                      std::to_string(t));
            int f2 = g->perm(f);
            if (g->tet == t && f2 == f)
                throw ValidationError("face " + std::to_string(f) + " of tetrahedron " +
                                      std::to_string(t) + " is glued to itself");
            const auto& back = glu_[static_cast<std::size_t>(g->tet)][static_cast<std::size_t>(f2)];
            if (!back || back->tet != t || !(back->perm == g->perm.inverse()))
                throw ValidationError("gluing of face " + std::to_string(f) + " of tetrahedron " +
                                      std::to_string(t) + " is not involutive");
        }
    std::vector<bool> reached(static_cast<std::size_t>(k_), false);
    reached[0] = true;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
            int next = glu_[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)]->tet;
            if (!reached[static_cast<std::size_t>(next)]) {
                reached[static_cast<std::size_t>(next)] = true;
                stack.push_back(next);
            }
        }
    }
    for (bool r : reached)
        if (!r) throw ValidationError("triangulation is not connected");
}

// ---------------------------------------------------------------------------
// Edge classes

namespace {

struct WalkState {
    int tet;
    int v0, v1;     // ordered edge endpoints
    int exit_face;  // face through which the walk leaves next
    bool operator==(const WalkState& o) const {
        return tet == o.tet && v0 == o.v0 && v1 == o.v1 && exit_face == o.exit_face;
    }
};

WalkState step(const Triangulation& tri, const WalkState& s) {
    // The other face of the slot becomes the next entry face image.
    int entry = 6 - s.v0 - s.v1 - s.exit_face;
    const FaceGluing& g = tri.gluing(s.tet, s.exit_face);
    WalkState n;
    n.tet = g.tet;
    n.v0 = g.perm(s.v0);
    n.v1 = g.perm(s.v1);
    n.exit_face = g.perm(entry);
    return n;
}

} // namespace

std::vector<EdgeClass> edge_classes(const Triangulation& tri) {
    const int k = tri.num_tetrahedra();
    std::vector<bool> used(static_cast<std::size_t>(6 * k), false);
    std::vector<EdgeClass> classes;

    for (int t = 0; t < k; ++t) {
        for (int e = 0; e < 6; ++e) {
            if (used[static_cast<std::size_t>(6 * t + e)]) continue;
            auto [a, b] = kEdgePairs[static_cast<std::size_t>(e)];
            int fmin = -1;
            for (int f = 0; f < 4; ++f) {
                if (f != a && f != b) {
                    fmin = f;
                    break;
                }
            }
            EdgeClass cls;
            cls.index = static_cast<int>(classes.size());
            WalkState start{t, a, b, fmin};
            WalkState s = start;
            do {
                int lo = std::min(s.v0, s.v1), hi = std::max(s.v0, s.v1);
                int slot = 6 * s.tet + edge_slot_index(lo, hi);
                if (used[static_cast<std::size_t>(slot)])
                    throw ValidationError(
                        "edge walk revisits a tetrahedron edge; unsupported identification");
                used[static_cast<std::size_t>(slot)] = true;
                int entry = 6 - s.v0 - s.v1 - s.exit_face;
                cls.incidences.push_back(
                    {s.tet, s.v0, s.v1, entry, s.exit_face, s.v0 > s.v1});
                s = step(tri, s);
            } while (!(s == start));
            classes.push_back(std::move(cls));
        }
    }

    int total = 0;
    for (const auto& c : classes) total += c.degree();
    if (total != 6 * k)
        throw ValidationError("edge classes do not partition the edge slots");
    return classes;
}

// ---------------------------------------------------------------------------
// Cusps

namespace {

// Disjoint-set over small index ranges.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

// Corner (t, v, w): the corner of link triangle (t, v) lying on edge {v, w}.
int corner_id(int t, int v, int w) {
    // w != v; compress w to 0..2
    int wi = w - (w > v ? 1 : 0);
    return 12 * t + 3 * v + wi;
}

} // namespace

std::vector<CuspLink> cusps(const Triangulation& tri) {
    const int k = tri.num_tetrahedra();
    UnionFind vertex_orbits(4 * k);
    for (int t = 0; t < k; ++t)
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = tri.gluing(t, f);
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                vertex_orbits.unite(4 * t + v, 4 * g.tet + g.perm(v));
            }
        }

    std::map<int, std::vector<std::pair<int, int>>> orbits;
    for (int t = 0; t < k; ++t)
        for (int v = 0; v < 4; ++v)
            orbits[vertex_orbits.find(4 * t + v)].push_back({t, v});

    // Corner orbits give the link-complex vertices; one union-find for all
    // cusps at once.
    UnionFind corner_orbits(12 * k);
    for (int t = 0; t < k; ++t)
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = tri.gluing(t, f);
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                for (int w = 0; w < 4; ++w) {
                    if (w == v || w == f) continue;
                    corner_orbits.unite(corner_id(t, v, w),
                                        corner_id(g.tet, g.perm(v), g.perm(w)));
                }
            }
        }

    std::vector<CuspLink> result;
    for (auto& [root, tris] : orbits) {
        (void)root;
        CuspLink cusp;
        cusp.index = static_cast<int>(result.size());
        std::sort(tris.begin(), tris.end());
        cusp.triangles = tris;

        const int faces = static_cast<int>(tris.size());
        if ((3 * faces) % 2 != 0)
            throw NonCuspedLink("vertex link has an odd number of triangle sides");
        const int edges = 3 * faces / 2;

        std::vector<int> corner_roots;
        for (auto [t, v] : tris)
            for (int w = 0; w < 4; ++w) {
                if (w == v) continue;
                corner_roots.push_back(corner_orbits.find(corner_id(t, v, w)));
            }
        std::sort(corner_roots.begin(), corner_roots.end());
        corner_roots.erase(std::unique(corner_roots.begin(), corner_roots.end()),
                           corner_roots.end());
        const int vertices = static_cast<int>(corner_roots.size());

        const int chi = vertices - edges + faces;
        if (chi != 0)
            throw NonCuspedLink("vertex link " + std::to_string(cusp.index) +
                                " has Euler characteristic " + std::to_string(chi) +
                                "; not an ideal triangulation of a cusped manifold");

        // Orientability of the link: propagate triangle orientations across
        // side identifications. The reference cycle of link triangle (t,v)
        // runs through its corners in increasing w. Crossing a side must
        // reverse the induced direction.
        std::map<std::pair<int, int>, int> orient;
        bool orientable = true;
        for (const auto& seed : tris) {
            if (orient.count(seed)) continue;
            orient[seed] = 1;
            std::vector<std::pair<int, int>> stack{seed};
            while (!stack.empty() && orientable) {
                auto [t, v] = stack.back();
                stack.pop_back();
                int o = orient.at({t, v});
                for (int f = 0; f < 4; ++f) {
                    if (f == v) continue;
                    const FaceGluing& g = tri.gluing(t, f);
                    int t2 = g.tet, v2 = g.perm(v);
                    // Side in face f joins corners {v,a},{v,b}, a<b.
                    int a = -1, b = -1;
                    for (int w = 0; w < 4; ++w) {
                        if (w == v || w == f) continue;
                        if (a < 0) a = w;
                        else b = w;
                    }
                    // Forward in the reference cycle of (t,v): a -> b iff the
                    // ordered corner list (by w) has b following a cyclically.
                    auto forward = [](int vv, int x, int y) {
                        int ws[3], n = 0;
                        for (int w = 0; w < 4; ++w)
                            if (w != vv) ws[n++] = w;
                        for (int i = 0; i < 3; ++i)
                            if (ws[i] == x) return ws[(i + 1) % 3] == y;
                        return false;
                    };
                    int dir1 = forward(v, a, b) ? 1 : -1;
                    int dir2 = forward(v2, g.perm(a), g.perm(b)) ? 1 : -1;
                    // Opposite induced directions on the shared side.
                    int o2 = -o * dir1 * dir2;
                    auto it = orient.find({t2, v2});
                    if (it == orient.end()) {
                        orient[{t2, v2}] = o2;
                        stack.push_back({t2, v2});
                    } else if (it->second != o2) {
                        orientable = false;
                        break;
                    }
                }
            }
        }
        cusp.kind = orientable ? CuspLink::Kind::torus : CuspLink::Kind::klein_bottle;
        result.push_back(std::move(cusp));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Orientation and the double cover

std::optional<std::vector<int>> orientation(const Triangulation& tri) {
    const int k = tri.num_tetrahedra();
    std::vector<int> orient(static_cast<std::size_t>(k), 0);
    orient[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = tri.gluing(t, f);
            // Compatible gluings satisfy or(t) * or(t') = -sign(p).
            int want = -g.perm.sign() * orient[static_cast<std::size_t>(t)];
            int& o2 = orient[static_cast<std::size_t>(g.tet)];
            if (o2 == 0) {
                o2 = want;
                stack.push_back(g.tet);
            } else if (o2 != want) {
                return std::nullopt;
            }
        }
    }
    for (int o : orient)
        if (o == 0) throw ValidationError("triangulation is not connected");
    return orient;
}

DoubleCover double_cover(const Triangulation& tri) {
    if (orientation(tri))
        throw AlreadyOrientable("triangulation is orientable; no double cover built");
    const int k = tri.num_tetrahedra();
    // Lift (t, +) -> t and (t, -) -> t + k; a gluing with permutation p
    // connects lifts with sheet factor -sign(p).
    std::vector<std::array<std::optional<FaceGluing>, 4>> glu(static_cast<std::size_t>(2 * k));
    for (int t = 0; t < k; ++t)
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = tri.gluing(t, f);
            for (int sheet = 0; sheet < 2; ++sheet) {
                int eps = sheet == 0 ? 1 : -1;
                int eps2 = -g.perm.sign() * eps;
                int src = t + sheet * k;
                int dst = g.tet + (eps2 == 1 ? 0 : k);
                glu[static_cast<std::size_t>(src)][static_cast<std::size_t>(f)] =
                    FaceGluing{dst, g.perm};
            }
        }
    DoubleCover dc{Triangulation(2 * k, std::move(glu)), {}, {}};
    dc.sigma.resize(static_cast<std::size_t>(2 * k));
    dc.projection.resize(static_cast<std::size_t>(2 * k));
    for (int t = 0; t < k; ++t) {
        dc.sigma[static_cast<std::size_t>(t)] = t + k;
        dc.sigma[static_cast<std::size_t>(t + k)] = t;
        dc.projection[static_cast<std::size_t>(t)] = t;
        dc.projection[static_cast<std::size_t>(t + k)] = t;
    }
    assert(orientation(dc.cover).has_value());
    return dc;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

bool try_isomorphism(const Triangulation& a, const Triangulation& b, int image0,
                     const Perm4& label0) {
    const int k = a.num_tetrahedra();
    std::vector<std::optional<std::pair<int, Perm4>>> image(static_cast<std::size_t>(k));
    std::vector<bool> hit(static_cast<std::size_t>(k), false);
    image[0] = {image0, label0};
    hit[static_cast<std::size_t>(image0)] = true;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        auto [t_img, lab] = *image[static_cast<std::size_t>(t)];
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& ga = a.gluing(t, f);
            const FaceGluing& gb = b.gluing(t_img, lab(f));
            // Image of the neighbor through face f must be gb's target with
            // labeling gb.perm * lab * ga.perm^-1.
            Perm4 lab2 = gb.perm * lab * ga.perm.inverse();
            auto& slot = image[static_cast<std::size_t>(ga.tet)];
            if (!slot) {
                if (hit[static_cast<std::size_t>(gb.tet)]) return false;
                slot = {gb.tet, lab2};
                hit[static_cast<std::size_t>(gb.tet)] = true;
                stack.push_back(ga.tet);
            } else if (slot->first != gb.tet || !(slot->second == lab2)) {
                return false;
            }
        }
    }
    for (const auto& s : image)
        if (!s) return false; // disconnected input
    return true;
}

} // namespace

bool isomorphic(const Triangulation& a, const Triangulation& b) {
    if (a.num_tetrahedra() != b.num_tetrahedra()) return false;
    for (int t = 0; t < b.num_tetrahedra(); ++t)
        for (const Perm4& p : Perm4::all())
            if (try_isomorphism(a, b, t, p)) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('%');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

} // namespace

Triangulation parse_triangulation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int k = -1;

    while (std::getline(in, line)) {
        ++lineno;
        line = strip_comment(line);
        if (blank(line)) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key != "tetrahedra:")
            throw ParseError(lineno, "expected 'tetrahedra: <k>'");
        if (!(ls >> k) || k <= 0)
            throw ParseError(lineno, "invalid tetrahedron count");
        break;
    }
    if (k < 0) throw ParseError(lineno, "missing 'tetrahedra:' header");

    std::vector<std::array<std::optional<FaceGluing>, 4>> glu(static_cast<std::size_t>(k));
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    int rows = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_comment(line);
        if (blank(line)) continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head.empty() || head.back() != ':')
            throw ParseError(lineno, "expected '<tet>:'");
        int t;
        try {
            t = std::stoi(head.substr(0, head.size() - 1));
        } catch (...) {
            throw ParseError(lineno, "invalid tetrahedron index");
        }
        if (t < 0 || t >= k) throw ParseError(lineno, "tetrahedron index out of range");
        if (seen[static_cast<std::size_t>(t)])
            throw ParseError(lineno, "duplicate row for tetrahedron " + std::to_string(t));
        seen[static_cast<std::size_t>(t)] = true;

        std::string rest;
        std::getline(ls, rest);
        std::vector<std::string> fields;
        std::string field;
        std::istringstream fs(rest);
        while (std::getline(fs, field, '|')) fields.push_back(field);
        if (fields.size() != 4)
            throw ParseError(lineno, "expected 4 face entries separated by '|'");
        for (int f = 0; f < 4; ++f) {
            std::istringstream es(fields[static_cast<std::size_t>(f)]);
            std::string first;
            if (!(es >> first)) throw ParseError(lineno, "empty face entry");
            if (first == "-") continue; // unglued; rejected by validate()
            int target;
            try {
                target = std::stoi(first);
            } catch (...) {
                throw ParseError(lineno, "invalid gluing target");
            }
            std::string ps;
            if (!(es >> ps)) throw ParseError(lineno, "missing permutation");
            auto p = Perm4::parse(ps);
            if (!p) throw ParseError(lineno, "invalid permutation '" + ps + "'");
            std::string extra;
            if (es >> extra) throw ParseError(lineno, "trailing tokens in face entry");
            glu[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)] =
                FaceGluing{target, *p};
        }
        if (++rows == k) break;
    }
    if (rows != k) throw ParseError(lineno, "expected one gluing row per tetrahedron");

    while (std::getline(in, line)) {
        ++lineno;
        if (!blank(strip_comment(line)))
            throw ParseError(lineno, "unexpected content after gluing table");
    }
    return Triangulation(k, std::move(glu));
}

Triangulation load_triangulation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_triangulation(buf.str());
}

void validate_ideal(const Triangulation& tri) {
    auto links = cusps(tri); // throws NonCuspedLink when some chi != 0
    (void)links;
    auto edges = edge_classes(tri);
    if (static_cast<int>(edges.size()) != tri.num_tetrahedra())
        throw ValidationError(
            "edge count " + std::to_string(edges.size()) + " differs from tetrahedron count " +
            std::to_string(tri.num_tetrahedra()) +
            "; not an ideal triangulation of a cusped manifold");
}

} // namespace spun
