#include "spun/boundary.hpp"

#include "spun/errors.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace spun {

namespace {

// Inverse of a unimodular integer matrix (exact).
IntMatrix unimodular_inverse(const IntMatrix& u) {
    const std::size_t n = u.rows();
    IntMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        RatVector e(n, Rat(0));
        e[j] = 1;
        auto col = solve_rational(u, e);
        if (!col) throw MathError("matrix expected to be unimodular is singular");
        for (std::size_t i = 0; i < n; ++i) {
            if (denominator((*col)[i]) != 1)
                throw MathError("matrix expected to be unimodular has a non-integer inverse");
            inv(i, j) = numerator((*col)[i]);
        }
    }
    return inv;
}

} // namespace

// ---------------------------------------------------------------------------
// CuspComplex

CuspComplex::CuspComplex(const Triangulation& tri, int cusp_index) : cusp_(cusp_index) {
    auto links = cusps(tri);
    if (cusp_index < 0 || cusp_index >= static_cast<int>(links.size()))
        throw ValidationError("cusp index out of range");
    const CuspLink& link = links[static_cast<std::size_t>(cusp_index)];
    kind_ = link.kind;
    faces_ = link.triangles;

    std::map<std::pair<int, int>, int> face_id;
    for (std::size_t i = 0; i < faces_.size(); ++i) face_id[faces_[i]] = static_cast<int>(i);

    // Pair up the triangle sides into complex edges.
    std::map<std::tuple<int, int, int>, int> edge_of_side;
    std::vector<std::pair<std::tuple<int, int, int>, std::tuple<int, int, int>>> edge_sides;
    for (auto [t, v] : faces_) {
        for (int f = 0; f < 4; ++f) {
            if (f == v) continue;
            std::tuple<int, int, int> s{t, v, f};
            if (edge_of_side.count(s)) continue;
            const FaceGluing& g = tri.gluing(t, f);
            std::tuple<int, int, int> s2{g.tet, g.perm(v), g.perm(f)};
            int id = static_cast<int>(edge_sides.size());
            edge_of_side[s] = id;
            edge_of_side[s2] = id;
            edge_sides.push_back({std::min(s, s2), std::max(s, s2)});
        }
    }
    num_edges_ = edge_sides.size();

    // Corner orbits are the complex vertices.
    std::map<std::tuple<int, int, int>, int> vertex_of_corner;
    {
        // Union-find keyed by corner triple.
        std::map<std::tuple<int, int, int>, std::tuple<int, int, int>> parent;
        auto find = [&](std::tuple<int, int, int> x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (auto [t, v] : faces_)
            for (int w = 0; w < 4; ++w) {
                if (w == v) continue;
                std::tuple<int, int, int> c{t, v, w};
                parent.emplace(c, c);
            }
        for (auto [t, v] : faces_)
            for (int f = 0; f < 4; ++f) {
                if (f == v) continue;
                const FaceGluing& g = tri.gluing(t, f);
                for (int w = 0; w < 4; ++w) {
                    if (w == v || w == f) continue;
                    auto a = find({t, v, w});
                    auto b = find({g.tet, g.perm(v), g.perm(w)});
                    if (a != b) parent[std::max(a, b)] = std::min(a, b);
                }
            }
        std::vector<std::tuple<int, int, int>> roots;
        for (auto& [c, p] : parent) {
            (void)p;
            roots.push_back(find(c));
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        std::map<std::tuple<int, int, int>, int> root_id;
        for (std::size_t i = 0; i < roots.size(); ++i) root_id[roots[i]] = static_cast<int>(i);
        for (auto& [c, p] : parent) {
            (void)p;
            vertex_of_corner[c] = root_id[find(c)];
        }
        num_vertices_ = roots.size();
    }

    if (static_cast<long>(num_vertices_) - static_cast<long>(num_edges_) +
            static_cast<long>(faces_.size()) !=
        0)
        throw NonCuspedLink("cusp complex has nonzero Euler characteristic");

    // Orient each edge on its representative side, then transport the
    // direction to the partner side through the face gluing.
    sides_.clear();
    for (auto& [rep, other] : edge_sides) {
        auto [t, v, f] = rep;
        int a = -1, b = -1;
        for (int w = 0; w < 4; ++w) {
            if (w == v || w == f) continue;
            if (a < 0) a = w;
            else b = w;
        }
        int ua = vertex_of_corner.at({t, v, a});
        int ub = vertex_of_corner.at({t, v, b});
        int from_w = (ub < ua) ? b : a;
        int to_w = (from_w == a) ? b : a;

        int id = edge_of_side.at(rep);
        Side srep{t, v, f, id, from_w, to_w};
        side_lookup_[rep] = static_cast<int>(sides_.size());
        sides_.push_back(srep);
        if (other != rep) {
            const FaceGluing& g = tri.gluing(t, f);
            auto [t2, v2, f2] = other;
            assert(t2 == g.tet && v2 == g.perm(v) && f2 == g.perm(f));
            Side spart{t2, v2, f2, id, g.perm(from_w), g.perm(to_w)};
            side_lookup_[other] = static_cast<int>(sides_.size());
            sides_.push_back(spart);
        }
    }

    // Boundary matrices.
    d1_ = IntMatrix(num_vertices_, num_edges_);
    for (auto& [rep, other] : edge_sides) {
        (void)other;
        const Side& s = sides_[static_cast<std::size_t>(side_lookup_.at(rep))];
        int from = vertex_of_corner.at({s.tet, s.v, s.from_w});
        int to = vertex_of_corner.at({s.tet, s.v, s.to_w});
        d1_(static_cast<std::size_t>(to), static_cast<std::size_t>(s.edge)) += 1;
        d1_(static_cast<std::size_t>(from), static_cast<std::size_t>(s.edge)) -= 1;
    }

    d2_ = IntMatrix(num_edges_, faces_.size());
    for (auto [t, v] : faces_) {
        int col = face_id.at({t, v});
        int ws[3], n = 0;
        for (int w = 0; w < 4; ++w)
            if (w != v) ws[n++] = w;
        for (int i = 0; i < 3; ++i) {
            int x = ws[i], y = ws[(i + 1) % 3];
            int f = 6 - v - x - y; // the face holding the side from corner x to corner y
            const Side& s = sides_[static_cast<std::size_t>(side_lookup_.at({t, v, f}))];
            int sign = (s.from_w == x && s.to_w == y) ? 1 : -1;
            d2_(static_cast<std::size_t>(s.edge), static_cast<std::size_t>(col)) += sign;
        }
    }

    IntMatrix prod = d1_ * d2_;
    if (!prod.is_zero()) throw MathError("cusp complex boundary maps do not compose to zero");

    // Homology data: saturated kernel of d1, then Smith of d2 expressed in
    // the kernel basis.
    auto kernel_cols = integer_nullspace(d1_);
    kernel_ = IntMatrix::from_columns(kernel_cols);
    const std::size_t r = kernel_cols.size();

    IntMatrix x(r, faces_.size());
    for (std::size_t j = 0; j < faces_.size(); ++j) {
        auto w = solve_integer_in_lattice(kernel_, d2_.column(j));
        if (!w) throw MathError("face boundary is not an integral kernel combination");
        for (std::size_t i = 0; i < r; ++i) x(i, j) = (*w)[i];
    }
    SmithDecomposition sd = smith(x);
    u_x_ = sd.u;
    x_diag_ = IntVector(r, Int(0));
    for (std::size_t i = 0; i < std::min(r, faces_.size()); ++i) x_diag_[i] = sd.s(i, i);
    for (std::size_t i = 0; i < r; ++i) {
        if (x_diag_[i] == 0) {
            free_rows_.push_back(i);
        } else if (x_diag_[i] != 1) {
            torsion_rows_.push_back(i);
            torsion_orders_.push_back(x_diag_[i]);
        }
    }
}

const CuspComplex::Side& CuspComplex::side(int tet, int v, int f) const {
    return sides_[static_cast<std::size_t>(side_lookup_.at({tet, v, f}))];
}

bool CuspComplex::is_cycle(const IntVector& chain) const {
    if (chain.size() != num_edges_) return false;
    for (const Int& x : d1_.apply(chain))
        if (x != 0) return false;
    return true;
}

IntVector CuspComplex::cycle_coordinates(const IntVector& chain) const {
    auto w = solve_integer_in_lattice(kernel_, chain);
    if (!w) throw MathError("cycle is not an integral kernel combination");
    return *w;
}

IntVector CuspComplex::smith_coordinates(const IntVector& chain) const {
    return u_x_.apply(cycle_coordinates(chain));
}

CuspComplex cusp_complex(const Triangulation& tri, int cusp_index) {
    return CuspComplex(tri, cusp_index);
}

// ---------------------------------------------------------------------------
// Homology classes

bool HomologyClass::is_zero() const {
    for (const Int& x : free_part)
        if (x != 0) return false;
    for (const auto& [r, m] : torsion) {
        (void)m;
        if (r != 0) return false;
    }
    return true;
}

Int HomologyClass::free_gcd() const { return vector_gcd(free_part); }

HomologyClass operator+(const HomologyClass& a, const HomologyClass& b) {
    if (a.free_part.size() != b.free_part.size() || a.torsion.size() != b.torsion.size())
        throw MathError("homology classes live in different groups");
    HomologyClass c = a;
    for (std::size_t i = 0; i < c.free_part.size(); ++i) c.free_part[i] += b.free_part[i];
    for (std::size_t i = 0; i < c.torsion.size(); ++i) {
        if (a.torsion[i].second != b.torsion[i].second)
            throw MathError("homology classes live in different groups");
        c.torsion[i].first = (a.torsion[i].first + b.torsion[i].first) % a.torsion[i].second;
        if (c.torsion[i].first < 0) c.torsion[i].first += a.torsion[i].second;
    }
    return c;
}

HomologyClass operator-(const HomologyClass& a) {
    HomologyClass c = a;
    for (Int& x : c.free_part) x = -x;
    for (auto& [r, m] : c.torsion)
        if (r != 0) r = m - r;
    return c;
}

HomologyClass operator*(const Int& n, const HomologyClass& a) {
    HomologyClass c = a;
    for (Int& x : c.free_part) x *= n;
    for (auto& [r, m] : c.torsion) {
        r = (r * n) % m;
        if (r < 0) r += m;
    }
    return c;
}

bool operator==(const HomologyClass& a, const HomologyClass& b) {
    return a.free_part == b.free_part && a.torsion == b.torsion;
}

HomologyClass homology_class(const CuspComplex& cc, const BoundaryChain& chain) {
    if (!cc.is_cycle(chain)) throw NotACycle("chain is not a 1-cycle on the cusp complex");
    IntVector y = cc.smith_coordinates(chain);
    HomologyClass h;
    for (std::size_t i : cc.free_rows()) h.free_part.push_back(y[i]);
    const IntVector& orders = cc.h1_torsion_orders();
    for (std::size_t t = 0; t < cc.torsion_rows().size(); ++t) {
        Int r = y[cc.torsion_rows()[t]] % orders[t];
        if (r < 0) r += orders[t];
        h.torsion.push_back({r, orders[t]});
    }
    return h;
}

// ---------------------------------------------------------------------------
// Boundary chains

std::vector<BoundaryChain> boundary_chain(const Triangulation& tri, const QVector& q) {
    require_solution(q_matching_system(tri).matrix, q);
    auto links = cusps(tri);
    auto signs = corner_signs(tri);

    std::vector<CuspComplex> complexes;
    std::vector<int> cusp_of_vertex_slot(static_cast<std::size_t>(4 * tri.num_tetrahedra()), -1);
    for (const auto& link : links) {
        complexes.emplace_back(tri, link.index);
        for (auto [t, v] : link.triangles)
            cusp_of_vertex_slot[static_cast<std::size_t>(4 * t + v)] = link.index;
    }

    std::vector<BoundaryChain> chains;
    for (const auto& cc : complexes) chains.emplace_back(cc.num_edges(), Int(0));

    for (int t = 0; t < tri.num_tetrahedra(); ++t)
        for (int qd = 0; qd < 3; ++qd) {
            const Int& n = q[static_cast<std::size_t>(quad_coord(t, qd))];
            if (n == 0) continue;
            for (int v = 0; v < 4; ++v) {
                int face = quad_partner(qd, v);
                int x = -1, y = -1;
                for (int w = 0; w < 4; ++w) {
                    if (w == v || w == face) continue;
                    if (x < 0) x = w;
                    else y = w;
                }
                int sx = signs.sign(t, edge_slot_index(v, x), qd);
                int sy = signs.sign(t, edge_slot_index(v, y), qd);
                if (sx == 0 || sy == 0 || sx == sy)
                    throw NotACycle("corner signs do not orient a quad boundary arc");
                int from_w = sx > 0 ? x : y;
                int to_w = sx > 0 ? y : x;
                int ci = cusp_of_vertex_slot[static_cast<std::size_t>(4 * t + v)];
                const CuspComplex::Side& s = complexes[static_cast<std::size_t>(ci)].side(t, v, face);
                Int coeff = (s.from_w == from_w && s.to_w == to_w) ? n : Int(-n);
                chains[static_cast<std::size_t>(ci)][static_cast<std::size_t>(s.edge)] += coeff;
            }
        }

    for (std::size_t i = 0; i < complexes.size(); ++i)
        if (!complexes[i].is_cycle(chains[i]))
            throw NotACycle("quad boundary chain fails to close on cusp " + std::to_string(i));
    return chains;
}

// ---------------------------------------------------------------------------
// Boundary map

namespace {

// Signed permutation action of the deck involution on the edge chains of a
// cover cusp complex.
IntMatrix sigma_edge_action(const DoubleCover& dc, const CuspComplex& cc) {
    IntMatrix m(cc.num_edges(), cc.num_edges());
    std::vector<bool> done(cc.num_edges(), false);
    for (auto [t, v] : cc.faces())
        for (int f = 0; f < 4; ++f) {
            if (f == v) continue;
            const CuspComplex::Side& s = cc.side(t, v, f);
            if (done[static_cast<std::size_t>(s.edge)]) continue;
            int t2 = dc.sigma[static_cast<std::size_t>(t)];
            const CuspComplex::Side& s2 = cc.side(t2, v, f);
            int sign;
            if (s2.from_w == s.from_w && s2.to_w == s.to_w) sign = 1;
            else if (s2.from_w == s.to_w && s2.to_w == s.from_w) sign = -1;
            else throw MathError("deck involution does not respect side corners");
            m(static_cast<std::size_t>(s2.edge), static_cast<std::size_t>(s.edge)) = sign;
            done[static_cast<std::size_t>(s.edge)] = true;
        }
    return m;
}

// Free H1 coordinates of a cycle.
IntVector free_coordinates(const CuspComplex& cc, const IntVector& cycle) {
    IntVector y = cc.smith_coordinates(cycle);
    IntVector out;
    for (std::size_t i : cc.free_rows()) out.push_back(y[i]);
    return out;
}

// Matrix of the deck involution on the free part of H1 of a sigma-invariant
// cover cusp complex. Basis cycles are kernel * U^{-1} e_row.
IntMatrix sigma_free_action(const CuspComplex& cc, const IntMatrix& edge_action) {
    const auto& rows = cc.free_rows();
    IntMatrix u_inv = unimodular_inverse(cc.u_x());
    IntMatrix action(rows.size(), rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
        IntVector z = cc.kernel().apply(u_inv.column(rows[j]));
        IntVector y = free_coordinates(cc, edge_action.apply(z));
        for (std::size_t i = 0; i < rows.size(); ++i) action(i, j) = y[i];
    }
    return action;
}

// Generator of the rank-one sublattice anti-fixed by the involution,
// first nonzero coordinate positive.
IntVector anti_invariant_generator(const IntMatrix& sigma_action) {
    const std::size_t n = sigma_action.rows();
    IntMatrix a = sigma_action;
    for (std::size_t i = 0; i < n; ++i) a(i, i) += 1;
    auto basis = integer_nullspace(a);
    if (basis.size() != 1)
        throw MathError("anti-invariant sublattice of the cover cusp has rank " +
                        std::to_string(basis.size()));
    IntVector g = basis.front();
    for (const Int& x : g) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : g) y = -y;
        break;
    }
    return g;
}

} // namespace

std::vector<HomologyClass> cover_boundary_classes(const Triangulation& tri,
                                                  const DoubleCover& cover, const QVector& q) {
    QVector z = lift_to_cover(tri, cover, q);
    auto chains = boundary_chain(cover.cover, z);
    std::vector<HomologyClass> classes;
    for (std::size_t i = 0; i < chains.size(); ++i)
        classes.push_back(homology_class(CuspComplex(cover.cover, static_cast<int>(i)), chains[i]));
    return classes;
}

namespace {

// Cover cusp indices covering each base cusp, in base-cusp order.
std::vector<std::vector<int>> cover_cusps_over(const Triangulation& tri, const DoubleCover& dc) {
    auto base_links = cusps(tri);
    auto cover_links = cusps(dc.cover);
    std::vector<int> base_of_slot(static_cast<std::size_t>(4 * tri.num_tetrahedra()), -1);
    for (const auto& link : base_links)
        for (auto [t, v] : link.triangles)
            base_of_slot[static_cast<std::size_t>(4 * t + v)] = link.index;
    std::vector<std::vector<int>> over(base_links.size());
    for (const auto& link : cover_links) {
        auto [ct, v] = link.triangles.front();
        int b = base_of_slot[static_cast<std::size_t>(
            4 * dc.projection[static_cast<std::size_t>(ct)] + v)];
        over[static_cast<std::size_t>(b)].push_back(link.index);
    }
    return over;
}

// Reported class of one base cusp of a non-orientable triangulation. A
// torus cusp has two covering cusps; the lesser one is reported. A Klein
// bottle cusp has one sigma-invariant covering torus: the cover class is
// expressed in the anti-fixed rank-one sublattice, and the torsion
// residues of the Klein bottle complex are reported as zero (the
// symmetrized projection of the chain cancels exactly).
HomologyClass klein_or_lifted_class(const Triangulation& tri, const DoubleCover& dc,
                                    const std::vector<CuspComplex>& cover_ccs,
                                    const std::vector<BoundaryChain>& cover_chains,
                                    const CuspLink& base_link, const std::vector<int>& covering) {
    if (base_link.kind == CuspLink::Kind::torus) {
        if (covering.size() != 2)
            throw MathError("torus cusp is not covered by two cusps");
        int ci = std::min(covering[0], covering[1]);
        return homology_class(cover_ccs[static_cast<std::size_t>(ci)],
                              cover_chains[static_cast<std::size_t>(ci)]);
    }
    if (covering.size() != 1)
        throw MathError("Klein bottle cusp is not covered by a single cusp");
    int ci = covering.front();
    const CuspComplex& cc = cover_ccs[static_cast<std::size_t>(ci)];
    const BoundaryChain& chain = cover_chains[static_cast<std::size_t>(ci)];

    IntMatrix edge_action = sigma_edge_action(dc, cc);
    // The lifted chain must be anti-invariant under the deck involution.
    IntVector image = edge_action.apply(chain);
    for (std::size_t i = 0; i < image.size(); ++i)
        if (image[i] != -chain[i])
            throw MathError("lifted boundary chain is not anti-invariant");

    IntVector cover_free = free_coordinates(cc, chain);
    IntMatrix action = sigma_free_action(cc, edge_action);
    IntVector g = anti_invariant_generator(action);

    Int m = 0;
    for (std::size_t j = 0; j < g.size(); ++j)
        if (g[j] != 0) {
            m = cover_free[j] / g[j];
            break;
        }
    for (std::size_t j = 0; j < g.size(); ++j)
        if (cover_free[j] != m * g[j])
            throw MathError("cover class lies outside the anti-invariant sublattice");

    CuspComplex base_cc(tri, base_link.index);
    HomologyClass h;
    h.free_part = {m};
    for (const Int& order : base_cc.h1_torsion_orders()) h.torsion.push_back({Int(0), order});
    return h;
}

} // namespace

std::vector<HomologyClass> boundary_map(const Triangulation& tri, const QVector& q) {
    if (orientation(tri)) {
        auto chains = boundary_chain(tri, q);
        std::vector<HomologyClass> classes;
        for (std::size_t i = 0; i < chains.size(); ++i)
            classes.push_back(homology_class(CuspComplex(tri, static_cast<int>(i)), chains[i]));
        return classes;
    }
    DoubleCover dc = double_cover(tri);
    QVector z = lift_to_cover(tri, dc, q);
    auto cover_chains = boundary_chain(dc.cover, z);
    std::vector<CuspComplex> cover_ccs;
    for (std::size_t i = 0; i < cover_chains.size(); ++i)
        cover_ccs.emplace_back(dc.cover, static_cast<int>(i));

    auto base_links = cusps(tri);
    auto over = cover_cusps_over(tri, dc);
    std::vector<HomologyClass> classes;
    for (const auto& link : base_links)
        classes.push_back(klein_or_lifted_class(tri, dc, cover_ccs, cover_chains, link,
                                                over[static_cast<std::size_t>(link.index)]));
    return classes;
}

SubgroupIndex image_index(const Triangulation& tri) {
    BoundaryAmbient ambient = boundary_ambient(tri);
    auto lattice = integer_nullspace(q_matching_system(tri).matrix);
    std::vector<IntVector> generators;
    for (const auto& g : lattice) generators.push_back(flatten_classes(boundary_map(tri, g)));
    return subgroup_index(ambient.free_rank, ambient.torsion_orders, generators);
}

BoundaryAmbient boundary_ambient(const Triangulation& tri) {
    BoundaryAmbient a;
    if (orientation(tri)) {
        for (std::size_t i = 0; i < cusps(tri).size(); ++i) {
            CuspComplex cc(tri, static_cast<int>(i));
            a.free_rank += cc.h1_rank();
            for (const Int& t : cc.h1_torsion_orders()) a.torsion_orders.push_back(t);
        }
        return a;
    }
    DoubleCover dc = double_cover(tri);
    auto base_links = cusps(tri);
    auto over = cover_cusps_over(tri, dc);
    for (const auto& link : base_links) {
        const auto& covering = over[static_cast<std::size_t>(link.index)];
        if (link.kind == CuspLink::Kind::torus) {
            int ci = *std::min_element(covering.begin(), covering.end());
            CuspComplex cc(dc.cover, ci);
            a.free_rank += cc.h1_rank();
            for (const Int& t : cc.h1_torsion_orders()) a.torsion_orders.push_back(t);
        } else {
            CuspComplex base_cc(tri, link.index);
            a.free_rank += 1;
            for (const Int& t : base_cc.h1_torsion_orders()) a.torsion_orders.push_back(t);
        }
    }
    return a;
}

IntVector flatten_classes(const std::vector<HomologyClass>& classes) {
    IntVector out;
    for (const auto& c : classes)
        for (const Int& x : c.free_part) out.push_back(x);
    for (const auto& c : classes)
        for (const auto& [r, m] : c.torsion) {
            (void)m;
            out.push_back(r);
        }
    return out;
}

} // namespace spun
