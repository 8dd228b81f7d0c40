// Acceptance suite: one pass/fail line per criterion, exact arithmetic,
// no tolerances. Exits nonzero if any criterion fails.
#include "spun/boundary.hpp"
#include "spun/errors.hpp"
#include "spun/hilbert.hpp"
#include "spun/linalg.hpp"
#include "spun/normal_coords.hpp"
#include "spun/q_theory.hpp"
#include "spun/triangulation.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace spun;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

IntVector qv(std::initializer_list<int> xs) {
    IntVector v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

std::vector<IntVector> sorted_normalized(const IntMatrix& m) {
    auto rows = normalized_rows(m);
    for (auto& r : rows) std::sort(r.begin(), r.end());
    std::sort(rows.begin(), rows.end());
    return rows;
}

IntVector combine(const std::vector<IntVector>& gens, const std::vector<int>& coeffs) {
    IntVector out(gens.front().size(), Int(0));
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += Int(coeffs[g]) * gens[g][j];
    return out;
}

std::string show_class(const HomologyClass& h) {
    std::string s = "(";
    for (std::size_t i = 0; i < h.free_part.size(); ++i) {
        if (i) s += ",";
        s += h.free_part[i].str();
    }
    for (const auto& [r, m] : h.torsion) s += ";" + r.str() + " mod " + m.str();
    return s + ")";
}

} // namespace

int main() {
    criterion(1, "figure-8 counts and dimensions", [](std::string& detail) {
        const Triangulation& t = builtin_figure8();
        auto edges = edge_classes(t);
        auto links = cusps(t);
        auto compat = compatibility_system(t);
        std::size_t dim_v = compat.matrix.cols() - rank(compat.matrix);
        int dim_w = dim_W(t);
        std::ostringstream d;
        d << "k=" << t.num_tetrahedra() << " e=" << edges.size() << " cusps=" << links.size()
          << " dimV=" << dim_v << " dimW=" << dim_w;
        detail = d.str();
        return t.num_tetrahedra() == 2 && edges.size() == 2 && links.size() == 1 &&
               links[0].kind == CuspLink::Kind::torus && edges[0].degree() == 6 &&
               edges[1].degree() == 6 && dim_v == 4 && dim_w == 5;
    });

    criterion(2, "canonical basis pairing and span", [](std::string&) {
        std::vector<Triangulation> tris;
        tris.push_back(builtin_figure8());
        tris.push_back(builtin_gieseking());
        tris.push_back(double_cover(builtin_gieseking()).cover);
        for (const auto& t : tris) {
            const int k = t.num_tetrahedra();
            auto basis = canonical_basis(t); // validates count and independence
            const int e = static_cast<int>(basis.size()) - k;
            for (int i = 0; i < e; ++i) {
                RatVector phi = edge_functional(t, i);
                for (int j = 0; j < k; ++j)
                    if (evaluate(phi, basis[static_cast<std::size_t>(j)]) != Rat(0)) return false;
                for (int j = 0; j < e; ++j) {
                    Rat want = (i == j) ? Rat(-2) : Rat(0);
                    if (evaluate(phi, basis[static_cast<std::size_t>(k + j)]) != want) return false;
                }
            }
            auto nullspace = integer_nullspace(compatibility_system(t).matrix);
            if (nullspace.size() != basis.size()) return false;
            for (const auto& n : nullspace)
                if (!in_rational_span(basis, n)) return false;
        }
        return true;
    });

    criterion(3, "Q-matching systems match the conventional equations", [](std::string&) {
        IntMatrix f8_ref{{-2, 1, 1, -2, 1, 1}, {2, -1, -1, 2, -1, -1}};
        auto f8 = q_matching_system(builtin_figure8()).matrix;
        if (sorted_normalized(f8) != sorted_normalized(f8_ref)) return false;
        if (rank(f8) != 1) return false;
        IntMatrix gk_ref{{-2, 1, 1}};
        auto gk = q_matching_system(builtin_gieseking()).matrix;
        return sorted_normalized(gk) == sorted_normalized(gk_ref);
    });

    criterion(4, "fundamental solutions", [](std::string& detail) {
        auto gk = q_matching_system(builtin_gieseking()).matrix;
        auto gfs = fundamental_solutions(gk);
        bool gk_ok = gfs.solutions.size() == 3 && gfs.contains(qv({1, 1, 1})) &&
                     gfs.contains(qv({1, 2, 0})) && gfs.contains(qv({1, 0, 2}));
        auto f8 = q_matching_system(builtin_figure8()).matrix;
        auto ffs = fundamental_solutions(f8);
        bool f8_ok = ffs.solutions.size() == 20;
        for (auto s : {qv({1, 0, 0, 0, 0, 2}), qv({1, 2, 0, 0, 0, 0}), qv({1, 1, 1, 0, 0, 0}),
                       qv({1, 1, 0, 0, 1, 0}), qv({1, 1, 0, 0, 0, 1}), qv({1, 0, 0, 0, 1, 1})})
            f8_ok = f8_ok && ffs.contains(s);
        bool oracle = verify_hilbert(gk, gfs, 6) && verify_hilbert(f8, ffs, 4);
        std::ostringstream d;
        d << "gieseking=" << gfs.solutions.size() << " figure8=" << ffs.solutions.size()
          << " oracle=" << (oracle ? "ok" : "bad");
        detail = d.str();
        return gk_ok && f8_ok && oracle;
    });

    criterion(5, "figure-8 boundary map", [](std::string& detail) {
        const Triangulation& t = builtin_figure8();
        auto cls = [&](std::initializer_list<int> xs) { return boundary_map(t, qv(xs)).front(); };
        HomologyClass s1 = cls({1, 0, 0, 0, 0, 2});
        HomologyClass s2 = cls({1, 2, 0, 0, 0, 0});
        HomologyClass s3 = cls({1, 1, 1, 0, 0, 0});
        HomologyClass s4 = cls({1, 1, 0, 0, 1, 0});
        HomologyClass s5 = cls({1, 1, 0, 0, 0, 1});
        HomologyClass s6 = cls({1, 0, 0, 0, 1, 1});

        bool chains_ok = true;
        auto fs = fundamental_solutions(q_matching_system(t).matrix);
        for (const auto& s : fs.solutions) {
            try {
                boundary_chain(t, s);
            } catch (const NotACycle&) {
                chains_ok = false;
            }
        }

        bool basis_ok = true;
        for (const auto& v : canonical_basis(t))
            for (const auto& h : boundary_map(t, q_project(v)))
                if (!h.is_zero()) basis_ok = false;

        auto lattice = integer_nullspace(q_matching_system(t).matrix);
        std::vector<IntVector> images;
        for (const auto& g : lattice) images.push_back(flatten_classes(boundary_map(t, g)));
        std::size_t image_rank = rank(IntMatrix::from_rows(images));
        bool kernel_ok = lattice.size() - image_rank == 3;

        auto idx = image_index(t);
        bool index_ok = idx.finite && idx.index == 2;

        std::ostringstream d;
        d << "del(s3)=" << show_class(s3) << " del(s6)=" << show_class(s6)
          << " gcds(s1,s2,s4,s5)=" << s1.free_gcd().str() << "," << s2.free_gcd().str() << ","
          << s4.free_gcd().str() << "," << s5.free_gcd().str() << " dim_ker="
          << lattice.size() - image_rank << " index="
          << (idx.finite ? idx.index.str() : std::string("infinite"));
        detail = d.str();

        // A zero class for s6 would force a 4-dimensional kernel, against the
        // dim-3 check below; the assertion is kept as committed and the
        // computed value is printed in the detail line.
        bool s6_zero = s6.is_zero();
        return s3.is_zero() && s6_zero && !s1.is_zero() && s1.free_gcd() == 1 &&
               !s2.is_zero() && s2.free_gcd() == 1 && !s5.is_zero() && s5.free_gcd() == 1 &&
               s4.free_gcd() == 2 && chains_ok && basis_ok && kernel_ok && index_ok;
    });

    criterion(6, "Gieseking boundary map", [](std::string& detail) {
        const Triangulation& g = builtin_gieseking();
        HomologyClass t1 = boundary_map(g, qv({1, 1, 1})).front();
        HomologyClass t2 = boundary_map(g, qv({1, 2, 0})).front();
        HomologyClass t3 = boundary_map(g, qv({1, 0, 2})).front();
        auto idx = image_index(g);
        std::ostringstream d;
        d << "del(t1)=" << show_class(t1) << " del(t2)=" << show_class(t2) << " del(t3)="
          << show_class(t3) << " index=" << (idx.finite ? idx.index.str() : std::string("infinite"))
          << " (committed golden: 4)";
        detail = d.str();
        return t1.is_zero() && !t2.is_zero() && !t3.is_zero() && t2 == -t3 && idx.finite &&
               idx.index == 4;
    });

    criterion(7, "double cover of the Gieseking is the figure-8", [](std::string&) {
        DoubleCover dc = double_cover(builtin_gieseking());
        return dc.cover.num_tetrahedra() == 2 && isomorphic(dc.cover, builtin_figure8());
    });

    criterion(8, "randomized property suite", [](std::string&) {
        // Boundary linearity, cycle soundness, kernel = compact classes.
        for (const Triangulation* t : {&builtin_figure8(), &builtin_gieseking()}) {
            auto fs = fundamental_solutions(q_matching_system(*t).matrix);
            std::mt19937 rng(t->num_tetrahedra() == 2 ? 8881u : 8882u);
            std::uniform_int_distribution<int> d(-3, 3);
            std::uniform_int_distribution<std::size_t> pick(0, fs.solutions.size() - 1);
            bool orientable = orientation(*t).has_value();
            DoubleCover dc = orientable ? DoubleCover{*t, {}, {}} : double_cover(*t);
            for (int trial = 0; trial < 100; ++trial) {
                IntVector a = fs.solutions[pick(rng)], b = fs.solutions[pick(rng)];
                int na = d(rng), nb = d(rng);
                IntVector q = combine({a, b}, {na, nb});
                HomologyClass ha = boundary_map(*t, a).front();
                HomologyClass hb = boundary_map(*t, b).front();
                HomologyClass hq = boundary_map(*t, q).front();
                if (!(hq == Int(na) * ha + Int(nb) * hb)) return false;
                if (hq.is_zero() != is_compact_class(*t, q)) return false;
                try {
                    if (orientable)
                        boundary_chain(*t, q);
                    else
                        boundary_chain(dc.cover, lift_to_cover(*t, dc, q));
                } catch (const NotACycle&) {
                    return false;
                }
            }
        }
        // Exact nullspaces and Smith decompositions on random matrices.
        std::mt19937 rng(1729);
        std::uniform_int_distribution<int> entry(-2, 2);
        for (int trial = 0; trial < 50; ++trial) {
            IntMatrix a(3, 5);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 5; ++j) a(i, j) = entry(rng);
            auto basis = integer_nullspace(a);
            for (const auto& v : basis)
                for (const Int& x : a.apply(v))
                    if (x != 0) return false;
            IntMatrix cols = IntMatrix::from_columns(basis);
            // Box search: every small solution lies in the lattice span.
            IntVector x(5, Int(0));
            std::function<bool(std::size_t)> walk = [&](std::size_t col) {
                if (col == 5) {
                    for (const Int& v : a.apply(x))
                        if (v != 0) return true;
                    return solve_integer_in_lattice(cols, x).has_value();
                }
                for (int v = -2; v <= 2; ++v) {
                    x[col] = v;
                    if (!walk(col + 1)) return false;
                }
                x[col] = 0;
                return true;
            };
            if (!walk(0)) return false;
            auto sd = smith(a);
            if (!(sd.u * a * sd.v == sd.s)) return false;
            if (abs_int(determinant(sd.u)) != 1 || abs_int(determinant(sd.v)) != 1) return false;
        }
        return true;
    });

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
