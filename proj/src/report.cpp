#include "spun/report.hpp"

#include "spun/boundary.hpp"
#include "spun/errors.hpp"
#include "spun/hilbert.hpp"
#include "spun/linalg.hpp"
#include "spun/q_theory.hpp"

#include <json.hpp>

#include <sstream>

namespace spun {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string class_string(const HomologyClass& h) {
    std::string s = "(";
    for (std::size_t i = 0; i < h.free_part.size(); ++i) {
        if (i) s += ", ";
        s += h.free_part[i].str();
    }
    for (const auto& [r, m] : h.torsion) s += "; " + r.str() + " mod " + m.str();
    return s + ")";
}

ordered_json class_json(const HomologyClass& h) {
    ordered_json j;
    j["free"] = ordered_json::array();
    for (const Int& x : h.free_part) j["free"].push_back(x.str());
    j["torsion"] = ordered_json::array();
    for (const auto& [r, m] : h.torsion) {
        ordered_json t;
        t["residue"] = r.str();
        t["modulus"] = m.str();
        j["torsion"].push_back(t);
    }
    return j;
}

std::string vector_string(const IntVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += v[i].str();
    }
    return s;
}

ordered_json vector_json(const IntVector& v) {
    ordered_json j = ordered_json::array();
    for (const Int& x : v) j.push_back(x.str());
    return j;
}

ordered_json matrix_json(const IntMatrix& m) {
    ordered_json j = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(vector_json(m.row(i)));
    return j;
}

std::string cusp_kind_name(CuspLink::Kind k) {
    return k == CuspLink::Kind::torus ? "torus" : "klein_bottle";
}

Report finish(std::ostringstream& text, ordered_json& j) {
    return {text.str(), j.dump(2) + "\n"};
}

} // namespace

Report report_info(const Triangulation& tri, const std::string& input_name) {
    validate_ideal(tri);
    const int k = tri.num_tetrahedra();
    auto edges = edge_classes(tri);
    auto links = cusps(tri);
    bool orientable = orientation(tri).has_value();
    auto compat = compatibility_system(tri);
    const std::size_t dim_v = compat.matrix.cols() - rank(compat.matrix);
    const int dim_w = dim_W(tri);

    std::ostringstream t;
    ordered_json j;
    j["command"] = "info";
    j["input"] = input_name;
    t << "input: " << input_name << "\n";
    t << "tetrahedra: " << k << "\n";
    j["tetrahedra"] = std::to_string(k);
    t << "edges: " << edges.size() << "\n";
    j["edges"] = std::to_string(edges.size());
    t << "edge degrees:";
    ordered_json degrees = ordered_json::array();
    for (const auto& e : edges) {
        t << " " << e.degree();
        degrees.push_back(std::to_string(e.degree()));
    }
    t << "\n";
    j["edge_degrees"] = degrees;
    t << "cusps: " << links.size() << "\n";
    j["cusps"] = ordered_json::array();
    for (const auto& link : links) {
        t << "cusp " << link.index << ": " << cusp_kind_name(link.kind) << "\n";
        ordered_json c;
        c["index"] = std::to_string(link.index);
        c["kind"] = cusp_kind_name(link.kind);
        j["cusps"].push_back(c);
    }
    t << "orientable: " << (orientable ? "yes" : "no") << "\n";
    j["orientable"] = orientable;
    t << "dim V: " << dim_v << "\n";
    j["dim_V"] = std::to_string(dim_v);
    t << "dim W: " << dim_w << "\n";
    j["dim_W"] = std::to_string(dim_w);
    return finish(t, j);
}

Report report_basis(const Triangulation& tri, const std::string& input_name) {
    validate_ideal(tri);
    const int k = tri.num_tetrahedra();
    auto basis = canonical_basis(tri);
    const int e = static_cast<int>(basis.size()) - k;

    std::ostringstream t;
    ordered_json j;
    j["command"] = "basis";
    j["input"] = input_name;
    t << "input: " << input_name << "\n";
    j["tetrahedral"] = ordered_json::array();
    for (int i = 0; i < k; ++i) {
        t << "alpha " << i << ": " << vector_string(basis[static_cast<std::size_t>(i)]) << "\n";
        j["tetrahedral"].push_back(vector_json(basis[static_cast<std::size_t>(i)]));
    }
    j["edge"] = ordered_json::array();
    for (int i = 0; i < e; ++i) {
        t << "beta " << i << ": " << vector_string(basis[static_cast<std::size_t>(k + i)]) << "\n";
        j["edge"].push_back(vector_json(basis[static_cast<std::size_t>(k + i)]));
    }
    t << "pairing (phi_i applied to beta_j):\n";
    j["pairing"] = ordered_json::array();
    for (int i = 0; i < e; ++i) {
        RatVector phi = edge_functional(tri, i);
        ordered_json row = ordered_json::array();
        t << " ";
        for (int jj = 0; jj < e; ++jj) {
            Rat v = evaluate(phi, basis[static_cast<std::size_t>(k + jj)]);
            t << " " << v.str();
            row.push_back(v.str());
        }
        t << "\n";
        j["pairing"].push_back(row);
    }
    return finish(t, j);
}

Report report_qmatch(const Triangulation& tri, const std::string& input_name) {
    validate_ideal(tri);
    auto qm = q_matching_system(tri);
    const std::size_t r = rank(qm.matrix);
    IntVector row_sum(qm.matrix.cols(), Int(0));
    for (std::size_t i = 0; i < qm.matrix.rows(); ++i)
        for (std::size_t jj = 0; jj < qm.matrix.cols(); ++jj) row_sum[jj] += qm.matrix(i, jj);
    bool sum_zero = true;
    for (const Int& x : row_sum)
        if (x != 0) sum_zero = false;
    const int dim_w = dim_W(tri);

    std::ostringstream t;
    ordered_json j;
    j["command"] = "qmatch";
    j["input"] = input_name;
    t << "input: " << input_name << "\n";
    t << "matrix (" << qm.matrix.rows() << " x " << qm.matrix.cols() << "):\n";
    for (std::size_t i = 0; i < qm.matrix.rows(); ++i)
        t << "  " << vector_string(qm.matrix.row(i)) << "\n";
    j["matrix"] = matrix_json(qm.matrix);
    t << "rank: " << r << "\n";
    j["rank"] = std::to_string(r);
    t << "nullity: " << qm.matrix.cols() - r << "\n";
    j["nullity"] = std::to_string(qm.matrix.cols() - r);
    t << "rows sum to zero: " << (sum_zero ? "yes" : "no") << "\n";
    j["rows_sum_to_zero"] = sum_zero;
    t << "dim W: " << dim_w << "\n";
    j["dim_W"] = std::to_string(dim_w);
    return finish(t, j);
}

Report report_enumerate(const Triangulation& tri, const std::string& input_name) {
    validate_ideal(tri);
    auto qm = q_matching_system(tri);
    auto fs = fundamental_solutions(qm.matrix);

    std::ostringstream t;
    ordered_json j;
    j["command"] = "enumerate";
    j["input"] = input_name;
    t << "input: " << input_name << "\n";
    t << "fundamental solutions: " << fs.solutions.size() << "\n";
    j["count"] = std::to_string(fs.solutions.size());
    j["solutions"] = ordered_json::array();
    for (const auto& s : fs.solutions) {
        bool compact = is_compact_class(tri, s);
        auto classes = boundary_map(tri, s);
        t << "  " << vector_string(s) << "  compact: " << (compact ? "yes" : "no")
          << "  boundary:";
        ordered_json sj;
        sj["vector"] = vector_json(s);
        sj["compact"] = compact;
        sj["boundary"] = ordered_json::array();
        for (const auto& h : classes) {
            t << " " << class_string(h);
            sj["boundary"].push_back(class_json(h));
        }
        t << "\n";
        j["solutions"].push_back(sj);
    }
    return finish(t, j);
}

Report report_boundary(const Triangulation& tri, const std::string& input_name,
                       const BoundaryOptions& options) {
    validate_ideal(tri);
    std::ostringstream t;
    ordered_json j;
    j["command"] = "boundary";
    j["input"] = input_name;
    t << "input: " << input_name << "\n";

    auto links = cusps(tri);
    if (options.cusp && (*options.cusp < 0 || *options.cusp >= static_cast<int>(links.size())))
        throw ValidationError("cusp index out of range");

    if (options.vector) {
        const QVector& q = *options.vector;
        auto classes = boundary_map(tri, q);
        bool compact = is_compact_class(tri, q);
        t << "vector: " << vector_string(q) << "\n";
        j["vector"] = vector_json(q);
        j["classes"] = ordered_json::array();
        for (const auto& link : links) {
            if (options.cusp && link.index != *options.cusp) continue;
            const HomologyClass& h = classes[static_cast<std::size_t>(link.index)];
            t << "cusp " << link.index << ": class " << class_string(h) << "  gcd "
              << h.free_gcd().str() << (h.is_zero() ? "  (zero)" : "") << "\n";
            ordered_json cj;
            cj["cusp"] = std::to_string(link.index);
            cj["class"] = class_json(h);
            cj["gcd"] = h.free_gcd().str();
            cj["zero"] = h.is_zero();
            j["classes"].push_back(cj);
        }
        t << "compact class: " << (compact ? "yes" : "no") << "\n";
        j["compact"] = compact;
        if (!orientation(tri)) {
            DoubleCover dc = double_cover(tri);
            auto cover_classes = cover_boundary_classes(tri, dc, q);
            t << "cover classes:";
            j["cover_classes"] = ordered_json::array();
            for (const auto& h : cover_classes) {
                t << " " << class_string(h);
                j["cover_classes"].push_back(class_json(h));
            }
            t << "\n";
        }
    }

    if (options.with_index) {
        BoundaryAmbient ambient = boundary_ambient(tri);
        auto idx = image_index(tri);
        t << "ambient: Z^" << ambient.free_rank;
        for (const Int& m : ambient.torsion_orders) t << " + Z/" << m.str();
        t << "\n";
        ordered_json aj;
        aj["free_rank"] = std::to_string(ambient.free_rank);
        aj["torsion_orders"] = vector_json(ambient.torsion_orders);
        j["ambient"] = aj;
        t << "image index: " << (idx.finite ? idx.index.str() : std::string("infinite")) << "\n";
        j["image_index"] = idx.finite ? idx.index.str() : std::string("infinite");
    }
    return finish(t, j);
}

} // namespace spun
