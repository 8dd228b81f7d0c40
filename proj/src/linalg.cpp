#include "spun/linalg.hpp"

#include "spun/errors.hpp"

#include <algorithm>
#include <cassert>

namespace spun {

namespace {

// Divide with remainder, remainder taken toward zero (cpp_int default).
Int div_trunc(const Int& a, const Int& b) { return a / b; }

} // namespace

std::size_t rank(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    IntMatrix w = a;
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t piv = r;
        while (piv < m && w(piv, col) == 0) ++piv;
        if (piv == m) continue;
        if (piv != r)
            for (std::size_t j = 0; j < n; ++j) std::swap(w(piv, j), w(r, j));
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < n; ++j)
                w(i, j) = (w(r, col) * w(i, j) - w(i, col) * w(r, j)) / prev;
            w(i, col) = 0;
        }
        prev = w(r, col);
        ++r;
    }
    return r;
}

Int determinant(const IntMatrix& a) {
    assert(a.rows() == a.cols());
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix w = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && w(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w(piv, j), w(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                w(i, j) = (w(k, k) * w(i, j) - w(i, k) * w(k, j)) / prev;
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : Int(-w(n - 1, n - 1));
}

std::size_t SmithDecomposition::diagonal_rank() const {
    std::size_t r = 0;
    const std::size_t n = std::min(s.rows(), s.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (s(i, i) != 0) ++r;
    return r;
}

IntVector SmithDecomposition::diagonal() const {
    const std::size_t n = std::min(s.rows(), s.cols());
    IntVector d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = s(i, i);
    return d;
}

namespace {

struct SmithWork {
    IntMatrix s, u, v;

    void row_swap(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < s.cols(); ++c) std::swap(s(i, c), s(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    }
    void col_swap(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < s.rows(); ++r) std::swap(s(r, i), s(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    }
    // row i -= q * row j
    void row_sub(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < s.cols(); ++c) s(i, c) -= q * s(j, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) -= q * u(j, c);
    }
    // col i -= q * col j
    void col_sub(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < s.rows(); ++r) s(r, i) -= q * s(r, j);
        for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) -= q * v(r, j);
    }
    void row_negate(std::size_t i) {
        for (std::size_t c = 0; c < s.cols(); ++c) s(i, c) = -s(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
    }

    // Smallest nonzero |entry| in the submatrix starting at (t, t),
    // ties broken row-major.
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < s.rows(); ++i)
            for (std::size_t j = t; j < s.cols(); ++j) {
                if (s(i, j) == 0) continue;
                Int a = abs_int(s(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }
};

} // namespace

SmithDecomposition smith(const IntMatrix& a) {
    SmithWork w{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
    const std::size_t n = std::min(a.rows(), a.cols());

    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pi = t, pj = t;
        if (!w.find_pivot(t, pi, pj)) break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        for (;;) {
            // Clear column t with the current pivot.
            bool dirty = false;
            for (std::size_t i = t + 1; i < w.s.rows(); ++i) {
                if (w.s(i, t) == 0) continue;
                Int q = div_trunc(w.s(i, t), w.s(t, t));
                w.row_sub(i, t, q);
                if (w.s(i, t) != 0) {
                    // Remainder became the smaller pivot candidate.
                    w.row_swap(t, i);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (std::size_t j = t + 1; j < w.s.cols(); ++j) {
                if (w.s(t, j) == 0) continue;
                Int q = div_trunc(w.s(t, j), w.s(t, t));
                w.col_sub(j, t, q);
                if (w.s(t, j) != 0) {
                    w.col_swap(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;

            // Pivot must divide every remaining entry; if not, fold the
            // offending row in and restart the clearing loop.
            bool fixed = true;
            for (std::size_t i = t + 1; i < w.s.rows() && fixed; ++i)
                for (std::size_t j = t + 1; j < w.s.cols() && fixed; ++j)
                    if (w.s(i, j) % w.s(t, t) != 0) {
                        w.row_sub(t, i, Int(-1));
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (w.s(t, t) < 0) w.row_negate(t);
    }

    SmithDecomposition d{w.u, w.s, w.v};
    return d;
}

std::vector<IntVector> integer_nullspace(const IntMatrix& a) {
    SmithDecomposition d = smith(a);
    const std::size_t n = a.cols();
    const std::size_t r = d.diagonal_rank();
    std::vector<IntVector> basis;
    basis.reserve(n - r);
    for (std::size_t j = r; j < n; ++j) basis.push_back(d.v.column(j));
    return basis;
}

SubgroupIndex subgroup_index(std::size_t free_rank, const IntVector& torsion_orders,
                             const std::vector<IntVector>& generators) {
    const std::size_t dim = free_rank + torsion_orders.size();
    // Relation matrix of the quotient presentation: ambient torsion
    // relations plus one row per generator.
    IntMatrix rel(torsion_orders.size() + generators.size(), dim);
    for (std::size_t i = 0; i < torsion_orders.size(); ++i)
        rel(i, free_rank + i) = torsion_orders[i];
    for (std::size_t g = 0; g < generators.size(); ++g) {
        if (generators[g].size() != dim)
            throw ValidationError("generator length does not match the ambient group");
        for (std::size_t j = 0; j < dim; ++j)
            rel(torsion_orders.size() + g, j) = generators[g][j];
    }
    SmithDecomposition d = smith(rel);
    if (d.diagonal_rank() < dim) return {false, 0};
    Int idx = 1;
    for (std::size_t i = 0; i < dim; ++i) idx *= d.s(i, i);
    return {true, idx};
}

std::optional<RatVector> solve_rational(const IntMatrix& a, const RatVector& b) {
    const std::size_t m = a.rows(), n = a.cols();
    // Augmented rational Gauss-Jordan.
    std::vector<RatVector> w(m, RatVector(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(a(i, j));
        w[i][n] = b[i];
    }
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t piv = r;
        while (piv < m && w[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(w[piv], w[r]);
        Rat inv = w[r][col];
        for (std::size_t j = col; j <= n; ++j) w[r][j] /= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || w[i][col] == 0) continue;
            Rat f = w[i][col];
            for (std::size_t j = col; j <= n; ++j) w[i][j] -= f * w[r][j];
        }
        pivot_col.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (w[i][n] != 0) return std::nullopt;
    RatVector x(n, Rat(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = w[i][n];
    return x;
}

std::optional<IntVector> solve_integer_in_lattice(const IntMatrix& basis_columns,
                                                  const IntVector& target) {
    RatVector b(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) b[i] = Rat(target[i]);
    auto x = solve_rational(basis_columns, b);
    if (!x) return std::nullopt;
    IntVector w(x->size());
    for (std::size_t i = 0; i < x->size(); ++i) {
        if (denominator((*x)[i]) != 1) return std::nullopt;
        w[i] = numerator((*x)[i]);
    }
    // The elimination above finds one solution; verify exactly.
    IntVector check = basis_columns.apply(w);
    if (check != target) return std::nullopt;
    return w;
}

bool in_rational_span(const std::vector<IntVector>& vectors, const IntVector& target) {
    if (vectors.empty()) {
        for (const Int& x : target)
            if (x != 0) return false;
        return true;
    }
    IntMatrix base = IntMatrix::from_rows(vectors);
    std::vector<IntVector> all = vectors;
    all.push_back(target);
    return rank(base) == rank(IntMatrix::from_rows(all));
}

} // namespace spun
