#include "spun/hilbert.hpp"

#include "spun/errors.hpp"

#include <algorithm>
#include <set>

namespace spun {

namespace {

bool dominates(const IntVector& big, const IntVector& small) {
    for (std::size_t i = 0; i < big.size(); ++i)
        if (small[i] > big[i]) return false;
    return true;
}

bool is_zero(const IntVector& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

// Pointwise-minimal nonzero elements of a deduplicated set.
std::vector<IntVector> minimal_antichain(std::vector<IntVector> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<IntVector> keep;
    for (const auto& x : xs) {
        if (is_zero(x)) continue;
        bool dominated = false;
        for (const auto& y : xs) {
            if (&y == &x || is_zero(y)) continue;
            if (y != x && dominates(x, y)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) keep.push_back(x);
    }
    return keep;
}

// Minimal non-negative solutions of sum_i values[i] * lambda[i] = 0.
// Breadth-first completion from the unit vectors: a partial combination
// with positive value is only extended by negative-valued coordinates and
// vice versa, and anything dominating a found solution is pruned.
std::vector<IntVector> minimal_balances(const IntVector& values) {
    const std::size_t n = values.size();
    std::vector<IntVector> minimal;
    std::set<std::pair<Int, IntVector>> frontier; // keyed by running value

    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n, Int(0));
        e[i] = 1;
        if (values[i] == 0)
            minimal.push_back(std::move(e));
        else
            frontier.insert({values[i], std::move(e)});
    }

    while (!frontier.empty()) {
        std::set<std::pair<Int, IntVector>> next;
        for (const auto& [total, lambda] : frontier) {
            for (std::size_t i = 0; i < n; ++i) {
                if (total * values[i] >= 0) continue;
                IntVector y = lambda;
                y[i] += 1;
                Int t = total + values[i];
                bool dominated = false;
                for (const auto& m : minimal)
                    if (dominates(y, m)) {
                        dominated = true;
                        break;
                    }
                if (dominated) continue;
                if (t == 0)
                    minimal.push_back(std::move(y));
                else
                    next.insert({t, std::move(y)});
            }
        }
        frontier = std::move(next);
    }
    return minimal_antichain(std::move(minimal));
}

} // namespace

bool FundamentalSet::contains(const IntVector& v) const {
    return std::binary_search(solutions.begin(), solutions.end(), v);
}

FundamentalSet fundamental_solutions(const IntMatrix& a, std::size_t column_cap) {
    const std::size_t n = a.cols();
    if (n > column_cap)
        throw ScaleLimit("matrix has " + std::to_string(n) + " columns; cap is " +
                         std::to_string(column_cap));

    // Hilbert basis of the free orthant.
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n, Int(0));
        e[i] = 1;
        gens.push_back(std::move(e));
    }

    for (std::size_t r = 0; r < a.rows(); ++r) {
        IntVector values(gens.size());
        for (std::size_t g = 0; g < gens.size(); ++g) {
            Int v = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (a(r, j) != 0 && gens[g][j] != 0) v += a(r, j) * gens[g][j];
            values[g] = v;
        }
        std::vector<IntVector> next;
        for (const IntVector& lambda : minimal_balances(values)) {
            IntVector combo(n, Int(0));
            for (std::size_t g = 0; g < gens.size(); ++g)
                if (lambda[g] != 0)
                    for (std::size_t j = 0; j < n; ++j) combo[j] += lambda[g] * gens[g][j];
            next.push_back(std::move(combo));
        }
        gens = minimal_antichain(std::move(next));
    }

    std::sort(gens.begin(), gens.end());
    return {std::move(gens)};
}

namespace {

// All x with 0 <= x <= bound
// and A x = 0, by depth-first search with exact partial sums.
void enumerate_box_solutions(const IntMatrix& a, const Int& bound, IntVector& x,
                             std::vector<Int>& partial, std::size_t col,
                             std::vector<IntVector>& out) {
    if (col == a.cols()) {
        for (const Int& s : partial)
            if (s != 0) return;
        out.push_back(x);
        return;
    }
    for (Int v = 0; v <= bound; ++v) {
        x[col] = v;
        if (v != 0)
            for (std::size_t i = 0; i < a.rows(); ++i) partial[i] += a(i, col);
        enumerate_box_solutions(a, bound, x, partial, col + 1, out);
    }
    for (std::size_t i = 0; i < a.rows(); ++i) partial[i] -= bound * a(i, col);
    x[col] = 0;
}

bool representable(const IntVector& target, const std::vector<IntVector>& gens,
                   std::set<IntVector>& known_bad, std::size_t from) {
    if (is_zero(target)) return true;
    if (known_bad.count(target)) return false;
    for (std::size_t g = from; g < gens.size(); ++g) {
        if (!dominates(target, gens[g])) continue;
        IntVector rest(target.size());
        for (std::size_t j = 0; j < target.size(); ++j) rest[j] = target[j] - gens[g][j];
        if (representable(rest, gens, known_bad, g)) return true;
    }
    known_bad.insert(target);
    return false;
}

} // namespace

bool verify_hilbert(const IntMatrix& a, const FundamentalSet& s, const Int& box_bound) {
    std::vector<IntVector> box;
    IntVector x(a.cols(), Int(0));
    std::vector<Int> partial(a.rows(), Int(0));
    enumerate_box_solutions(a, box_bound, x, partial, 0, box);

    // Completeness on the box.
    std::set<IntVector> known_bad;
    for (const auto& sol : box)
        if (!representable(sol, s.solutions, known_bad, 0)) return false;

    // Each element solves the system, is nonzero, and does not decompose.
    for (const auto& g : s.solutions) {
        if (is_zero(g)) return false;
        for (const Int& v : a.apply(g))
            if (v != 0) return false;
        for (const auto& u : box) {
            if (is_zero(u) || u == g) continue;
            if (!dominates(g, u)) continue;
            IntVector rest(g.size());
            bool rest_zero = true;
            for (std::size_t j = 0; j < g.size(); ++j) {
                rest[j] = g[j] - u[j];
                if (rest[j] != 0) rest_zero = false;
            }
            if (rest_zero) continue;
            // u + rest = g with both nonzero solutions.
            bool rest_solves = true;
            for (const Int& v : a.apply(rest))
                if (v != 0) {
                    rest_solves = false;
                    break;
                }
            if (rest_solves) return false;
        }
    }
    return true;
}

} // namespace spun
