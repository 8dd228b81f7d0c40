#pragma once
#include "spun/matrix.hpp"
#include "spun/numbers.hpp"

#include <optional>
#include <vector>

namespace spun {

// Rank over the rationals, by fraction-free (Bareiss) elimination with
// deterministic first-nonzero pivoting.
std::size_t rank(const IntMatrix& a);

// Exact determinant of a square matrix (Bareiss).
Int determinant(const IntMatrix& a);

// u * a * v = s with u, v unimodular and s diagonal, s(0,0) | s(1,1) | ...
// Deterministic for fixed input.
struct SmithDecomposition {
    IntMatrix u, s, v;
    std::size_t diagonal_rank() const;
    IntVector diagonal() const;
};

SmithDecomposition smith(const IntMatrix& a);

// Basis of the saturated lattice {x in Z^n : a x = 0}: every integer
// solution is an integer combination of the returned vectors. Taken from
// the trailing columns of the Smith V factor.
std::vector<IntVector> integer_nullspace(const IntMatrix& a);

struct SubgroupIndex {
    bool finite = false;
    Int index = 0; // valid only when finite
};

// Index of the subgroup generated by `generators` inside
// Z^free_rank + Z/t1 + Z/t2 + ... Each generator lists its free
// coordinates first, then one residue per torsion factor.
SubgroupIndex subgroup_index(std::size_t free_rank, const IntVector& torsion_orders,
                             const std::vector<IntVector>& generators);

// Exact solution of a x = b over the rationals (any solution), or nullopt
// if the system is inconsistent.
std::optional<RatVector> solve_rational(const IntMatrix& a, const RatVector& b);

// Like solve_rational but for integer right-hand sides, insisting on an
// integral solution.
std::optional<IntVector> solve_integer_in_lattice(const IntMatrix& basis_columns,
                                                  const IntVector& target);

// True iff target lies in the rational span of the given vectors.
bool in_rational_span(const std::vector<IntVector>& vectors, const IntVector& target);

} // namespace spun
