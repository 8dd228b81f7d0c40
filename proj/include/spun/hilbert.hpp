#pragma once
#include "spun/matrix.hpp"
#include "spun/numbers.hpp"

#include <vector>

namespace spun {

// The minimal additive generators of {x in Z^n, x >= 0 : A x = 0}:
// every non-negative integer solution is a non-negative integer
// combination of the elements, and no element splits as a sum of two
// nonzero solutions. Sorted lexicographically.
struct FundamentalSet {
    std::vector<IntVector> solutions;
    bool contains(const IntVector& v) const;
};

inline constexpr std::size_t kDefaultColumnCap = 30;

// Incremental construction over the rows: at each row the current
// generators are paired across positive/negative values and non-minimal
// combinations are filtered out. Throws ScaleLimit past the column cap.
FundamentalSet fundamental_solutions(const IntMatrix& a,
                                     std::size_t column_cap = kDefaultColumnCap);

// Independent brute-force check: enumerates every non-negative solution
// with entries <= box_bound, tests that each is a non-negative integer
// combination of s, and that no element of s decomposes into two nonzero
// solutions.
bool verify_hilbert(const IntMatrix& a, const FundamentalSet& s, const Int& box_bound);

} // namespace spun
