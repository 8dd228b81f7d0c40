#pragma once
#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace spun {

// Arbitrary-precision scalars. Everything in this library is exact;
// there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

// gcd of a vector's entries, 0 for the zero vector.
inline Int vector_gcd(const IntVector& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd_int(g, x);
    return g;
}

inline std::string to_string(const Int& a) { return a.str(); }
inline std::string to_string(const Rat& a) { return a.str(); }

} // namespace spun
