#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace frieze {

// Exact unbounded integer. Frieze entries grow geometrically with the row
// index, so all entry arithmetic is done in arbitrary precision.
using Int = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Int& v) { return v.str(); }

Int parse_decimal(const std::string& s);

// floor(a / b) for b > 0, correct for negative a.
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// ceil(a / b) for b > 0, correct for negative a.
inline long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

} // namespace frieze
