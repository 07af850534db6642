#pragma once

#include "frieze/strip.hpp"

#include <vector>

namespace frieze {

// A matching between the consecutive lower vertices v_1 <= ... <= v_s of a
// window and pairwise distinct triangles tau_1,...,tau_s with tau_t
// incident to v_t. Triangles are identified by their full translate-resolved
// vertex lists: distinct translates are distinct triangles.
struct Matching {
    long long first_position = 0;
    std::vector<Triangle> triangles;
};

inline constexpr long long kDefaultEnumerationWindow = 10;
inline constexpr long long kDefaultCountingWindow = 16;

// Reads FRIEZE_LIMIT_WINDOW if set, otherwise returns fallback.
long long enumeration_window_limit(long long fallback = kDefaultEnumerationWindow);

// |M_{v_start v_end}| via a left-to-right dynamic program whose state is the
// set of used triangles still incident to remaining vertices.
Int matching_count(const StripTriangulation& t, const StripVertex& v_start,
                   const StripVertex& v_end, long long limit = kDefaultCountingWindow);

// Complete list of matchings by backtracking; the ground-truth oracle at
// small window sizes.
std::vector<Matching> enumerate_matchings(const StripTriangulation& t,
                                          const StripVertex& v_start,
                                          const StripVertex& v_end,
                                          long long limit = -1);

// |M| computed by the four-case reduction onto the triangulation with one
// ear removed, recursing down to star triangulations.
Int matching_count_recursive(const StripTriangulation& t, const StripVertex& v_start,
                             const StripVertex& v_end);

// matching_count(i^{(0)}, j^{(0)}) == m_{ij} for all i in 1..n, i <= j <= i+depth.
bool verify_matching_theorem(const StripTriangulation& t, long long depth);

} // namespace frieze
