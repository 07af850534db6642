#pragma once

#include "frieze/quiddity.hpp"

#include <compare>
#include <set>
#include <utility>
#include <vector>

namespace frieze {

// An arc of the once-punctured disc with n clockwise boundary vertices
// 1..n and center puncture 0.
//
//   Bridging(j):      puncture to boundary vertex j.
//   Peripheral(i, j): boundary arc isotopic to the clockwise path i -> j
//                     (separating the vertices strictly between). i == j is
//                     the loop at i enclosing the puncture.
struct DiscArc {
    enum class Kind { Bridging, Peripheral };
    Kind kind = Kind::Bridging;
    long long i = 0;   // unused for bridging arcs
    long long j = 0;

    static DiscArc bridging(long long j) { return {Kind::Bridging, 0, j}; }
    static DiscArc peripheral(long long i, long long j) { return {Kind::Peripheral, i, j}; }
    static DiscArc loop(long long i) { return {Kind::Peripheral, i, i}; }

    bool is_bridging() const { return kind == Kind::Bridging; }
    bool is_loop() const { return kind == Kind::Peripheral && i == j; }

    auto operator<=>(const DiscArc&) const = default;
};

struct DiscTriangulation {
    long long n = 0;
    std::vector<DiscArc> arcs;   // kept sorted

    bool operator==(const DiscTriangulation&) const = default;
};

// Arc validity in S_n^1: vertices in 1..n; a peripheral arc needs clockwise
// distance >= 2 between its endpoints, or i == j with n >= 2 (loop). Loops
// are boundary-isotopic for n = 1 and therefore excluded.
bool arc_valid(long long n, const DiscArc& a);

// All arcs of S_n^1 in canonical order.
std::vector<DiscArc> arc_universe(long long n);

// Whether two arcs intersect in the interior of the disc. Decided on the
// strip lift: a and b cross iff some translate of b's lift strictly
// interleaves with a's lift, with all upper vertices treated as one point.
bool arcs_cross(long long n, const DiscArc& a, const DiscArc& b);

// Pairwise non-crossing and maximal.
bool is_triangulation(long long n, const std::vector<DiscArc>& arcs);

// All triangulations of S_n^1, duplicate-free, in canonical order.
// Throws resource_limit_error above the bound.
std::vector<DiscTriangulation> enumerate_triangulations(long long n, long long bound = 7);

// (a_1,...,a_n) where a_i counts the connected components of the complement
// near vertex i, i.e. 1 + number of arc ends at i (loops count twice).
QuiddityData quiddity_of(const DiscTriangulation& t);

// Vertices i with a_i = 1 (incident with exactly one triangle).
std::vector<long long> special_points(const DiscTriangulation& t);

// Removes the ear triangle at a special vertex x; result lives on S_{n-1}^1
// with vertices > x relabelled down.
DiscTriangulation cut_triangle(const DiscTriangulation& t, long long x);

// Inserts a new vertex between i and i+1 together with the ear triangle
// (i, x, i+1); result lives on S_{n+1}^1.
DiscTriangulation glue_triangle(const DiscTriangulation& t, long long i);

// Fundamental-domain positions (i, j), i in 1..n, 0 <= j-i <= depth-1, with
// m_{ij} = 1 in the frieze of quiddity_of(t).
std::set<std::pair<long long, long long>> unit_entry_positions(const DiscTriangulation& t,
                                                               long long depth);

// Where the unit entries must sit according to the peripheral arcs of t:
// arc ij contributes (i+1, j-1), or (i+1, j-1+n) when the clockwise span
// wraps, reduced to the fundamental domain.
std::set<std::pair<long long, long long>> unit_entry_positions_from_arcs(
    const DiscTriangulation& t);

// The triangulation consisting of the n bridging arcs.
DiscTriangulation star_triangulation(long long n);

// Rotation by s steps (vertex v -> v+s mod n) and reflection at the
// diameter through vertex 1. Shape equivalence, not part of equality.
DiscTriangulation rotate(const DiscTriangulation& t, long long s);
DiscTriangulation reflect(const DiscTriangulation& t);

long long bridging_count(const DiscTriangulation& t);

} // namespace frieze
