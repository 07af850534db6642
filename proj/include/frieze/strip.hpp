#pragma once

#include "frieze/disc.hpp"
#include "frieze/quiddity.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace frieze {

// Vertex of the strip U_n: Lower(i, k) is the vertex i^{(k)} (i in 1..n,
// absolute position i + k*n on the lower boundary), Upper(k) is 0^{(k)}.
// Lower vertices normalize by (i + l*n)^{(k)} = i^{(k+l)}.
struct StripVertex {
    bool is_upper = false;
    long long i = 0;   // 1..n for lower vertices, unused for upper
    long long k = 0;

    static StripVertex lower(long long i, long long k) { return {false, i, k}; }
    static StripVertex upper(long long k) { return {true, 0, k}; }

    auto operator<=>(const StripVertex&) const = default;
};

// Absolute position of a lower vertex / its inverse.
long long position_of(const StripVertex& v, long long n);
StripVertex lower_at(long long position, long long n);

// Arc of U_n. Peripheral arcs store (left endpoint, right endpoint) as
// positions; a bridging arc joins 0^{(k)} to a lower vertex of group k.
struct StripArc {
    bool bridging = false;
    long long upper_k = 0;   // bridging only
    long long p = 0;         // left lower position (or the bridging endpoint)
    long long q = 0;         // right lower position (peripheral only)

    auto operator<=>(const StripArc&) const = default;
};

// Triangle of a periodic strip triangulation. LowerFan is a triangle with
// three lower vertices; UpperFan has one upper vertex 0^{(k)} and two lower
// vertices of group k; Quad is the four-sided region
// (0^{(k)}, v, w, 0^{(k+1)}) whose two upper vertices count as one.
struct Triangle {
    enum class Kind : std::uint8_t { LowerFan, UpperFan, Quad };
    Kind kind = Kind::LowerFan;
    long long upper_k = 0;                  // UpperFan / Quad
    std::vector<long long> lows;            // lower positions, left to right

    bool incident_lower(long long position) const;
    auto operator<=>(const Triangle&) const = default;
};

// An n-periodic triangulation of U_n, stored as one period of generator
// arcs (translate-normalized to superscript base 0) and expanded on demand.
// Construction validates the periodic arc classification, pairwise
// non-crossing of all translates, and that the strip decomposes into n
// triangles per period with a bridging arc at every upper vertex.
class StripTriangulation {
public:
    StripTriangulation(long long n, std::vector<StripArc> generators);

    long long n() const { return n_; }
    const std::vector<StripArc>& generators() const { return gens_; }

    // All arcs with an endpoint position inside [lo, hi].
    std::vector<StripArc> arcs_in(long long lo, long long hi) const;

    bool operator==(const StripTriangulation& other) const {
        return n_ == other.n_ && gens_ == other.gens_;
    }

private:
    long long n_ = 0;
    std::vector<StripArc> gens_;
};

// Lifts a disc triangulation to the strip: bridging 0j -> 0^{(k)} j^{(k)},
// peripheral ij -> i^{(k)} j^{(k)} when i < j and i^{(k)} j^{(k+1)} otherwise.
StripTriangulation phi(const DiscTriangulation& t);

// Projects a periodic strip triangulation back to the disc, i^{(k)} j^{(l)} -> ij.
DiscTriangulation psi(const StripTriangulation& t);

// One fundamental domain per bridging arc: the (n+3)-gon spanning lower
// vertices i^{(0)}..i^{(1)} with upper vertices 0^{(0)}, 0^{(1)}.
struct FundamentalDomain {
    long long base_vertex = 0;   // i of the bridging arc 0^{(k)} i^{(k)}
    long long lo = 0;            // position of i^{(0)}
    long long hi = 0;            // position of i^{(1)}
};
std::vector<FundamentalDomain> fundamental_domains(const StripTriangulation& t);

// psi computed from the arcs of one chosen fundamental domain; the result
// must not depend on the choice.
DiscTriangulation psi_from_domain(const StripTriangulation& t, const FundamentalDomain& d);

// All triangles with at least one lower vertex position in [lo, hi].
std::vector<Triangle> triangles_in(const StripTriangulation& t, long long lo, long long hi);

// a_i = number of triangles incident with i^{(k)}.
QuiddityData quiddity_of_strip(const StripTriangulation& t);

// Ear removal at a special vertex x / ear insertion after vertex i,
// performed once per period.
StripTriangulation strip_cut(const StripTriangulation& t, long long x);
StripTriangulation strip_glue(const StripTriangulation& t, long long i);

long long bridging_count(const StripTriangulation& t);

} // namespace frieze
