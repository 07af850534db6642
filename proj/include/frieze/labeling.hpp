#pragma once

#include "frieze/strip.hpp"

#include <map>
#include <optional>

namespace frieze {

// Vertex labels n_v(w) grown from a starting vertex v: the start gets 0,
// its arc- and boundary-neighbors 1, and every further vertex the sum of
// the two other labels of a triangle containing it. All upper vertices
// share a single label; a quad contributes its upper label once.
struct LabelMap {
    StripVertex start;
    long long n = 0;
    std::map<long long, Int> lower;       // position -> label
    std::optional<Int> upper;             // shared label of all 0^{(k)}

    const Int& at(const StripVertex& v) const;
    const Int& at_position(long long position) const { return lower.at(position); }
};

// Labels for all lower positions in [lo, hi] (and the shared upper label),
// propagated deterministically (leftmost triangle first). Throws
// resource_limit_error if propagation stalls before covering the window.
LabelMap labels_from(const StripTriangulation& t, const StripVertex& v, long long lo,
                     long long hi);

// Same computation with the triangle-processing order shuffled by `seed`;
// exists to exercise order-independence of the propagation.
LabelMap labels_from_shuffled(const StripTriangulation& t, const StripVertex& v, long long lo,
                              long long hi, unsigned seed);

// m_{ij} = n_{(i-1)^{(0)}}((j+1)^{(0)}), valid for j - i >= -2.
Int entry_via_labels(const StripTriangulation& t, long long i, long long j);

// Labels on one period of the lower boundary for the starting vertex 0^{(k)}
// (all copies of the puncture are one vertex, so the tuple is k-independent).
std::vector<Int> puncture_labels(const StripTriangulation& t);

// d_{ik} = r * n_{i-1} * n_{i+k-2} (indices mod n into the puncture labels,
// r = bridging arcs per period): the common differences of the arithmetic
// progressions along the SE-diagonals. Row i, column k, both 1-based.
std::vector<std::vector<Int>> common_differences(const StripTriangulation& t);

} // namespace frieze
