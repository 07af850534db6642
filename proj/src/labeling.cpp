#include "frieze/labeling.hpp"

#include "frieze/bigint.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace frieze {

const Int& LabelMap::at(const StripVertex& v) const {
    if (v.is_upper) {
        if (!upper) throw std::logic_error("upper label not determined");
        return *upper;
    }
    return lower.at(position_of(v, n));
}

namespace {

struct Propagation {
    std::map<long long, Int> lower;
    std::optional<Int> upper;

    bool known_lower(long long p) const { return lower.count(p) > 0; }
};

// Applies the sum rule to one triangle; returns true on progress. The three
// effective labels are the triangle's lower vertices plus, for fans and
// quads, the shared upper label counted once.
bool apply_triangle(Propagation& st, const Triangle& tri) {
    if (tri.kind == Triangle::Kind::LowerFan) {
        const auto& v = tri.lows;
        int known = 0;
        for (long long p : v) known += st.known_lower(p) ? 1 : 0;
        if (known != 2) return false;
        for (size_t s = 0; s < 3; ++s) {
            if (!st.known_lower(v[s])) {
                st.lower[v[s]] = st.lower[v[(s + 1) % 3]] + st.lower[v[(s + 2) % 3]];
                return true;
            }
        }
        return false;
    }
    long long a = tri.lows[0];
    long long b = tri.lows[1];
    int known = (st.known_lower(a) ? 1 : 0) + (st.known_lower(b) ? 1 : 0) +
                (st.upper ? 1 : 0);
    if (known != 2) return false;
    if (!st.upper) {
        st.upper = st.lower[a] + st.lower[b];
    } else if (!st.known_lower(a)) {
        st.lower[a] = *st.upper + st.lower[b];
    } else {
        st.lower[b] = *st.upper + st.lower[a];
    }
    return true;
}

void check_triangle(const Propagation& st, const Triangle& tri) {
    std::vector<const Int*> labels;
    if (tri.kind == Triangle::Kind::LowerFan) {
        for (long long p : tri.lows) labels.push_back(&st.lower.at(p));
    } else {
        labels.push_back(&*st.upper);
        labels.push_back(&st.lower.at(tri.lows[0]));
        labels.push_back(&st.lower.at(tri.lows[1]));
    }
    bool ok = *labels[0] == *labels[1] + *labels[2] || *labels[1] == *labels[0] + *labels[2] ||
              *labels[2] == *labels[0] + *labels[1];
    if (!ok) throw std::logic_error("label propagation produced an inconsistent triangle");
}

Propagation seed(const StripTriangulation& t, const StripVertex& v, long long build_lo,
                 long long build_hi) {
    Propagation st;
    long long n = t.n();
    std::vector<StripArc> arcs = t.arcs_in(build_lo, build_hi);
    if (v.is_upper) {
        // All copies of the puncture are one vertex: it is the start, and
        // every lower endpoint of a bridging arc is its neighbor.
        st.upper = 0;
        for (const StripArc& a : arcs) {
            if (a.bridging) st.lower[a.p] = 1;
        }
        return st;
    }
    long long p = position_of(v, n);
    st.lower[p] = 0;
    st.lower[p - 1] = 1;
    st.lower[p + 1] = 1;
    for (const StripArc& a : arcs) {
        if (a.bridging) {
            if (a.p == p) st.upper = 1;
        } else if (a.p == p) {
            st.lower[a.q] = 1;
        } else if (a.q == p) {
            st.lower[a.p] = 1;
        }
    }
    return st;
}

LabelMap propagate(const StripTriangulation& t, const StripVertex& v, long long lo,
                   long long hi, const std::vector<Triangle>& triangles) {
    long long n = t.n();
    long long anchor = v.is_upper ? 1 : position_of(v, n);
    long long build_lo = std::min(lo, anchor) - (2 * n + 6);
    long long build_hi = std::max(hi, anchor) + (2 * n + 6);
    Propagation st = seed(t, v, build_lo, build_hi);

    bool progress = true;
    while (progress) {
        progress = false;
        for (const Triangle& tri : triangles) {
            progress |= apply_triangle(st, tri);
        }
    }
    for (long long p = lo; p <= hi; ++p) {
        if (!st.known_lower(p)) {
            throw resource_limit_error("label propagation stalled before covering the window");
        }
    }
    if (!st.upper) throw resource_limit_error("label propagation never reached the upper boundary");
    for (const Triangle& tri : triangles) {
        bool all = st.upper.has_value();
        for (long long p : tri.lows) all = all && st.known_lower(p);
        if (all) check_triangle(st, tri);
    }

    LabelMap out;
    out.start = v;
    out.n = n;
    out.upper = st.upper;
    for (long long p = lo; p <= hi; ++p) out.lower[p] = st.lower.at(p);
    return out;
}

} // namespace

LabelMap labels_from(const StripTriangulation& t, const StripVertex& v, long long lo,
                     long long hi) {
    if (hi < lo) throw std::domain_error("empty label window");
    long long n = t.n();
    long long anchor = v.is_upper ? 1 : position_of(v, n);
    std::vector<Triangle> triangles =
        triangles_in(t, std::min(lo, anchor) - (n + 4), std::max(hi, anchor) + (n + 4));
    // Deterministic order: triangles_in returns a canonical sort; the result
    // is order-independent anyway (exercised separately).
    return propagate(t, v, lo, hi, triangles);
}

LabelMap labels_from_shuffled(const StripTriangulation& t, const StripVertex& v, long long lo,
                              long long hi, unsigned seed) {
    if (hi < lo) throw std::domain_error("empty label window");
    long long n = t.n();
    long long anchor = v.is_upper ? 1 : position_of(v, n);
    std::vector<Triangle> triangles =
        triangles_in(t, std::min(lo, anchor) - (n + 4), std::max(hi, anchor) + (n + 4));
    std::mt19937 rng(seed);
    std::shuffle(triangles.begin(), triangles.end(), rng);
    return propagate(t, v, lo, hi, triangles);
}

Int entry_via_labels(const StripTriangulation& t, long long i, long long j) {
    if (j - i < -2) throw std::domain_error("frieze entry requires j - i >= -2");
    long long lo = std::min(i - 1, j + 1);
    long long hi = std::max(i - 1, j + 1);
    LabelMap labels = labels_from(t, lower_at(i - 1, t.n()), lo, hi);
    return labels.at_position(j + 1);
}

std::vector<Int> puncture_labels(const StripTriangulation& t) {
    long long n = t.n();
    LabelMap labels = labels_from(t, StripVertex::upper(0), 1, 2 * n);
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(n));
    for (long long i = 1; i <= n; ++i) {
        // The tuple is one-periodic by construction; spot-check it.
        if (labels.at_position(i) != labels.at_position(i + n)) {
            throw std::logic_error("puncture labels failed to be periodic");
        }
        out.push_back(labels.at_position(i));
    }
    return out;
}

std::vector<std::vector<Int>> common_differences(const StripTriangulation& t) {
    long long n = t.n();
    long long r = bridging_count(t);
    std::vector<Int> labels = puncture_labels(t);
    auto at = [&](long long idx) -> const Int& {
        long long m = idx % n;
        if (m <= 0) m += n;
        return labels[static_cast<size_t>(m - 1)];
    };
    std::vector<std::vector<Int>> d(static_cast<size_t>(n));
    for (long long i = 1; i <= n; ++i) {
        auto& row = d[static_cast<size_t>(i - 1)];
        row.reserve(static_cast<size_t>(n));
        for (long long k = 1; k <= n; ++k) row.push_back(Int(r) * at(i - 1) * at(i + k - 2));
    }
    return d;
}

} // namespace frieze
