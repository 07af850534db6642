#include "frieze/strip.hpp"

#include "frieze/bigint.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace frieze {

long long position_of(const StripVertex& v, long long n) {
    if (v.is_upper) throw std::domain_error("upper vertices carry no lower position");
    return v.i + v.k * n;
}

StripVertex lower_at(long long position, long long n) {
    long long k = floor_div(position - 1, n);
    return StripVertex::lower(position - k * n, k);
}

bool Triangle::incident_lower(long long position) const {
    return std::find(lows.begin(), lows.end(), position) != lows.end();
}

namespace {

long long group_of(long long position, long long n) { return floor_div(position - 1, n); }

StripArc normalize(const StripArc& a, long long n) {
    StripArc out = a;
    long long shift = group_of(out.p, n);
    out.p -= shift * n;
    if (out.bridging) {
        out.upper_k = 0;
        out.q = 0;
    } else {
        out.q -= shift * n;
    }
    return out;
}

bool strictly_inside(long long x, long long lo, long long hi) { return lo < x && x < hi; }

bool intervals_cross(long long a1, long long a2, long long b1, long long b2) {
    return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

// Crossing of two concrete arcs (translates already applied). All upper
// vertices count as a single point, so bridging arcs never cross each other.
bool strip_arcs_cross(const StripArc& a, const StripArc& b) {
    if (a.bridging && b.bridging) return false;
    if (a.bridging) return strictly_inside(a.p, b.p, b.q);
    if (b.bridging) return strictly_inside(b.p, a.p, a.q);
    return intervals_cross(a.p, a.q, b.p, b.q);
}

StripArc translated(const StripArc& a, long long shift, long long n) {
    StripArc out = a;
    out.p += shift * n;
    if (out.bridging) {
        out.upper_k += shift;
    } else {
        out.q += shift * n;
    }
    return out;
}

} // namespace

StripTriangulation::StripTriangulation(long long n, std::vector<StripArc> generators)
    : n_(n) {
    if (n < 1) throw std::domain_error("strip period must be positive");
    gens_.reserve(generators.size());
    for (const StripArc& raw : generators) {
        StripArc a = normalize(raw, n);
        if (a.bridging) {
            if (a.p < 1 || a.p > n) throw std::invalid_argument("bridging endpoint out of range");
        } else {
            long long span = a.q - a.p;
            if (a.p < 1 || a.p > n) throw std::invalid_argument("arc endpoint out of range");
            // Non-neighbor endpoints; spans beyond one period cannot occur in
            // a periodic triangulation (superscripts differ by at most one).
            if (span < 2 || span > n) throw std::invalid_argument("arc span invalid for a periodic triangulation");
        }
        gens_.push_back(a);
    }
    std::sort(gens_.begin(), gens_.end());
    if (std::adjacent_find(gens_.begin(), gens_.end()) != gens_.end()) {
        throw std::invalid_argument("duplicate arc");
    }
    if (static_cast<long long>(gens_.size()) != n) {
        throw std::invalid_argument("an n-periodic triangulation has n arcs per period");
    }
    bool has_bridge = false;
    for (const StripArc& a : gens_) has_bridge |= a.bridging;
    if (!has_bridge) throw std::invalid_argument("no bridging arc at the upper vertices");
    for (const StripArc& a : gens_) {
        for (const StripArc& b : gens_) {
            for (long long shift = -2; shift <= 2; ++shift) {
                StripArc bt = translated(b, shift, n);
                if (bt == a) continue;
                if (strip_arcs_cross(a, bt)) throw std::invalid_argument("crossing arcs");
            }
        }
    }
    // Full structural check: one period must decompose into n triangles
    // (triangles_in throws on any face that fails to close).
    long long per_period = 0;
    for (const Triangle& tri : triangles_in(*this, 1, n)) {
        if (tri.lows.front() >= 1 && tri.lows.front() <= n) ++per_period;
    }
    if (per_period != n) throw std::invalid_argument("strip does not triangulate into n faces per period");
}

std::vector<StripArc> StripTriangulation::arcs_in(long long lo, long long hi) const {
    std::vector<StripArc> out;
    long long klo = group_of(lo, n_) - 2;
    long long khi = group_of(hi, n_) + 2;
    for (long long k = klo; k <= khi; ++k) {
        for (const StripArc& g : gens_) {
            StripArc a = translated(g, k, n_);
            long long right = a.bridging ? a.p : a.q;
            if (a.p > hi || right < lo) continue;
            out.push_back(a);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

StripTriangulation phi(const DiscTriangulation& t) {
    std::vector<StripArc> gens;
    gens.reserve(t.arcs.size());
    for (const DiscArc& a : t.arcs) {
        if (a.is_bridging()) {
            gens.push_back({true, 0, a.j, 0});
        } else if (a.i < a.j) {
            gens.push_back({false, 0, a.i, a.j});
        } else {
            gens.push_back({false, 0, a.i, a.j + t.n});
        }
    }
    return StripTriangulation(t.n, std::move(gens));
}

DiscTriangulation psi(const StripTriangulation& t) {
    std::vector<DiscArc> arcs;
    arcs.reserve(t.generators().size());
    for (const StripArc& a : t.generators()) {
        if (a.bridging) {
            arcs.push_back(DiscArc::bridging(a.p));
        } else {
            long long j = a.q > t.n() ? a.q - t.n() : a.q;
            arcs.push_back(DiscArc::peripheral(a.p, j));
        }
    }
    std::sort(arcs.begin(), arcs.end());
    return {t.n(), std::move(arcs)};
}

std::vector<FundamentalDomain> fundamental_domains(const StripTriangulation& t) {
    std::vector<FundamentalDomain> out;
    for (const StripArc& a : t.generators()) {
        if (a.bridging) out.push_back({a.p, a.p, a.p + t.n()});
    }
    std::sort(out.begin(), out.end(),
              [](const FundamentalDomain& a, const FundamentalDomain& b) { return a.lo < b.lo; });
    return out;
}

DiscTriangulation psi_from_domain(const StripTriangulation& t, const FundamentalDomain& d) {
    std::set<DiscArc> arcs;
    for (const StripArc& a : t.arcs_in(d.lo, d.hi)) {
        long long right = a.bridging ? a.p : a.q;
        if (a.p < d.lo || right > d.hi) continue;
        long long n = t.n();
        if (a.bridging) {
            arcs.insert(DiscArc::bridging(a.p - group_of(a.p, n) * n));
        } else {
            long long i = a.p - group_of(a.p, n) * n;
            long long jpos = a.q - group_of(a.p, n) * n;
            long long j = jpos > n ? jpos - n : jpos;
            arcs.insert(DiscArc::peripheral(i, j));
        }
    }
    if (static_cast<long long>(arcs.size()) != t.n()) {
        throw std::logic_error("fundamental domain without n distinct arc classes");
    }
    return {t.n(), std::vector<DiscArc>(arcs.begin(), arcs.end())};
}

std::vector<Triangle> triangles_in(const StripTriangulation& t, long long lo, long long hi) {
    if (hi < lo) throw std::domain_error("empty triangle window");
    long long n = t.n();
    // Any face touching [lo, hi] lies inside the check zone; any face inside
    // the check zone has its closing edges inside the build zone.
    long long check_lo = lo - (n + 1);
    long long check_hi = hi + (n + 1);
    long long build_lo = check_lo - (2 * n + 4);
    long long build_hi = check_hi + (2 * n + 4);

    std::set<std::pair<long long, long long>> edges;
    for (long long p = build_lo; p < build_hi; ++p) edges.emplace(p, p + 1);
    std::map<long long, std::vector<long long>> bridges;   // upper k -> endpoints
    std::vector<std::pair<long long, long long>> peripherals;
    for (const StripArc& a : t.arcs_in(build_lo, build_hi)) {
        if (a.bridging) {
            bridges[a.upper_k].push_back(a.p);
        } else {
            edges.emplace(a.p, a.q);
            peripherals.emplace_back(a.p, a.q);
        }
    }
    for (auto& [k, ends] : bridges) std::sort(ends.begin(), ends.end());

    auto has_edge = [&](long long p, long long q) { return edges.count({p, q}) > 0; };
    auto in_window = [&](const Triangle& tri) {
        for (long long p : tri.lows) {
            if (p >= lo && p <= hi) return true;
        }
        return false;
    };

    std::set<Triangle> found;

    // Lower triangles: exactly one apex below each peripheral arc.
    for (auto [p, q] : peripherals) {
        if (p < check_lo || q > check_hi) continue;
        long long apex = -1;
        int count = 0;
        for (long long z = p + 1; z < q; ++z) {
            if (has_edge(p, z) && has_edge(z, q)) {
                apex = z;
                ++count;
            }
        }
        if (count != 1) throw std::invalid_argument("arc without a unique triangle below it");
        Triangle tri{Triangle::Kind::LowerFan, 0, {p, apex, q}};
        if (in_window(tri)) found.insert(tri);
    }

    // Fans below each upper vertex, and the quad spanning to the next one.
    for (auto& [k, ends] : bridges) {
        for (size_t s = 0; s + 1 < ends.size(); ++s) {
            if (ends[s] < check_lo || ends[s + 1] > check_hi) continue;
            if (!has_edge(ends[s], ends[s + 1])) {
                throw std::invalid_argument("bridging fan without closing edge");
            }
            Triangle tri{Triangle::Kind::UpperFan, k, {ends[s], ends[s + 1]}};
            if (in_window(tri)) found.insert(tri);
        }
        auto next = bridges.find(k + 1);
        if (next == bridges.end()) continue;   // beyond the built range
        long long v = ends.back();
        long long w = next->second.front();
        if (v < check_lo || w > check_hi) continue;
        if (!has_edge(v, w)) throw std::invalid_argument("quad without closing edge");
        Triangle tri{Triangle::Kind::Quad, k, {v, w}};
        if (in_window(tri)) found.insert(tri);
    }

    return {found.begin(), found.end()};
}

QuiddityData quiddity_of_strip(const StripTriangulation& t) {
    std::vector<Triangle> tris = triangles_in(t, 1, t.n());
    std::vector<Int> q;
    q.reserve(static_cast<size_t>(t.n()));
    for (long long i = 1; i <= t.n(); ++i) {
        long long count = 0;
        for (const Triangle& tri : tris) count += tri.incident_lower(i) ? 1 : 0;
        if (count < 1) throw std::logic_error("vertex incident with no triangle");
        q.push_back(count);
    }
    return QuiddityData(std::move(q));
}

StripTriangulation strip_cut(const StripTriangulation& t, long long x) {
    long long n = t.n();
    if (n < 2) throw std::domain_error("cut requires period at least 2");
    if (x < 1 || x > n) throw std::domain_error("vertex out of range");
    if (quiddity_of_strip(t).at(x) != 1) throw std::invalid_argument("cut vertex must be special");
    // The ear at x^{(k)} is closed by the arc spanning [x-1, x+1].
    StripArc ear = normalize({false, 0, x - 1, x + 1}, n);
    std::vector<StripArc> gens;
    bool removed = false;
    for (const StripArc& a : t.generators()) {
        if (!removed && a == ear) { removed = true; continue; }
        gens.push_back(a);
    }
    if (!removed) throw std::logic_error("special vertex without its ear arc");
    auto remap = [&](long long p) { return p - (floor_div(p - x, n) + 1); };
    for (StripArc& a : gens) {
        if (a.bridging) {
            a.p = remap(a.p);
            a.upper_k = group_of(a.p, n - 1);
        } else {
            a.p = remap(a.p);
            a.q = remap(a.q);
        }
    }
    return StripTriangulation(n - 1, std::move(gens));
}

StripTriangulation strip_glue(const StripTriangulation& t, long long i) {
    long long n = t.n();
    if (i < 1 || i > n) throw std::domain_error("glue position must lie in 1..n");
    auto remap = [&](long long p) { return p + floor_div(p - i - 1, n) + 1; };
    std::vector<StripArc> gens = t.generators();
    for (StripArc& a : gens) {
        if (a.bridging) {
            a.p = remap(a.p);
            a.upper_k = group_of(a.p, n + 1);
        } else {
            a.p = remap(a.p);
            a.q = remap(a.q);
        }
    }
    gens.push_back({false, 0, i, i + 2});
    return StripTriangulation(n + 1, std::move(gens));
}

long long bridging_count(const StripTriangulation& t) {
    long long r = 0;
    for (const StripArc& a : t.generators()) r += a.bridging ? 1 : 0;
    return r;
}

} // namespace frieze
