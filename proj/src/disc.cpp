#include "frieze/disc.hpp"

#include "frieze/bigint.hpp"
#include "frieze/frieze_view.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace frieze {

namespace {

long long wrap(long long v, long long n) { return v - floor_div(v - 1, n) * n; }

// Clockwise distance from i to j (0 for i == j).
long long cw_distance(long long n, long long i, long long j) {
    long long d = (j - i) % n;
    return d < 0 ? d + n : d;
}

// Lift of a peripheral arc to lower positions [p, q] on the strip, base
// translate: q = j for i < j, q = j + n otherwise (loops span one period).
std::pair<long long, long long> peripheral_span(long long n, const DiscArc& a) {
    long long p = a.i;
    long long q = a.i < a.j ? a.j : a.j + n;
    return {p, q};
}

bool strictly_inside(long long x, long long lo, long long hi) { return lo < x && x < hi; }

bool intervals_cross(long long a1, long long a2, long long b1, long long b2) {
    return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

} // namespace

bool arc_valid(long long n, const DiscArc& a) {
    if (a.is_bridging()) return a.j >= 1 && a.j <= n;
    if (a.i < 1 || a.i > n || a.j < 1 || a.j > n) return false;
    if (a.i == a.j) return n >= 2;                  // loop
    return cw_distance(n, a.i, a.j) >= 2;           // not boundary-isotopic
}

std::vector<DiscArc> arc_universe(long long n) {
    std::vector<DiscArc> out;
    for (long long j = 1; j <= n; ++j) out.push_back(DiscArc::bridging(j));
    for (long long i = 1; i <= n; ++i) {
        for (long long j = 1; j <= n; ++j) {
            DiscArc a = DiscArc::peripheral(i, j);
            if (arc_valid(n, a)) out.push_back(a);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool arcs_cross(long long n, const DiscArc& a, const DiscArc& b) {
    if (!arc_valid(n, a) || !arc_valid(n, b)) throw std::domain_error("invalid disc arc");
    if (a == b) return false;
    if (a.is_bridging() && b.is_bridging()) return false;
    if (a.is_bridging() || b.is_bridging()) {
        const DiscArc& bridge = a.is_bridging() ? a : b;
        const DiscArc& peri = a.is_bridging() ? b : a;
        auto [p, q] = peripheral_span(n, peri);
        for (long long t = -2; t <= 2; ++t) {
            if (strictly_inside(bridge.j + t * n, p, q)) return true;
        }
        return false;
    }
    auto [a1, a2] = peripheral_span(n, a);
    auto [b1, b2] = peripheral_span(n, b);
    for (long long t = -2; t <= 2; ++t) {
        if (intervals_cross(a1, a2, b1 + t * n, b2 + t * n)) return true;
    }
    return false;
}

bool is_triangulation(long long n, const std::vector<DiscArc>& arcs) {
    for (const DiscArc& a : arcs) {
        if (!arc_valid(n, a)) return false;
    }
    for (size_t s = 0; s < arcs.size(); ++s) {
        for (size_t t = s + 1; t < arcs.size(); ++t) {
            if (arcs[s] == arcs[t] || arcs_cross(n, arcs[s], arcs[t])) return false;
        }
    }
    for (const DiscArc& candidate : arc_universe(n)) {
        if (std::find(arcs.begin(), arcs.end(), candidate) != arcs.end()) continue;
        bool blocked = false;
        for (const DiscArc& a : arcs) {
            if (arcs_cross(n, candidate, a)) { blocked = true; break; }
        }
        if (!blocked) return false;   // candidate could be added: not maximal
    }
    if (static_cast<long long>(arcs.size()) != n) {
        throw std::logic_error("maximal non-crossing family without exactly n arcs");
    }
    return true;
}

namespace {

void extend(long long n, const std::vector<DiscArc>& universe,
            const std::vector<std::vector<bool>>& cross, std::vector<size_t>& chosen,
            size_t next, std::vector<DiscTriangulation>& out) {
    if (static_cast<long long>(chosen.size()) == n) {
        std::vector<DiscArc> arcs;
        arcs.reserve(chosen.size());
        for (size_t idx : chosen) arcs.push_back(universe[idx]);
        if (is_triangulation(n, arcs)) out.push_back({n, std::move(arcs)});
        return;
    }
    long long missing = n - static_cast<long long>(chosen.size());
    for (size_t idx = next; idx + static_cast<size_t>(missing) <= universe.size(); ++idx) {
        bool ok = true;
        for (size_t prev : chosen) {
            if (cross[prev][idx]) { ok = false; break; }
        }
        if (!ok) continue;
        chosen.push_back(idx);
        extend(n, universe, cross, chosen, idx + 1, out);
        chosen.pop_back();
    }
}

} // namespace

std::vector<DiscTriangulation> enumerate_triangulations(long long n, long long bound) {
    if (n < 1) throw std::domain_error("n must be positive");
    if (n > bound) throw resource_limit_error("triangulation enumeration bound exceeded");
    std::vector<DiscArc> universe = arc_universe(n);
    std::vector<std::vector<bool>> cross(universe.size(), std::vector<bool>(universe.size()));
    for (size_t s = 0; s < universe.size(); ++s) {
        for (size_t t = s + 1; t < universe.size(); ++t) {
            cross[s][t] = cross[t][s] = arcs_cross(n, universe[s], universe[t]);
        }
    }
    std::vector<DiscTriangulation> out;
    std::vector<size_t> chosen;
    extend(n, universe, cross, chosen, 0, out);
    return out;
}

QuiddityData quiddity_of(const DiscTriangulation& t) {
    std::vector<Int> ends(static_cast<size_t>(t.n), 1);
    for (const DiscArc& a : t.arcs) {
        if (a.is_bridging()) {
            ends[static_cast<size_t>(a.j - 1)] += 1;
        } else {
            ends[static_cast<size_t>(a.i - 1)] += 1;
            ends[static_cast<size_t>(a.j - 1)] += 1;
        }
    }
    return QuiddityData(std::move(ends));
}

std::vector<long long> special_points(const DiscTriangulation& t) {
    QuiddityData q = quiddity_of(t);
    std::vector<long long> out;
    for (long long v = 1; v <= t.n; ++v) {
        if (q.at(v) == 1) out.push_back(v);
    }
    return out;
}

DiscTriangulation cut_triangle(const DiscTriangulation& t, long long x) {
    if (t.n < 2) throw std::domain_error("cut requires n >= 2");
    QuiddityData q = quiddity_of(t);
    if (q.at(x) != 1) throw std::invalid_argument("cut vertex must be special");
    DiscArc ear = DiscArc::peripheral(wrap(x - 1, t.n), wrap(x + 1, t.n));
    std::vector<DiscArc> arcs;
    bool removed = false;
    for (const DiscArc& a : t.arcs) {
        if (!removed && a == ear) { removed = true; continue; }
        arcs.push_back(a);
    }
    if (!removed) throw std::logic_error("special vertex without its ear arc");
    auto relabel = [&](long long v) { return v < x ? v : v - 1; };
    for (DiscArc& a : arcs) {
        if (a.is_bridging()) {
            a.j = relabel(a.j);
        } else {
            a.i = relabel(a.i);
            a.j = relabel(a.j);
        }
    }
    std::sort(arcs.begin(), arcs.end());
    return {t.n - 1, std::move(arcs)};
}

DiscTriangulation glue_triangle(const DiscTriangulation& t, long long i) {
    if (i < 1 || i > t.n) throw std::domain_error("glue position must lie in 1..n");
    long long n2 = t.n + 1;
    std::vector<DiscArc> arcs = t.arcs;
    auto relabel = [&](long long v) { return v <= i ? v : v + 1; };
    for (DiscArc& a : arcs) {
        if (a.is_bridging()) {
            a.j = relabel(a.j);
        } else {
            a.i = relabel(a.i);
            a.j = relabel(a.j);
        }
    }
    arcs.push_back(DiscArc::peripheral(i, wrap(i + 2, n2)));
    std::sort(arcs.begin(), arcs.end());
    return {n2, std::move(arcs)};
}

std::set<std::pair<long long, long long>> unit_entry_positions(const DiscTriangulation& t,
                                                               long long depth) {
    FriezeView view(quiddity_of(t));
    std::set<std::pair<long long, long long>> out;
    for (long long r = 0; r < depth; ++r) {
        for (long long i = 1; i <= t.n; ++i) {
            if (view.entry(i, i + r) == 1) out.emplace(i, i + r);
        }
    }
    return out;
}

std::set<std::pair<long long, long long>> unit_entry_positions_from_arcs(
    const DiscTriangulation& t) {
    std::set<std::pair<long long, long long>> out;
    for (const DiscArc& a : t.arcs) {
        if (a.is_bridging()) continue;
        long long i = a.i + 1;
        long long j = a.j >= a.i + 2 ? a.j - 1 : a.j - 1 + t.n;
        long long shift = floor_div(i - 1, t.n) * t.n;
        out.emplace(i - shift, j - shift);
    }
    return out;
}

DiscTriangulation star_triangulation(long long n) {
    if (n < 1) throw std::domain_error("n must be positive");
    std::vector<DiscArc> arcs;
    for (long long j = 1; j <= n; ++j) arcs.push_back(DiscArc::bridging(j));
    return {n, std::move(arcs)};
}

DiscTriangulation rotate(const DiscTriangulation& t, long long s) {
    std::vector<DiscArc> arcs = t.arcs;
    for (DiscArc& a : arcs) {
        if (a.is_bridging()) {
            a.j = wrap(a.j + s, t.n);
        } else {
            a.i = wrap(a.i + s, t.n);
            a.j = wrap(a.j + s, t.n);
        }
    }
    std::sort(arcs.begin(), arcs.end());
    return {t.n, std::move(arcs)};
}

DiscTriangulation reflect(const DiscTriangulation& t) {
    auto sigma = [&](long long v) { return wrap(2 - v, t.n); };
    std::vector<DiscArc> arcs = t.arcs;
    for (DiscArc& a : arcs) {
        if (a.is_bridging()) {
            a.j = sigma(a.j);
        } else {
            long long i2 = sigma(a.j);
            long long j2 = sigma(a.i);
            a.i = i2;
            a.j = j2;
        }
    }
    std::sort(arcs.begin(), arcs.end());
    return {t.n, std::move(arcs)};
}

long long bridging_count(const DiscTriangulation& t) {
    long long r = 0;
    for (const DiscArc& a : t.arcs) r += a.is_bridging() ? 1 : 0;
    return r;
}

} // namespace frieze
