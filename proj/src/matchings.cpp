#include "frieze/matchings.hpp"

#include "frieze/bigint.hpp"
#include "frieze/frieze_view.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace frieze {

long long enumeration_window_limit(long long fallback) {
    if (const char* env = std::getenv("FRIEZE_LIMIT_WINDOW")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return v;
    }
    return fallback;
}

namespace {

struct WindowContext {
    long long first = 0;
    long long last = 0;
    std::vector<Triangle> triangles;
    // incident[t] = triangle indices incident with position first + t.
    std::vector<std::vector<int>> incident;
    // last window position each triangle is incident with.
    std::vector<long long> reach;
};

WindowContext build_context(const StripTriangulation& t, long long first, long long last) {
    WindowContext ctx;
    ctx.first = first;
    ctx.last = last;
    ctx.triangles = triangles_in(t, first, last);
    ctx.incident.resize(static_cast<size_t>(last - first + 1));
    ctx.reach.resize(ctx.triangles.size(), first - 1);
    for (size_t id = 0; id < ctx.triangles.size(); ++id) {
        for (long long p = first; p <= last; ++p) {
            if (ctx.triangles[id].incident_lower(p)) {
                ctx.incident[static_cast<size_t>(p - first)].push_back(static_cast<int>(id));
                ctx.reach[id] = p;
            }
        }
    }
    return ctx;
}

std::pair<long long, long long> window_positions(const StripTriangulation& t,
                                                 const StripVertex& v_start,
                                                 const StripVertex& v_end) {
    long long p = position_of(v_start, t.n());
    long long q = position_of(v_end, t.n());
    if (q < p) throw std::domain_error("window end precedes its start");
    return {p, q};
}

} // namespace

Int matching_count(const StripTriangulation& t, const StripVertex& v_start,
                   const StripVertex& v_end, long long limit) {
    auto [p, q] = window_positions(t, v_start, v_end);
    if (q - p + 1 > limit) throw resource_limit_error("matching window exceeds the counting limit");
    WindowContext ctx = build_context(t, p, q);

    // States: used triangles that can still collide with a later vertex.
    std::map<std::vector<int>, Int> states;
    states[{}] = 1;
    for (long long pos = p; pos <= q; ++pos) {
        std::map<std::vector<int>, Int> next;
        const auto& choices = ctx.incident[static_cast<size_t>(pos - p)];
        for (const auto& [used, ways] : states) {
            for (int id : choices) {
                if (std::binary_search(used.begin(), used.end(), id)) continue;
                std::vector<int> succ;
                succ.reserve(used.size() + 1);
                for (int u : used) {
                    if (ctx.reach[static_cast<size_t>(u)] > pos) succ.push_back(u);
                }
                if (ctx.reach[static_cast<size_t>(id)] > pos) {
                    succ.insert(std::upper_bound(succ.begin(), succ.end(), id), id);
                }
                next[std::move(succ)] += ways;
            }
        }
        states = std::move(next);
    }
    Int total = 0;
    for (const auto& [used, ways] : states) total += ways;
    return total;
}

std::vector<Matching> enumerate_matchings(const StripTriangulation& t,
                                          const StripVertex& v_start,
                                          const StripVertex& v_end, long long limit) {
    auto [p, q] = window_positions(t, v_start, v_end);
    if (limit < 0) limit = enumeration_window_limit();
    if (q - p + 1 > limit) throw resource_limit_error("matching window exceeds the enumeration limit");
    WindowContext ctx = build_context(t, p, q);

    std::vector<Matching> out;
    std::vector<char> used(ctx.triangles.size(), 0);
    std::vector<int> picked;
    auto backtrack = [&](auto&& self, long long pos) -> void {
        if (pos > q) {
            Matching m;
            m.first_position = p;
            for (int id : picked) m.triangles.push_back(ctx.triangles[static_cast<size_t>(id)]);
            out.push_back(std::move(m));
            return;
        }
        for (int id : ctx.incident[static_cast<size_t>(pos - p)]) {
            if (used[static_cast<size_t>(id)]) continue;
            used[static_cast<size_t>(id)] = 1;
            picked.push_back(id);
            self(self, pos + 1);
            picked.pop_back();
            used[static_cast<size_t>(id)] = 0;
        }
    };
    backtrack(backtrack, p);
    return out;
}

namespace {

Int count_recursive(const StripTriangulation& t, long long p, long long q) {
    if (q == p - 1) return 1;   // empty window: the empty tuple
    if (q < p - 1) throw std::logic_error("inverted matching window");
    QuiddityData quiddity = quiddity_of_strip(t);
    long long n = t.n();
    if (p == q) return quiddity.at(p);
    bool star = true;
    for (long long i = 1; i <= n && star; ++i) star = quiddity.at(i) == 2;
    if (star) return Int(q - p + 2);

    long long x = 0;
    for (long long i = 1; i <= n; ++i) {
        if (quiddity.at(i) == 1) { x = i; break; }
    }
    StripTriangulation cut = strip_cut(t, x);
    bool p_hit = (p - (x + 1)) % n == 0;
    bool q_hit = (q - (x - 1)) % n == 0;
    long long p2 = p - ceil_div(p - (x + 1), n);
    long long q2 = q - ceil_div(q - (x - 1), n);
    if (!p_hit && !q_hit) return count_recursive(cut, p2, q2);
    if (!p_hit && q_hit) {
        return count_recursive(cut, p2, q2) + count_recursive(cut, p2, q2 - 1);
    }
    if (p_hit && !q_hit) {
        return count_recursive(cut, p2 - 1, q2) + count_recursive(cut, p2, q2);
    }
    return count_recursive(cut, p2 - 1, q2) + count_recursive(cut, p2 - 1, q2 - 1) +
           count_recursive(cut, p2, q2) + count_recursive(cut, p2, q2 - 1);
}

} // namespace

Int matching_count_recursive(const StripTriangulation& t, const StripVertex& v_start,
                             const StripVertex& v_end) {
    auto [p, q] = window_positions(t, v_start, v_end);
    return count_recursive(t, p, q);
}

bool verify_matching_theorem(const StripTriangulation& t, long long depth) {
    QuiddityData q = quiddity_of_strip(t);
    FriezeView view(q);
    for (long long i = 1; i <= t.n(); ++i) {
        for (long long j = i; j <= i + depth; ++j) {
            Int count = matching_count(t, StripVertex::lower(i, 0), lower_at(j, t.n()),
                                       depth + 1);
            if (count != view.entry(i, j)) return false;
        }
    }
    return true;
}

} // namespace frieze
