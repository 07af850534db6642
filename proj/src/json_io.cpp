#include "frieze/json_io.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace frieze {

json int_to_json(const Int& v) { return to_decimal(v); }

Int int_from_json(const json& j) {
    if (j.is_string()) return parse_decimal(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<long long>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

json quiddity_to_json(const QuiddityData& q) {
    json out = json::array();
    for (const Int& a : q.entries()) {
        if (a <= Int(std::numeric_limits<long long>::max())) {
            out.push_back(a.convert_to<long long>());
        } else {
            out.push_back(to_decimal(a));
        }
    }
    return out;
}

QuiddityData quiddity_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("quiddity must be a JSON array");
    std::vector<Int> entries;
    entries.reserve(j.size());
    for (const json& e : j) entries.push_back(int_from_json(e));
    return QuiddityData(std::move(entries));
}

json disc_to_json(const DiscTriangulation& t) {
    std::vector<DiscArc> arcs = t.arcs;
    std::sort(arcs.begin(), arcs.end());
    json list = json::array();
    for (const DiscArc& a : arcs) {
        if (a.is_bridging()) {
            list.push_back(json{{"bridging", a.j}});
        } else {
            list.push_back(json{{"peripheral", json::array({a.i, a.j})}});
        }
    }
    return json{{"n", t.n}, {"arcs", list}};
}

DiscTriangulation disc_from_json(const json& j) {
    long long n = j.at("n").get<long long>();
    std::vector<DiscArc> arcs;
    for (const json& e : j.at("arcs")) {
        if (e.contains("bridging")) {
            arcs.push_back(DiscArc::bridging(e.at("bridging").get<long long>()));
        } else if (e.contains("peripheral")) {
            const json& pair = e.at("peripheral");
            if (!pair.is_array() || pair.size() != 2) {
                throw std::invalid_argument("peripheral arc must be a vertex pair");
            }
            arcs.push_back(DiscArc::peripheral(pair[0].get<long long>(), pair[1].get<long long>()));
        } else {
            throw std::invalid_argument("arc must be bridging or peripheral");
        }
    }
    std::sort(arcs.begin(), arcs.end());
    return {n, std::move(arcs)};
}

json strip_arc_to_json(const StripArc& a, long long n) {
    if (a.bridging) {
        StripVertex v = lower_at(a.p, n);
        return json{{"from", {{"upper", a.upper_k}}}, {"to", {{"i", v.i}, {"k", v.k}}}};
    }
    StripVertex from = lower_at(a.p, n);
    StripVertex to = lower_at(a.q, n);
    return json{{"from", {{"i", from.i}, {"k", from.k}}}, {"to", {{"i", to.i}, {"k", to.k}}}};
}

json strip_to_json(const StripTriangulation& t) {
    json list = json::array();
    for (const StripArc& a : t.generators()) list.push_back(strip_arc_to_json(a, t.n()));
    return json{{"n", t.n()}, {"arcs", list}};
}

StripTriangulation strip_from_json(const json& j) {
    long long n = j.at("n").get<long long>();
    if (n < 1) throw std::invalid_argument("strip period must be positive");
    std::vector<StripArc> arcs;
    for (const json& e : j.at("arcs")) {
        const json& from = e.at("from");
        const json& to = e.at("to");
        if (from.contains("upper")) {
            long long k = from.at("upper").get<long long>();
            long long i = to.at("i").get<long long>();
            long long kk = to.at("k").get<long long>();
            if (k != kk) throw std::invalid_argument("bridging arc must stay inside one group");
            arcs.push_back({true, k, i + kk * n, 0});
        } else {
            long long p = from.at("i").get<long long>() + from.at("k").get<long long>() * n;
            long long q = to.at("i").get<long long>() + to.at("k").get<long long>() * n;
            if (q < p) std::swap(p, q);
            arcs.push_back({false, 0, p, q});
        }
    }
    return StripTriangulation(n, std::move(arcs));
}

} // namespace frieze
