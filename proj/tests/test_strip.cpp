#include <doctest.h>

#include "frieze/json_io.hpp"
#include "frieze/strip.hpp"

#include <algorithm>
#include <set>

using namespace frieze;

namespace {

DiscTriangulation sample_disc_14126() {
    std::vector<DiscArc> arcs = {DiscArc::bridging(5), DiscArc::loop(5),
                                 DiscArc::peripheral(5, 2), DiscArc::peripheral(2, 5),
                                 DiscArc::peripheral(2, 4)};
    std::sort(arcs.begin(), arcs.end());
    return {5, arcs};
}

DiscTriangulation sample_disc_43312() {
    std::vector<DiscArc> arcs = {DiscArc::bridging(1), DiscArc::bridging(2),
                                 DiscArc::peripheral(3, 5), DiscArc::peripheral(3, 1),
                                 DiscArc::peripheral(2, 1)};
    std::sort(arcs.begin(), arcs.end());
    return {5, arcs};
}

} // namespace

TEST_CASE("vertex positions normalize") {
    CHECK(position_of(StripVertex::lower(5, 0), 5) == 5);
    CHECK(position_of(StripVertex::lower(1, 1), 5) == 6);
    CHECK(position_of(StripVertex::lower(3, -1), 5) == -2);
    CHECK(lower_at(6, 5) == StripVertex::lower(1, 1));
    CHECK(lower_at(-2, 5) == StripVertex::lower(3, -1));
    CHECK(lower_at(5, 5) == StripVertex::lower(5, 0));
}

TEST_CASE("lifting the sample triangulation yields the expected strip arcs") {
    StripTriangulation strip = phi(sample_disc_14126());
    // 0^{(0)}5^{(0)}, 5^{(-1)}2^{(0)}, 2^{(0)}5^{(0)}, 2^{(0)}4^{(0)}, 5^{(-1)}5^{(0)},
    // translate-normalized so each left endpoint lies in the base period.
    std::vector<StripArc> expect = {{true, 0, 5, 0},
                                    {false, 0, 2, 4},
                                    {false, 0, 2, 5},
                                    {false, 0, 5, 7},
                                    {false, 0, 5, 10}};
    std::sort(expect.begin(), expect.end());
    CHECK(strip.generators() == expect);
}

TEST_CASE("strip construction rejects malformed input") {
    // Neighboring endpoints violate (A2).
    CHECK_THROWS_AS(StripTriangulation(2, {{true, 0, 1, 0}, {false, 0, 1, 2}}),
                    std::invalid_argument);
    // Span beyond one period cannot appear in a periodic triangulation.
    CHECK_THROWS_AS(StripTriangulation(2, {{true, 0, 1, 0}, {false, 0, 1, 4}}),
                    std::invalid_argument);
    // Crossing translates.
    CHECK_THROWS_AS(StripTriangulation(2, {{true, 0, 1, 0}, {false, 0, 2, 4}}),
                    std::invalid_argument);
    // No bridging arc.
    CHECK_THROWS_AS(StripTriangulation(3, {{false, 0, 1, 3}, {false, 0, 3, 5}, {false, 0, 2, 4}}),
                    std::invalid_argument);
    // Wrong arc count.
    CHECK_THROWS_AS(StripTriangulation(3, {{true, 0, 1, 0}}), std::invalid_argument);
}

TEST_CASE("round trips between disc and strip") {
    for (long long n = 1; n <= 5; ++n) {
        for (const DiscTriangulation& t : enumerate_triangulations(n)) {
            StripTriangulation strip = phi(t);
            CHECK(psi(strip) == t);
            CHECK(quiddity_of_strip(strip) == quiddity_of(t));
            // Special vertices upstairs match special points downstairs.
            QuiddityData q = quiddity_of(t);
            for (long long v = 1; v <= n; ++v) {
                CHECK((quiddity_of_strip(strip).at(v) == 1) == (q.at(v) == 1));
            }
        }
    }
    CHECK(psi(phi(star_triangulation(4))) == star_triangulation(4));
}

TEST_CASE("projection is independent of the fundamental domain") {
    for (long long n = 2; n <= 5; ++n) {
        for (const DiscTriangulation& t : enumerate_triangulations(n)) {
            StripTriangulation strip = phi(t);
            std::vector<FundamentalDomain> domains = fundamental_domains(strip);
            CHECK(static_cast<long long>(domains.size()) == bridging_count(strip));
            for (const FundamentalDomain& d : domains) {
                CHECK(psi_from_domain(strip, d) == psi(strip));
            }
        }
    }
}

TEST_CASE("fundamental domains of the sample strips") {
    StripTriangulation lifted = phi(sample_disc_14126());
    CHECK(fundamental_domains(lifted).size() == 1);
    CHECK(bridging_count(lifted) == 1);

    StripTriangulation star = phi(star_triangulation(4));
    CHECK(fundamental_domains(star).size() == 4);

    // Each domain holds n-1 interior arcs and n triangles, one of them the quad.
    for (const DiscTriangulation& t : enumerate_triangulations(4)) {
        StripTriangulation strip = phi(t);
        for (const FundamentalDomain& d : fundamental_domains(strip)) {
            long long interior = 0;
            for (const StripArc& a : strip.arcs_in(d.lo, d.hi)) {
                long long right = a.bridging ? a.p : a.q;
                if (a.bridging && (a.p == d.lo || a.p == d.hi)) continue;
                if (a.p >= d.lo && right <= d.hi) ++interior;
            }
            CHECK(interior == strip.n() - 1);

            std::vector<Triangle> tris = triangles_in(strip, d.lo, d.hi);
            long long inside = 0;
            long long quads = 0;
            for (const Triangle& tri : tris) {
                if (tri.lows.front() >= d.lo && tri.lows.back() <= d.hi) {
                    ++inside;
                    quads += tri.kind == Triangle::Kind::Quad ? 1 : 0;
                }
            }
            CHECK(inside == strip.n());
            CHECK(quads == 1);
        }
    }
}

TEST_CASE("triangles of the star strip") {
    StripTriangulation star = phi(star_triangulation(4));
    std::vector<Triangle> tris = triangles_in(star, 1, 4);
    long long fans = 0;
    long long quads = 0;
    for (const Triangle& tri : tris) {
        if (tri.lows.front() < 1 || tri.lows.front() > 4) continue;
        if (tri.kind == Triangle::Kind::UpperFan) ++fans;
        if (tri.kind == Triangle::Kind::Quad) ++quads;
        CHECK(tri.lows.back() - tri.lows.front() == 1);
    }
    CHECK(fans == 3);
    CHECK(quads == 1);
}

TEST_CASE("triangles of the sample 5-periodic strip") {
    StripTriangulation lifted = phi(sample_disc_14126());
    std::vector<Triangle> tris = triangles_in(lifted, 1, 5);
    std::set<std::vector<long long>> lows;
    for (const Triangle& tri : tris) {
        if (tri.lows.front() >= 1 && tri.lows.front() <= 5) lows.insert(tri.lows);
    }
    // One period: the quadrilateral (0^{(0)},5^{(0)},5^{(1)},0^{(1)}) plus
    // four ordinary triangles.
    std::set<std::vector<long long>> expect = {
        {5, 10}, {5, 6, 7}, {2, 3, 4}, {2, 4, 5}, {5, 7, 10}};
    CHECK(lows == expect);

    // Quadrilateral is reported as such.
    bool quad_found = false;
    for (const Triangle& tri : tris) {
        if (tri.lows == std::vector<long long>{5, 10}) {
            quad_found = tri.kind == Triangle::Kind::Quad;
        }
    }
    CHECK(quad_found);

    // Triangle count per period equals n for all lifted triangulations.
    for (long long n = 1; n <= 5; ++n) {
        for (const DiscTriangulation& t : enumerate_triangulations(n)) {
            StripTriangulation strip = phi(t);
            long long per_period = 0;
            for (const Triangle& tri : triangles_in(strip, 1, n)) {
                if (tri.lows.front() >= 1 && tri.lows.front() <= n) ++per_period;
            }
            CHECK(per_period == n);
        }
    }
}

TEST_CASE("strip ear operations commute with the disc ones") {
    StripTriangulation lifted = phi(sample_disc_14126());
    for (long long x : {1LL, 3LL}) {
        CHECK(strip_cut(lifted, x) == phi(cut_triangle(sample_disc_14126(), x)));
    }
    CHECK_THROWS_AS(strip_cut(lifted, 2), std::invalid_argument);

    StripTriangulation glued1 = strip_glue(phi(star_triangulation(1)), 1);
    CHECK(quiddity_of_strip(glued1) == QuiddityData({4, 1}));

    for (long long n = 1; n <= 4; ++n) {
        for (const DiscTriangulation& t : enumerate_triangulations(n)) {
            StripTriangulation strip = phi(t);
            for (long long i = 1; i <= n; ++i) {
                StripTriangulation glued = strip_glue(strip, i);
                CHECK(glued == phi(glue_triangle(t, i)));
                CHECK(strip_cut(glued, i + 1) == strip);
                CHECK(bridging_count(glued) == bridging_count(strip));
            }
        }
    }
}

TEST_CASE("strip JSON round trip") {
    StripTriangulation lifted = phi(sample_disc_14126());
    json j = strip_to_json(lifted);
    CHECK(strip_from_json(j) == lifted);
    CHECK(j.at("n") == 5);

    StripTriangulation other = phi(sample_disc_43312());
    CHECK(strip_from_json(strip_to_json(other)) == other);

    // Superscript mismatch on a bridging arc violates (A3).
    json bad = strip_to_json(other);
    for (json& arc : bad.at("arcs")) {
        if (arc.at("from").contains("upper")) arc.at("from").at("upper") = 1;
    }
    CHECK_THROWS_AS(strip_from_json(bad), std::invalid_argument);
}

TEST_CASE("strip JSON accepts translated and flipped arcs") {
    // One natural drawing uses 5^{(-1)}2^{(0)} and 5^{(-1)}5^{(0)}; any
    // translate, and either endpoint order, must normalize to the same
    // triangulation.
    json j = json::parse(R"({"n":5,"arcs":[
        {"from":{"upper":-3},"to":{"i":5,"k":-3}},
        {"from":{"i":5,"k":-1},"to":{"i":2,"k":0}},
        {"from":{"i":5,"k":2},"to":{"i":2,"k":2}},
        {"from":{"i":4,"k":7},"to":{"i":2,"k":7}},
        {"from":{"i":5,"k":0},"to":{"i":5,"k":-1}}]})");
    CHECK(strip_from_json(j) == phi(sample_disc_14126()));
}

TEST_CASE("disc JSON round trip") {
    DiscTriangulation disc14126 = sample_disc_14126();
    json j = disc_to_json(disc14126);
    CHECK(disc_from_json(j) == disc14126);
    CHECK(j.at("arcs").size() == 5);
}
