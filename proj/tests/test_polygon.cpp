#include <catch2/catch_amalgamated.hpp>

#include <cubicmaps/formulas.hpp>
#include <cubicmaps/polygon.hpp>

#include "support.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace cubicmaps;
using testsupport::oracle_catalan;
using testsupport::oracle_double_factorial_matchings;
using testsupport::oracle_noncrossing;

TEST_CASE("triangulation construction validates its invariants") {
    CHECK_NOTHROW(Triangulation(4, {{0, 2}}));
    CHECK_NOTHROW(Triangulation(4, {{1, 3}}));
    CHECK_NOTHROW(Triangulation(2, {}));
    CHECK_NOTHROW(Triangulation(3, {}));
    CHECK_NOTHROW(Triangulation(6, {{0, 2}, {2, 4}, {0, 4}})); // central triangle
    // crossing diagonals
    CHECK_THROWS_AS(Triangulation(6, {{1, 4}, {2, 5}, {3, 5}}), std::invalid_argument);
    // a polygon side is not a diagonal; neither is the closing side
    CHECK_THROWS_AS(Triangulation(4, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Triangulation(4, {{3, 0}}), std::invalid_argument);
    // duplicates (also after endpoint normalization)
    CHECK_THROWS_AS(Triangulation(5, {{0, 2}, {2, 0}}), std::invalid_argument);
    // maximality both ways
    CHECK_THROWS_AS(Triangulation(4, {}), std::invalid_argument);
    CHECK_THROWS_AS(Triangulation(5, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Triangulation(2, {{0, 1}}), std::invalid_argument);
    // range
    CHECK_THROWS_AS(Triangulation(4, {{0, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(Triangulation(4, {{-1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Triangulation(1, {}), std::invalid_argument);
}

TEST_CASE("no accepted triangulation contains a crossing pair") {
    for (int k = 4; k <= 8; ++k)
        for (const auto& t : enumerate_triangulations(k))
            for (size_t i = 0; i < t.diagonals.size(); ++i)
                for (size_t j = i + 1; j < t.diagonals.size(); ++j)
                    CHECK_FALSE(chords_cross(t.diagonals[i], t.diagonals[j]));
}

TEST_CASE("triangulation counts are Catalan numbers") {
    for (int k = 2; k <= 10; ++k) {
        const auto all = enumerate_triangulations(k);
        CHECK(ExactInt(static_cast<long long>(all.size())) == oracle_catalan(k - 2));
        std::set<Triangulation> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
    }
    long long count12 = 0;
    for_each_triangulation(12, [&](const Triangulation&) { ++count12; });
    CHECK(count12 == 16796);
}

TEST_CASE("triangulation enumeration order is stable") {
    const auto sq = enumerate_triangulations(4);
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].diagonals == std::vector<std::pair<int, int>>{{1, 3}});
    CHECK(sq[1].diagonals == std::vector<std::pair<int, int>>{{0, 2}});
    const auto hex = enumerate_triangulations(6);
    REQUIRE(hex.size() == 14);
    CHECK(hex[0].diagonals == std::vector<std::pair<int, int>>{{1, 5}, {2, 5}, {3, 5}});
}

TEST_CASE("gluing enumeration") {
    for (int k = 2; k <= 10; k += 2) {
        const auto all = enumerate_gluings(k);
        CHECK(ExactInt(static_cast<long long>(all.size())) == oracle_double_factorial_matchings(k));
        std::set<SideGluing> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
    }
    const auto sq = enumerate_gluings(4);
    REQUIRE(sq.size() == 3);
    CHECK(sq[0].pairs() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    CHECK(sq[1].pairs() == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
    CHECK(sq[2].pairs() == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});
    CHECK_THROWS_AS(enumerate_gluings(5), OddSides);
    CHECK_THROWS_AS(enumerate_gluings(3), OddSides);
    CHECK_THROWS_AS(enumerate_gluings(0), OddSides);
}

TEST_CASE("side gluing construction validates the involution") {
    CHECK_NOTHROW(SideGluing(4, {1, 0, 3, 2}));
    CHECK_THROWS_AS(SideGluing(4, {0, 1, 3, 2}), std::invalid_argument); // fixed points
    CHECK_THROWS_AS(SideGluing(4, {2, 0, 3, 1}), std::invalid_argument); // not an involution
    CHECK_THROWS_AS(SideGluing(4, {1, 0, 3}), std::invalid_argument);    // size
    CHECK_THROWS_AS(SideGluing(3, {1, 0, 2}), OddSides);
    CHECK_THROWS_AS(SideGluing::from_pairs(4, {{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK(SideGluing::from_pairs(4, {{2, 3}, {0, 1}}).pairs() ==
          std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
}

TEST_CASE("gluing genus on pinned examples") {
    CHECK(gluing_genus(SideGluing::from_pairs(2, {{0, 1}})) == 0); // sphere
    CHECK(gluing_genus(SideGluing::from_pairs(4, {{0, 1}, {2, 3}})) == 0);
    CHECK(gluing_genus(SideGluing::from_pairs(4, {{0, 2}, {1, 3}})) == 1); // torus
    CHECK(gluing_genus(SideGluing::from_pairs(4, {{0, 3}, {1, 2}})) == 0);
    CHECK(gluing_genus(SideGluing::from_pairs(6, {{0, 3}, {1, 4}, {2, 5}})) == 1);
}

TEST_CASE("genus zero is exactly non-crossing, with Catalan counts") {
    for (int k = 2; k <= 12; k += 2) {
        long long zero = 0;
        for_each_gluing(k, [&](const SideGluing& g) {
            const int genus = gluing_genus(g);
            CHECK(genus >= 0);
            CHECK((genus == 0) == oracle_noncrossing(g.partner));
            if (genus == 0)
                ++zero;
        });
        CHECK(ExactInt(zero) == oracle_catalan(k / 2));
        CHECK(ExactInt(static_cast<long long>(genus_zero_gluings(k).size())) ==
              oracle_catalan(k / 2));
    }
}

TEST_CASE("rotation is a group action preserving structure") {
    CHECK(rotate(Triangulation(4, {{0, 2}}), 1).diagonals ==
          std::vector<std::pair<int, int>>{{1, 3}});
    for (const auto& t : enumerate_triangulations(6)) {
        CHECK(rotate(t, 6) == t);
        CHECK(rotate(t, -1) == rotate(t, 5));
        CHECK(rotate(rotate(t, 2), 3) == rotate(t, 5));
    }
    for (const auto& g : enumerate_gluings(8)) {
        CHECK(rotate(g, 8) == g);
        CHECK(rotate(rotate(g, 3), 7) == rotate(g, 2));
        CHECK(gluing_genus(rotate(g, 3)) == gluing_genus(g));
    }
}

TEST_CASE("glued polygon marks rotate with the polygon") {
    GluedPolygon p(Triangulation(4, {{0, 2}}), SideGluing::from_pairs(4, {{0, 3}, {1, 2}}), 1);
    const auto q = rotate(p, 2);
    CHECK(q.marked_side == 3);
    CHECK(q.tri.diagonals == std::vector<std::pair<int, int>>{{0, 2}});
    const auto norm = normalize_mark(q);
    CHECK(norm.marked_side == 0);
    CHECK(rotate(norm, 4) == norm);
    CHECK(normalize_mark(p) == rotate(p, 3));
    // mismatched side counts and bad marks are rejected
    CHECK_THROWS_AS(GluedPolygon(Triangulation(4, {{0, 2}}),
                                 SideGluing::from_pairs(6, {{0, 1}, {2, 3}, {4, 5}}), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(GluedPolygon(Triangulation(4, {{0, 2}}),
                                 SideGluing::from_pairs(4, {{0, 1}, {2, 3}}), 4),
                    std::invalid_argument);
}

TEST_CASE("symmetric triangulation counts match the closed forms") {
    // half-turn on 2n-gons
    for (int n = 1; n <= 7; ++n)
        CHECK(count_symmetric_triangulations(2 * n, 2) == sym_tri_z2_marked(n));
    // order three on 3n-gons
    for (int n = 1; n <= 4; ++n)
        CHECK(count_symmetric_triangulations(3 * n, 3) == sym_tri_z3_marked(n));
    CHECK(count_symmetric_triangulations(4, 2) == 2);
    CHECK(count_symmetric_triangulations(6, 3) == 2);
    CHECK(count_symmetric_triangulations(9, 3) == 6); // 3 central triangles x C_2
    // the marked flag does not change the labeled-polygon count
    CHECK(count_symmetric_triangulations(6, 2, true) == count_symmetric_triangulations(6, 2, false));
}

TEST_CASE("symmetric triangulations decompose as the closed-form counting argument") {
    // Half-turn symmetric triangulations of the hexagon: each contains exactly
    // one big diagonal (i, i+3); 3 choices, each completed by C_2 = 2 halves.
    std::map<std::pair<int, int>, int> by_big;
    for (const auto& t : enumerate_triangulations(6)) {
        if (!(rotate(t, 3) == t))
            continue;
        int bigs = 0;
        std::pair<int, int> big;
        for (auto d : t.diagonals)
            if (d.second - d.first == 3) {
                ++bigs;
                big = d;
            }
        REQUIRE(bigs == 1);
        ++by_big[big];
    }
    REQUIRE(by_big.size() == 3);
    for (const auto& [big, count] : by_big)
        CHECK(count == 2);

    // Z3-symmetric triangulations of the 9-gon: exactly one central triangle
    // {a, a+3, a+6}; 3 choices, each with C_2 = 2 symmetric completions.
    std::map<int, int> by_triangle;
    for (const auto& t : enumerate_triangulations(9)) {
        if (!(rotate(t, 3) == t))
            continue;
        int centers = 0, center = -1;
        for (int a = 0; a < 3; ++a) {
            std::set<std::pair<int, int>> diag(t.diagonals.begin(), t.diagonals.end());
            if (diag.contains({a, a + 3}) && diag.contains({a + 3, a + 6}) &&
                diag.contains({a, a + 6})) {
                ++centers;
                center = a;
            }
        }
        REQUIRE(centers == 1);
        ++by_triangle[center];
    }
    REQUIRE(by_triangle.size() == 3);
    for (const auto& [center, count] : by_triangle)
        CHECK(count == 2);
}

TEST_CASE("no triangulation is symmetric under a rotation of order above 3") {
    const std::vector<std::pair<int, int>> cases{{4, 4},  {5, 5},  {6, 6},   {7, 7},
                                                 {8, 4},  {8, 8},  {9, 9},   {10, 5},
                                                 {10, 10}, {12, 4}, {12, 6}, {12, 12}};
    for (auto [k, q] : cases) {
        INFO("k=" << k << " q=" << q);
        CHECK(count_symmetric_triangulations(k, q) == 0);
    }
    CHECK_THROWS_AS(count_symmetric_triangulations(6, 4), BadOrder);
    CHECK_THROWS_AS(count_symmetric_triangulations(6, 1), BadOrder);
    CHECK_THROWS_AS(count_symmetric_triangulations(6, 0), BadOrder);
}

TEST_CASE("symmetric gluing counts match d and e") {
    for (int n = 1; n <= 6; ++n)
        CHECK(count_symmetric_gluings(2 * n, 2) == d_closed(n));
    CHECK(count_symmetric_gluings(4, 2) == 2);
    CHECK(count_symmetric_gluings(6, 2) == 3);
    CHECK(count_symmetric_gluings(6, 3) == e_closed(1));
    CHECK(count_symmetric_gluings(6, 3) == 2);
    CHECK(count_symmetric_gluings(12, 3) == e_closed(2));
    CHECK_THROWS_AS(count_symmetric_gluings(8, 4), BadOrder);
    CHECK_THROWS_AS(count_symmetric_gluings(8, 3), BadOrder); // 8 not divisible by 6
    CHECK_THROWS_AS(count_symmetric_gluings(5, 2), BadOrder);
}

namespace {

// Orbit count of (triangulation, genus-0 gluing) pairs under rotation by
// direct orbit enumeration: count pairs that are minimal in their orbit.
ExactInt orbits_direct(int m) {
    const auto tris = enumerate_triangulations(m);
    const auto glues = genus_zero_gluings(m);
    ExactInt orbits = 0;
    for (const auto& t : tris)
        for (const auto& g : glues) {
            bool minimal = true;
            for (int s = 1; s < m && minimal; ++s) {
                auto tr = rotate(t, s);
                auto gr = rotate(g, s);
                if (std::pair(tr, gr) < std::pair(t, g))
                    minimal = false;
            }
            if (minimal)
                ++orbits;
        }
    return orbits;
}

} // namespace

TEST_CASE("Burnside oracle agrees with direct orbit enumeration and the formula") {
    for (int n = 1; n <= 3; ++n) {
        INFO("n=" << n);
        CHECK(burnside_tree_rooted_count(n) == orbits_direct(2 * (n + 1)));
        CHECK(burnside_tree_rooted_count(n) == theorem41_t(n));
    }
    CHECK(burnside_tree_rooted_count(1) == 2);
    CHECK(burnside_tree_rooted_count(2) == 16);
    CHECK(burnside_tree_rooted_count(4) == theorem41_t(4));
    CHECK_THROWS_AS(burnside_tree_rooted_count(0), std::invalid_argument);
}

TEST_CASE("polygon text format round-trips bit-exactly") {
    GluedPolygon theta(Triangulation(4, {{0, 2}}), SideGluing::from_pairs(4, {{0, 3}, {1, 2}}), 0);
    const std::string line = "poly v1 k=4 diag=(0,2) glue=(0,3)(1,2) mark=0";
    CHECK(render_polygon(theta) == line);
    CHECK(render_polygon(parse_polygon(line)) == line);
    CHECK(parse_polygon(line) == theta);

    GluedPolygon tiny(Triangulation(2, {}), SideGluing::from_pairs(2, {{0, 1}}), std::nullopt);
    const std::string tiny_line = "poly v1 k=2 diag=- glue=(0,1) mark=-";
    CHECK(render_polygon(tiny) == tiny_line);
    CHECK(parse_polygon(tiny_line) == tiny);

    // every hexagon configuration round-trips
    for (const auto& t : enumerate_triangulations(6))
        for (const auto& g : genus_zero_gluings(6)) {
            GluedPolygon p(t, g, 4);
            CHECK(parse_polygon(render_polygon(p)) == p);
        }

    CHECK_THROWS_AS(parse_polygon("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polygon("poly v2 k=4 diag=(0,2) glue=(0,1)(2,3) mark=0"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_polygon("poly v1 k=4 diag=(0,2 glue=(0,1)(2,3) mark=0"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_polygon("poly v1 k=4 diag=(0,2) glue=(0,1) mark=0"),
                    std::invalid_argument);
}
