#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ramsey/coloring.hpp"

using namespace ramsey;

TEST_CASE("vector_length per shape") {
    CHECK(Shape::circulant(101).vector_length() == 50);
    CHECK(Shape::block_circulant(4, 15, false).vector_length() == 118);
    CHECK(Shape::block_circulant(4, 15, true).vector_length() == 76);
    CHECK(Shape::free_edges(5).vector_length() == 10);
}

TEST_CASE("orbit examples") {
    Shape pent = Shape::circulant(5);
    auto o1 = pent.orbit_edges(0);
    std::set<Edge> want{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
    CHECK(std::set<Edge>(o1.begin(), o1.end()) == want);

    Shape hex = Shape::circulant(6);
    auto o3 = hex.orbit_edges(2);
    CHECK(o3.size() == 3);
    CHECK(std::set<Edge>(o3.begin(), o3.end()) ==
          std::set<Edge>{{0, 3}, {1, 4}, {2, 5}});

    Shape fe = Shape::free_edges(7);
    for (std::size_t i = 0; i < fe.vector_length(); ++i) {
        auto o = fe.orbit_edges(i);
        REQUIRE(o.size() == 1);
        CHECK(edge_index(o[0].first, o[0].second) == i);
    }

    CHECK_THROWS(pent.orbit_edges(99));
}

static void check_partition(const Shape& s) {
    std::set<std::size_t> seen;
    std::size_t total = 0;
    for (std::size_t i = 0; i < s.vector_length(); ++i) {
        for (auto [u, v] : s.orbit_edges(i)) {
            REQUIRE(u < v);
            std::size_t e = edge_index(u, v);
            REQUIRE(!seen.count(e));
            seen.insert(e);
            // ownership map agrees with enumeration
            REQUIRE(s.component_of(u, v) == i);
        }
        total += s.orbit_edges(i).size();
    }
    CHECK(total == num_edges(s.n()));
}

TEST_CASE("orbits partition E(K_n)") {
    for (int n : {2, 3, 5, 6, 13, 20})
        check_partition(Shape::circulant(n));
    for (int n : {5, 9, 12})
        check_partition(Shape::free_edges(n));
    check_partition(Shape::block_circulant(2, 2, false));
    check_partition(Shape::block_circulant(4, 15, false));
    check_partition(Shape::block_circulant(4, 15, true));
    check_partition(Shape::block_circulant(3, 4, true));
    check_partition(Shape::block_circulant(3, 4, false));
    check_partition(Shape::block_circulant(5, 7, true));
}

TEST_CASE("expand examples") {
    ColoringVector pent(Shape::circulant(5), 2, {1, 2});
    EdgeColoring col = expand(pent);
    CHECK(col.color(0, 1) == 1);
    CHECK(col.color(0, 2) == 2);
    CHECK(col.color(1, 3) == 2);
    CHECK(col.color(3, 4) == 1);

    ColoringVector mono(Shape::block_circulant(2, 2, false), 2,
                        {1, 1, 1, 1});
    EdgeColoring k4 = expand(mono);
    for (int v = 1; v < 4; ++v)
        for (int u = 0; u < v; ++u) CHECK(k4.color(u, v) == 1);
}

TEST_CASE("edge_color matches expand on random vectors") {
    std::mt19937_64 rng(7);
    std::vector<Shape> shapes;
    for (int n : {5, 12, 23, 30}) shapes.push_back(Shape::circulant(n));
    for (int n : {6, 15}) shapes.push_back(Shape::free_edges(n));
    shapes.push_back(Shape::block_circulant(3, 5, false));
    shapes.push_back(Shape::block_circulant(3, 5, true));
    shapes.push_back(Shape::block_circulant(2, 10, false));
    shapes.push_back(Shape::block_circulant(5, 6, true));
    int runs = 0;
    for (const auto& s : shapes) {
        for (int rep = 0; rep < 20; ++rep, ++runs) {
            int r = 2 + static_cast<int>(rng() % 3);
            ColoringVector v(s, r);
            for (auto& x : v.values)
                x = static_cast<std::uint8_t>(1 + rng() % r);
            EdgeColoring col = expand(v);
            for (int b = 1; b < s.n(); ++b)
                for (int a = 0; a < b; ++a)
                    REQUIRE(edge_color(v, a, b) == col.color(a, b));
        }
    }
    CHECK(runs == 200);
}

TEST_CASE("rotation symmetry of expansions") {
    std::mt19937_64 rng(11);
    ColoringVector v(Shape::circulant(13), 3);
    for (auto& x : v.values) x = static_cast<std::uint8_t>(1 + rng() % 3);
    EdgeColoring col = expand(v);
    int n = 13;
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a) {
            int a2 = (a + 1) % n, b2 = (b + 1) % n;
            CHECK(col.color(a, b) ==
                  col.color(std::min(a2, b2), std::max(a2, b2)));
        }

    ColoringVector bv(Shape::block_circulant(3, 5, false), 2);
    for (auto& x : bv.values) x = static_cast<std::uint8_t>(1 + rng() % 2);
    EdgeColoring bcol = expand(bv);
    int d = 5;
    for (int b = 1; b < 15; ++b)
        for (int a = 0; a < b; ++a) {
            int a2 = (a / d) * d + (a % d + 1) % d;
            int b2 = (b / d) * d + (b % d + 1) % d;
            if (a2 == b2) continue;
            CHECK(bcol.color(a, b) ==
                  bcol.color(std::min(a2, b2), std::max(a2, b2)));
        }
}

TEST_CASE("delete_vertices") {
    ColoringVector pent(Shape::circulant(5), 2, {1, 2});
    EdgeColoring col = expand(pent);

    EdgeColoring same = delete_vertices(col, {});
    CHECK(same == col);

    EdgeColoring k4 = delete_vertices(col, {4});
    CHECK(k4.n == 4);
    CHECK(k4.color(0, 1) == col.color(0, 1));
    CHECK(k4.color(2, 3) == col.color(2, 3));

    CHECK_THROWS(delete_vertices(col, {0, 1, 2, 3, 4}));

    // relabeling preserves order: removing vertex 1 maps 2->1, 3->2, 4->3
    EdgeColoring cut = delete_vertices(col, {1});
    CHECK(cut.color(0, 1) == col.color(0, 2));
    CHECK(cut.color(1, 3) == col.color(2, 4));
}

TEST_CASE("invalid construction rejected") {
    CHECK_THROWS(Shape::circulant(1));
    CHECK_THROWS(Shape::block_circulant(1, 5, false));
    CHECK_THROWS(ColoringVector(Shape::circulant(5), 2, {1, 2, 1}));
    CHECK_THROWS(ColoringVector(Shape::circulant(5), 2, {1, 3}));
}
