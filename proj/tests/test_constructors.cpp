#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "ramsey/constructors.hpp"

using namespace ramsey;

namespace {

int degree(const EdgeColoring& col, int v, int c) {
    int deg = 0;
    for (int u = 0; u < col.n; ++u)
        if (u != v && col.color(std::min(u, v), std::max(u, v)) == c) ++deg;
    return deg;
}

} // namespace

TEST_CASE("paley basics") {
    EdgeColoring p5 = paley(5);
    // QRs mod 5 are {1,4}: color-1 graph is the pentagon
    CHECK(p5.color(0, 1) == 1);
    CHECK(p5.color(1, 2) == 1);
    CHECK(p5.color(0, 2) == 2);

    EdgeColoring p17 = paley(17);
    for (int v = 0; v < 17; ++v) {
        CHECK(degree(p17, v, 1) == 8);
        CHECK(degree(p17, v, 2) == 8);
    }
    CHECK(oracle::count_cliques(p17, 1, 4) == 0);
    CHECK(oracle::count_cliques(p17, 2, 4) == 0);

    CHECK_THROWS(paley(7));  // 7 = 3 (mod 4)
    CHECK_THROWS(paley(15)); // not prime
}

TEST_CASE("paley self-complementarity") {
    int p = 13;
    EdgeColoring col = paley(p);
    int nonres = 0;
    for (int x = 1; x < p; ++x)
        if (!is_quadratic_residue(x, p)) {
            nonres = x;
            break;
        }
    // multiplying vertices by a non-residue swaps the color classes
    for (int v = 1; v < p; ++v)
        for (int u = 0; u < v; ++u) {
            int u2 = u * nonres % p, v2 = v * nonres % p;
            CHECK(col.color(u, v) != col.color(std::min(u2, v2), std::max(u2, v2)));
        }
}

TEST_CASE("cubic basics") {
    EdgeColoring c127 = cubic(127);
    for (int v = 0; v < 127; ++v) CHECK(degree(c127, v, 1) == 42);

    CHECK_THROWS(cubic(5));  // 5 = 2 (mod 3)
    CHECK_THROWS(cubic(21)); // not prime

    // translation and cubic-residue-multiplication invariance
    EdgeColoring c13 = cubic(13);
    for (int v = 1; v < 13; ++v)
        for (int u = 0; u < v; ++u) {
            int u2 = (u + 1) % 13, v2 = (v + 1) % 13;
            CHECK(c13.color(u, v) ==
                  c13.color(std::min(u2, v2), std::max(u2, v2)));
        }
    int cres = 0;
    for (int x = 2; x < 13; ++x)
        if (is_cubic_residue(x, 13)) {
            cres = x;
            break;
        }
    for (int v = 1; v < 13; ++v)
        for (int u = 0; u < v; ++u) {
            int u2 = u * cres % 13, v2 = v * cres % 13;
            CHECK(c13.color(u, v) ==
                  c13.color(std::min(u2, v2), std::max(u2, v2)));
        }
}

TEST_CASE("cubic(127) color 1 is K_4-free") {
    CHECK(count_cliques(cubic(127), 1, 4) == 0);
}

TEST_CASE("tile") {
    ColoringVector base(Shape::circulant(5), 2, {1, 2});

    // identity tiling
    auto same = tile(base, 1, 5);
    CHECK(same == base);

    // restriction of the tiled coloring to block (0,0) equals the base
    auto tiled = tile(base, 3, 15);
    CHECK(tiled.shape.kind() == ShapeKind::BlockCirculant);
    EdgeColoring big = expand(tiled);
    EdgeColoring small = expand(base);
    for (int v = 1; v < 5; ++v)
        for (int u = 0; u < v; ++u) CHECK(big.color(u, v) == small.color(u, v));

    // trimming drops the highest-indexed vertices
    auto cut = tile(base, 3, 12);
    CHECK(cut.shape.kind() == ShapeKind::FreeEdges);
    CHECK(cut.shape.n() == 12);
    EdgeColoring cutcol = expand(cut);
    for (int v = 1; v < 12; ++v)
        for (int u = 0; u < v; ++u) CHECK(cutcol.color(u, v) == big.color(u, v));

    CHECK_THROWS(tile(base, 2, 11)); // n_target > m*b
}

TEST_CASE("extend_layer and its inverse") {
    std::mt19937_64 rng(3);
    ColoringVector blocks(Shape::block_circulant(4, 15, false), 2);
    for (auto& x : blocks.values) x = static_cast<std::uint8_t>(1 + rng() % 2);
    EdgeColoring col = expand(blocks);

    auto ext = extend_layer(col, 15, rng);
    CHECK(ext.vec.shape.n() == 75);
    CHECK(ext.vec.shape.m() == 5);

    // restriction to the first 60 vertices is unchanged
    EdgeColoring grown = expand(ext.vec);
    std::vector<int> extra;
    for (int v = 60; v < 75; ++v) extra.push_back(v);
    CHECK(delete_vertices(grown, extra) == col);

    // frozen components are exactly the orbits inside the old vertex range
    for (std::size_t i = 0; i < ext.vec.shape.vector_length(); ++i) {
        bool old = true;
        for (auto [u, v] : ext.vec.shape.orbit_edges(i))
            if (v >= 60) old = false;
        bool frozen = std::find(ext.frozen.begin(), ext.frozen.end(), i) !=
                      ext.frozen.end();
        REQUIRE(frozen == old);
    }

    // the R(4,11) pipeline shape: 60 -> 75 -> 90 -> 105, d = 15
    auto e2 = extend_layer(expand(ext.vec), 15, rng);
    CHECK(e2.vec.shape.n() == 90);
    auto e3 = extend_layer(expand(e2.vec), 15, rng);
    CHECK(e3.vec.shape.n() == 105);
    CHECK(e3.vec.shape.m() == 7);

    CHECK_THROWS(extend_layer(col, 13, rng)); // 13 does not divide 60

    // a non-block-circulant coloring is rejected
    EdgeColoring broken = col;
    broken.set_color(0, 1, static_cast<std::uint8_t>(3 - broken.color(0, 1)));
    CHECK_THROWS(extend_layer(broken, 15, rng));
}

TEST_CASE("greedy_delete") {
    // a lone bad triangle: greedy removes one of its vertices
    ColoringVector v(Shape::free_edges(7), 2);
    for (auto& x : v.values) x = 2;
    v.values[edge_index(2, 3)] = 1;
    v.values[edge_index(2, 5)] = 1;
    v.values[edge_index(3, 5)] = 1;
    Targets t{3, 8};
    EdgeColoring col = expand(v);
    EdgeColoring cut = greedy_delete(col, t, 1);
    CHECK(cut.n == 6);
    auto f = oracle::count_all(cut, {3, 8});
    CHECK(f[0] == 0);

    CHECK(greedy_delete(col, t, 0) == col);

    // tie-break: lowest incidence-maximal vertex index goes first
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 8; ++rep) {
        EdgeColoring rnd(10 + static_cast<int>(rng() % 6), 2);
        for (auto& c : rnd.colors) c = static_cast<std::uint8_t>(1 + rng() % 2);
        auto inc = oracle::vertex_incidence(rnd, {3, 4});
        int expect = 0;
        for (int u = 1; u < rnd.n; ++u)
            if (inc[u] > inc[expect]) expect = u;
        EdgeColoring after = greedy_delete(rnd, {3, 4}, 1);
        std::vector<int> removed{expect};
        CHECK(after == delete_vertices(rnd, removed));
    }
}

TEST_CASE("n=60 block coloring minus 2 vertices gives n=58") {
    std::mt19937_64 rng(5);
    ColoringVector blocks(Shape::block_circulant(4, 15, false), 2);
    for (auto& x : blocks.values) x = static_cast<std::uint8_t>(1 + rng() % 2);
    EdgeColoring col = expand(blocks);
    EdgeColoring cut = greedy_delete(col, {4, 8}, 2);
    CHECK(cut.n == 58);
}

TEST_CASE("split keeps other colors intact through stage 2") {
    // (3,5) circulant on K_13: distances {1,5} triangle-free, rest K_5-free
    ColoringVector src(Shape::circulant(13), 2, {1, 2, 2, 2, 1, 2});
    EdgeColoring col = expand(src);
    REQUIRE(verify(col, {3, 5}).good);

    SearchConfig cfg;
    cfg.seed = 1;
    cfg.max_iters = 3000;
    auto out = split(col, {3, 5}, 2, {3, 3}, cfg);
    CHECK(out.new_targets == Targets{3, 3, 3});
    EdgeColoring result = expand(out.result.vec);
    // classes 2 and 3 partition the old class-2 edges; class 1 untouched
    if (out.stage != SplitStage::EdgeRecolorFree) {
        for (int v = 1; v < 13; ++v)
            for (int u = 0; u < v; ++u) {
                if (col.color(u, v) == 1) {
                    REQUIRE(result.color(u, v) == 1);
                } else {
                    REQUIRE(result.color(u, v) >= 2);
                }
            }
    }
    if (out.result.good) CHECK(verify(result, out.new_targets).good);
}

TEST_CASE("split of a (3,5)-coloring of K_13 yields (3,3,3)") {
    ColoringVector src(Shape::circulant(13), 2, {1, 2, 2, 2, 1, 2});
    SearchConfig cfg;
    cfg.seed = 4;
    cfg.max_iters = 5000;
    auto out = split(expand(src), {3, 5}, 2, {3, 3}, cfg);
    REQUIRE(out.result.good);
    CHECK(verify(expand(out.result.vec), {3, 3, 3}).good);
    CHECK(oracle::count_all(expand(out.result.vec), {3, 3, 3}) ==
          CliqueCounts{0, 0, 0});
}

TEST_CASE("split argument validation") {
    ColoringVector src(Shape::circulant(13), 2, {1, 2, 2, 2, 1, 2});
    SearchConfig cfg;
    CHECK_THROWS(split(expand(src), {3, 5}, 3, {3, 3}, cfg));
    CHECK_THROWS(split(expand(src), {3, 5}, 1, {4, 4}, cfg));
}
