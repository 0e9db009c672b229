#include "doctest.h"

#include <random>

#include "digitop/core.hpp"
#include "digitop/errors.hpp"
#include "oracles.hpp"

using namespace digitop;

TEST_CASE("cu adjacency relation") {
    Point a{{0, 0}}, b{{1, 1}}, c{{0, 1}}, d{{0, 3}};
    CHECK(cu_adjacent(a, c, 1));
    CHECK_FALSE(cu_adjacent(a, b, 1));
    CHECK(cu_adjacent(a, b, 2));
    CHECK_FALSE(cu_adjacent(a, a, 2));
    CHECK_FALSE(cu_adjacent(a, d, 2));
    CHECK_THROWS_AS(cu_adjacent(Point{{0}}, a, 1), InputError);
    CHECK_THROWS_AS(cu_adjacent(a, b, 0), InputError);
    CHECK_THROWS_AS(cu_adjacent(a, b, 3), InputError);
}

TEST_CASE("points are stored in canonical lexicographic order") {
    DigitalImage img(1, {Point{{2}}, Point{{0}}, Point{{1}}}, CuAdjacency{1});
    CHECK(img.size() == 3);
    CHECK(img.point(0) == Point{{0}});
    CHECK(img.point(1) == Point{{1}});
    CHECK(img.point(2) == Point{{2}});
    CHECK(img.index_of(Point{{2}}) == 2);
    CHECK_FALSE(img.index_of(Point{{5}}).has_value());
    CHECK(img.contains(Point{{0}}));
}

TEST_CASE("explicit edges are remapped to canonical indices") {
    // Caller order: (2), (0), (1); edge 0-1 joins the points (2) and (0).
    DigitalImage img(1, {Point{{2}}, Point{{0}}, Point{{1}}},
                     ExplicitAdjacency{{{0, 1}}});
    CHECK(img.adjacent(Point{{2}}, Point{{0}}));
    CHECK_FALSE(img.adjacent(Point{{0}}, Point{{1}}));
    CHECK(img.edge_list() == std::vector<std::pair<int, int>>{{0, 2}});
}

TEST_CASE("image construction rejects malformed input") {
    CHECK_THROWS_AS(DigitalImage(1, {}, CuAdjacency{1}), InputError);
    CHECK_THROWS_AS(DigitalImage(1, {Point{{0}}, Point{{0}}}, CuAdjacency{1}), InputError);
    CHECK_THROWS_AS(DigitalImage(1, {Point{{0, 1}}}, CuAdjacency{1}), InputError);
    CHECK_THROWS_AS(DigitalImage(2, {Point{{0, 0}}}, CuAdjacency{3}), InputError);
    CHECK_THROWS_AS(DigitalImage(2, {Point{{0, 0}}}, CuAdjacency{0}), InputError);
    CHECK_THROWS_AS(DigitalImage(1, {Point{{0}}, Point{{1}}}, ExplicitAdjacency{{{0, 0}}}),
                    InputError);
    CHECK_THROWS_AS(DigitalImage(1, {Point{{0}}, Point{{1}}}, ExplicitAdjacency{{{0, 2}}}),
                    InputError);
    CHECK_THROWS_AS(
        DigitalImage(1, {Point{{0}}, Point{{1}}}, ExplicitAdjacency{{{0, 1}, {1, 0}}}),
        InputError);
}

TEST_CASE("neighbors agree with the pairwise relation on cu images") {
    std::mt19937 rng(7);
    for (int round = 0; round < 20; ++round) {
        std::vector<Point> box;
        for (std::int64_t a = 0; a <= 2; ++a)
            for (std::int64_t b = 0; b <= 2; ++b) box.push_back(Point{{a, b}});
        for (int i = 8; i > 0; --i)
            std::swap(box[static_cast<std::size_t>(i)],
                      box[static_cast<std::size_t>(testutil::rnd(rng, i + 1))]);
        box.resize(static_cast<std::size_t>(4 + testutil::rnd(rng, 5)));
        int u = 1 + testutil::rnd(rng, 2);
        DigitalImage img(2, box, CuAdjacency{u});
        for (int i = 0; i < img.size(); ++i) {
            std::vector<int> expected;
            for (int j = 0; j < img.size(); ++j)
                if (j != i && cu_adjacent(img.point(i), img.point(j), u)) expected.push_back(j);
            CHECK(img.neighbors(i) == expected);
        }
    }
}

TEST_CASE("closed neighborhood contains the point itself, sorted") {
    DigitalImage img(1, {Point{{0}}, Point{{1}}, Point{{2}}}, CuAdjacency{1});
    CHECK(img.closed_neighborhood(1) == std::vector<int>{0, 1, 2});
    CHECK(img.closed_neighborhood(0) == std::vector<int>{0, 1});
    auto pts = img.closed_neighborhood(Point{{2}});
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == Point{{1}});
    CHECK(pts[1] == Point{{2}});
}

TEST_CASE("components and connectivity") {
    DigitalImage img(1, {Point{{0}}, Point{{1}}, Point{{5}}, Point{{6}}, Point{{9}}},
                     CuAdjacency{1});
    auto comps = img.components();
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2, 3});
    CHECK(comps[2] == std::vector<int>{4});
    CHECK_FALSE(img.connected());

    DigitalImage path(1, {Point{{0}}, Point{{1}}, Point{{2}}}, CuAdjacency{1});
    CHECK(path.connected());
}

TEST_CASE("induced subimages restrict the adjacency") {
    DigitalImage grid(2, {Point{{0, 0}}, Point{{0, 1}}, Point{{1, 0}}, Point{{1, 1}}},
                      CuAdjacency{2});
    DigitalImage sub = grid.induced({0, 3});
    CHECK(sub.size() == 2);
    CHECK(sub.adjacent(Point{{0, 0}}, Point{{1, 1}}));

    DigitalImage tri(1, {Point{{0}}, Point{{1}}, Point{{2}}},
                     ExplicitAdjacency{{{0, 1}, {1, 2}, {0, 2}}});
    DigitalImage edge = tri.induced({0, 2});
    CHECK(edge.adjacent(0, 1));
    CHECK(tri.induced({0, 0}).size() == 1);
    CHECK_THROWS_AS(tri.induced({}), InputError);
    CHECK_THROWS_AS(tri.induced({0, 9}), InputError);
}

TEST_CASE("equality compares the realized adjacency relation") {
    DigitalImage cu(1, {Point{{0}}, Point{{1}}, Point{{2}}}, CuAdjacency{1});
    DigitalImage ex(1, {Point{{0}}, Point{{1}}, Point{{2}}},
                    ExplicitAdjacency{{{0, 1}, {1, 2}}});
    CHECK(cu == ex);
    DigitalImage other(1, {Point{{0}}, Point{{1}}, Point{{2}}},
                       ExplicitAdjacency{{{0, 1}}});
    CHECK_FALSE(cu == other);
}

TEST_CASE("validate accepts constructed images") {
    std::mt19937 rng(11);
    for (int round = 0; round < 30; ++round) {
        ImagePtr img = testutil::random_image(rng, 1 + testutil::rnd(rng, 6), round % 2 == 0);
        CHECK_NOTHROW(img->validate());
    }
    DigitalImage grid(2, {Point{{0, 0}}, Point{{1, 1}}}, CuAdjacency{2});
    CHECK_NOTHROW(grid.validate());
}
