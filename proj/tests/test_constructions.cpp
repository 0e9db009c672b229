#include "doctest.h"

#include "digitop/constructions.hpp"
#include "digitop/homology.hpp"
#include "digitop/image_io.hpp"
#include "digitop/search.hpp"
#include "oracles.hpp"

#include <sstream>

using namespace digitop;
using testutil::make;

TEST_CASE("interval") {
    DigitalImage i = interval(-1, 2);
    CHECK(i.size() == 4);
    CHECK(i.ambient_dim() == 1);
    CHECK(i.adjacent(Point{{-1}}, Point{{0}}));
    CHECK_FALSE(i.adjacent(Point{{-1}}, Point{{1}}));
    CHECK_THROWS_AS(interval(2, 2), InputError);
    CHECK_THROWS_AS(interval(3, 1), InputError);
}

TEST_CASE("simple closed curve") {
    DigitalImage c = scc(5);
    CHECK(c.size() == 5);
    CHECK(c.connected());
    for (int i = 0; i < 5; ++i) {
        CHECK(c.degree(i) == 2);
        CHECK(c.adjacent(i, (i + 1) % 5));
        CHECK_FALSE(c.adjacent(i, (i + 2) % 5));
    }
    CHECK_THROWS_AS(scc(3), InputError);
}

TEST_CASE("scc(8) is isomorphic to sphere(1)") {
    ImagePtr c8 = make(scc(8));
    ImagePtr s1 = make(sphere(1));
    REQUIRE(s1->size() == 8);

    // Walk the 8-cycle of sphere(1) starting anywhere.
    std::vector<int> cycle{0};
    std::vector<bool> used(8, false);
    used[0] = true;
    while (cycle.size() < 8) {
        bool advanced = false;
        for (int j : s1->neighbors(cycle.back()))
            if (!used[static_cast<std::size_t>(j)]) {
                cycle.push_back(j);
                used[static_cast<std::size_t>(j)] = true;
                advanced = true;
                break;
            }
        REQUIRE(advanced);
    }
    DigitalMap iso(c8, s1, cycle);
    CHECK(is_isomorphism(iso));
}

TEST_CASE("sphere") {
    DigitalImage s1 = sphere(1);
    CHECK(s1.size() == 8);
    CHECK_FALSE(s1.contains(Point{{0, 0}}));
    CHECK(complex_dimension(s1) == 1);

    DigitalImage s2 = sphere(2);
    CHECK(s2.size() == 26);
    CHECK(s2.connected());

    CHECK_THROWS_AS(sphere(0), InputError);
    CHECK_THROWS_AS(sphere(-1), InputError);
    CHECK_THROWS_AS(sphere(11), BudgetError);
}

TEST_CASE("cube") {
    CHECK(cube({1}) == interval(0, 1));
    DigitalImage grid = cube({2, 2});
    CHECK(grid.size() == 9);
    // The center of the 3x3 grid dominates under c_2.
    int center = *grid.index_of(Point{{1, 1}});
    CHECK(grid.degree(center) == 8);
    CHECK_THROWS_AS(cube({}), InputError);
    CHECK_THROWS_AS(cube({0, 2}), InputError);
    CHECK_THROWS_AS(cube({100000}), BudgetError);
}

TEST_CASE("antipode map") {
    ImagePtr s1 = make(sphere(1));
    DigitalMap a = antipode_map(s1);
    CHECK(is_continuous(a));
    CHECK(fixed_points(a).empty());
    CHECK(approximate_fixed_points(a).empty());
    for (int i = 0; i < s1->size(); ++i) {
        Point neg = s1->point(i);
        for (auto& c : neg.coords) c = -c;
        CHECK(a(i) == *s1->index_of(neg));
    }

    CHECK_THROWS_AS(antipode_map(make(interval(0, 2))), InputError);
}

TEST_CASE("wedge gluing") {
    DigitalImage a = interval(0, 2);
    DigitalImage b = scc(4);
    WedgeImage w = wedge(a, Point{{1}}, b, Point{{2, 0}});

    CHECK(w.image->size() == a.size() + b.size() - 1);
    CHECK(w.a_to_wedge[1] == w.glue_index);
    CHECK(w.b_to_wedge[2] == w.glue_index);
    CHECK(w.image->degree(w.glue_index) == a.degree(1) + b.degree(2));

    // Adjacency is preserved on each side.
    for (auto [i, j] : a.edge_list())
        CHECK(w.image->adjacent(w.a_to_wedge[static_cast<std::size_t>(i)],
                                w.a_to_wedge[static_cast<std::size_t>(j)]));
    for (auto [i, j] : b.edge_list())
        CHECK(w.image->adjacent(w.b_to_wedge[static_cast<std::size_t>(i)],
                                w.b_to_wedge[static_cast<std::size_t>(j)]));

    // No cross edges away from the glue point.
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j) {
            int wi = w.a_to_wedge[static_cast<std::size_t>(i)];
            int wj = w.b_to_wedge[static_cast<std::size_t>(j)];
            if (wi == w.glue_index || wj == w.glue_index) continue;
            CHECK_FALSE(w.image->adjacent(wi, wj));
        }

    CHECK_THROWS_AS(wedge(a, Point{{9}}, b, Point{{2, 0}}), InputError);
    CHECK_THROWS_AS(wedge(a, Point{{1}}, b, Point{{9, 9}}), InputError);
}

TEST_CASE("wedge retractions") {
    DigitalImage a = interval(0, 2);
    DigitalImage b = scc(4);
    WedgeImage w = wedge(a, Point{{0}}, b, Point{{0, 0}});

    DigitalMap ra = w.retraction_onto_a();
    std::vector<int> a_side(w.a_to_wedge.begin(), w.a_to_wedge.end());
    std::sort(a_side.begin(), a_side.end());
    CHECK(is_retraction(ra, a_side));

    DigitalMap rb = w.retraction_onto_b();
    std::vector<int> b_side(w.b_to_wedge.begin(), w.b_to_wedge.end());
    std::sort(b_side.begin(), b_side.end());
    CHECK(is_retraction(rb, b_side));
}

TEST_CASE("product") {
    DigitalImage square = product({interval(0, 1), interval(0, 1)});
    CHECK(square == cube({1, 1}));

    DigitalImage box = product({interval(0, 2), cube({1, 1})});
    CHECK(box.ambient_dim() == 3);
    CHECK(box.size() == 12);
    CHECK(box == cube({2, 1, 1}));

    CHECK_THROWS_AS(product({}), InputError);
    CHECK_THROWS_AS(product({interval(0, 1), scc(4)}), InputError);
}

TEST_CASE("constructed images survive a file round trip") {
    for (const DigitalImage& img :
         {interval(-2, 3), scc(7), sphere(1), cube({2, 1}),
          *wedge(interval(0, 1), Point{{0}}, scc(4), Point{{0, 0}}).image,
          product({interval(0, 1), interval(0, 2)})}) {
        std::ostringstream out;
        write_image(out, img);
        std::istringstream in(out.str());
        CHECK(read_image(in, "<round-trip>") == img);
    }
}
