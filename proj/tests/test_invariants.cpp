#include "doctest.h"

#include <random>

#include "digitop/constructions.hpp"
#include "digitop/homology.hpp"
#include "digitop/invariants.hpp"
#include "digitop/search.hpp"
#include "oracles.hpp"

using namespace digitop;
using testutil::line_image;
using testutil::make;

namespace {

DigitalMap rotation(ImagePtr c, int shift) {
    std::vector<int> t;
    for (int i = 0; i < c->size(); ++i) t.push_back((i + shift) % c->size());
    return DigitalMap(c, c, std::move(t));
}

DigitalMap reflection(ImagePtr c) {
    std::vector<int> t;
    for (int i = 0; i < c->size(); ++i) t.push_back((c->size() - i) % c->size());
    return DigitalMap(c, c, std::move(t));
}

} // namespace

TEST_CASE("chain maps compose functorially") {
    std::mt19937 rng(71);
    for (int round = 0; round < 20; ++round) {
        ImagePtr x = testutil::random_image(rng, 1 + testutil::rnd(rng, 4), true);
        ImagePtr y = testutil::random_image(rng, 1 + testutil::rnd(rng, 4), round % 2 == 0);
        ImagePtr z = testutil::random_image(rng, 1 + testutil::rnd(rng, 4), true);

        MapSearchProblem pxy{x, y, {}, SearchMode::FindOne};
        MapSearchProblem pyz{y, z, {}, SearchMode::FindOne};
        auto f = solve(pxy, {}).witness;
        auto g = solve(pyz, {}).witness;
        REQUIRE(f.has_value());
        REQUIRE(g.has_value());
        DigitalMap gf = compose(*g, *f);

        ChainComplex cx(*x), cy(*y), cz(*z);
        int top = std::max(cx.dim(), std::max(cy.dim(), cz.dim()));
        for (int q = 0; q <= top; ++q) {
            IntMatrix lhs = induced_chain_map(gf, q, cx, cz);
            IntMatrix rhs = induced_chain_map(*g, q, cy, cz) * induced_chain_map(*f, q, cx, cy);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("chain maps commute with the boundary") {
    std::mt19937 rng(72);
    for (int round = 0; round < 20; ++round) {
        ImagePtr x = testutil::random_image(rng, 1 + testutil::rnd(rng, 5), true);
        ImagePtr y = testutil::random_image(rng, 1 + testutil::rnd(rng, 5), round % 2 == 0);
        MapSearchProblem p{x, y, {}, SearchMode::FindOne};
        auto f = solve(p, {}).witness;
        REQUIRE(f.has_value());
        ChainComplex cx(*x), cy(*y);
        for (int q = 1; q <= cx.dim(); ++q) {
            IntMatrix lhs = cy.boundary(q) * induced_chain_map(*f, q, cx, cy);
            IntMatrix rhs = induced_chain_map(*f, q - 1, cx, cy) * cx.boundary(q);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("identity induces the identity on homology") {
    for (const DigitalImage& img : {interval(0, 3), scc(6), sphere(1)}) {
        ImagePtr x = make(img);
        ImageHomology h(*x);
        for (int q = 0; q <= h.dim(); ++q) {
            InducedMap m = induced_homology_map(identity_map(x), q, h, h);
            CHECK(m.matrix == IntMatrix::identity(h.group(q).betti));
        }
    }
}

TEST_CASE("induced homology maps compose functorially") {
    std::mt19937 rng(73);
    for (int round = 0; round < 15; ++round) {
        ImagePtr x = testutil::random_image(rng, 1 + testutil::rnd(rng, 4), round % 2 == 0);
        ImagePtr y = testutil::random_image(rng, 1 + testutil::rnd(rng, 4), round % 3 == 0);
        ImagePtr z = testutil::random_image(rng, 1 + testutil::rnd(rng, 4), true);
        MapSearchProblem pxy{x, y, {}, SearchMode::FindOne};
        MapSearchProblem pyz{y, z, {}, SearchMode::FindOne};
        auto f = solve(pxy, {}).witness;
        auto g = solve(pyz, {}).witness;
        REQUIRE(f.has_value());
        REQUIRE(g.has_value());

        ImageHomology hx(*x), hy(*y), hz(*z);
        int top = std::max({hx.dim(), hy.dim(), hz.dim()});
        for (int q = 0; q <= top; ++q) {
            IntMatrix lhs = induced_homology_map(compose(*g, *f), q, hx, hz).matrix;
            IntMatrix rhs = induced_homology_map(*g, q, hy, hz).matrix *
                            induced_homology_map(*f, q, hx, hy).matrix;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("lefschetz number of the identity is the euler characteristic") {
    std::mt19937 rng(74);
    for (int round = 0; round < 25; ++round) {
        ImagePtr x = testutil::random_image(rng, 1 + testutil::rnd(rng, 6), round % 2 == 0);
        CHECK(lefschetz_number(identity_map(x)) == euler_characteristic(*x));
    }
    CHECK(lefschetz_number(identity_map(make(scc(8)))) == 0);
    CHECK(lefschetz_number(identity_map(make(interval(0, 4)))) == 1);
}

TEST_CASE("homotopy does not preserve induced maps on the four point closed curve") {
    // The 4-cycle is the one closed curve where an isomorphism can be
    // homotopic to a non-surjective map, so its homology groups and
    // lefschetz numbers are not homotopy invariants.
    ImagePtr c4 = make(scc(4));
    DigitalMap id = identity_map(c4);
    DigitalMap c0 = constant_map(c4, 0);

    Homotopy contraction(id, c0, {{0, 1, 2, 3}, {0, 1, 1, 0}, {0, 0, 0, 0}});
    CHECK(verify_homotopy(contraction));
    CHECK(find_bounded_homotopy(id, c0, 2).has_value());

    CHECK(lefschetz_number(id) == 0);
    CHECK(lefschetz_number(c0) == 1);
    ImageHomology h(*c4);
    IntMatrix id1 = induced_homology_map(id, 1, h, h).matrix;
    IntMatrix c01 = induced_homology_map(c0, 1, h, h).matrix;
    CHECK(id1.at(0, 0) == 1);
    CHECK(c01.at(0, 0) == 0);
}

TEST_CASE("isomorphisms homotope to non-surjective maps only on the four point curve") {
    for (int m : {4, 6, 8}) {
        ImagePtr c = make(scc(m));
        MapSearchProblem p{c, c, {}, SearchMode::Enumerate};
        auto maps = solve(p, {}).solutions;
        long long pairs = 0;
        long long found = 0;
        for (const DigitalMap& f : maps) {
            if (!is_isomorphism(f)) continue;
            for (const DigitalMap& g : maps) {
                bool surjective = true;
                std::vector<char> hit(static_cast<std::size_t>(m), 0);
                for (int v : g.table()) hit[static_cast<std::size_t>(v)] = 1;
                for (char was : hit) surjective = surjective && was != 0;
                if (surjective) continue;
                ++pairs;
                if (find_bounded_homotopy(f, g, 2).has_value()) ++found;
            }
        }
        CHECK(pairs > 0);
        CHECK(found == (m == 4 ? pairs : 0));
    }
}

TEST_CASE("lefschetz numbers of rotations and reflections of a closed curve") {
    ImagePtr c4 = make(scc(4));
    CHECK(lefschetz_number(rotation(c4, 1)) == 0);
    CHECK(lefschetz_number(reflection(c4)) == 2);
    CHECK(lefschetz_number(constant_map(c4, 0)) == 1);

    ImagePtr path = make(interval(0, 1));
    CHECK(lefschetz_number(DigitalMap(path, path, {1, 0})) == 1);

    CHECK_THROWS_AS(lefschetz_number(DigitalMap(path, c4, {0, 1})), InputError);
    ImagePtr c6 = make(scc(6));
    CHECK_THROWS_AS(lefschetz_number(DigitalMap(c6, c6, {2, 0, 0, 0, 0, 0})), InputError);
}

TEST_CASE("degree of self-maps of closed curves") {
    for (int m : {4, 6, 8}) {
        ImagePtr c = make(scc(m));
        CHECK(degree(identity_map(c), 1).value == 1);
        CHECK(degree(rotation(c, 1), 1).value == 1);
        CHECK(degree(rotation(c, m / 2), 1).value == 1);
        CHECK(degree(reflection(c), 1).value == -1);
        DegreeResult constant = degree(constant_map(c, 0), 1);
        CHECK(constant.defined);
        CHECK(constant.value == 0);
    }
}

TEST_CASE("degree tracks the explicit circular generator") {
    // deg(f) is the factor by which f_* scales the class of the circular
    // cycle z; compare free_coords(f_#(z)) against free_coords(z) directly.
    ImagePtr c = make(scc(6));
    ChainComplex cx(*c);
    ImageHomology h(*c);
    std::vector<std::int64_t> z(static_cast<std::size_t>(cx.alpha(1)), 0);
    for (int i = 0; i + 1 < 6; ++i) z[static_cast<std::size_t>(*cx.index_of(1, {i, i + 1}))] = 1;
    z[static_cast<std::size_t>(*cx.index_of(1, {0, 5}))] = -1;
    auto z_coord = h.free_coords(1, z);
    REQUIRE(z_coord.size() == 1);

    for (const DigitalMap& f : {rotation(c, 2), reflection(c), identity_map(c)}) {
        IntMatrix chain_map = induced_chain_map(f, 1, cx, cx);
        auto fz = mul(chain_map, z);
        auto fz_coord = h.free_coords(1, fz);
        std::int64_t expected_ratio = degree(f, 1).value;
        CHECK(fz_coord[0] == expected_ratio * z_coord[0]);
    }
}

TEST_CASE("degree is undefined when the free rank is not 1") {
    ImagePtr path = make(interval(0, 2));
    DegreeResult d = degree(identity_map(path), 1);
    CHECK_FALSE(d.defined);
    CHECK(d.hn.trivial());

    WedgeImage w = wedge(scc(4), Point{{0, 0}}, scc(4), Point{{0, 0}});
    DegreeResult two = degree(identity_map(w.image), 1);
    CHECK_FALSE(two.defined);
    CHECK(two.hn == HomologyGroup{1, 2, {}});

    CHECK_THROWS_AS(degree(identity_map(path), -1), InputError);
    ImagePtr c4 = make(scc(4));
    CHECK_THROWS_AS(degree(DigitalMap(path, c4, {0, 1, 2}), 1), InputError);
}

TEST_CASE("induced chain map rejects discontinuous maps") {
    ImagePtr path = make(interval(0, 2));
    CHECK_THROWS_AS(induced_chain_map(DigitalMap(path, path, {0, 2, 0}), 1), InputError);
}
