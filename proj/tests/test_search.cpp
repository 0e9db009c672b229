#include "doctest.h"

#include <random>

#include "digitop/constructions.hpp"
#include "digitop/search.hpp"
#include "oracles.hpp"

using namespace digitop;
using testutil::line_image;
using testutil::make;

namespace {

SearchLimits with_jobs(int jobs) {
    SearchLimits l;
    l.jobs = jobs;
    return l;
}

} // namespace

TEST_CASE("enumeration matches the naive oracle, in lexicographic order") {
    std::mt19937 rng(51);
    for (int round = 0; round < 30; ++round) {
        ImagePtr x = testutil::random_image(rng, 1 + testutil::rnd(rng, 4), round % 2 == 0);
        ImagePtr y = testutil::random_image(rng, 1 + testutil::rnd(rng, 4), round % 3 == 0);

        std::vector<std::vector<int>> forbidden(static_cast<std::size_t>(x->size()));
        for (int i = 0; i < x->size(); ++i)
            for (int v = 0; v < y->size(); ++v)
                if (testutil::rnd(rng, 5) == 0) forbidden[static_cast<std::size_t>(i)].push_back(v);

        auto expected = testutil::continuous_tables(*x, *y, forbidden);

        MapSearchProblem p{x, y, forbidden, SearchMode::Enumerate};
        SearchOutcome out = solve(p, {});
        REQUIRE(out.solutions.size() == expected.size());
        for (std::size_t k = 0; k < expected.size(); ++k)
            CHECK(out.solutions[k].table() == expected[k]);

        p.mode = SearchMode::Count;
        CHECK(solve(p, {}).count == expected.size());

        p.mode = SearchMode::FindOne;
        SearchOutcome one = solve(p, {});
        if (expected.empty()) {
            CHECK_FALSE(one.witness.has_value());
        } else {
            REQUIRE(one.witness.has_value());
            CHECK(one.witness->table() == expected.front());
        }
    }
}

TEST_CASE("outcome is identical for every jobs value") {
    std::mt19937 rng(52);
    for (int round = 0; round < 8; ++round) {
        ImagePtr x = testutil::random_image(rng, 2 + testutil::rnd(rng, 4), true);
        ImagePtr y = testutil::random_image(rng, 2 + testutil::rnd(rng, 4), false);
        for (SearchMode mode : {SearchMode::FindOne, SearchMode::Count, SearchMode::Enumerate}) {
            MapSearchProblem p{x, y, {}, mode};
            SearchOutcome base = solve(p, with_jobs(1));
            for (int jobs : {2, 3, 8}) {
                SearchOutcome other = solve(p, with_jobs(jobs));
                CHECK(other.nodes == base.nodes);
                CHECK(other.count == base.count);
                CHECK(other.witness.has_value() == base.witness.has_value());
                if (base.witness) CHECK(other.witness->table() == base.witness->table());
                REQUIRE(other.solutions.size() == base.solutions.size());
                for (std::size_t k = 0; k < base.solutions.size(); ++k)
                    CHECK(other.solutions[k].table() == base.solutions[k].table());
            }
        }
    }
}

TEST_CASE("budget is enforced exactly on the node count") {
    ImagePtr x = make(interval(0, 3));
    MapSearchProblem p{x, x, {}, SearchMode::Count};
    SearchOutcome out = solve(p, {});
    REQUIRE(out.nodes > 0);

    for (int jobs : {1, 3}) {
        SearchLimits exact = with_jobs(jobs);
        exact.node_budget = out.nodes;
        CHECK_NOTHROW(solve(p, exact));
        SearchLimits tight = with_jobs(jobs);
        tight.node_budget = out.nodes - 1;
        CHECK_THROWS_AS(solve(p, tight), BudgetError);
    }
}

TEST_CASE("solve validates the problem") {
    ImagePtr x = make(interval(0, 1));
    MapSearchProblem bad{x, x, {{0}, {0}, {0}}, SearchMode::FindOne};
    CHECK_THROWS_AS(solve(bad, {}), InputError);
    MapSearchProblem range{x, x, {{5}, {}}, SearchMode::FindOne};
    CHECK_THROWS_AS(solve(range, {}), InputError);
}

TEST_CASE("fixed point property of small images") {
    CHECK(has_fpp(line_image(1, {}), {}, true).holds);

    FppResult tri = has_fpp(line_image(3, {{0, 1}, {1, 2}, {0, 2}}), {}, true);
    CHECK_FALSE(tri.holds);
    REQUIRE(tri.witness.has_value());
    CHECK(is_continuous(*tri.witness));
    CHECK(fixed_points(*tri.witness).empty());

    // Disconnected: swap the two components.
    FppResult two = has_fpp(line_image(2, {}), {}, true);
    CHECK_FALSE(two.holds);
    REQUIRE(two.witness.has_value());
    CHECK(fixed_points(two.witness.value()).empty());
}

TEST_CASE("approximate fixed point property") {
    CHECK(has_afpp(make(interval(0, 3))).holds);
    AfppResult r = has_afpp(make(scc(4)));
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness.has_value());
    CHECK(is_continuous(*r.witness));
    CHECK(approximate_fixed_points(*r.witness).empty());
}

TEST_CASE("universality of specific maps") {
    ImagePtr k2 = line_image(2, {{0, 1}});
    CHECK(is_universal(identity_map(k2)).universal);

    ImagePtr c4 = make(scc(4));
    UniversalResult u = is_universal(constant_map(c4, 0));
    CHECK_FALSE(u.universal);
    REQUIRE(u.counterexample.has_value());
    CHECK(is_continuous(*u.counterexample));
    for (int i = 0; i < c4->size(); ++i)
        CHECK_FALSE(c4->closed_adjacent(0, (*u.counterexample)(i)));

    ImagePtr path = make(interval(0, 2));
    CHECK_THROWS_AS(is_universal(DigitalMap(path, path, {0, 2, 0})), InputError);
}

TEST_CASE("restriction to a subset detects universality of the whole map") {
    std::mt19937 rng(53);
    int fired = 0;
    for (int round = 0; round < 25; ++round) {
        ImagePtr x = testutil::random_image(rng, 2 + testutil::rnd(rng, 3), true);
        ImagePtr y = testutil::random_image(rng, 1 + testutil::rnd(rng, 3), round % 2 == 0);

        int size = 1 + testutil::rnd(rng, x->size() - 1);
        std::vector<int> sub;
        for (int i = 0; i < x->size(); ++i) sub.push_back(i);
        for (int i = x->size() - 1; i > 0; --i)
            std::swap(sub[static_cast<std::size_t>(i)],
                      sub[static_cast<std::size_t>(testutil::rnd(rng, i + 1))]);
        sub.resize(static_cast<std::size_t>(size));
        std::sort(sub.begin(), sub.end());
        ImagePtr u_img = make(x->induced(sub));

        MapSearchProblem p{x, y, {}, SearchMode::Enumerate};
        for (const DigitalMap& f : solve(p, {}).solutions) {
            std::vector<int> restricted;
            for (int i : sub) restricted.push_back(f(i));
            DigitalMap fu(u_img, y, restricted);
            if (!is_universal(fu).universal) continue;
            ++fired;
            CHECK(is_universal(f).universal);
        }
    }
    CHECK(fired > 0);
}

TEST_CASE("no universal map reaches a slightly-too-long target") {
    // Domain of m points, targets of n = m+3 points; the n = m+2 frontier is
    // exercised for completion but carries no assertion either way.
    ImagePtr x = make(interval(0, 1));
    for (ImagePtr y : {make(interval(0, 4)), make(scc(5))}) {
        MapSearchProblem p{x, y, {}, SearchMode::Enumerate};
        for (const DigitalMap& f : solve(p, {}).solutions)
            CHECK_FALSE(is_universal(f).universal);
    }
    for (ImagePtr y : {make(interval(0, 3)), make(scc(4))}) {
        MapSearchProblem p{x, y, {}, SearchMode::Enumerate};
        for (const DigitalMap& f : solve(p, {}).solutions) CHECK_NOTHROW(is_universal(f));
    }
}

TEST_CASE("dominating sets") {
    ImagePtr path = make(interval(0, 4));
    CHECK(is_dominating({1, 3}, *path));
    CHECK_FALSE(is_dominating({0, 1}, *path));
    CHECK(is_dominating({0, 2, 4}, *path));
    CHECK_THROWS_AS(is_dominating({}, *path), InputError);
    CHECK_THROWS_AS(is_dominating({9}, *path), InputError);
}

TEST_CASE("bounded homotopy search finds least step counts") {
    ImagePtr x = make(interval(0, 2));
    DigitalMap id = identity_map(x);
    DigitalMap c0 = constant_map(x, 0);

    CHECK_FALSE(find_bounded_homotopy(id, c0, 1).has_value());
    auto h = find_bounded_homotopy(id, c0, 3);
    REQUIRE(h.has_value());
    CHECK(h->m() == 2);
    CHECK(verify_homotopy(*h));

    // Equal maps admit the trivial one-step homotopy.
    auto same = find_bounded_homotopy(id, id, 2);
    REQUIRE(same.has_value());
    CHECK(same->m() == 1);

    ImagePtr y = make(interval(5, 7));
    CHECK_THROWS_AS(find_bounded_homotopy(id, constant_map(y, 0), 2), InputError);
    CHECK_THROWS_AS(find_bounded_homotopy(id, c0, 0), InputError);
    CHECK_THROWS_AS(find_bounded_homotopy(DigitalMap(x, x, {0, 2, 0}), c0, 2), InputError);
}

TEST_CASE("bounded contractibility") {
    auto path = make(interval(0, 2));
    auto h = bounded_contractibility(path, 2);
    REQUIRE(h.has_value());
    CHECK(verify_homotopy(*h));
    CHECK(h->f().table() == identity_map(path).table());

    // Unknown within a tiny bound; no witness, no claim.
    CHECK_FALSE(bounded_contractibility(make(scc(8)), 1).has_value());

    CHECK_THROWS_AS(bounded_contractibility(line_image(2, {}), 2), InputError);
    CHECK_THROWS_AS(bounded_contractibility(path, 0), InputError);

    SearchLimits tiny;
    tiny.node_budget = 3;
    CHECK_THROWS_AS(bounded_contractibility(make(scc(6)), 4, tiny), BudgetError);
}
