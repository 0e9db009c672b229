#include "digitop/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "digitop/constructions.hpp"
#include "digitop/homology.hpp"
#include "digitop/invariants.hpp"

namespace digitop {

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            detail = msg;
        }
    }
    // Run summary shown when everything passed.
    void note(const std::string& info) {
        if (ok) detail = info;
    }
};

ImagePtr make(DigitalImage img) { return std::make_shared<const DigitalImage>(std::move(img)); }

ImagePtr labeled_image(int n, std::vector<std::pair<int, int>> edges) {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back(Point{{i}});
    return make(DigitalImage(1, std::move(pts), ExplicitAdjacency{std::move(edges)}));
}

std::string describe(const DigitalImage& x) {
    std::ostringstream ss;
    ss << "image[n=" << x.size() << ",edges=" << x.edge_list().size() << "]";
    return ss.str();
}

// Every labeled connected graph on 1..5 vertices, as explicit images on the
// line. 1 + 1 + 4 + 38 + 728 graphs.
std::vector<ImagePtr> connected_graph_corpus() {
    std::vector<ImagePtr> out;
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t b = 0; b < pairs.size(); ++b)
                if (mask >> b & 1u) edges.push_back(pairs[b]);
            ImagePtr img = labeled_image(n, std::move(edges));
            if (img->connected()) out.push_back(std::move(img));
        }
    }
    return out;
}

std::vector<ImagePtr> named_corpus() {
    std::vector<ImagePtr> out;
    for (int k = 1; k <= 4; ++k) out.push_back(make(interval(0, k)));
    out.push_back(make(cube({1, 1})));
    out.push_back(make(cube({2, 2})));
    out.push_back(make(cube({1, 1, 1})));
    for (int m = 4; m <= 8; ++m) out.push_back(make(scc(m)));
    out.push_back(make(sphere(1)));
    out.push_back(make(sphere(2)));
    return out;
}

int rnd(std::mt19937& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint32_t>(n)); }

ImagePtr random_explicit_image(std::mt19937& rng, int n, bool force_connected) {
    std::vector<std::pair<int, int>> edges;
    if (force_connected)
        for (int i = 1; i < n; ++i) edges.emplace_back(rnd(rng, i), i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool present = force_connected ? rnd(rng, 3) == 0 : rnd(rng, 2) == 0;
            if (present) edges.emplace_back(i, j);
        }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return labeled_image(n, std::move(edges));
}

// Relabels X by a random permutation; returns the copy and the isomorphism
// X -> copy.
std::pair<ImagePtr, DigitalMap> iso_copy(std::mt19937& rng, ImagePtr x) {
    const int n = x->size();
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(rnd(rng, i + 1))]);

    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : x->edge_list())
        edges.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
    ImagePtr y = labeled_image(n, std::move(edges));
    DigitalMap h(std::move(x), y, perm);
    return {std::move(y), std::move(h)};
}

std::vector<DigitalMap> all_continuous_maps(ImagePtr x, ImagePtr y, const SearchLimits& limits) {
    MapSearchProblem p;
    p.domain = std::move(x);
    p.codomain = std::move(y);
    p.mode = SearchMode::Enumerate;
    return solve(p, limits).solutions;
}

std::uint64_t naive_count(const DigitalImage& x, const DigitalImage& y,
                          const std::vector<std::vector<int>>& forbidden) {
    std::vector<std::vector<bool>> bad(static_cast<std::size_t>(x.size()),
                                       std::vector<bool>(static_cast<std::size_t>(y.size()), false));
    for (std::size_t i = 0; i < forbidden.size(); ++i)
        for (int v : forbidden[i]) bad[i][static_cast<std::size_t>(v)] = true;

    std::vector<int> t(static_cast<std::size_t>(x.size()), 0);
    std::uint64_t count = 0;
    for (;;) {
        bool ok = true;
        for (int i = 0; ok && i < x.size(); ++i)
            if (bad[static_cast<std::size_t>(i)][static_cast<std::size_t>(t[static_cast<std::size_t>(i)])])
                ok = false;
        for (auto [i, j] : x.edge_list()) {
            if (!ok) break;
            if (!y.closed_adjacent(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]))
                ok = false;
        }
        if (ok) ++count;
        int i = 0;
        while (i < x.size() && t[static_cast<std::size_t>(i)] == y.size() - 1) {
            t[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == x.size()) break;
        ++t[static_cast<std::size_t>(i)];
    }
    return count;
}

bool valid_afpp_refutation(const DigitalMap& f) {
    return is_continuous(f) && approximate_fixed_points(f).empty();
}

bool valid_universality_refutation(const DigitalMap& f, const DigitalMap& g) {
    if (!is_continuous(g)) return false;
    for (int i = 0; i < f.domain().size(); ++i)
        if (f.codomain().closed_adjacent(f(i), g(i))) return false;
    return true;
}

// ---- criterion 1 ----------------------------------------------------------

CheckResult fpp_characterization(const SearchLimits& limits) {
    Verdict v;
    std::vector<ImagePtr> corpus = connected_graph_corpus();
    for (ImagePtr& img : named_corpus()) corpus.push_back(std::move(img));

    for (const ImagePtr& img : corpus) {
        bool cross = img->size() <= 4;
        FppResult r = has_fpp(img, limits, cross);
        v.expect(r.holds == (img->size() == 1), "fpp verdict wrong on " + describe(*img));
        if (!r.holds) {
            v.expect(r.witness.has_value(), "missing witness on " + describe(*img));
            if (r.witness) {
                v.expect(is_continuous(*r.witness), "witness not continuous on " + describe(*img));
                v.expect(fixed_points(*r.witness).empty(),
                         "witness has a fixed point on " + describe(*img));
            }
        }
    }
    v.note(std::to_string(corpus.size()) + " images checked");
    return {"", "", v.ok, v.detail};
}

// ---- criterion 2 ----------------------------------------------------------

CheckResult afpp_cubes(const SearchLimits& limits) {
    Verdict v;
    std::vector<ImagePtr> imgs;
    for (int k = 1; k <= 6; ++k) imgs.push_back(make(interval(0, k)));
    imgs.push_back(make(cube({1, 1})));
    imgs.push_back(make(cube({2, 2})));
    imgs.push_back(make(cube({1, 1, 1})));
    for (const ImagePtr& img : imgs) {
        AfppResult r = has_afpp(img, limits);
        v.expect(r.holds, "afpp refuted on " + describe(*img));
    }
    v.note(std::to_string(imgs.size()) + " images hold the property");
    return {"", "", v.ok, v.detail};
}

// ---- criterion 3 ----------------------------------------------------------

CheckResult afpp_scc(const SearchLimits& limits) {
    Verdict v;
    for (int m = 4; m <= 10; ++m) {
        AfppResult r = has_afpp(make(scc(m)), limits);
        v.expect(!r.holds, "afpp unexpectedly holds on scc(" + std::to_string(m) + ")");
        v.expect(r.witness && valid_afpp_refutation(*r.witness),
                 "invalid witness on scc(" + std::to_string(m) + ")");
    }
    v.note("scc(4..10) all refuted with valid witnesses");
    return {"", "", v.ok, v.detail};
}

// ---- criterion 4 ----------------------------------------------------------

CheckResult flip_interval(const SearchLimits&) {
    Verdict v;
    ImagePtr x = make(interval(0, 1));
    DigitalMap f(x, x, {1, 0});
    v.expect(is_continuous(f), "flip is not continuous");
    v.expect(fixed_points(f).empty(), "flip has a fixed point");
    v.expect(lefschetz_number(f) == 1, "flip Lefschetz number != 1");
    v.note("continuous, fixed-point-free, Lefschetz number 1");
    return {"", "", v.ok, v.detail};
}

CheckResult flip_square(const SearchLimits&) {
    Verdict v;
    ImagePtr sq = make(DigitalImage(
        2, {Point{{0, 0}}, Point{{0, 1}}, Point{{1, 0}}, Point{{1, 1}}}, CuAdjacency{1}));
    std::vector<int> table(4);
    for (int i = 0; i < 4; ++i) {
        Point p = sq->point(i);
        table[static_cast<std::size_t>(i)] = *sq->index_of(Point{{p[0], 1 - p[1]}});
    }
    DigitalMap g(sq, sq, std::move(table));
    v.expect(is_continuous(g), "vertical flip is not continuous");
    v.expect(fixed_points(g).empty(), "vertical flip has a fixed point");
    v.note("continuous and fixed-point-free on the 4-point square");
    return {"", "", v.ok, v.detail};
}

ImagePtr three_point_image() {
    return make(DigitalImage(2, {Point{{0, 0}}, Point{{0, 1}}, Point{{1, 1}}}, CuAdjacency{2}));
}

CheckResult three_point_cycle(const SearchLimits&) {
    Verdict v;
    ImagePtr x = three_point_image();
    int a = *x->index_of(Point{{0, 0}});
    int b = *x->index_of(Point{{0, 1}});
    int c = *x->index_of(Point{{1, 1}});
    std::vector<int> table(3);
    table[static_cast<std::size_t>(a)] = b;
    table[static_cast<std::size_t>(b)] = c;
    table[static_cast<std::size_t>(c)] = a;
    DigitalMap f(x, x, std::move(table));
    v.expect(is_continuous(f), "3-cycle map is not continuous");
    v.expect(fixed_points(f).empty(), "3-cycle map has a fixed point");
    v.note("cyclic self-map is continuous and fixed-point-free");
    return {"", "", v.ok, v.detail};
}

CheckResult three_point_homology(const SearchLimits&) {
    Verdict v;
    ImageHomology hx(*three_point_image());
    ImagePtr pt = labeled_image(1, {});
    ImageHomology hp(*pt);
    int top = std::max(hx.dim(), hp.dim());
    for (int q = 0; q <= top; ++q)
        v.expect(hx.group(q).betti == hp.group(q).betti && hx.group(q).torsion == hp.group(q).torsion,
                 "H_" + std::to_string(q) + " differs from a point");
    v.expect(hx.group(0).betti == 1 && hx.group(0).torsion.empty(), "H_0 is not Z");
    v.note("homology equals that of a point");
    return {"", "", v.ok, v.detail};
}

CheckResult sphere_homology(const SearchLimits&) {
    Verdict v;
    ImageHomology h1(sphere(1));
    v.expect(h1.group(0) == HomologyGroup{0, 1, {}}, "H_0(sphere(1)) != Z");
    v.expect(h1.group(1) == HomologyGroup{1, 1, {}}, "H_1(sphere(1)) != Z");
    ImageHomology h2(sphere(2));
    v.expect(h2.group(1) == HomologyGroup{1, 23, {}}, "H_1(sphere(2)) != Z^23");
    v.expect(h2.group(2).trivial(), "H_2(sphere(2)) != 0");
    v.note("sphere(1): Z, Z; sphere(2): H_1 = Z^23, H_2 = 0");
    return {"", "", v.ok, v.detail};
}

CheckResult sphere_degree(const SearchLimits&) {
    Verdict v;
    ImagePtr s1 = make(sphere(1));
    DegreeResult antipode1 = degree(antipode_map(s1), 1);
    v.expect(antipode1.defined && antipode1.value == 1, "antipode degree on sphere(1) != 1");

    ImagePtr s2 = make(sphere(2));
    DegreeResult antipode2 = degree(antipode_map(s2), 2);
    v.expect(!antipode2.defined, "degree unexpectedly defined on sphere(2)");

    DegreeResult collapse1 = degree(collapse_map(s1), 1);
    v.expect(collapse1.defined && collapse1.value == 0, "collapse degree on sphere(1) != 0");
    v.note("antipode: 1; sphere(2): undefined; collapse: 0");
    return {"", "", v.ok, v.detail};
}

CheckResult sphere2_euler(const SearchLimits&) {
    Verdict v;
    DigitalImage s2 = sphere(2);
    v.expect(euler_characteristic(s2) == -22, "Euler characteristic of sphere(2) != -22");
    ImageHomology h(s2);
    std::int64_t alt = h.group(0).betti - h.group(1).betti;
    v.expect(alt == -22, "Betti alternating sum != -22");
    v.note("simplex count and Betti sums both give -22");
    return {"", "", v.ok, v.detail};
}

CheckResult scc_collapse_homotopy(const SearchLimits& limits) {
    Verdict v;
    ImagePtr x = make(scc(8));
    DigitalMap f = collapse_map(x);
    v.expect(is_continuous(f), "collapse map is not continuous");
    v.expect(fixed_points(f).empty(), "collapse map has a fixed point");

    DigitalMap c0 = constant_map(x, 0);
    Homotopy direct(f, c0, {f.table(), c0.table()});
    v.expect(verify_homotopy(direct), "single-step homotopy to the constant map fails");

    auto found = find_bounded_homotopy(f, c0, 1, limits);
    v.expect(found.has_value(), "homotopy search finds no single-step witness");
    if (found) v.expect(verify_homotopy(*found), "search witness fails verification");
    v.note("single-step homotopy to the constant map verified");
    return {"", "", v.ok, v.detail};
}

// ---- criterion 5 ----------------------------------------------------------

CheckResult afpp_iso_invariance(const SearchLimits& limits) {
    Verdict v;
    std::mt19937 rng(42);
    for (int round = 0; round < 100 && v.ok; ++round) {
        int n = 2 + rnd(rng, 5);
        ImagePtr x = random_explicit_image(rng, n, rnd(rng, 2) == 0);
        auto [y, h] = iso_copy(rng, x);
        v.expect(is_isomorphism(h), "generated relabeling is not an isomorphism");
        bool ax = has_afpp(x, limits).holds;
        bool ay = has_afpp(y, limits).holds;
        v.expect(ax == ay, "afpp differs across an isomorphism on " + describe(*x));
    }
    v.note("100 isomorphism pairs agree");
    return {"", "", v.ok, v.detail};
}

CheckResult afpp_retract_invariance(const SearchLimits& limits) {
    Verdict v;
    std::mt19937 rng(43);
    int pairs = 0;
    int fired = 0;
    for (int attempt = 0; attempt < 4000 && pairs < 100 && v.ok; ++attempt) {
        int n = 2 + rnd(rng, 5);
        ImagePtr x = random_explicit_image(rng, n, rnd(rng, 2) == 0);

        int size = 1 + rnd(rng, n - 1);
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(rnd(rng, i + 1))]);
        std::vector<int> a(all.begin(), all.begin() + size);
        std::sort(a.begin(), a.end());

        // A retraction fixes A and lands in A; search for one over self-maps.
        MapSearchProblem p;
        p.domain = x;
        p.codomain = x;
        p.mode = SearchMode::FindOne;
        p.forbidden.assign(static_cast<std::size_t>(n), {});
        std::vector<bool> in_a(static_cast<std::size_t>(n), false);
        for (int i : a) in_a[static_cast<std::size_t>(i)] = true;
        for (int i = 0; i < n; ++i)
            for (int w = 0; w < n; ++w) {
                bool allowed = in_a[static_cast<std::size_t>(i)] ? w == i : in_a[static_cast<std::size_t>(w)];
                if (!allowed) p.forbidden[static_cast<std::size_t>(i)].push_back(w);
            }
        auto found = solve(p, limits).witness;
        if (!found) continue;
        ++pairs;

        ImagePtr a_img = make(x->induced(a));
        std::vector<int> table(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            auto pos = std::lower_bound(a.begin(), a.end(), (*found)(i)) - a.begin();
            table[static_cast<std::size_t>(i)] = static_cast<int>(pos);
        }
        DigitalMap r(x, a_img, std::move(table));
        v.expect(is_retraction(r, a), "search produced a non-retraction on " + describe(*x));

        if (has_afpp(x, limits).holds) {
            ++fired;
            v.expect(has_afpp(a_img, limits).holds,
                     "retract of an afpp image loses afpp: " + describe(*x));
        }
    }
    v.expect(pairs == 100, "only found " + std::to_string(pairs) + " retract pairs");
    v.expect(fired > 0, "implication never exercised");
    v.note("100 retract pairs, " + std::to_string(fired) + " with afpp domain");
    return {"", "", v.ok, v.detail};
}

// ---- criterion 6 ----------------------------------------------------------

CheckResult wedge_afpp(const SearchLimits& limits) {
    Verdict v;
    std::vector<ImagePtr> catalog{make(interval(0, 1)), make(interval(0, 2)), make(scc(4)),
                                  make(scc(6))};
    std::vector<bool> side_afpp;
    for (const ImagePtr& img : catalog) side_afpp.push_back(has_afpp(img, limits).holds);

    int wedges = 0;
    for (std::size_t ia = 0; ia < catalog.size() && v.ok; ++ia)
        for (std::size_t ib = 0; ib < catalog.size() && v.ok; ++ib) {
            const DigitalImage& a = *catalog[ia];
            const DigitalImage& b = *catalog[ib];
            for (int pa = 0; pa < a.size() && v.ok; ++pa)
                for (int pb = 0; pb < b.size() && v.ok; ++pb) {
                    WedgeImage w = wedge(a, a.point(pa), b, b.point(pb));
                    ++wedges;
                    bool expected = side_afpp[ia] && side_afpp[ib];
                    bool actual = has_afpp(w.image, limits).holds;
                    v.expect(actual == expected,
                             "wedge afpp mismatch: sides " + describe(a) + ", " + describe(b));
                }
        }
    v.note(std::to_string(wedges) + " wedges match the two-sided verdict");
    return {"", "", v.ok, v.detail};
}

// ---- criterion 7 ----------------------------------------------------------

CheckResult identity_universal_afpp(const SearchLimits& limits) {
    Verdict v;
    std::vector<ImagePtr> corpus = connected_graph_corpus();
    for (ImagePtr& img : named_corpus()) corpus.push_back(std::move(img));
    for (const ImagePtr& img : corpus) {
        bool afpp = has_afpp(img, limits).holds;
        bool universal = is_universal(identity_map(img), limits).universal;
        v.expect(afpp == universal, "identity universality != afpp on " + describe(*img));
    }
    v.note(std::to_string(corpus.size()) + " images agree");
    return {"", "", v.ok, v.detail};
}

CheckResult universal_dominating(const SearchLimits& limits) {
    Verdict v;
    std::mt19937 rng(44);
    int universal_seen = 0;
    int maps_seen = 0;
    for (int round = 0; round < 12 && v.ok; ++round) {
        ImagePtr x = random_explicit_image(rng, 1 + rnd(rng, 4), rnd(rng, 2) == 0);
        ImagePtr y = random_explicit_image(rng, 1 + rnd(rng, 4), rnd(rng, 2) == 0);
        for (const DigitalMap& f : all_continuous_maps(x, y, limits)) {
            ++maps_seen;
            UniversalResult u = is_universal(f, limits);
            if (u.universal) {
                ++universal_seen;
                std::vector<int> img_set(f.table().begin(), f.table().end());
                std::sort(img_set.begin(), img_set.end());
                img_set.erase(std::unique(img_set.begin(), img_set.end()), img_set.end());
                v.expect(is_dominating(img_set, *y),
                         "universal map with non-dominating range on " + describe(*y));
            } else {
                v.expect(u.counterexample && valid_universality_refutation(f, *u.counterexample),
                         "invalid universality counterexample");
            }
            if (!v.ok) break;
        }
    }
    v.expect(universal_seen > 0, "no universal map in the sample");
    v.note(std::to_string(maps_seen) + " maps, " + std::to_string(universal_seen) + " universal");
    return {"", "", v.ok, v.detail};
}

CheckResult universal_long_targets(const SearchLimits& limits) {
    Verdict v;
    std::vector<ImagePtr> domains{labeled_image(1, {}), make(interval(0, 1)), make(interval(0, 2)),
                                  three_point_image()};
    int verified = 0;
    for (const ImagePtr& x : domains) {
        const int m = x->size();
        for (int n : {m + 3, m + 4}) {
            std::vector<ImagePtr> targets{make(interval(0, n - 1)), make(scc(n))};
            for (const ImagePtr& y : targets) {
                auto maps = all_continuous_maps(x, y, limits);
                v.expect(!maps.empty(), "no continuous maps into " + describe(*y));
                for (const DigitalMap& f : maps) {
                    v.expect(!is_universal(f, limits).universal,
                             "universal map onto an oversized target " + describe(*y));
                    if (!v.ok) break;
                }
                ++verified;
            }
        }
    }
    v.note(std::to_string(verified) + " domain/target pairs have no universal map");
    return {"", "", v.ok, v.detail};
}

CheckResult iso_universal_afpp(const SearchLimits& limits) {
    Verdict v;
    std::mt19937 rng(45);
    for (int round = 0; round < 60 && v.ok; ++round) {
        int n = 2 + rnd(rng, 5);
        ImagePtr x = random_explicit_image(rng, n, rnd(rng, 2) == 0);
        auto [y, h] = iso_copy(rng, x);
        v.expect(is_isomorphism(h), "generated relabeling is not an isomorphism");
        bool afpp = has_afpp(x, limits).holds;
        bool universal = is_universal(h, limits).universal;
        v.expect(afpp == universal, "isomorphism universality != afpp on " + describe(*x));
    }
    v.note("60 isomorphisms agree with the afpp verdict");
    return {"", "", v.ok, v.detail};
}

CheckResult composition_universal(const SearchLimits& limits) {
    Verdict v;
    std::mt19937 rng(46);
    int fired = 0;
    for (int round = 0; round < 8 && v.ok; ++round) {
        ImagePtr w = random_explicit_image(rng, 2 + rnd(rng, 3), rnd(rng, 2) == 0);
        ImagePtr x = random_explicit_image(rng, 2 + rnd(rng, 3), rnd(rng, 2) == 0);
        ImagePtr y = random_explicit_image(rng, 2 + rnd(rng, 3), rnd(rng, 2) == 0);
        auto maps_wx = all_continuous_maps(w, x, limits);
        auto maps_xy = all_continuous_maps(x, y, limits);

        std::vector<bool> g_universal;
        g_universal.reserve(maps_xy.size());
        for (const DigitalMap& g : maps_xy) g_universal.push_back(is_universal(g, limits).universal);

        std::map<std::vector<int>, bool> composite_universal;
        for (std::size_t gi = 0; gi < maps_xy.size() && v.ok; ++gi)
            for (const DigitalMap& f : maps_wx) {
                DigitalMap gf = compose(maps_xy[gi], f);
                auto [it, fresh] = composite_universal.try_emplace(gf.table(), false);
                if (fresh) it->second = is_universal(gf, limits).universal;
                if (it->second) {
                    ++fired;
                    v.expect(g_universal[gi], "universal composite with non-universal outer map");
                    if (!v.ok) break;
                }
            }
    }
    v.expect(fired > 0, "no universal composite in the sample");
    v.note(std::to_string(fired) + " universal composites all have universal outer maps");
    return {"", "", v.ok, v.detail};
}

CheckResult iso_factors_universal(const SearchLimits& limits) {
    Verdict v;
    std::mt19937 rng(47);
    for (int round = 0; round < 30 && v.ok; ++round) {
        ImagePtr x = random_explicit_image(rng, 2 + rnd(rng, 3), rnd(rng, 2) == 0);
        ImagePtr y = random_explicit_image(rng, 2 + rnd(rng, 3), rnd(rng, 2) == 0);
        auto [u, xu] = iso_copy(rng, x);
        DigitalMap g = inverse(xu);  // U -> X
        auto [vimg, h] = iso_copy(rng, y);  // h: Y -> V

        auto maps = all_continuous_maps(x, y, limits);
        const DigitalMap& f = maps[static_cast<std::size_t>(rnd(rng, static_cast<int>(maps.size())))];
        bool base = is_universal(f, limits).universal;
        bool pre = is_universal(compose(f, g), limits).universal;
        bool post = is_universal(compose(h, f), limits).universal;
        v.expect(base == pre && base == post,
                 "universality changed under isomorphic relabeling on " + describe(*x));
    }
    v.note("30 rounds of pre/post-composition agree");
    return {"", "", v.ok, v.detail};
}

// ---- criterion 8 ----------------------------------------------------------

CheckResult product_afpp(const SearchLimits& limits) {
    Verdict v;
    std::vector<std::vector<std::int64_t>> extent_lists;
    std::vector<std::int64_t> current;
    auto enumerate = [&](auto&& self, std::int64_t points) -> void {
        if (!current.empty()) extent_lists.push_back(current);
        for (std::int64_t k = 1;; ++k) {
            std::int64_t next = points * (k + 1);
            if (next > 9) break;
            current.push_back(k);
            self(self, next);
            current.pop_back();
        }
    };
    enumerate(enumerate, 1);

    int holds = 0;
    for (const auto& extents : extent_lists) {
        std::vector<DigitalImage> factors;
        for (std::int64_t k : extents) factors.push_back(interval(0, k));
        ImagePtr prod = make(product(factors));
        if (!has_afpp(prod, limits).holds) continue;
        ++holds;
        for (const DigitalImage& f : factors)
            v.expect(has_afpp(make(f), limits).holds,
                     "factor without afpp under an afpp product " + describe(*prod));
        if (!v.ok) break;
    }
    v.expect(holds > 0, "no product with afpp in the family");
    v.note(std::to_string(extent_lists.size()) + " products, " + std::to_string(holds) +
           " with afpp, factors all conforming");
    return {"", "", v.ok, v.detail};
}

// ---- criterion 9 ----------------------------------------------------------

CheckResult solve_count_oracle(const SearchLimits& limits) {
    Verdict v;
    std::mt19937 rng(48);
    for (int round = 0; round < 40 && v.ok; ++round) {
        ImagePtr x = random_explicit_image(rng, 1 + rnd(rng, 4), rnd(rng, 2) == 0);
        ImagePtr y = random_explicit_image(rng, 1 + rnd(rng, 4), rnd(rng, 2) == 0);

        std::vector<std::vector<int>> forbidden(static_cast<std::size_t>(x->size()));
        for (int i = 0; i < x->size(); ++i)
            for (int w = 0; w < y->size(); ++w)
                if (rnd(rng, 4) == 0) forbidden[static_cast<std::size_t>(i)].push_back(w);

        MapSearchProblem open{x, y, {}, SearchMode::Count};
        v.expect(solve(open, limits).count == naive_count(*x, *y, {}),
                 "count mismatch (no constraints) on " + describe(*x) + " -> " + describe(*y));
        MapSearchProblem constrained{x, y, forbidden, SearchMode::Count};
        v.expect(solve(constrained, limits).count == naive_count(*x, *y, forbidden),
                 "count mismatch (forbidden sets) on " + describe(*x) + " -> " + describe(*y));
    }

    ImagePtr i1 = make(interval(0, 1));
    MapSearchProblem p1{i1, i1, {}, SearchMode::Count};
    v.expect(solve(p1, limits).count == 4, "self-map count of a 2-point interval != 4");
    ImagePtr i2 = make(interval(0, 2));
    MapSearchProblem p2{i2, i2, {}, SearchMode::Count};
    v.expect(solve(p2, limits).count == 17, "self-map count of a 3-point interval != 17");
    v.note("40 random pairs plus the interval counts 4 and 17");
    return {"", "", v.ok, v.detail};
}

// ---- criterion 10 ---------------------------------------------------------

CheckResult homology_properties(const SearchLimits&) {
    Verdict v;
    std::mt19937 rng(49);
    for (int round = 0; round < 200 && v.ok; ++round) {
        int n = 1 + rnd(rng, 8);
        ImagePtr img;
        switch (rnd(rng, 4)) {
            case 0: img = random_explicit_image(rng, n, true); break;
            case 1: img = random_explicit_image(rng, n, false); break;
            case 2: {
                std::vector<Point> box;
                for (std::int64_t a = 0; a <= 2; ++a)
                    for (std::int64_t b = 0; b <= 2; ++b) box.push_back(Point{{a, b}});
                for (int i = 8; i > 0; --i)
                    std::swap(box[static_cast<std::size_t>(i)],
                              box[static_cast<std::size_t>(rnd(rng, i + 1))]);
                box.resize(static_cast<std::size_t>(std::min(n, 8)));
                img = make(DigitalImage(2, std::move(box), CuAdjacency{1 + rnd(rng, 2)}));
                break;
            }
            default: {
                std::vector<Point> box;
                for (std::int64_t a = 0; a <= 1; ++a)
                    for (std::int64_t b = 0; b <= 1; ++b)
                        for (std::int64_t c = 0; c <= 1; ++c) box.push_back(Point{{a, b, c}});
                for (int i = 7; i > 0; --i)
                    std::swap(box[static_cast<std::size_t>(i)],
                              box[static_cast<std::size_t>(rnd(rng, i + 1))]);
                box.resize(static_cast<std::size_t>(std::min(n, 8)));
                img = make(DigitalImage(3, std::move(box), CuAdjacency{1 + rnd(rng, 3)}));
                break;
            }
        }

        ChainComplex cx(*img);
        for (int q = 1; q <= cx.dim() + 1 && v.ok; ++q) {
            v.expect((cx.boundary(q - 1) * cx.boundary(q)).is_zero(),
                     "boundary of boundary nonzero on " + describe(*img));
            SNFResult snf = smith_normal_form(cx.boundary(q));
            v.expect(snf.U * cx.boundary(q) * snf.V == snf.S,
                     "SNF reconstruction fails on " + describe(*img));
            v.expect(snf.U * snf.Uinv == IntMatrix::identity(snf.U.rows()),
                     "U inverse mismatch on " + describe(*img));
            v.expect(snf.V * snf.Vinv == IntMatrix::identity(snf.V.rows()),
                     "V inverse mismatch on " + describe(*img));
            for (std::size_t i = 0; i + 1 < snf.diagonal.size(); ++i)
                v.expect(snf.diagonal[i] > 0 && snf.diagonal[i + 1] % snf.diagonal[i] == 0,
                         "SNF divisibility chain broken on " + describe(*img));
        }

        ImageHomology h(*img);
        v.expect(h.group(0).betti == static_cast<int>(img->components().size()),
                 "H_0 rank != component count on " + describe(*img));
        v.expect(h.group(h.dim()).torsion.empty(),
                 "top homology has torsion on " + describe(*img));
    }
    v.note("200 random images pass all four properties");
    return {"", "", v.ok, v.detail};
}

struct Entry {
    CheckInfo info;
    std::function<CheckResult(const SearchLimits&)> fn;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = {
        {{"fpp-singleton-only", "1", "fixed point property holds exactly for singletons"},
         fpp_characterization},
        {{"afpp-cubes", "2", "intervals and cubes have the approximate fixed point property"},
         afpp_cubes},
        {{"afpp-scc", "3", "simple closed curves lack the approximate fixed point property"},
         afpp_scc},
        {{"flip-interval", "4a", "x -> 1-x on [0,1] is continuous, fixed-point-free, Lefschetz 1"},
         flip_interval},
        {{"flip-square", "4b", "vertical flip of the 4-point square is continuous and fixed-point-free"},
         flip_square},
        {{"three-point-cycle", "4c", "3-point cyclic self-map is continuous and fixed-point-free"},
         three_point_cycle},
        {{"three-point-homology", "4d", "3-point clique has the homology of a point"},
         three_point_homology},
        {{"sphere-homology", "4e", "H_1(sphere(1)) = Z, H_1(sphere(2)) = Z^23, H_2(sphere(2)) = 0"},
         sphere_homology},
        {{"sphere-degree", "4f", "degrees: antipode 1, sphere(2) undefined, collapse 0"},
         sphere_degree},
        {{"sphere2-euler", "4g", "Euler characteristic of sphere(2) is -22 both ways"},
         sphere2_euler},
        {{"scc-collapse-homotopy", "4h", "collapse on scc(8) is homotopic to a constant"},
         scc_collapse_homotopy},
        {{"afpp-iso-invariance", "5", "afpp agrees across isomorphisms"}, afpp_iso_invariance},
        {{"afpp-retract-invariance", "5", "retracts inherit afpp"}, afpp_retract_invariance},
        {{"wedge-afpp", "6", "wedge has afpp exactly when both sides do"}, wedge_afpp},
        {{"identity-universal-afpp", "7", "identity is universal exactly on afpp images"},
         identity_universal_afpp},
        {{"universal-dominating", "7", "ranges of universal maps dominate the codomain"},
         universal_dominating},
        {{"universal-long-targets", "7", "no universal map into much longer intervals or curves"},
         universal_long_targets},
        {{"iso-universal-afpp", "7", "isomorphisms are universal exactly on afpp domains"},
         iso_universal_afpp},
        {{"composition-universal", "7", "universal composite implies universal outer map"},
         composition_universal},
        {{"iso-factors-universal", "7", "universality survives isomorphic pre/post-composition"},
         iso_factors_universal},
        {{"product-afpp", "8", "afpp products have afpp factors"}, product_afpp},
        {{"solve-count-oracle", "9", "search counts match naive enumeration"}, solve_count_oracle},
        {{"homology-properties", "10", "boundary, SNF, H_0, top-torsion invariants hold"},
         homology_properties},
    };
    return entries;
}

} // namespace

const std::vector<CheckInfo>& check_list() {
    static const std::vector<CheckInfo> infos = [] {
        std::vector<CheckInfo> out;
        for (const Entry& e : registry()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

CheckResult run_check(const std::string& id, const SearchLimits& limits) {
    for (const Entry& e : registry())
        if (e.info.id == id) {
            CheckResult r = e.fn(limits);
            r.id = e.info.id;
            r.criterion = e.info.criterion;
            return r;
        }
    throw InputError("unknown check id: " + id);
}

std::vector<CheckResult> run_all_checks(const SearchLimits& limits) {
    std::vector<CheckResult> out;
    for (const Entry& e : registry()) out.push_back(run_check(e.info.id, limits));
    return out;
}

} // namespace digitop
