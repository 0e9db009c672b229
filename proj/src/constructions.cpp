#include "digitop/constructions.hpp"

#include <algorithm>

#include "digitop/checked_int.hpp"

namespace digitop {

DigitalImage interval(std::int64_t a, std::int64_t b) {
    if (a >= b) throw InputError("interval: need a < b");
    std::vector<Point> pts;
    for (std::int64_t z = a;; z = checked_add(z, 1)) {
        pts.push_back(Point{{z}});
        if (z == b) break;
    }
    return DigitalImage(1, std::move(pts), CuAdjacency{1});
}

DigitalImage scc(int m) {
    if (m < 4) throw InputError("scc: need m >= 4");
    std::vector<Point> pts;
    ExplicitAdjacency adj;
    for (int i = 0; i < m; ++i) {
        pts.push_back(Point{{i, 0}});
        adj.edges.emplace_back(i, (i + 1) % m);
    }
    return DigitalImage(2, std::move(pts), std::move(adj));
}

namespace {
constexpr std::int64_t kSpherePointBudget = 100000;
}

DigitalImage sphere(int n) {
    if (n < 1) throw InputError("sphere: need n >= 1");
    const int dim = n + 1;
    std::int64_t count = 1;
    for (int i = 0; i < dim; ++i) count = checked_mul(count, 3);
    count -= 1;
    if (count > kSpherePointBudget)
        throw BudgetError("sphere(" + std::to_string(n) + ") has " + std::to_string(count) +
                          " points, over the construction budget of " +
                          std::to_string(kSpherePointBudget));

    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(count));
    std::vector<std::int64_t> c(static_cast<std::size_t>(dim), -1);
    for (;;) {
        if (std::any_of(c.begin(), c.end(), [](std::int64_t v) { return v != 0; }))
            pts.push_back(Point{std::vector<std::int64_t>(c)});
        int i = 0;
        while (i < dim && c[static_cast<std::size_t>(i)] == 1) {
            c[static_cast<std::size_t>(i)] = -1;
            ++i;
        }
        if (i == dim) break;
        ++c[static_cast<std::size_t>(i)];
    }
    return DigitalImage(dim, std::move(pts), CuAdjacency{1});
}

DigitalImage cube(const std::vector<std::int64_t>& lengths) {
    if (lengths.empty()) throw InputError("cube: need at least one extent");
    const int dim = static_cast<int>(lengths.size());
    std::int64_t count = 1;
    for (std::int64_t len : lengths) {
        if (len < 1) throw InputError("cube: extents must be positive");
        count = checked_mul(count, checked_add(len, 1));
        if (count > kSpherePointBudget)
            throw BudgetError("cube has more than " + std::to_string(kSpherePointBudget) + " points");
    }
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(count));
    std::vector<std::int64_t> c(static_cast<std::size_t>(dim), 0);
    for (;;) {
        pts.push_back(Point{std::vector<std::int64_t>(c)});
        int i = 0;
        while (i < dim && c[static_cast<std::size_t>(i)] == lengths[static_cast<std::size_t>(i)]) {
            c[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == dim) break;
        ++c[static_cast<std::size_t>(i)];
    }
    return DigitalImage(dim, std::move(pts), CuAdjacency{dim});
}

DigitalMap antipode_map(ImagePtr x) {
    std::vector<int> t(static_cast<std::size_t>(x->size()));
    for (int i = 0; i < x->size(); ++i) {
        Point neg = x->point(i);
        for (auto& c : neg.coords) c = checked_neg(c);
        auto j = x->index_of(neg);
        if (!j)
            throw InputError("antipode: image is not closed under negation (missing " +
                             to_string(neg) + ")");
        t[static_cast<std::size_t>(i)] = *j;
    }
    ImagePtr cod = x;
    return DigitalMap(std::move(x), std::move(cod), std::move(t));
}

DigitalMap WedgeImage::retraction_onto_a() const {
    std::vector<int> side = a_to_wedge;
    std::sort(side.begin(), side.end());
    auto cod = std::make_shared<const DigitalImage>(image->induced(side));
    std::vector<int> t(static_cast<std::size_t>(image->size()), 0);
    // Induced subimages keep relative order, so wedge index -> codomain index
    // is position in the sorted side list.
    std::vector<int> pos(static_cast<std::size_t>(image->size()), -1);
    for (std::size_t k = 0; k < side.size(); ++k) pos[static_cast<std::size_t>(side[k])] = static_cast<int>(k);
    for (int w = 0; w < image->size(); ++w)
        t[static_cast<std::size_t>(w)] = pos[static_cast<std::size_t>(w)] >= 0
                                             ? pos[static_cast<std::size_t>(w)]
                                             : pos[static_cast<std::size_t>(glue_index)];
    return DigitalMap(image, std::move(cod), std::move(t));
}

DigitalMap WedgeImage::retraction_onto_b() const {
    WedgeImage flipped{image, glue_index, b_to_wedge, a_to_wedge};
    return flipped.retraction_onto_a();
}

WedgeImage wedge(const DigitalImage& a, const Point& a0, const DigitalImage& b, const Point& b0) {
    auto ia = a.index_of(a0);
    if (!ia) throw InputError("wedge: glue point " + to_string(a0) + " not in first image");
    auto ib = b.index_of(b0);
    if (!ib) throw InputError("wedge: glue point " + to_string(b0) + " not in second image");

    const int na = a.size();
    const int nb = b.size();
    WedgeImage w;
    w.a_to_wedge.resize(static_cast<std::size_t>(na));
    w.b_to_wedge.resize(static_cast<std::size_t>(nb));
    for (int i = 0; i < na; ++i) w.a_to_wedge[static_cast<std::size_t>(i)] = i;
    w.glue_index = *ia;
    int next = na;
    for (int i = 0; i < nb; ++i)
        w.b_to_wedge[static_cast<std::size_t>(i)] = i == *ib ? w.glue_index : next++;

    std::vector<Point> pts;
    for (int i = 0; i < na + nb - 1; ++i) pts.push_back(Point{{i}});
    ExplicitAdjacency adj;
    for (auto [i, j] : a.edge_list())
        adj.edges.emplace_back(w.a_to_wedge[static_cast<std::size_t>(i)],
                               w.a_to_wedge[static_cast<std::size_t>(j)]);
    for (auto [i, j] : b.edge_list())
        adj.edges.emplace_back(w.b_to_wedge[static_cast<std::size_t>(i)],
                               w.b_to_wedge[static_cast<std::size_t>(j)]);
    w.image = std::make_shared<const DigitalImage>(DigitalImage(1, std::move(pts), std::move(adj)));

    // Points 0..n-1 in Z sort in index order, so the tables above are the
    // canonical indices; re-verify that each side embeds isomorphically.
    for (int i = 0; i < na; ++i)
        for (int j = i + 1; j < na; ++j)
            if (a.adjacent(i, j) != w.image->adjacent(w.a_to_wedge[static_cast<std::size_t>(i)],
                                                      w.a_to_wedge[static_cast<std::size_t>(j)]))
                throw InvariantError("wedge: A side not isomorphic to A");
    for (int i = 0; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j)
            if (b.adjacent(i, j) != w.image->adjacent(w.b_to_wedge[static_cast<std::size_t>(i)],
                                                      w.b_to_wedge[static_cast<std::size_t>(j)]))
                throw InvariantError("wedge: B side not isomorphic to B");
    for (auto [i, j] : w.image->edge_list())
        if (i != w.glue_index && j != w.glue_index) {
            bool in_a = i < na && j < na;
            bool in_b = i >= na && j >= na;
            if (!in_a && !in_b) throw InvariantError("wedge: cross edge away from the glue point");
        }
    return w;
}

DigitalImage product(const std::vector<DigitalImage>& factors) {
    if (factors.empty()) throw InputError("product: need at least one factor");
    int s = 0;
    for (const auto& f : factors) {
        if (!f.is_cu() || f.cu() != f.ambient_dim())
            throw InputError("product: every factor must use full c_n adjacency");
        s += f.ambient_dim();
    }
    std::int64_t count = 1;
    for (const auto& f : factors) {
        count = checked_mul(count, f.size());
        if (count > kSpherePointBudget)
            throw BudgetError("product has more than " + std::to_string(kSpherePointBudget) + " points");
    }

    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(count));
    std::vector<int> idx(factors.size(), 0);
    for (;;) {
        Point p;
        for (std::size_t k = 0; k < factors.size(); ++k) {
            const Point& q = factors[k].point(idx[k]);
            p.coords.insert(p.coords.end(), q.coords.begin(), q.coords.end());
        }
        pts.push_back(std::move(p));
        std::size_t k = 0;
        while (k < factors.size() && idx[k] == factors[k].size() - 1) {
            idx[k] = 0;
            ++k;
        }
        if (k == factors.size()) break;
        ++idx[k];
    }
    return DigitalImage(s, std::move(pts), CuAdjacency{s});
}

} // namespace digitop
