#include "digitop/maps.hpp"

#include <algorithm>

namespace digitop {

DigitalMap::DigitalMap(ImagePtr domain, ImagePtr codomain, std::vector<int> table)
    : dom_(std::move(domain)), cod_(std::move(codomain)), table_(std::move(table)) {
    if (!dom_ || !cod_) throw InputError("digital map: null image");
    if (static_cast<int>(table_.size()) != dom_->size())
        throw InputError("digital map: table has " + std::to_string(table_.size()) +
                         " entries for a domain of " + std::to_string(dom_->size()) + " points");
    for (int v : table_)
        if (v < 0 || v >= cod_->size()) throw InputError("digital map: value index out of range");
}

Point DigitalMap::operator()(const Point& x) const {
    auto i = dom_->index_of(x);
    if (!i) throw InputError("map applied to point " + to_string(x) + " outside its domain");
    return cod_->point((*this)(*i));
}

bool operator==(const DigitalMap& f, const DigitalMap& g) {
    return *f.dom_ == *g.dom_ && *f.cod_ == *g.cod_ && f.table_ == g.table_;
}

DigitalMap identity_map(ImagePtr x) {
    std::vector<int> t(static_cast<std::size_t>(x->size()));
    for (int i = 0; i < x->size(); ++i) t[static_cast<std::size_t>(i)] = i;
    return DigitalMap(x, x, std::move(t));
}

DigitalMap constant_map(ImagePtr x, ImagePtr y, int y_index) {
    if (y_index < 0 || y_index >= y->size()) throw InputError("constant map: value index out of range");
    std::vector<int> t(static_cast<std::size_t>(x->size()), y_index);
    return DigitalMap(std::move(x), std::move(y), std::move(t));
}

DigitalMap constant_map(ImagePtr x, int y_index) {
    ImagePtr y = x;
    return constant_map(std::move(x), std::move(y), y_index);
}

DigitalMap collapse_map(ImagePtr x) {
    if (x->size() < 2) throw InputError("collapse map needs at least 2 points");
    if (!x->connected()) throw InputError("collapse map needs a connected image");
    const auto& nb = x->neighbors(0);
    std::vector<int> t(static_cast<std::size_t>(x->size()), 0);
    t[0] = nb.front();
    return DigitalMap(x, x, std::move(t));
}

bool is_continuous(const DigitalMap& f) {
    for (auto [i, j] : f.domain().edge_list())
        if (!f.codomain().closed_adjacent(f(i), f(j))) return false;
    return true;
}

DigitalMap compose(const DigitalMap& g, const DigitalMap& f) {
    if (f.codomain() != g.domain())
        throw InputError("compose: codomain of inner map differs from domain of outer map");
    std::vector<int> t(static_cast<std::size_t>(f.domain().size()));
    for (int i = 0; i < f.domain().size(); ++i) {
        // g's table is indexed by g's own domain ordering, which equals f's
        // codomain ordering because equal images share canonical point order.
        t[static_cast<std::size_t>(i)] = g(f(i));
    }
    return DigitalMap(f.domain_ptr(), g.codomain_ptr(), std::move(t));
}

DigitalMap inverse(const DigitalMap& f) {
    if (f.domain().size() != f.codomain().size()) throw InputError("inverse of non-bijective map");
    std::vector<int> t(static_cast<std::size_t>(f.codomain().size()), -1);
    for (int i = 0; i < f.domain().size(); ++i) {
        int v = f(i);
        if (t[static_cast<std::size_t>(v)] != -1) throw InputError("inverse of non-bijective map");
        t[static_cast<std::size_t>(v)] = i;
    }
    return DigitalMap(f.codomain_ptr(), f.domain_ptr(), std::move(t));
}

bool is_isomorphism(const DigitalMap& f) {
    if (f.domain().size() != f.codomain().size()) return false;
    std::vector<bool> hit(static_cast<std::size_t>(f.codomain().size()), false);
    for (int i = 0; i < f.domain().size(); ++i) {
        if (hit[static_cast<std::size_t>(f(i))]) return false;
        hit[static_cast<std::size_t>(f(i))] = true;
    }
    return is_continuous(f) && is_continuous(inverse(f));
}

bool is_retraction(const DigitalMap& r, const std::vector<int>& a_indices) {
    std::vector<int> a = a_indices;
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    if (a.empty()) throw InputError("retraction: empty subset");
    for (int i : a)
        if (i < 0 || i >= r.domain().size()) throw InputError("retraction: subset index out of range");
    if (r.codomain() != r.domain().induced(a))
        throw InputError("retraction: codomain is not the subimage induced on the subset");
    for (int i : a)
        if (r.codomain().point(r(i)) != r.domain().point(i)) return false;
    return is_continuous(r);
}

std::vector<ApproxFixedPoint> approximate_fixed_points(const DigitalMap& f) {
    if (!f.self_map()) throw InputError("approximate fixed points of a non-self-map");
    std::vector<ApproxFixedPoint> out;
    for (int i = 0; i < f.domain().size(); ++i)
        if (f.domain().closed_adjacent(i, f(i))) out.push_back({i, f(i) == i});
    return out;
}

std::vector<int> fixed_points(const DigitalMap& f) {
    if (!f.self_map()) throw InputError("fixed points of a non-self-map");
    std::vector<int> out;
    for (int i = 0; i < f.domain().size(); ++i)
        if (f(i) == i) out.push_back(i);
    return out;
}

Homotopy::Homotopy(DigitalMap f, DigitalMap g, std::vector<std::vector<int>> steps)
    : f_(std::move(f)), g_(std::move(g)), steps_(std::move(steps)) {
    if (f_.domain() != g_.domain() || f_.codomain() != g_.codomain())
        throw InputError("homotopy: maps must share domain and codomain");
    if (steps_.size() < 2) throw InputError("homotopy: m must be >= 1");
    const int n = f_.domain().size();
    for (const auto& level : steps_) {
        if (static_cast<int>(level.size()) != n) throw InputError("homotopy: level size mismatch");
        for (int v : level)
            if (v < 0 || v >= f_.codomain().size())
                throw InputError("homotopy: value index out of range");
    }
}

Homotopy Homotopy::reversed() const {
    std::vector<std::vector<int>> rev(steps_.rbegin(), steps_.rend());
    return Homotopy(g_, f_, std::move(rev));
}

bool verify_homotopy(const Homotopy& h) {
    const DigitalImage& x = h.f().domain();
    const DigitalImage& y = h.f().codomain();
    const int n = x.size();
    const int m = h.m();
    for (int i = 0; i < n; ++i) {
        if (h.at(i, 0) != h.f()(i)) return false;
        if (h.at(i, m) != h.g()(i)) return false;
        for (int t = 0; t < m; ++t)
            if (!y.closed_adjacent(h.at(i, t), h.at(i, t + 1))) return false;
    }
    for (int t = 0; t <= m; ++t)
        for (auto [i, j] : x.edge_list())
            if (!y.closed_adjacent(h.at(i, t), h.at(j, t))) return false;
    return true;
}

} // namespace digitop
