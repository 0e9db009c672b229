#include "digitop/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "digitop/checked_int.hpp"

namespace digitop {

std::ostream& operator<<(std::ostream& os, const Point& p) {
    os << '(';
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        if (i) os << ',';
        os << p.coords[i];
    }
    return os << ')';
}

std::string to_string(const Point& p) {
    std::ostringstream ss;
    ss << p;
    return ss.str();
}

bool cu_adjacent(const Point& p, const Point& q, int u) {
    if (p.arity() != q.arity())
        throw InputError("cu_adjacent: points of arity " + std::to_string(p.arity()) + " and " +
                         std::to_string(q.arity()));
    if (u < 1 || u > p.arity())
        throw InputError("cu_adjacent: u = " + std::to_string(u) + " out of range [1, " +
                         std::to_string(p.arity()) + "]");
    int differing = 0;
    for (int i = 0; i < p.arity(); ++i) {
        std::int64_t d = checked_sub(p[i], q[i]);
        if (d == 0) continue;
        if (d < -1 || d > 1) return false;
        ++differing;
    }
    return differing >= 1 && differing <= u;
}

DigitalImage::DigitalImage(int dim, std::vector<Point> points, Adjacency adjacency)
    : dim_(dim), points_(std::move(points)), adjacency_(std::move(adjacency)) {
    if (dim_ < 1) throw InputError("digital image: ambient dimension must be >= 1");
    if (points_.empty()) throw InputError("digital image: empty point set");
    for (const Point& p : points_)
        if (p.arity() != dim_)
            throw InputError("digital image: point " + to_string(p) + " has arity " +
                             std::to_string(p.arity()) + ", expected " + std::to_string(dim_));

    // Canonical order permutation: file/caller index -> sorted index.
    const int n = static_cast<int>(points_.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return points_[static_cast<std::size_t>(a)] < points_[static_cast<std::size_t>(b)];
    });
    std::vector<int> rank(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

    std::vector<Point> sorted;
    sorted.reserve(points_.size());
    for (int i = 0; i < n; ++i) sorted.push_back(std::move(points_[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]));
    points_ = std::move(sorted);
    for (int i = 0; i + 1 < n; ++i)
        if (points_[static_cast<std::size_t>(i)] == points_[static_cast<std::size_t>(i) + 1])
            throw InputError("digital image: duplicate point " + to_string(points_[static_cast<std::size_t>(i)]));

    if (auto* cu = std::get_if<CuAdjacency>(&adjacency_)) {
        if (cu->u < 1 || cu->u > dim_)
            throw InputError("digital image: u = " + std::to_string(cu->u) + " out of range [1, " +
                             std::to_string(dim_) + "]");
    } else {
        auto& ex = std::get<ExplicitAdjacency>(adjacency_);
        for (auto& [a, b] : ex.edges) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw InputError("digital image: edge endpoint out of range");
            if (a == b) throw InputError("digital image: self-loop edge");
            a = rank[static_cast<std::size_t>(a)];
            b = rank[static_cast<std::size_t>(b)];
            if (a > b) std::swap(a, b);
        }
        std::sort(ex.edges.begin(), ex.edges.end());
        if (std::adjacent_find(ex.edges.begin(), ex.edges.end()) != ex.edges.end())
            throw InputError("digital image: duplicate edge");
    }

    build_neighbors();
}

void DigitalImage::build_neighbors() {
    const int n = size();
    nbr_.assign(static_cast<std::size_t>(n), {});
    edges_.clear();
    if (auto* cu = std::get_if<CuAdjacency>(&adjacency_)) {
        // Probe each point's c_u offsets (nonzero in at most u coordinates)
        // instead of scanning all pairs; for c_1 that is 2*dim probes per
        // point, which keeps large spheres cheap.
        Point q;
        q.coords.resize(static_cast<std::size_t>(dim_));
        int i = 0;
        auto probe = [&]() {
            if (auto j = index_of(q); j && *j > i) {
                nbr_[static_cast<std::size_t>(i)].push_back(*j);
                nbr_[static_cast<std::size_t>(*j)].push_back(i);
                edges_.emplace_back(i, *j);
            }
        };
        auto extend = [&](auto&& self, int start, int used) -> void {
            if (used > 0) probe();
            if (used == cu->u) return;
            for (int c = start; c < dim_; ++c) {
                std::int64_t base = q.coords[static_cast<std::size_t>(c)];
                for (std::int64_t s : {std::int64_t{-1}, std::int64_t{1}}) {
                    q.coords[static_cast<std::size_t>(c)] = checked_add(base, s);
                    self(self, c + 1, used + 1);
                }
                q.coords[static_cast<std::size_t>(c)] = base;
            }
        };
        for (; i < n; ++i) {
            q.coords = points_[static_cast<std::size_t>(i)].coords;
            extend(extend, 0, 0);
        }
    } else {
        for (auto [a, b] : std::get<ExplicitAdjacency>(adjacency_).edges) {
            nbr_[static_cast<std::size_t>(a)].push_back(b);
            nbr_[static_cast<std::size_t>(b)].push_back(a);
            edges_.emplace_back(a, b);
        }
    }
    for (auto& v : nbr_) std::sort(v.begin(), v.end());
    std::sort(edges_.begin(), edges_.end());
}

bool DigitalImage::is_cu() const { return std::holds_alternative<CuAdjacency>(adjacency_); }

int DigitalImage::cu() const {
    if (auto* cu = std::get_if<CuAdjacency>(&adjacency_)) return cu->u;
    throw InputError("image does not use c_u adjacency");
}

std::optional<int> DigitalImage::index_of(const Point& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it != points_.end() && *it == p) return static_cast<int>(it - points_.begin());
    return std::nullopt;
}

bool DigitalImage::adjacent(int i, int j) const {
    const auto& v = nbr_[static_cast<std::size_t>(i)];
    return std::binary_search(v.begin(), v.end(), j);
}

bool DigitalImage::adjacent(const Point& p, const Point& q) const {
    auto i = index_of(p);
    auto j = index_of(q);
    if (!i) throw InputError("adjacent: point " + to_string(p) + " not in image");
    if (!j) throw InputError("adjacent: point " + to_string(q) + " not in image");
    return adjacent(*i, *j);
}

const std::vector<int>& DigitalImage::neighbors(int i) const {
    return nbr_[static_cast<std::size_t>(i)];
}

std::vector<int> DigitalImage::closed_neighborhood(int i) const {
    std::vector<int> out = nbr_[static_cast<std::size_t>(i)];
    out.insert(std::lower_bound(out.begin(), out.end(), i), i);
    return out;
}

std::vector<Point> DigitalImage::closed_neighborhood(const Point& x) const {
    auto i = index_of(x);
    if (!i) throw InputError("closed_neighborhood: point " + to_string(x) + " not in image");
    std::vector<Point> out;
    for (int j : closed_neighborhood(*i)) out.push_back(point(j));
    return out;
}

std::vector<std::vector<int>> DigitalImage::components() const {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<std::vector<int>> blocks;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> block{s};
        seen[static_cast<std::size_t>(s)] = true;
        for (std::size_t head = 0; head < block.size(); ++head)
            for (int j : nbr_[static_cast<std::size_t>(block[head])])
                if (!seen[static_cast<std::size_t>(j)]) {
                    seen[static_cast<std::size_t>(j)] = true;
                    block.push_back(j);
                }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    // Seeds increase, so blocks are already ordered by least element.
    return blocks;
}

DigitalImage DigitalImage::induced(const std::vector<int>& indices) const {
    std::vector<int> idx = indices;
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    if (idx.empty()) throw InputError("induced: empty index set");
    for (int i : idx)
        if (i < 0 || i >= size()) throw InputError("induced: index out of range");

    std::vector<Point> pts;
    pts.reserve(idx.size());
    for (int i : idx) pts.push_back(point(i));

    if (is_cu()) return DigitalImage(dim_, std::move(pts), adjacency_);

    std::vector<int> pos(static_cast<std::size_t>(size()), -1);
    for (std::size_t k = 0; k < idx.size(); ++k) pos[static_cast<std::size_t>(idx[k])] = static_cast<int>(k);
    ExplicitAdjacency sub;
    for (auto [a, b] : edges_) {
        int pa = pos[static_cast<std::size_t>(a)];
        int pb = pos[static_cast<std::size_t>(b)];
        if (pa >= 0 && pb >= 0) sub.edges.emplace_back(pa, pb);
    }
    return DigitalImage(dim_, std::move(pts), std::move(sub));
}

void DigitalImage::validate() const {
    const int n = size();
    if (n == 0) throw InvariantError("image lost its points");
    if (!std::is_sorted(points_.begin(), points_.end()))
        throw InvariantError("points out of canonical order");
    for (int i = 0; i < n; ++i) {
        const auto& v = nbr_[static_cast<std::size_t>(i)];
        if (!std::is_sorted(v.begin(), v.end())) throw InvariantError("neighbor list unsorted");
        for (int j : v) {
            if (j < 0 || j >= n || j == i) throw InvariantError("bad neighbor index");
            if (!adjacent(j, i)) throw InvariantError("asymmetric adjacency");
        }
    }
    if (auto* cu = std::get_if<CuAdjacency>(&adjacency_)) {
        for (auto [a, b] : edges_)
            if (!cu_adjacent(point(a), point(b), cu->u))
                throw InvariantError("edge violates c_u relation");
    }
}

bool operator==(const DigitalImage& a, const DigitalImage& b) {
    return a.dim_ == b.dim_ && a.points_ == b.points_ && a.edges_ == b.edges_;
}

} // namespace digitop
