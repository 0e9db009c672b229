#ifndef DIGITOP_CORE_HPP
#define DIGITOP_CORE_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "digitop/errors.hpp"

namespace digitop {

/// A lattice point in Z^n. All points of one image share the same arity.
struct Point {
    std::vector<std::int64_t> coords;

    Point() = default;
    Point(std::initializer_list<std::int64_t> cs) : coords(cs) {}
    explicit Point(std::vector<std::int64_t> cs) : coords(std::move(cs)) {}

    int arity() const { return static_cast<int>(coords.size()); }
    std::int64_t operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }

    auto operator<=>(const Point&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Point& p);
std::string to_string(const Point& p);

/// c_u adjacency on Z^n: distinct points differing by at most 1 in every
/// coordinate, in at most u coordinates.
struct CuAdjacency {
    int u = 1;
};

/// User-supplied symmetric irreflexive edge set over point indices.
struct ExplicitAdjacency {
    std::vector<std::pair<int, int>> edges;
};

using Adjacency = std::variant<CuAdjacency, ExplicitAdjacency>;

/// c_u test on bare points. Throws InputError on arity mismatch or u out of
/// range. Never true for p == q.
bool cu_adjacent(const Point& p, const Point& q, int u);

/// A finite digital image: a nonempty duplicate-free set of lattice points
/// together with an adjacency relation, i.e. an undirected graph on lattice
/// points. Points are kept sorted lexicographically; this canonical order
/// fixes simplex orientation and all deterministic outputs downstream.
/// Immutable after construction and safe to share across threads.
class DigitalImage {
  public:
    /// Explicit edges in `adjacency` refer to positions in the `points`
    /// argument as given; they are remapped to canonical order internally.
    DigitalImage(int dim, std::vector<Point> points, Adjacency adjacency);

    int ambient_dim() const { return dim_; }
    int size() const { return static_cast<int>(points_.size()); }

    const Point& point(int i) const { return points_[static_cast<std::size_t>(i)]; }
    const std::vector<Point>& points() const { return points_; }

    /// Adjacency with explicit edges expressed in canonical indices.
    const Adjacency& adjacency() const { return adjacency_; }
    bool is_cu() const;
    /// u of a c_u image; InputError when the adjacency is explicit.
    int cu() const;

    std::optional<int> index_of(const Point& p) const;
    bool contains(const Point& p) const { return index_of(p).has_value(); }

    bool adjacent(int i, int j) const;
    /// Membership-checked point version; InputError if either point is absent.
    bool adjacent(const Point& p, const Point& q) const;
    /// The reflexive closure: i == j or adjacent(i, j).
    bool closed_adjacent(int i, int j) const { return i == j || adjacent(i, j); }

    /// Sorted open neighborhood of point i.
    const std::vector<int>& neighbors(int i) const;
    int degree(int i) const { return static_cast<int>(neighbors(i).size()); }

    /// Sorted indices of {y : y = x or y adjacent to x}.
    std::vector<int> closed_neighborhood(int i) const;
    /// Point version; InputError when x is not in the image.
    std::vector<Point> closed_neighborhood(const Point& x) const;

    /// Partition into connectivity components. Each block lists indices in
    /// increasing order; blocks are sorted by their least index.
    std::vector<std::vector<int>> components() const;
    bool connected() const { return components().size() == 1; }

    /// Realized edges {i, j} with i < j, sorted. Derived from the relation,
    /// so c_u and explicit images with the same edges compare equal.
    const std::vector<std::pair<int, int>>& edge_list() const { return edges_; }

    /// Subimage induced on the given point indices (sorted, deduplicated).
    DigitalImage induced(const std::vector<int>& indices) const;

    /// Re-checks construction invariants; throws InvariantError on failure.
    void validate() const;

    friend bool operator==(const DigitalImage& a, const DigitalImage& b);
    friend bool operator!=(const DigitalImage& a, const DigitalImage& b) { return !(a == b); }

  private:
    int dim_;
    std::vector<Point> points_;
    Adjacency adjacency_;
    std::vector<std::vector<int>> nbr_;
    std::vector<std::pair<int, int>> edges_;

    void build_neighbors();
};

} // namespace digitop

#endif
