#ifndef DIGITOP_MAPS_HPP
#define DIGITOP_MAPS_HPP

#include <memory>
#include <vector>

#include "digitop/core.hpp"

namespace digitop {

using ImagePtr = std::shared_ptr<const DigitalImage>;

/// A total function between digital images, stored as a table from domain
/// point index to codomain point index. Not necessarily continuous.
class DigitalMap {
  public:
    DigitalMap(ImagePtr domain, ImagePtr codomain, std::vector<int> table);

    const DigitalImage& domain() const { return *dom_; }
    const DigitalImage& codomain() const { return *cod_; }
    const ImagePtr& domain_ptr() const { return dom_; }
    const ImagePtr& codomain_ptr() const { return cod_; }

    bool self_map() const { return *dom_ == *cod_; }

    int operator()(int i) const { return table_[static_cast<std::size_t>(i)]; }
    /// Image of a domain point by value; InputError if x is not in the domain.
    Point operator()(const Point& x) const;
    const std::vector<int>& table() const { return table_; }

    /// Equality compares images by relation and tables entrywise.
    friend bool operator==(const DigitalMap& f, const DigitalMap& g);
    friend bool operator!=(const DigitalMap& f, const DigitalMap& g) { return !(f == g); }

  private:
    ImagePtr dom_;
    ImagePtr cod_;
    std::vector<int> table_;
};

DigitalMap identity_map(ImagePtr x);
DigitalMap constant_map(ImagePtr x, ImagePtr y, int y_index);
/// Constant self-map at the point with index y_index.
DigitalMap constant_map(ImagePtr x, int y_index);

/// Fixed-point-free self-map on a connected image with at least 2 points:
/// everything collapses to point 0 except point 0 itself, which moves to its
/// least neighbor.
DigitalMap collapse_map(ImagePtr x);

/// True iff every domain edge maps to equal or adjacent codomain points.
bool is_continuous(const DigitalMap& f);

/// g after f. InputError unless codomain(f) == domain(g).
DigitalMap compose(const DigitalMap& g, const DigitalMap& f);

/// Inverse of a bijection; InputError if f is not bijective.
DigitalMap inverse(const DigitalMap& f);

/// Bijective, continuous, with continuous inverse.
bool is_isomorphism(const DigitalMap& f);

/// r must have codomain equal to the subimage of its domain induced on A
/// (given as domain point indices). True iff r is continuous and fixes every
/// point of A. InputError if A is empty or out of range, or the codomain is
/// not that subimage.
bool is_retraction(const DigitalMap& r, const std::vector<int>& a_indices);

struct ApproxFixedPoint {
    int index;
    bool exact;
};

/// Points p with f(p) in the closed neighborhood of p, sorted by index;
/// `exact` marks genuine fixed points. InputError if f is not a self-map.
std::vector<ApproxFixedPoint> approximate_fixed_points(const DigitalMap& f);

/// Indices with f(p) = p, sorted. InputError if f is not a self-map.
std::vector<int> fixed_points(const DigitalMap& f);

/// A homotopy table F(x, t) for t = 0..m between maps with shared domain and
/// codomain. Construction validates shape and index ranges only; whether the
/// table satisfies the homotopy conditions is verify_homotopy's job.
class Homotopy {
  public:
    /// steps[t][i] = F(point i, t); steps.size() = m + 1, m >= 1.
    Homotopy(DigitalMap f, DigitalMap g, std::vector<std::vector<int>> steps);

    const DigitalMap& f() const { return f_; }
    const DigitalMap& g() const { return g_; }
    int m() const { return static_cast<int>(steps_.size()) - 1; }
    int at(int point_index, int t) const {
        return steps_[static_cast<std::size_t>(t)][static_cast<std::size_t>(point_index)];
    }
    const std::vector<std::vector<int>>& steps() const { return steps_; }

    /// The t-reversed table, a candidate homotopy from g to f.
    Homotopy reversed() const;

  private:
    DigitalMap f_;
    DigitalMap g_;
    std::vector<std::vector<int>> steps_;
};

/// All three homotopy conditions: F(.,0) = f and F(.,m) = g; each F(x,.) is
/// continuous in t (consecutive values equal or adjacent); each F(.,t) is a
/// continuous map.
bool verify_homotopy(const Homotopy& h);

} // namespace digitop

#endif
