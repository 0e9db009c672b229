#ifndef DIGITOP_CONSTRUCTIONS_HPP
#define DIGITOP_CONSTRUCTIONS_HPP

#include <memory>
#include <vector>

#include "digitop/maps.hpp"

namespace digitop {

/// [a,b] in Z with c_1; a < b required.
DigitalImage interval(std::int64_t a, std::int64_t b);

/// Simple closed curve of m >= 4 points: point i at (i,0) in Z^2 with
/// explicit cycle edges i ~ i+1 (mod m). Lattice placement is a labeling
/// convenience only.
DigitalImage scc(int m);

/// S_n = [-1,1]^{n+1} minus the origin, with c_1; 3^{n+1}-1 points.
/// BudgetError when the point count exceeds the construction budget.
DigitalImage sphere(int n);

/// Box of extents lengths[i] (points 0..lengths[i] per axis) with c_n
/// adjacency, n = number of extents.
DigitalImage cube(const std::vector<std::int64_t>& lengths);

/// x -> -x on an image closed under negation; InputError otherwise.
DigitalMap antipode_map(ImagePtr x);

/// A and B glued at a single point p (image of a0 and b0). The underlying
/// image lives on coordinates 0..|A|+|B|-2 in Z with explicit adjacency;
/// cross edges occur only at p. Side isomorphisms are re-verified at
/// construction.
struct WedgeImage {
    ImagePtr image;
    int glue_index;
    /// Wedge index of each A (resp. B) point; a_to_wedge[a0] = b_to_wedge[b0] = glue_index.
    std::vector<int> a_to_wedge;
    std::vector<int> b_to_wedge;

    /// Retraction p_A: identity on the A side, all of B to p. Codomain is the
    /// subimage induced on the A side, as is_retraction expects.
    DigitalMap retraction_onto_a() const;
    DigitalMap retraction_onto_b() const;
};

WedgeImage wedge(const DigitalImage& a, const Point& a0, const DigitalImage& b, const Point& b0);

/// Coordinate-concatenated product with c_s adjacency, s = sum of factor
/// dimensions. Every factor must use full c_{n_i} adjacency; InputError
/// otherwise.
DigitalImage product(const std::vector<DigitalImage>& factors);

} // namespace digitop

#endif
