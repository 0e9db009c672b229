#ifndef DIGITOP_HOMOLOGY_HPP
#define DIGITOP_HOMOLOGY_HPP

#include <map>
#include <optional>
#include <vector>

#include "digitop/core.hpp"
#include "digitop/matrix.hpp"
#include "digitop/snf.hpp"

namespace digitop {

/// Strictly increasing list of point indices forming a clique. The increasing
/// order is the orientation convention; all signs derive from it.
using Simplex = std::vector<int>;

/// Clique complex of a digital image: for each q the lexicographically sorted
/// basis of q-simplices and the boundary matrix D_q with alternating signs.
class ChainComplex {
  public:
    explicit ChainComplex(const DigitalImage& x);

    /// Largest q with a q-simplex. At least 0 (images are nonempty).
    int dim() const { return static_cast<int>(simp_.size()) - 1; }
    /// Number of q-simplices; 0 beyond dim().
    int alpha(int q) const;
    const std::vector<Simplex>& simplices(int q) const;
    /// D_q: C_q -> C_{q-1}, for q = 0..dim()+1 (D_0 has zero rows, D_{dim+1}
    /// zero columns); zero-shaped beyond.
    const IntMatrix& boundary(int q) const;
    std::optional<int> index_of(int q, const Simplex& s) const;

  private:
    std::vector<std::vector<Simplex>> simp_;
    std::vector<IntMatrix> d_;
    std::vector<std::map<Simplex, int>> pos_;
    std::vector<Simplex> empty_simplices_;
    IntMatrix empty_matrix_;
};

/// Alternating sum of simplex counts over q = 0..dim.
std::int64_t euler_characteristic(const DigitalImage& x);
int complex_dimension(const DigitalImage& x);

struct HomologyGroup {
    int q = 0;
    int betti = 0;
    /// Invariant factors > 1, each dividing the next.
    std::vector<std::int64_t> torsion;

    bool trivial() const { return betti == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// "Z^b (+) Z/t1 (+) ...", "Z" for b = 1 alone, "0" when trivial.
std::string to_string(const HomologyGroup& g);

/// Simplicial homology of the clique complex over Z, with enough of the SNF
/// bases retained to express cycles in homology coordinates.
class ImageHomology {
  public:
    explicit ImageHomology(const DigitalImage& x);

    const ChainComplex& complex() const { return cx_; }
    int dim() const { return cx_.dim(); }

    /// H_q; the zero group for q < 0 or q > dim().
    HomologyGroup group(int q) const;
    int betti(int q) const { return group(q).betti; }
    std::vector<HomologyGroup> groups() const;

    /// Coordinates of a q-cycle in the free-part basis of H_q (length
    /// betti(q)). InvariantError if the chain is not a cycle.
    std::vector<std::int64_t> free_coords(int q, const std::vector<std::int64_t>& chain) const;

    /// Chain vectors generating the free part of H_q: alpha(q) rows,
    /// betti(q) columns. free_coords maps column j to the j-th unit vector.
    IntMatrix free_representatives(int q) const;

  private:
    struct Level {
        SNFResult dq;    // SNF of D_q
        int kernel = 0;  // alpha_q - rank D_q
        SNFResult w;     // SNF of D_{q+1} expressed in kernel coordinates
    };

    ChainComplex cx_;
    std::vector<Level> levels_;
};

} // namespace digitop

#endif
