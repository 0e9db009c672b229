#ifndef DIGITOP_INVARIANTS_HPP
#define DIGITOP_INVARIANTS_HPP

#include "digitop/homology.hpp"
#include "digitop/maps.hpp"

namespace digitop {

/// Chain-level action of a continuous map: a simplex goes to 0 when two
/// image vertices coincide, otherwise to the sorted image simplex with the
/// sign of the sorting permutation. InputError if f is not continuous.
IntMatrix induced_chain_map(const DigitalMap& f, int q, const ChainComplex& cx,
                            const ChainComplex& cy);
IntMatrix induced_chain_map(const DigitalMap& f, int q);

/// Action on the free part of H_q in the SNF-derived bases:
/// betti_q(codomain) x betti_q(domain). InputError if f is not continuous;
/// InvariantError if a cycle's image fails to be a cycle.
struct InducedMap {
    int q = 0;
    IntMatrix matrix;
};
InducedMap induced_homology_map(const DigitalMap& f, int q, const ImageHomology& hx,
                                const ImageHomology& hy);
InducedMap induced_homology_map(const DigitalMap& f, int q);

/// Alternating sum of traces of the induced maps on the free parts of H_q,
/// q = 0..dim. InputError unless f is a continuous self-map.
std::int64_t lefschetz_number(const DigitalMap& f);
std::int64_t lefschetz_number(const DigitalMap& f, const ImageHomology& h);

/// Degree of a self-map in dimension n: the unique m with f_*(z) = m z on
/// H_n = Z. Undefined (with the computed group reported) when the free rank
/// of H_n is not 1.
struct DegreeResult {
    bool defined = false;
    std::int64_t value = 0;
    HomologyGroup hn;
};
DegreeResult degree(const DigitalMap& f, int n);
DegreeResult degree(const DigitalMap& f, int n, const ImageHomology& h);

} // namespace digitop

#endif
