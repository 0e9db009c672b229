#ifndef DIGITOP_SNF_HPP
#define DIGITOP_SNF_HPP

#include <vector>

#include "digitop/matrix.hpp"

namespace digitop {

/// Smith normal form S = U * A * V with unimodular U, V. Inverses are
/// accumulated alongside, so callers never invert a matrix:
///   A = Uinv * S * Vinv,  U * Uinv = I,  V * Vinv = I.
/// S is diagonal with d_1 | d_2 | ... | d_r > 0 followed by zeros.
struct SNFResult {
    IntMatrix S;
    IntMatrix U, Uinv;
    IntMatrix V, Vinv;
    int rank = 0;
    /// The nonzero invariant factors d_1..d_r.
    std::vector<std::int64_t> diagonal;
};

SNFResult smith_normal_form(IntMatrix a);

} // namespace digitop

#endif
