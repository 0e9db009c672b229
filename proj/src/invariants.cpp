#include "digitop/invariants.hpp"

#include <algorithm>

#include "digitop/checked_int.hpp"

namespace digitop {

IntMatrix induced_chain_map(const DigitalMap& f, int q, const ChainComplex& cx,
                            const ChainComplex& cy) {
    if (!is_continuous(f)) throw InputError("induced map of a non-continuous map");
    IntMatrix m(cy.alpha(q), cx.alpha(q));
    for (int j = 0; j < cx.alpha(q); ++j) {
        const Simplex& s = cx.simplices(q)[static_cast<std::size_t>(j)];
        Simplex img;
        img.reserve(s.size());
        for (int v : s) img.push_back(f(v));

        // Selection-sort the image vertices, counting swaps for the sign.
        std::int64_t sign = 1;
        bool degenerate = false;
        for (std::size_t a = 0; a < img.size() && !degenerate; ++a) {
            std::size_t least = a;
            for (std::size_t b = a + 1; b < img.size(); ++b) {
                if (img[b] == img[least]) degenerate = true;
                if (img[b] < img[least]) least = b;
            }
            if (least != a) {
                std::swap(img[a], img[least]);
                sign = -sign;
            }
            if (a > 0 && img[a] == img[a - 1]) degenerate = true;
        }
        if (degenerate) continue;

        auto row = cy.index_of(q, img);
        if (!row) throw InvariantError("image of a simplex is not a simplex");
        m.at(*row, j) = sign;
    }
    return m;
}

IntMatrix induced_chain_map(const DigitalMap& f, int q) {
    ChainComplex cx(f.domain());
    ChainComplex cy(f.codomain());
    return induced_chain_map(f, q, cx, cy);
}

InducedMap induced_homology_map(const DigitalMap& f, int q, const ImageHomology& hx,
                                const ImageHomology& hy) {
    IntMatrix chain = induced_chain_map(f, q, hx.complex(), hy.complex());
    IntMatrix reps = hx.free_representatives(q);
    IntMatrix images = chain * reps;

    InducedMap out;
    out.q = q;
    out.matrix = IntMatrix(hy.betti(q), hx.betti(q));
    for (int c = 0; c < images.cols(); ++c) {
        std::vector<std::int64_t> z(static_cast<std::size_t>(images.rows()));
        for (int r = 0; r < images.rows(); ++r) z[static_cast<std::size_t>(r)] = images.at(r, c);
        std::vector<std::int64_t> coords = hy.free_coords(q, z);
        for (int r = 0; r < out.matrix.rows(); ++r)
            out.matrix.at(r, c) = coords[static_cast<std::size_t>(r)];
    }
    return out;
}

InducedMap induced_homology_map(const DigitalMap& f, int q) {
    ImageHomology hx(f.domain());
    ImageHomology hy(f.codomain());
    return induced_homology_map(f, q, hx, hy);
}

std::int64_t lefschetz_number(const DigitalMap& f, const ImageHomology& h) {
    if (!f.self_map()) throw InputError("Lefschetz number of a non-self-map");
    if (!is_continuous(f)) throw InputError("Lefschetz number of a non-continuous map");
    std::int64_t lambda = 0;
    for (int q = 0; q <= h.dim(); ++q) {
        std::int64_t t = trace(induced_homology_map(f, q, h, h).matrix);
        lambda = checked_add(lambda, q % 2 == 0 ? t : checked_neg(t));
    }
    return lambda;
}

std::int64_t lefschetz_number(const DigitalMap& f) {
    ImageHomology h(f.domain());
    return lefschetz_number(f, h);
}

DegreeResult degree(const DigitalMap& f, int n, const ImageHomology& h) {
    if (!f.self_map()) throw InputError("degree of a non-self-map");
    if (!is_continuous(f)) throw InputError("degree of a non-continuous map");
    if (n < 0) throw InputError("degree: dimension must be >= 0");
    DegreeResult out;
    out.hn = h.group(n);
    if (out.hn.betti != 1) return out;
    // On a rank-1 free part every generator differs by a sign, so the
    // multiplier below does not depend on the basis choice.
    out.defined = true;
    out.value = induced_homology_map(f, n, h, h).matrix.at(0, 0);
    return out;
}

DegreeResult degree(const DigitalMap& f, int n) {
    ImageHomology h(f.domain());
    return degree(f, n, h);
}

} // namespace digitop
