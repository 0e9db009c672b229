#include "digitop/homology.hpp"

#include <algorithm>
#include <sstream>

#include "digitop/checked_int.hpp"

namespace digitop {

ChainComplex::ChainComplex(const DigitalImage& x) {
    const int n = x.size();

    // Level 0: vertices. Level q: extend each (q-1)-simplex by a vertex
    // above its maximum adjacent to all of it. Extending in vertex order
    // keeps each level lexicographically sorted.
    std::vector<Simplex> level;
    std::vector<std::vector<int>> cand;
    for (int v = 0; v < n; ++v) {
        level.push_back({v});
        const auto& nb = x.neighbors(v);
        cand.emplace_back(std::upper_bound(nb.begin(), nb.end(), v), nb.end());
    }
    while (!level.empty()) {
        simp_.push_back(level);
        std::vector<Simplex> next;
        std::vector<std::vector<int>> next_cand;
        for (std::size_t s = 0; s < level.size(); ++s) {
            for (int v : cand[s]) {
                Simplex ext = level[s];
                ext.push_back(v);
                const auto& nb = x.neighbors(v);
                std::vector<int> c;
                std::set_intersection(cand[s].begin(), cand[s].end(),
                                      std::upper_bound(nb.begin(), nb.end(), v), nb.end(),
                                      std::back_inserter(c));
                next.push_back(std::move(ext));
                next_cand.push_back(std::move(c));
            }
        }
        level = std::move(next);
        cand = std::move(next_cand);
    }

    pos_.resize(simp_.size());
    for (std::size_t q = 0; q < simp_.size(); ++q)
        for (std::size_t i = 0; i < simp_[q].size(); ++i)
            pos_[q].emplace(simp_[q][i], static_cast<int>(i));

    // D_0 maps C_0 to the trivial group; D_{dim+1} has no columns.
    d_.emplace_back(0, alpha(0));
    for (int q = 1; q <= dim(); ++q) {
        IntMatrix m(alpha(q - 1), alpha(q));
        for (int j = 0; j < alpha(q); ++j) {
            const Simplex& s = simp_[static_cast<std::size_t>(q)][static_cast<std::size_t>(j)];
            std::int64_t sign = 1;
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                auto row = index_of(q - 1, face);
                if (!row) throw InvariantError("face of a simplex is not a simplex");
                m.at(*row, j) = sign;
                sign = -sign;
            }
        }
        d_.push_back(std::move(m));
    }
    d_.emplace_back(alpha(dim()), 0);
}

int ChainComplex::alpha(int q) const {
    if (q < 0 || q > dim()) return 0;
    return static_cast<int>(simp_[static_cast<std::size_t>(q)].size());
}

const std::vector<Simplex>& ChainComplex::simplices(int q) const {
    if (q < 0 || q > dim()) return empty_simplices_;
    return simp_[static_cast<std::size_t>(q)];
}

const IntMatrix& ChainComplex::boundary(int q) const {
    if (q < 0 || q > dim() + 1) return empty_matrix_;
    return d_[static_cast<std::size_t>(q)];
}

std::optional<int> ChainComplex::index_of(int q, const Simplex& s) const {
    if (q < 0 || q > dim()) return std::nullopt;
    auto it = pos_[static_cast<std::size_t>(q)].find(s);
    if (it == pos_[static_cast<std::size_t>(q)].end()) return std::nullopt;
    return it->second;
}

std::int64_t euler_characteristic(const DigitalImage& x) {
    ChainComplex cx(x);
    std::int64_t chi = 0;
    for (int q = 0; q <= cx.dim(); ++q) {
        std::int64_t term = cx.alpha(q);
        chi = checked_add(chi, q % 2 == 0 ? term : checked_neg(term));
    }
    return chi;
}

int complex_dimension(const DigitalImage& x) { return ChainComplex(x).dim(); }

std::string to_string(const HomologyGroup& g) {
    std::ostringstream ss;
    bool first = true;
    if (g.betti == 1)
        ss << "Z", first = false;
    else if (g.betti > 1)
        ss << "Z^" << g.betti, first = false;
    for (std::int64_t t : g.torsion) {
        if (!first) ss << " (+) ";
        ss << "Z/" << t;
        first = false;
    }
    if (first) ss << "0";
    return ss.str();
}

ImageHomology::ImageHomology(const DigitalImage& x) : cx_(x) {
    levels_.reserve(static_cast<std::size_t>(cx_.dim()) + 1);
    for (int q = 0; q <= cx_.dim(); ++q) {
        Level lv;
        lv.dq = smith_normal_form(cx_.boundary(q));
        lv.kernel = cx_.alpha(q) - lv.dq.rank;

        // Columns of D_{q+1} are cycles; express them in the kernel basis
        // (the trailing columns of V_q). Coordinates of z in V_q's column
        // basis are Vinv_q * z, whose leading rank entries must vanish.
        IntMatrix coords = lv.dq.Vinv * cx_.boundary(q + 1);
        for (int r = 0; r < lv.dq.rank; ++r)
            for (int c = 0; c < coords.cols(); ++c)
                if (coords.at(r, c) != 0)
                    throw InvariantError("boundary image escapes the cycle space");
        lv.w = smith_normal_form(coords.row_slice(lv.dq.rank, coords.rows()));
        levels_.push_back(std::move(lv));
    }
}

HomologyGroup ImageHomology::group(int q) const {
    HomologyGroup g;
    g.q = q;
    if (q < 0 || q > cx_.dim()) return g;
    const Level& lv = levels_[static_cast<std::size_t>(q)];
    g.betti = lv.kernel - lv.w.rank;
    for (std::int64_t t : lv.w.diagonal)
        if (t > 1) g.torsion.push_back(t);
    return g;
}

std::vector<HomologyGroup> ImageHomology::groups() const {
    std::vector<HomologyGroup> out;
    for (int q = 0; q <= cx_.dim(); ++q) out.push_back(group(q));
    return out;
}

std::vector<std::int64_t> ImageHomology::free_coords(int q,
                                                     const std::vector<std::int64_t>& chain) const {
    if (q < 0 || q > cx_.dim()) {
        if (!std::all_of(chain.begin(), chain.end(), [](std::int64_t v) { return v == 0; }))
            throw InvariantError("nonzero chain beyond the complex dimension");
        return {};
    }
    const Level& lv = levels_[static_cast<std::size_t>(q)];
    if (static_cast<int>(chain.size()) != cx_.alpha(q))
        throw InvariantError("chain length does not match the simplex basis");

    std::vector<std::int64_t> w = mul(lv.dq.Vinv, chain);
    for (int r = 0; r < lv.dq.rank; ++r)
        if (w[static_cast<std::size_t>(r)] != 0) throw InvariantError("chain is not a cycle");
    std::vector<std::int64_t> kernel_coords(w.begin() + lv.dq.rank, w.end());

    // In the w-SNF basis the first rank coordinates are boundaries or
    // torsion; the rest are the free part.
    std::vector<std::int64_t> y = mul(lv.w.U, kernel_coords);
    return std::vector<std::int64_t>(y.begin() + lv.w.rank, y.end());
}

IntMatrix ImageHomology::free_representatives(int q) const {
    const int b = group(q).betti;
    IntMatrix out(cx_.alpha(q), b);
    if (q < 0 || q > cx_.dim()) return out;
    const Level& lv = levels_[static_cast<std::size_t>(q)];
    // Kernel basis (trailing columns of V) times the preimages of the free
    // unit vectors (trailing columns of Uinv of the w-SNF).
    IntMatrix kernel_basis = lv.dq.V.col_slice(lv.dq.rank, lv.dq.V.cols());
    IntMatrix free_units = lv.w.Uinv.col_slice(lv.w.rank, lv.w.Uinv.cols());
    return kernel_basis * free_units;
}

} // namespace digitop
