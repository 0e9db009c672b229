#include "digitop/snf.hpp"

#include <algorithm>
#include <utility>

namespace digitop {

// Elementary operations are mirrored into U/V and their inverses, so the
// identities S = U*A*V and A = Uinv*S*Vinv hold at every step. Pivots are
// chosen by minimal absolute value to limit coefficient growth; entries are
// overflow-checked and fail loudly rather than wrap.
SNFResult smith_normal_form(IntMatrix a) {
    const int R = a.rows();
    const int C = a.cols();
    SNFResult res;
    res.S = std::move(a);
    res.U = IntMatrix::identity(R);
    res.Uinv = IntMatrix::identity(R);
    res.V = IntMatrix::identity(C);
    res.Vinv = IntMatrix::identity(C);
    IntMatrix& S = res.S;

    auto row_add = [&](int i, int j, std::int64_t k) {
        S.add_row(i, j, k);
        res.U.add_row(i, j, k);
        res.Uinv.add_col(j, i, checked_neg(k));
    };
    auto col_add = [&](int i, int j, std::int64_t k) {
        S.add_col(i, j, k);
        res.V.add_col(i, j, k);
        res.Vinv.add_row(j, i, checked_neg(k));
    };
    auto row_swap = [&](int i, int j) {
        S.swap_rows(i, j);
        res.U.swap_rows(i, j);
        res.Uinv.swap_cols(i, j);
    };
    auto col_swap = [&](int i, int j) {
        S.swap_cols(i, j);
        res.V.swap_cols(i, j);
        res.Vinv.swap_rows(i, j);
    };
    auto row_neg = [&](int i) {
        S.negate_row(i);
        res.U.negate_row(i);
        res.Uinv.negate_col(i);
    };

    // Round-to-nearest quotient: |a - q*p| <= |p|/2. Halving remainders keeps
    // the accumulated transform entries small.
    auto balanced_quot = [](std::int64_t a, std::int64_t p) {
        std::int64_t q = a / p;
        std::int64_t r = a - q * p;
        std::int64_t ar = r < 0 ? -r : r;
        std::int64_t ap = p < 0 ? -p : p;
        if (2 * ar > ap) q += ((r < 0) == (p < 0)) ? 1 : -1;
        return q;
    };

    int t = 0;
    const int tmax = std::min(R, C);
    while (t < tmax) {
        int pr = -1;
        int pc = -1;
        std::int64_t best = 0;
        for (int r = t; r < R; ++r)
            for (int c = t; c < C; ++c) {
                std::int64_t v = S.at(r, c);
                if (v == 0) continue;
                std::int64_t av = v < 0 ? checked_neg(v) : v;
                if (pr < 0 || av < best) {
                    pr = r;
                    pc = c;
                    best = av;
                }
            }
        if (pr < 0) break;
        row_swap(t, pr);
        col_swap(t, pc);

        // Reduce column t and row t mod the pivot. Nonzero remainders are
        // strictly smaller than the pivot, so re-picking terminates.
        bool dirty = false;
        for (int r = t + 1; r < R; ++r) {
            if (S.at(r, t) == 0) continue;
            std::int64_t q = balanced_quot(S.at(r, t), S.at(t, t));
            if (q != 0) row_add(r, t, checked_neg(q));
            if (S.at(r, t) != 0) dirty = true;
        }
        for (int c = t + 1; c < C; ++c) {
            if (S.at(t, c) == 0) continue;
            std::int64_t q = balanced_quot(S.at(t, c), S.at(t, t));
            if (q != 0) col_add(c, t, checked_neg(q));
            if (S.at(t, c) != 0) dirty = true;
        }
        if (dirty) continue;

        // Divisibility: the pivot must divide everything below and to the
        // right. Pulling an offending row up forces a smaller pivot next pass.
        std::int64_t d = S.at(t, t);
        int bad = -1;
        for (int r = t + 1; r < R && bad < 0; ++r)
            for (int c = t + 1; c < C; ++c)
                if (S.at(r, c) % d != 0) {
                    bad = r;
                    break;
                }
        if (bad >= 0) {
            row_add(t, bad, 1);
            continue;
        }

        if (S.at(t, t) < 0) row_neg(t);
        ++t;
    }

    res.rank = t;
    for (int i = 0; i < t; ++i) res.diagonal.push_back(S.at(i, i));
    return res;
}

} // namespace digitop
