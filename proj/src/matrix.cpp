#include "digitop/matrix.hpp"

#include <algorithm>
#include <ostream>

namespace digitop {

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](std::int64_t v) { return v == 0; });
}

IntMatrix IntMatrix::row_slice(int r0, int r1) const {
    if (r0 < 0 || r1 < r0 || r1 > rows_) throw InputError("row_slice out of range");
    IntMatrix out(r1 - r0, cols_);
    for (int r = r0; r < r1; ++r)
        for (int c = 0; c < cols_; ++c) out.at(r - r0, c) = at(r, c);
    return out;
}

IntMatrix IntMatrix::col_slice(int c0, int c1) const {
    if (c0 < 0 || c1 < c0 || c1 > cols_) throw InputError("col_slice out of range");
    IntMatrix out(rows_, c1 - c0);
    for (int r = 0; r < rows_; ++r)
        for (int c = c0; c < c1; ++c) out.at(r, c - c0) = at(r, c);
    return out;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row(int i, int j, std::int64_t k) {
    for (int c = 0; c < cols_; ++c) at(i, c) = checked_add(at(i, c), checked_mul(k, at(j, c)));
}

void IntMatrix::add_col(int i, int j, std::int64_t k) {
    for (int r = 0; r < rows_; ++r) at(r, i) = checked_add(at(r, i), checked_mul(k, at(r, j)));
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = checked_neg(at(i, c));
}

void IntMatrix::negate_col(int i) {
    for (int r = 0; r < rows_; ++r) at(r, i) = checked_neg(at(r, i));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
        throw InputError("matrix product shape mismatch: " + std::to_string(a.cols_) + " vs " +
                         std::to_string(b.rows_));
    IntMatrix out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            std::int64_t v = a.at(r, k);
            if (v == 0) continue;
            for (int c = 0; c < b.cols_; ++c)
                out.at(r, c) = checked_add(out.at(r, c), checked_mul(v, b.at(k, c)));
        }
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    for (int r = 0; r < m.rows(); ++r) {
        os << '[';
        for (int c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            os << m.at(r, c);
        }
        os << "]\n";
    }
    return os;
}

std::vector<std::int64_t> mul(const IntMatrix& m, const std::vector<std::int64_t>& v) {
    if (static_cast<std::size_t>(m.cols()) != v.size()) throw InputError("matrix-vector shape mismatch");
    std::vector<std::int64_t> out(static_cast<std::size_t>(m.rows()), 0);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            out[static_cast<std::size_t>(r)] =
                checked_add(out[static_cast<std::size_t>(r)],
                            checked_mul(m.at(r, c), v[static_cast<std::size_t>(c)]));
    return out;
}

std::int64_t trace(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("trace of non-square matrix");
    std::int64_t t = 0;
    for (int i = 0; i < m.rows(); ++i) t = checked_add(t, m.at(i, i));
    return t;
}

} // namespace digitop
