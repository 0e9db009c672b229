#ifndef DIGITOP_MATRIX_HPP
#define DIGITOP_MATRIX_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "digitop/checked_int.hpp"
#include "digitop/errors.hpp"

namespace digitop {

/// Dense integer matrix with overflow-checked arithmetic. Entries that would
/// leave int64 range throw OverflowError rather than wrapping.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
        if (rows < 0 || cols < 0) throw InputError("matrix with negative shape");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::int64_t& at(int r, int c) {
        return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)];
    }
    std::int64_t at(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)];
    }

    bool is_zero() const;

    /// Rows [r0, r1) as a new matrix.
    IntMatrix row_slice(int r0, int r1) const;
    /// Columns [c0, c1) as a new matrix.
    IntMatrix col_slice(int c0, int c1) const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    /// row i += k * row j
    void add_row(int i, int j, std::int64_t k);
    /// col i += k * col j
    void add_col(int i, int j, std::int64_t k);
    void negate_row(int i);
    void negate_col(int i);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> a_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Matrix-vector product with checked arithmetic.
std::vector<std::int64_t> mul(const IntMatrix& m, const std::vector<std::int64_t>& v);

/// Sum of diagonal entries (square matrices only).
std::int64_t trace(const IntMatrix& m);

} // namespace digitop

#endif
