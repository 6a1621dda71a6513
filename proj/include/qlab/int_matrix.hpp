#pragma once

#include <cstdint>
#include <vector>

#include "qlab/errors.hpp"

namespace qlab {

// Overflow-checked int64 arithmetic. All exact-linear-algebra paths run through
// these so that a pathological blowup surfaces as SizeLimit instead of UB.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw SizeLimit("integer overflow in addition");
    return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw SizeLimit("integer overflow in subtraction");
    return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw SizeLimit("integer overflow in multiplication");
    return r;
}

// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::int64_t& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    std::int64_t operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    bool is_zero() const {
        for (std::int64_t v : data_)
            if (v != 0) return false;
        return true;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw ShapeError("matrix product dimensions");
        IntMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                std::int64_t a = (*this)(i, k);
                if (a == 0) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r(i, j) = checked_add(r(i, j), checked_mul(a, o(k, j)));
            }
        return r;
    }

    void swap_rows(int i, int j) {
        for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(int i, int j) {
        for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }
    void negate_row(int i) {
        for (int c = 0; c < cols_; ++c) (*this)(i, c) = checked_sub(0, (*this)(i, c));
    }
    void negate_col(int j) {
        for (int r = 0; r < rows_; ++r) (*this)(r, j) = checked_sub(0, (*this)(r, j));
    }
    // row i -= k * row j
    void add_row_multiple(int i, int j, std::int64_t k) {
        if (k == 0) return;
        for (int c = 0; c < cols_; ++c)
            (*this)(i, c) = checked_sub((*this)(i, c), checked_mul(k, (*this)(j, c)));
    }
    // col j -= k * col i
    void add_col_multiple(int j, int i, std::int64_t k) {
        if (k == 0) return;
        for (int r = 0; r < rows_; ++r)
            (*this)(r, j) = checked_sub((*this)(r, j), checked_mul(k, (*this)(r, i)));
    }

private:
    int rows_, cols_;
    std::vector<std::int64_t> data_;
};

}  // namespace qlab
