#pragma once

#include "tatekit/integer.hpp"

#include <initializer_list>
#include <vector>

namespace tatekit {

/* Dense matrix over Z, row-major.  Degenerate shapes (0 x n, n x 0) are legal
   and show up constantly as presentations of free or zero groups. */
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) fail("BadShape", "negative dimension");
    }
    IntMatrix(int rows, int cols, std::initializer_list<Int> entries)
        : IntMatrix(rows, cols) {
        if (static_cast<int>(entries.size()) != rows * cols)
            fail("BadShape", "entry count does not match shape");
        size_t k = 0;
        for (const Int& v : entries) e_[k++] = v;
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const Int& v : e_) if (v != 0) return false;
        return true;
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) fail("BadShape", "matrix product shape mismatch");
        IntMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Int& a = at(i, k);
                if (a == 0) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const Int& b = o.at(k, j);
                    if (b != 0) r.at(i, j) += a * b;
                }
            }
        return r;
    }

    IntMatrix operator+(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) fail("BadShape", "matrix sum shape mismatch");
        IntMatrix r(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
        return r;
    }
    IntMatrix operator-(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) fail("BadShape", "matrix difference shape mismatch");
        IntMatrix r(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
        return r;
    }
    IntMatrix operator-() const {
        IntMatrix r(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
        return r;
    }
    IntMatrix scaled(const Int& c) const {
        IntMatrix r(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = c * e_[k];
        return r;
    }

    std::vector<Int> apply(const std::vector<Int>& x) const {
        if (static_cast<int>(x.size()) != cols_) fail("BadShape", "vector length mismatch");
        std::vector<Int> y(rows_, Int(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != 0 && x[j] != 0) y[i] += at(i, j) * x[j];
        return y;
    }

    std::vector<Int> col(int j) const {
        std::vector<Int> c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }
    void set_col(int j, const std::vector<Int>& c) {
        for (int i = 0; i < rows_; ++i) at(i, j) = c[i];
    }

    /* matrix whose columns are the given vectors */
    static IntMatrix from_cols(int rows, const std::vector<std::vector<Int>>& cs) {
        IntMatrix m(rows, static_cast<int>(cs.size()));
        for (int j = 0; j < m.cols(); ++j) {
            if (static_cast<int>(cs[j].size()) != rows) fail("BadShape", "column length mismatch");
            m.set_col(j, cs[j]);
        }
        return m;
    }

    /* [A | B] side by side */
    static IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows() != b.rows()) fail("BadShape", "hcat row mismatch");
        IntMatrix m(a.rows(), a.cols() + b.cols());
        for (int i = 0; i < a.rows(); ++i) {
            for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
            for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
        }
        return m;
    }

    /* [A ; B] stacked */
    static IntMatrix vcat(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols() != b.cols()) fail("BadShape", "vcat column mismatch");
        IntMatrix m(a.rows() + b.rows(), a.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
        return m;
    }

    IntMatrix submatrix_cols(int j0, int j1) const {
        IntMatrix m(rows_, j1 - j0);
        for (int i = 0; i < rows_; ++i)
            for (int j = j0; j < j1; ++j) m.at(i, j - j0) = at(i, j);
        return m;
    }

private:
    int rows_, cols_;
    std::vector<Int> e_;
};

inline std::vector<Int> vec_add(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline std::vector<Int> vec_sub(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline std::vector<Int> vec_neg(const std::vector<Int>& a) {
    std::vector<Int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}
inline std::vector<Int> vec_scale(const Int& c, const std::vector<Int>& a) {
    std::vector<Int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}
inline bool vec_is_zero(const std::vector<Int>& a) {
    for (const Int& v : a) if (v != 0) return false;
    return true;
}
inline std::vector<Int> unit_vec(int n, int i) {
    std::vector<Int> r(n, Int(0));
    r[i] = 1;
    return r;
}

} // namespace tatekit
