#pragma once

#include "tatekit/matrix.hpp"

#include <optional>

namespace tatekit {

/* U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... | dr.
   Inverses are tracked alongside so that changes of basis can be undone
   without a second elimination. */
struct SmithForm {
    IntMatrix u, uinv;  // rows x rows
    IntMatrix v, vinv;  // cols x cols
    IntMatrix d;        // rows x cols, diagonal
    int rank = 0;

    Int diag(int i) const { return d.at(i, i); }
};

namespace detail {

/* Pivot rule: minimal |value| among nonzero entries of the trailing block,
   ties broken by (row, col).  This is what makes every derived witness
   reproducible across runs. */
inline bool snf_find_pivot(const IntMatrix& d, int t, int& pi, int& pj) {
    bool found = false;
    Int best = 0;
    for (int i = t; i < d.rows(); ++i)
        for (int j = t; j < d.cols(); ++j) {
            const Int& x = d.at(i, j);
            if (x == 0) continue;
            Int a = abs_int(x);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& m) {
    SmithForm s;
    const int r = m.rows(), c = m.cols();
    s.u = IntMatrix::identity(r);
    s.uinv = IntMatrix::identity(r);
    s.v = IntMatrix::identity(c);
    s.vinv = IntMatrix::identity(c);
    s.d = m;
    IntMatrix& d = s.d;

    auto row_axpy = [&](int dst, int src, const Int& k) { // row dst += k * row src
        if (k == 0) return;
        for (int j = 0; j < c; ++j) d.at(dst, j) += k * d.at(src, j);
        for (int j = 0; j < r; ++j) s.u.at(dst, j) += k * s.u.at(src, j);
        for (int i = 0; i < r; ++i) s.uinv.at(i, src) -= k * s.uinv.at(i, dst);
    };
    auto col_axpy = [&](int dst, int src, const Int& k) { // col dst += k * col src
        if (k == 0) return;
        for (int i = 0; i < r; ++i) d.at(i, dst) += k * d.at(i, src);
        for (int i = 0; i < c; ++i) s.v.at(i, dst) += k * s.v.at(i, src);
        for (int j = 0; j < c; ++j) s.vinv.at(src, j) -= k * s.vinv.at(dst, j);
    };
    auto row_swap = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < c; ++j) std::swap(d.at(a, j), d.at(b, j));
        for (int j = 0; j < r; ++j) std::swap(s.u.at(a, j), s.u.at(b, j));
        for (int i = 0; i < r; ++i) std::swap(s.uinv.at(i, a), s.uinv.at(i, b));
    };
    auto col_swap = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < r; ++i) std::swap(d.at(i, a), d.at(i, b));
        for (int i = 0; i < c; ++i) std::swap(s.v.at(i, a), s.v.at(i, b));
        for (int j = 0; j < c; ++j) std::swap(s.vinv.at(a, j), s.vinv.at(b, j));
    };
    auto row_negate = [&](int a) {
        for (int j = 0; j < c; ++j) d.at(a, j) = -d.at(a, j);
        for (int j = 0; j < r; ++j) s.u.at(a, j) = -s.u.at(a, j);
        for (int i = 0; i < r; ++i) s.uinv.at(i, a) = -s.uinv.at(i, a);
    };

    int t = 0;
    const int n = std::min(r, c);
    while (t < n) {
        int pi = 0, pj = 0;
        if (!detail::snf_find_pivot(d, t, pi, pj)) break;
        row_swap(t, pi);
        col_swap(t, pj);

        for (;;) {
            /* clear column t, re-pivoting on remainders as they shrink */
            bool dirty = false;
            for (int i = t + 1; i < r; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);
                row_axpy(i, t, -q);
                if (d.at(i, t) != 0) {
                    row_swap(t, i); // remainder is strictly smaller
                    dirty = true;
                }
            }
            for (int j = t + 1; j < c; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                col_axpy(j, t, -q);
                if (d.at(t, j) != 0) {
                    col_swap(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;

            /* pivot must divide the rest of the block; if not, fold the
               offending row in and restart the clearing loop */
            bool fixed = true;
            for (int i = t + 1; i < r && fixed; ++i)
                for (int j = t + 1; j < c && fixed; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        row_axpy(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (d.at(t, t) < 0) row_negate(t);
        ++t;
    }
    s.rank = 0;
    for (int i = 0; i < n; ++i)
        if (d.at(i, i) != 0) ++s.rank;
    return s;
}

/* columns of the result form a basis of { x : M x = 0 } */
inline IntMatrix kernel_basis(const SmithForm& s) {
    const int c = s.v.rows();
    IntMatrix k(c, c - s.rank);
    for (int j = s.rank; j < c; ++j)
        for (int i = 0; i < c; ++i) k.at(i, j - s.rank) = s.v.at(i, j);
    return k;
}
inline IntMatrix kernel_basis(const IntMatrix& m) { return kernel_basis(smith_normal_form(m)); }

/* one solution of M x = b, if any */
inline std::optional<std::vector<Int>> solve(const SmithForm& s, const std::vector<Int>& b) {
    std::vector<Int> ub = s.u.apply(b);
    std::vector<Int> y(s.v.rows(), Int(0));
    for (int i = 0; i < static_cast<int>(ub.size()); ++i) {
        if (i < s.rank) {
            if (ub[i] % s.diag(i) != 0) return std::nullopt;
            y[i] = ub[i] / s.diag(i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v.apply(y);
}
inline std::optional<std::vector<Int>> solve(const IntMatrix& m, const std::vector<Int>& b) {
    return solve(smith_normal_form(m), b);
}

/* basis of the column span of M, as a matrix of independent columns */
inline IntMatrix column_lattice_basis(const IntMatrix& m) {
    SmithForm s = smith_normal_form(m);
    /* col span(M) = Uinv * col span(D); D's nonzero columns are d_i * e_i */
    IntMatrix b(m.rows(), s.rank);
    for (int j = 0; j < s.rank; ++j)
        for (int i = 0; i < m.rows(); ++i) b.at(i, j) = s.uinv.at(i, j) * s.diag(j);
    return b;
}

inline bool is_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    SmithForm s = smith_normal_form(m);
    if (s.rank != m.rows()) return false;
    for (int i = 0; i < s.rank; ++i)
        if (s.diag(i) != 1) return false;
    return true;
}

/* Bareiss fraction-free elimination */
inline Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) fail("BadShape", "determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int denom = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a.at(i, k) != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / denom;
            a.at(i, k) = 0;
        }
        denom = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

/* inverse of a unimodular matrix */
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
    SmithForm s = smith_normal_form(m);
    if (s.rank != m.rows() || m.rows() != m.cols()) fail("NotUnimodular", "matrix has no integer inverse");
    for (int i = 0; i < s.rank; ++i)
        if (s.diag(i) != 1) fail("NotUnimodular", "matrix has no integer inverse");
    /* M = Uinv V inv...: U M V = I => M^{-1} = V U */
    return s.v * s.u;
}

} // namespace tatekit
