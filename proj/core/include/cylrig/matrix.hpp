#pragma once

#include "cylrig/scalar.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace cylrig {

inline bool is_zero_scalar(const Rat& v) { return sgn(v) == 0; }
inline bool is_zero_scalar(const Quad& v) { return v.is_zero(); }
inline bool is_zero_scalar(double v) { return v == 0.0; }

// Minimal dense row-major matrix over an exact field (Rat, Quad) or double.
template <class T>
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, T(0)) {}

    T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& operator()(int i, int j) const {
        return a[static_cast<size_t>(i) * cols + j];
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
};

template <class T>
Mat<T> transpose(const Mat<T>& m) {
    Mat<T> t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

template <class T>
Mat<T> mul(const Mat<T>& x, const Mat<T>& y) {
    if (x.cols != y.rows) throw std::invalid_argument("shape mismatch in mul");
    Mat<T> z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const T& v = x(i, k);
            if (is_zero_scalar(v)) continue;
            for (int j = 0; j < y.cols; ++j) z(i, j) += v * y(k, j);
        }
    return z;
}

// Scale a row by a positive rational so its entries become integral
// (denominator 1) and primitive (content 1). Rank-neutral; keeps the
// fraction-free elimination's intermediate values as small determinants.
void make_row_primitive(std::vector<Rat*>& row);
void make_row_primitive(std::vector<Quad*>& row);

namespace detail {

template <class T>
void primitive_rows(Mat<T>& m) {
    for (int i = 0; i < m.rows; ++i) {
        std::vector<T*> row(m.cols);
        for (int j = 0; j < m.cols; ++j) row[j] = &m(i, j);
        make_row_primitive(row);
    }
}

} // namespace detail

// Exact rank by fraction-free (Bareiss) elimination with row pivoting and
// column skipping. Entries after step k are (k+1)x(k+1) minors of the
// row-scaled input, so coefficient growth stays polynomial in the bit size.
template <class T>
int rank_exact(Mat<T> m) {
    detail::primitive_rows(m);
    int r = 0;
    T prev(1);
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i) {
            if (!is_zero_scalar(m(i, c))) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
        for (int i = r + 1; i < m.rows; ++i) {
            for (int j = c + 1; j < m.cols; ++j)
                m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
            m(i, c) = T(0);
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

// Basis of the right null space {x : Mx = 0}, via exact Gauss-Jordan.
// Basis vectors correspond to free columns in ascending order, each with a 1
// in its free coordinate -- deterministic for a given input.
template <class T>
std::vector<std::vector<T>> nullspace(Mat<T> m) {
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i) {
            if (!is_zero_scalar(m(i, c))) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
        T inv = T(1) / m(r, c);
        for (int j = c; j < m.cols; ++j) m(r, j) = m(r, j) * inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || is_zero_scalar(m(i, c))) continue;
            T f = m(i, c);
            for (int j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<T> v(m.cols, T(0));
        v[c] = T(1);
        for (size_t k = 0; k < pivot_col.size(); ++k)
            v[pivot_col[k]] = -m(static_cast<int>(k), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Basis of the left null space {x : x^T M = 0}.
template <class T>
std::vector<std::vector<T>> left_nullspace(const Mat<T>& m) {
    return nullspace(transpose(m));
}

template <class T>
Mat<T> inverse(Mat<T> m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square");
    int n = m.rows;
    Mat<T> inv = Mat<T>::identity(n);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i) {
            if (!is_zero_scalar(m(i, c))) {
                p = i;
                break;
            }
        }
        if (p < 0) throw std::domain_error("singular matrix");
        if (p != c)
            for (int j = 0; j < n; ++j) {
                std::swap(m(p, j), m(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        T s = T(1) / m(c, c);
        for (int j = 0; j < n; ++j) {
            m(c, j) = m(c, j) * s;
            inv(c, j) = inv(c, j) * s;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || is_zero_scalar(m(i, c))) continue;
            T f = m(i, c);
            for (int j = 0; j < n; ++j) {
                m(i, j) -= f * m(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

// Rank identity via the Schur complement: for M = [A B; C D] with A the
// invertible top-left k x k block, rank M = k + rank(D - C A^{-1} B).
struct SchurReport {
    int rank_m = 0;
    int rank_a = 0;
    int rank_complement = 0;
    bool identity_holds = false;
};

template <class T>
SchurReport schur_rank_identity(const Mat<T>& m, int k) {
    if (k <= 0 || k > m.rows || k > m.cols)
        throw std::invalid_argument("bad Schur split size");
    Mat<T> A(k, k), B(k, m.cols - k), C(m.rows - k, k), D(m.rows - k, m.cols - k);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            if (i < k && j < k) A(i, j) = m(i, j);
            else if (i < k) B(i, j - k) = m(i, j);
            else if (j < k) C(i - k, j) = m(i, j);
            else D(i - k, j - k) = m(i, j);
        }
    if (rank_exact(A) != k) throw std::domain_error("A block is singular");
    Mat<T> F = D;
    Mat<T> CAinvB = mul(mul(C, inverse(A)), B);
    for (int i = 0; i < F.rows; ++i)
        for (int j = 0; j < F.cols; ++j) F(i, j) -= CAinvB(i, j);
    SchurReport rep;
    rep.rank_m = rank_exact(m);
    rep.rank_a = k;
    rep.rank_complement = rank_exact(F);
    rep.identity_holds = rep.rank_m == rep.rank_a + rep.rank_complement;
    return rep;
}

// Float rank: singular values above tol * sigma_max (Eigen SVD inside).
int rank_f64(const Mat<double>& m, double tol = 1e-9);

Mat<double> to_f64(const Mat<Quad>& m);
Mat<double> to_f64(const Mat<Rat>& m);

} // namespace cylrig
