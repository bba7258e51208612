#pragma once

#include <ostream>
#include <utility>
#include <vector>

#include "stz/errors.hpp"
#include "stz/scalar.hpp"

namespace stz {

template <class K>
class DenseMatrix {
  public:
    DenseMatrix() = default;
    DenseMatrix(long long rows, long long cols, K init = K(0))
        : rows_(rows), cols_(cols), data_(std::size_t(rows * cols), init) {
        if (rows < 0 || cols < 0) throw Error("DenseMatrix: negative dimensions");
    }

    static DenseMatrix identity(long long n) {
        DenseMatrix m(n, n);
        for (long long i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    long long rows() const { return rows_; }
    long long cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    K& at(long long i, long long j) { return data_[std::size_t(i * cols_ + j)]; }
    const K& at(long long i, long long j) const { return data_[std::size_t(i * cols_ + j)]; }

    // Submatrix with one row and one column removed (0-based indices).
    DenseMatrix strike(long long row, long long col) const {
        DenseMatrix m(rows_ - 1, cols_ - 1);
        for (long long i = 0, ii = 0; i < rows_; ++i) {
            if (i == row) continue;
            for (long long j = 0, jj = 0; j < cols_; ++j) {
                if (j == col) continue;
                m.at(ii, jj) = at(i, j);
                ++jj;
            }
            ++ii;
        }
        return m;
    }

    DenseMatrix operator*(const DenseMatrix& o) const {
        if (cols_ != o.rows_) throw Error("DenseMatrix: dimension mismatch in product");
        DenseMatrix r(rows_, o.cols_);
        for (long long i = 0; i < rows_; ++i)
            for (long long k = 0; k < cols_; ++k) {
                const K& a = at(i, k);
                if (is_zero(a)) continue;
                for (long long j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + a * o.at(k, j);
            }
        return r;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if ((long long)v.size() != cols_) throw Error("DenseMatrix: dimension mismatch in apply");
        std::vector<K> r(std::size_t(rows_), K(0));
        for (long long i = 0; i < rows_; ++i)
            for (long long j = 0; j < cols_; ++j) r[std::size_t(i)] = r[std::size_t(i)] + at(i, j) * v[std::size_t(j)];
        return r;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend std::ostream& operator<<(std::ostream& os, const DenseMatrix& m) {
        for (long long i = 0; i < m.rows_; ++i) {
            os << (i ? "; " : "[");
            for (long long j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m.at(i, j);
        }
        return os << "]";
    }

  private:
    long long rows_ = 0, cols_ = 0;
    std::vector<K> data_;
};

namespace detail {

// Fraction-free (Bareiss) elimination; divisions are exact in every step.
// Deterministic pivot: first row with a nonzero entry.
template <class K>
K det_bareiss(DenseMatrix<K> m) {
    long long n = m.rows();
    K sign(1);
    K prev(1);
    for (long long k = 0; k < n - 1; ++k) {
        long long piv = -1;
        for (long long i = k; i < n; ++i) {
            if (!is_zero(m.at(i, k))) {
                piv = i;
                break;
            }
        }
        if (piv < 0) return K(0);
        if (piv != k) {
            for (long long j = k; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = K(0) - sign;
        }
        for (long long i = k + 1; i < n; ++i) {
            for (long long j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = K(0);
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

// Gaussian elimination with partial pivoting on mantissa magnitude.
template <class K>
K det_partial_pivot(DenseMatrix<K> m) {
    long long n = m.rows();
    K det(1);
    for (long long k = 0; k < n; ++k) {
        long long piv = k;
        double best = abs_log2(m.at(k, k));
        for (long long i = k + 1; i < n; ++i) {
            double cand = abs_log2(m.at(i, k));
            if (cand > best) {
                best = cand;
                piv = i;
            }
        }
        if (is_zero(m.at(piv, k))) return K(0);
        if (piv != k) {
            for (long long j = k; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            det = K(0) - det;
        }
        det = det * m.at(k, k);
        for (long long i = k + 1; i < n; ++i) {
            if (is_zero(m.at(i, k))) continue;
            K f = m.at(i, k) / m.at(k, k);
            for (long long j = k + 1; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(k, j);
            m.at(i, k) = K(0);
        }
    }
    return det;
}

}  // namespace detail

// Deterministic elimination determinant; the void matrix has determinant 1.
template <class K>
K det(const DenseMatrix<K>& m) {
    if (!m.square()) throw Error("det: matrix is not square");
    if (m.rows() == 0) return K(1);
    if constexpr (scalar_traits<K>::is_exact) {
        return detail::det_bareiss(m);
    } else {
        return detail::det_partial_pivot(m);
    }
}

}  // namespace stz
