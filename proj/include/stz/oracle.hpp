#pragma once

#include <vector>

#include "stz/dense.hpp"
#include "stz/errors.hpp"
#include "stz/partitions.hpp"
#include "stz/scalar.hpp"
#include "stz/symcore.hpp"

// Brute-force reference implementations for the property-test suites. They
// never call the closed-form paths they validate, and they carry hard size
// guards: these exist for desk-scale verification only.

namespace stz::oracle {

// Recursive cofactor expansion along the first row; void matrix -> 1.
template <class K>
K det_laplace(const DenseMatrix<K>& m) {
    if (!m.square()) throw Error("det_laplace: matrix is not square");
    if (m.rows() > 10) throw OrderTooLarge("det_laplace: order > 10");
    if (m.rows() == 0) return K(1);
    if (m.rows() == 1) return m.at(0, 0);
    K sum(0);
    for (long long j = 0; j < m.cols(); ++j) {
        if (is_zero(m.at(0, j))) continue;
        K term = m.at(0, j) * det_laplace(m.strike(0, j));
        if (j % 2 == 0) {
            sum = sum + term;
        } else {
            sum = sum - term;
        }
    }
    return sum;
}

// adj(M)_{r,s} = (-1)^{r+s} det(M with row s and column r struck).
template <class K>
DenseMatrix<K> adj_cofactor(const DenseMatrix<K>& m) {
    if (!m.square()) throw Error("adj_cofactor: matrix is not square");
    if (m.rows() > 8) throw OrderTooLarge("adj_cofactor: order > 8");
    long long n = m.rows();
    if (n == 0) return DenseMatrix<K>(0, 0);
    if (n == 1) {
        DenseMatrix<K> a(1, 1);
        a.at(0, 0) = K(1);
        return a;
    }
    DenseMatrix<K> a(n, n);
    for (long long r = 0; r < n; ++r)
        for (long long s = 0; s < n; ++s) {
            K d = det_laplace(m.strike(s, r));
            if ((r + s) % 2 != 0) d = K(0) - d;
            a.at(r, s) = d;
        }
    return a;
}

// Tableau-enumeration definition of the skew Schur polynomial: sum over
// semistandard fillings (rows weakly increase, columns strictly increase)
// of the product of z_entry. Independent of the Jacobi-Trudi route.
template <class K>
K ssyt_skew_schur(const SkewPartition& sp, const RootList<K>& roots) {
    if (sp.outer.weight() > 10) throw SizeTooLarge("ssyt_skew_schur: |outer| > 10");
    if (roots.w() > 4) throw SizeTooLarge("ssyt_skew_schur: w > 4");
    if (!sp.valid()) return K(0);
    long long rows = sp.outer.length();
    long long w = roots.w();
    const auto& z = roots.flat();

    // Cells of row j occupy columns inner_j .. outer_j - 1 (0-based).
    std::vector<long long> lo, hi;
    for (long long j = 1; j <= rows; ++j) {
        lo.push_back(sp.inner.part(j));
        hi.push_back(sp.outer.part(j));
    }
    std::vector<std::vector<long long>> fill;
    fill.resize(std::size_t(rows));
    for (long long j = 0; j < rows; ++j) fill[std::size_t(j)].assign(std::size_t(hi[std::size_t(j)]), 0);

    K total(0);
    auto rec = [&](auto&& self, long long row, long long col, K prod) -> void {
        if (row == rows) {
            total = total + prod;
            return;
        }
        if (col >= hi[std::size_t(row)]) {
            self(self, row + 1, row + 1 < rows ? lo[std::size_t(row + 1)] : 0, prod);
            return;
        }
        long long minv = 1;
        if (col > lo[std::size_t(row)]) minv = std::max(minv, fill[std::size_t(row)][std::size_t(col - 1)]);
        if (row > 0 && col >= lo[std::size_t(row - 1)] && col < hi[std::size_t(row - 1)])
            minv = std::max(minv, fill[std::size_t(row - 1)][std::size_t(col)] + 1);
        for (long long v = minv; v <= w; ++v) {
            fill[std::size_t(row)][std::size_t(col)] = v;
            self(self, row, col + 1, prod * z[std::size_t(v - 1)]);
        }
    };
    rec(rec, 0, rows > 0 ? lo[0] : 0, K(1));
    return total;
}

enum class SymKind { e, h };

// Direct definition of e_r (sum over r-subsets) and h_r (sum over
// multisets of size r) by index enumeration.
template <class K>
K sym_bruteforce(SymKind kind, long long r, const RootList<K>& roots) {
    if (roots.w() > 4) throw SizeTooLarge("sym_bruteforce: w > 4");
    if (r > 8) throw SizeTooLarge("sym_bruteforce: r > 8");
    if (r < 0) return K(0);
    if (r == 0) return K(1);
    long long w = roots.w();
    if (kind == SymKind::e && r > w) return K(0);
    if (w == 0) return K(0);
    const auto& z = roots.flat();
    K total(0);
    // Indices weakly increasing for h, strictly increasing for e.
    auto rec = [&](auto&& self, long long pos, long long start, K prod) -> void {
        if (pos == r) {
            total = total + prod;
            return;
        }
        for (long long j = start; j < w; ++j)
            self(self, pos + 1, kind == SymKind::e ? j + 1 : j, prod * z[std::size_t(j)]);
    };
    rec(rec, 0, 0, K(1));
    return total;
}

}  // namespace stz::oracle
