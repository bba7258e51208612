#pragma once

#include <utility>
#include <vector>

#include "stz/dense.hpp"
#include "stz/errors.hpp"
#include "stz/partitions.hpp"
#include "stz/scalar.hpp"
#include "stz/symcore.hpp"

namespace stz {

// JT(lambda/mu) = [h_{lambda_j - mu_k - j + k}], inner zero-padded to the
// outer length. Entry (j,j) carries h_{lambda_j - mu_j}.
template <class K>
DenseMatrix<K> jt_matrix(const SkewPartition& sp, const HomSeq<K>& h) {
    long long n = sp.outer.length();
    DenseMatrix<K> m(n, n);
    for (long long j = 1; j <= n; ++j)
        for (long long k = 1; k <= n; ++k)
            m.at(j - 1, k - 1) = h.at(sp.outer.part(j) - sp.inner.part(k) - j + k);
    return m;
}

// First Jacobi-Trudi formula. Pairs with inner not contained in outer give
// zero without building the matrix.
template <class K>
K skew_schur(const SkewPartition& sp, const HomSeq<K>& h) {
    if (!sp.valid()) return K(0);
    if (sp.outer.empty()) return K(1);
    return det(jt_matrix(sp, h));
}

// Second (dual) Jacobi-Trudi formula, det[e_{lambda'_j - mu'_k - j + k}]
// of order lambda_1; conjugates computed on demand.
template <class K>
K skew_schur_dual(const SkewPartition& sp, const ElemSeq<K>& e) {
    if (!sp.valid()) return K(0);
    if (sp.outer.empty()) return K(1);
    Partition lc = sp.outer.conjugate();
    Partition mc = sp.inner.conjugate();
    long long n = sp.outer.part(1);
    DenseMatrix<K> m(n, n);
    for (long long j = 1; j <= n; ++j)
        for (long long k = 1; k <= n; ++k) m.at(j - 1, k - 1) = e.at(lc.part(j) - mc.part(k) - j + k);
    return det(m);
}

namespace detail {

// q-th derivative of t^m at t=z: m(m-1)...(m-q+1) z^{m-q}, zero when q > m.
template <class K>
K monomial_derivative(long long m, long long q, const K& z) {
    if (q > m) return K(0);
    K c(1);
    for (long long i = 0; i < q; ++i) c = c * k_int<K>(m - i);
    return c * pow_uint(z, m - q);
}

// Generalized Vandermonde A_lambda at the given roots, with derivative
// column blocks for repeated roots: group g of multiplicity m_g contributes
// columns d^q/dt^q [t^{lambda_j + w - j}] at its root, q = 0..m_g-1.
template <class K>
DenseMatrix<K> vandermonde_matrix(const Partition& lam, const RootList<K>& roots) {
    long long w = roots.w();
    DenseMatrix<K> m(w, w);
    long long col = 0;
    for (long long g = 0; g < roots.groups(); ++g) {
        const K& z = roots.reps()[std::size_t(g)];
        for (long long q = 0; q < roots.mults()[std::size_t(g)]; ++q, ++col)
            for (long long j = 1; j <= w; ++j)
                m.at(j - 1, col) = monomial_derivative(lam.part(j) + w - j, q, z);
    }
    return m;
}

}  // namespace detail

// Bialternant quotient det A_lambda / det A_{(0^w)}; handles repeated roots
// through the confluent derivative columns. Zero when l(lambda) > w,
// consistent with the dual Jacobi-Trudi formula.
template <class K>
K schur_bialternant(const Partition& lam, const RootList<K>& roots) {
    long long w = roots.w();
    if (lam.length() > w) return K(0);
    if (w == 0) return K(1);
    K denom = det(detail::vandermonde_matrix(Partition(), roots));
    if (is_zero(denom))
        throw DegenerateDenominator("bialternant: Vandermonde determinant is zero; root grouping inconsistent");
    K num = det(detail::vandermonde_matrix(lam, roots));
    return num / denom;
}

// Straight-shape evaluation with the numerically strongest route available:
// the bialternant when roots are known (its determinants stay graded even at
// huge degrees), the Jacobi-Trudi determinant otherwise. Exact inputs take
// the Jacobi-Trudi route; every route agrees exactly there.
template <class K>
K schur_straight(const Partition& lam, const HomSeq<K>& h, const RootList<K>* roots) {
    if constexpr (!scalar_traits<K>::is_exact) {
        if (roots != nullptr) return schur_bialternant(lam, *roots);
    }
    (void)roots;
    return skew_schur(SkewPartition(lam, Partition()), h);
}

}  // namespace stz
