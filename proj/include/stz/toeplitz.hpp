#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stz/dense.hpp"
#include "stz/errors.hpp"
#include "stz/partitions.hpp"
#include "stz/scalar.hpp"
#include "stz/schur.hpp"
#include "stz/symcore.hpp"

namespace stz {

// Banded symbol a(t) = sum_{k=p-w}^{p} a_k t^k = a_p t^{p-w} prod_j (t - z_j),
// or a semi-infinite series known through a coefficient prefix. The payloads
// interconvert through a_j = (-1)^{p-j} a_p e_{p-j}; in series mode the
// e-sequence is authoritative and root-dependent operations are rejected.
template <class K>
class LaurentSpec {
  public:
    static LaurentSpec from_coeffs(long long p, std::vector<K> coeffs) {
        if (p < 0) throw Error("symbol: p must be nonnegative");
        if (coeffs.size() < 2) throw Error("symbol: need at least two coefficients (w >= 1)");
        if (is_zero(coeffs.back())) throw Error("symbol: leading coefficient a_p must be nonzero");
        LaurentSpec s;
        s.p_ = p;
        s.ap_ = coeffs.back();
        long long w = (long long)coeffs.size() - 1;
        std::vector<K> e;
        e.reserve(std::size_t(w + 1));
        for (long long k = 0; k <= w; ++k) {
            K v = coeffs[std::size_t(w - k)] / s.ap_;
            if (k % 2 != 0) v = K(0) - v;
            e.push_back(v);
        }
        s.elem_ = ElemSeq<K>(std::move(e));
        return s;
    }

    static LaurentSpec from_roots(long long p, K a_p, RootList<K> roots) {
        if (p < 0) throw Error("symbol: p must be nonnegative");
        if (roots.w() < 1) throw Error("symbol: need at least one root (w >= 1)");
        if (is_zero(a_p)) throw Error("symbol: leading coefficient a_p must be nonzero");
        LaurentSpec s;
        s.p_ = p;
        s.ap_ = std::move(a_p);
        s.elem_ = elem_from_roots(roots);
        s.roots_ = std::move(roots);
        return s;
    }

    // e_0..e_L is only a prefix of the (possibly infinite) e-sequence.
    static LaurentSpec from_series(long long p, K a_p, std::vector<K> e) {
        if (p < 0) throw Error("symbol: p must be nonnegative");
        if (is_zero(a_p)) throw Error("symbol: leading coefficient a_p must be nonzero");
        LaurentSpec s;
        s.p_ = p;
        s.ap_ = std::move(a_p);
        s.elem_ = ElemSeq<K>(std::move(e));
        s.series_ = true;
        return s;
    }

    long long p() const { return p_; }
    bool series_mode() const { return series_; }

    // Band parameter; in series mode only a prefix bound is known.
    long long w() const {
        if (series_) throw SeriesMode("symbol: w is unbounded in series mode");
        return elem_.w();
    }

    const K& leading() const { return ap_; }
    const ElemSeq<K>& elem() const { return elem_; }
    const std::optional<RootList<K>>& root_list() const { return roots_; }

    // Highest e-degree known; -1 when the band is finite (all degrees known).
    long long series_degree_limit() const { return series_ ? elem_.w() : -1; }

    K coeff(long long j) const {
        if (j > p_) return K(0);
        long long k = p_ - j;
        if (series_ && k > elem_.w())
            throw SeriesTruncation("symbol coefficient a_" + std::to_string(j) +
                                   " requires e_" + std::to_string(k) + " beyond the supplied prefix");
        K v = ap_ * elem_.at(k);
        if (k % 2 != 0) v = K(0) - v;
        return v;
    }

    HomSeq<K> hom() const {
        if (series_) return HomSeq<K>::from_elem_series(elem_);
        if (roots_ && roots_->simple()) return HomSeq<K>::from_distinct_roots(*roots_);
        return HomSeq<K>::from_elem(elem_);
    }

    // Same symbol with a root list attached (e.g. found numerically).
    LaurentSpec with_roots(RootList<K> roots) const {
        if (series_) throw SeriesMode("symbol: cannot attach roots in series mode");
        LaurentSpec s = *this;
        s.roots_ = std::move(roots);
        return s;
    }

    // The symbol a - x. Finite band: adjust a_0 and rebuild (the band may
    // widen to [min(p-w,0), p]). Series: adjust e_p in the prefix.
    LaurentSpec shifted_by_eigenvalue(const K& x) const {
        if (is_zero(x)) return *this;
        if (series_) {
            if (elem_.w() < p_)
                throw SeriesTruncation("symbol: shifting by an eigenvalue requires e_0..e_p");
            std::vector<K> e = elem_.coeffs;
            K delta = x / ap_;
            if (p_ % 2 != 0) delta = K(0) - delta;
            e[std::size_t(p_)] = e[std::size_t(p_)] - delta;
            LaurentSpec s;
            s.p_ = p_;
            s.ap_ = ap_;
            s.elem_ = ElemSeq<K>(std::move(e));
            s.series_ = true;
            return s;
        }
        long long lo = std::min(p_ - w(), 0LL);
        std::vector<K> coeffs;
        coeffs.reserve(std::size_t(p_ - lo + 1));
        for (long long j = lo; j <= p_; ++j) {
            K c = coeff(j);
            if (j == 0) c = c - x;
            coeffs.push_back(c);
        }
        return from_coeffs(p_, std::move(coeffs));
    }

  private:
    LaurentSpec() = default;

    long long p_ = 0;
    K ap_ = K(1);
    ElemSeq<K> elem_;
    std::optional<RootList<K>> roots_;
    bool series_ = false;
};

// T_n(a) = [a_{j-k}].
template <class K>
DenseMatrix<K> toeplitz_matrix(const LaurentSpec<K>& a, long long n) {
    if (n < 1) throw Error("toeplitz_matrix: n must be positive");
    // One coefficient per diagonal.
    std::vector<K> diag;  // a_{1-n} .. a_{n-1}
    diag.reserve(std::size_t(2 * n - 1));
    for (long long d = 1 - n; d <= n - 1; ++d) diag.push_back(a.coeff(d));
    DenseMatrix<K> m(n, n);
    for (long long j = 0; j < n; ++j)
        for (long long k = 0; k < n; ++k) m.at(j, k) = diag[std::size_t(j - k + n - 1)];
    return m;
}

struct MinorRequest {
    long long n;
    IndexSet struck_rows;  // xi
    IndexSet struck_cols;  // eta

    MinorRequest(long long order, IndexSet xi, IndexSet eta)
        : n(order), struck_rows(std::move(xi)), struck_cols(std::move(eta)) {
        if (n < 0) throw Error("MinorRequest: negative order");
        if (struck_rows.n() != n || struck_cols.n() != n)
            throw Error("MinorRequest: ambient size mismatch");
        if (struck_rows.size() != struck_cols.size())
            throw ShapeMismatch("MinorRequest: struck row and column counts differ");
    }

    long long d() const { return struck_rows.size(); }
    long long m() const { return n - d(); }
};

enum class MinorVariant { expanded, flipped };

// det(T_n(a)_{rho,sigma}) = (-1)^{pm + |rho| + |sigma|} a_p^m s_shape(z),
// with the shape from minor_shapes (variant picks lambda/mu or alpha/beta).
// The sign is computed as (-1)^{pm + |xi| + |eta|}: |rho| + |xi| and
// |sigma| + |eta| both equal n(n+1)/2, and n(n+1) is even, so |rho|+|sigma|
// and |xi|+|eta| have the same parity and the large complements never need
// to be materialized.
template <class K>
K minor(const LaurentSpec<K>& a, const MinorRequest& req, MinorVariant variant = MinorVariant::expanded) {
    if (req.d() == req.n) return K(1);  // void minor
    auto shapes = minor_shapes(req.n, a.p(), req.struck_rows, req.struck_cols);
    const SkewPartition& shape = (variant == MinorVariant::expanded) ? shapes.first : shapes.second;
    long long par = a.p() * req.m() + req.struck_rows.index_sum() + req.struck_cols.index_sum();
    HomSeq<K> h = a.hom();
    return sign_pow<K>(par) * pow_uint(a.leading(), req.m()) * skew_schur(shape, h);
}

enum class DetMethod { schur, baxter_schmidt, trench, dense };

// All methods compute (-1)^{pn} a_p^n s_{(n^p)}(z):
//  - schur: the Jacobi-Trudi determinant of the rectangle shape;
//  - baxter_schmidt: the same p x p determinant det[h_{n-j+k}] written out
//    directly (O(1) in n given h queries);
//  - trench: the bialternant quotient det A_{(n^p)} / V (requires roots);
//  - dense: elimination on the materialized matrix.
template <class K>
K determinant(const LaurentSpec<K>& a, long long n, DetMethod method = DetMethod::baxter_schmidt) {
    if (n < 1) throw Error("determinant: n must be positive");
    long long p = a.p();
    K prefactor = sign_pow<K>(p * n) * pow_uint(a.leading(), n);
    switch (method) {
        case DetMethod::schur: {
            HomSeq<K> h = a.hom();
            return prefactor * skew_schur(SkewPartition(Partition::rectangle(p, n), Partition()), h);
        }
        case DetMethod::baxter_schmidt: {
            HomSeq<K> h = a.hom();
            DenseMatrix<K> m(p, p);
            for (long long j = 1; j <= p; ++j)
                for (long long k = 1; k <= p; ++k) m.at(j - 1, k - 1) = h.at(n - j + k);
            return prefactor * det(m);
        }
        case DetMethod::trench: {
            if (!a.root_list()) throw SeriesMode("determinant: the trench method requires roots");
            return prefactor * schur_bialternant(Partition::rectangle(p, n), *a.root_list());
        }
        case DetMethod::dense:
            return det(toeplitz_matrix(a, n));
    }
    throw Error("determinant: unknown method");
}

enum class AdjMethod { skew, skew_flipped, schur_sum, trench };

namespace detail {

// Straight-shape Schur evaluation through the symbol's strongest route.
template <class K>
K straight(const LaurentSpec<K>& a, const HomSeq<K>& h, const Partition& lam) {
    const RootList<K>* roots = a.root_list() ? &*a.root_list() : nullptr;
    return schur_straight(lam, h, roots);
}

}  // namespace detail

// Summation range of the Schur-sum cofactor expansion; the term count is
// min{r, s, n+1-r, n+1-s}.
inline std::pair<long long, long long> adj_schur_sum_range(long long n, long long r, long long s) {
    return {std::max(0LL, s - r), std::min(n - r, s - 1)};
}

// Entry (r,s) of adj(T_n(a)), 1-based. Four equivalent routes:
//  - skew:          (-1)^{p(n-1)} a_p^{n-1} s_{((n-1)^p, s-1)/(r-1)}
//  - skew_flipped:  (-1)^{p(n-1)} a_p^{n-1} s_{((n-1)^p, n-r)/(n-s)}
//  - schur_sum:     sum of straight Schur terms over the Pieri expansion
//                   (p >= 1 only)
//  - trench:        the p+1 term expansion whose size does not grow with n
// For p = 0 the band is upper triangular and every available route reduces
// to a_0^{n-1} h_{s-r} (the specialization of the skew route at p = 0; the
// adjugate of an upper triangular matrix is upper triangular, as
// M adj(M) = det(M) I forces).
template <class K>
K adjugate_entry(const LaurentSpec<K>& a, long long n, long long r, long long s,
                 AdjMethod method = AdjMethod::skew) {
    if (n < 1) throw Error("adjugate_entry: n must be positive");
    if (r < 1 || r > n || s < 1 || s > n) throw InvalidIndex("adjugate_entry: r,s out of range");
    long long p = a.p();
    if (p == 0) {
        if (method == AdjMethod::schur_sum)
            throw MethodUnavailable("adjugate_entry: the Schur-sum expansion is undefined for p = 0");
        HomSeq<K> h = a.hom();
        return pow_uint(a.leading(), n - 1) * h.at(s - r);
    }
    K prefactor = sign_pow<K>(p * (n - 1)) * pow_uint(a.leading(), n - 1);
    HomSeq<K> h = a.hom();
    switch (method) {
        case AdjMethod::skew: {
            std::vector<long long> outer(std::size_t(p), n - 1);
            outer.push_back(s - 1);
            SkewPartition sp(Partition(std::move(outer)), Partition{r - 1});
            return prefactor * skew_schur(sp, h);
        }
        case AdjMethod::skew_flipped: {
            std::vector<long long> outer(std::size_t(p), n - 1);
            outer.push_back(n - r);
            SkewPartition sp(Partition(std::move(outer)), Partition{n - s});
            return prefactor * skew_schur(sp, h);
        }
        case AdjMethod::schur_sum: {
            auto [klo, khi] = adj_schur_sum_range(n, r, s);
            K sum(0);
            for (long long k = klo; k <= khi; ++k) {
                std::vector<long long> nu(std::size_t(p - 1), n - 1);
                nu.push_back(n + s - r - 1 - k);
                nu.push_back(k);
                sum = sum + detail::straight(a, h, Partition(std::move(nu)));
            }
            return prefactor * sum;
        }
        case AdjMethod::trench: {
            // (-1)^{pn} a_p^{n-1} ( h_{s-r-p} s_{(n^p)}
            //                       - sum_{k=0}^{p-1} (-1)^k h_{s+k-p} s_{(n^{p-k-1},(n-1)^k,n-r)} )
            K acc = h.at(s - r - p) * detail::straight(a, h, Partition::rectangle(p, n));
            for (long long k = 0; k < p; ++k) {
                K hv = h.at(s + k - p);
                if (is_zero(hv)) continue;
                std::vector<long long> nu;
                nu.reserve(std::size_t(p + 1));
                for (long long j = 0; j < p - k - 1; ++j) nu.push_back(n);
                for (long long j = 0; j < k; ++j) nu.push_back(n - 1);
                nu.push_back(n - r);
                K term = hv * detail::straight(a, h, Partition(std::move(nu)));
                if (k % 2 == 0) {
                    acc = acc - term;
                } else {
                    acc = acc + term;
                }
            }
            return sign_pow<K>(p * n) * pow_uint(a.leading(), n - 1) * acc;
        }
    }
    throw Error("adjugate_entry: unknown method");
}

// Relative magnitude guard for the float backend: treat the determinant as
// numerically zero when it sits more than ~40 bits below the product of the
// Baxter-Schmidt row scales.
template <class K>
void check_invertible(const LaurentSpec<K>& a, long long n, const K& d) {
    if (is_zero(d)) throw SingularMatrix("inverse_entry: determinant is zero");
    if constexpr (!scalar_traits<K>::is_exact) {
        HomSeq<K> h = a.hom();
        double scale = double(n) * abs_log2(a.leading());
        for (long long j = 1; j <= a.p(); ++j) {
            double row = -std::numeric_limits<double>::infinity();
            for (long long k = 1; k <= a.p(); ++k) row = std::max(row, abs_log2(h.at(n - j + k)));
            if (row > -std::numeric_limits<double>::infinity()) scale += row;
        }
        if (abs_log2(d) < scale - 40.0)
            throw SingularMatrix("inverse_entry: determinant is numerically zero");
    }
}

template <class K>
K inverse_entry(const LaurentSpec<K>& a, long long n, long long r, long long s,
                AdjMethod method = AdjMethod::skew) {
    K d = determinant(a, n, DetMethod::baxter_schmidt);
    check_invertible(a, n, d);
    return adjugate_entry(a, n, r, s, method) / d;
}

// First column of the adjugate: entry r is
// (-1)^{p(n-1)} a_p^{n-1} s_{((n-1)^{p-1}, n-r)} for p >= 1, and
// a_0^{n-1} h_{1-r} in the triangular case (only r = 1 survives).
template <class K>
std::vector<K> adj_first_column(const LaurentSpec<K>& a, long long n) {
    if (n < 1) throw Error("adj_first_column: n must be positive");
    long long p = a.p();
    HomSeq<K> h = a.hom();
    std::vector<K> out;
    out.reserve(std::size_t(n));
    if (p == 0) {
        K f = pow_uint(a.leading(), n - 1);
        for (long long r = 1; r <= n; ++r) out.push_back(f * h.at(1 - r));
        return out;
    }
    K prefactor = sign_pow<K>(p * (n - 1)) * pow_uint(a.leading(), n - 1);
    for (long long r = 1; r <= n; ++r) {
        std::vector<long long> lam(std::size_t(p - 1), n - 1);
        lam.push_back(n - r);
        out.push_back(prefactor * detail::straight(a, h, Partition(std::move(lam))));
    }
    return out;
}

template <class K>
struct EigenRequest {
    long long n;
    K x;
    std::optional<RootList<K>> shifted_roots;  // roots of a - x when known

    EigenRequest(long long order, K eigenvalue, std::optional<RootList<K>> roots = std::nullopt)
        : n(order), x(std::move(eigenvalue)), shifted_roots(std::move(roots)) {
        if (n < 1) throw Error("EigenRequest: n must be positive");
    }
};

// v_r = s_{((n-1)^{p-1}, n-r)} evaluated at the zeros of a - x; satisfies
// T_n(a) v = x v, possibly with v = 0. Needs p >= 1.
template <class K>
std::vector<K> eigenvector(const LaurentSpec<K>& a, const EigenRequest<K>& req) {
    long long p = a.p();
    if (p < 1) throw RequiresPositiveP("eigenvector: requires p >= 1");
    LaurentSpec<K> shifted = a.shifted_by_eigenvalue(req.x);
    if (req.shifted_roots) shifted = shifted.with_roots(*req.shifted_roots);
    HomSeq<K> h = shifted.hom();
    std::vector<K> v;
    v.reserve(std::size_t(req.n));
    for (long long r = 1; r <= req.n; ++r) {
        std::vector<long long> lam(std::size_t(p - 1), req.n - 1);
        lam.push_back(req.n - r);
        v.push_back(detail::straight(shifted, h, Partition(std::move(lam))));
    }
    return v;
}

template <class K>
struct GeometricForm {
    std::vector<K> coefficients;  // C_1..C_w (per root list entry)
    std::vector<K> vector;        // reconstructed v
    bool confluent = false;
};

// Geometric-progression form of the eigenvector: v_r = sum_j C_j z_j^{n-r+w-p}
// with C_j = (-1)^{p-1} (adj D)_{j,1} / V, D = A_{(n^p)} at the zeros of
// a - x. Repeated zeros route to the confluent Vandermonde machinery, in
// which case column j of derivative order q contributes
// C_j d^q/dt^q [t^{n-r+w-p}] at its root.
template <class K>
GeometricForm<K> geometric_form(const LaurentSpec<K>& a, const EigenRequest<K>& req) {
    long long p = a.p();
    if (p < 1) throw RequiresPositiveP("geometric_form: requires p >= 1");
    if (a.series_mode()) throw SeriesMode("geometric_form: not available in series mode");
    if (!req.shifted_roots) throw Error("geometric_form: roots of a - x are required");
    const RootList<K>& roots = *req.shifted_roots;
    long long w = roots.w();
    if (p > w) throw Error("geometric_form: requires 1 <= p <= w");

    GeometricForm<K> out;
    out.confluent = !roots.simple();
    DenseMatrix<K> D = detail::vandermonde_matrix(Partition::rectangle(p, req.n), roots);
    K V = det(detail::vandermonde_matrix(Partition(), roots));
    if (is_zero(V)) throw DegenerateDenominator("geometric_form: Vandermonde determinant is zero");

    // (adj D)_{j,1} = (-1)^{1+j} det(D with row 1, column j struck).
    K sgn = sign_pow<K>(p - 1);
    out.coefficients.reserve(std::size_t(w));
    for (long long j = 1; j <= w; ++j) {
        K cof = det(D.strike(0, j - 1));
        if (j % 2 == 0) cof = K(0) - cof;
        out.coefficients.push_back(sgn * cof / V);
    }

    // Row functions t -> t^{n-r+w-p}, differentiated per column block.
    out.vector.reserve(std::size_t(req.n));
    for (long long r = 1; r <= req.n; ++r) {
        long long expo = req.n - r + w - p;
        K acc(0);
        long long col = 0;
        for (long long g = 0; g < roots.groups(); ++g) {
            const K& z = roots.reps()[std::size_t(g)];
            for (long long q = 0; q < roots.mults()[std::size_t(g)]; ++q, ++col)
                acc = acc + out.coefficients[std::size_t(col)] * detail::monomial_derivative(expo, q, z);
        }
        out.vector.push_back(acc);
    }
    return out;
}

// Inverse direction of the minor formulas: any skew Schur polynomial is a
// minor of the triangular Toeplitz matrix built from its variables, with
// n = lambda_1 + l(lambda), xi = rev(lambda) + id, eta = rev(mu) + id.
template <class K>
K skew_schur_as_minor(const SkewPartition& sp, const RootList<K>& roots) {
    if (!sp.valid()) throw Error("skew_schur_as_minor: invalid skew shape");
    long long d = sp.outer.length();
    long long n = sp.outer.part(1) + d;
    if (n == 0) return K(1);
    std::vector<long long> xi, eta;
    xi.reserve(std::size_t(d));
    eta.reserve(std::size_t(d));
    for (long long j = 1; j <= d; ++j) {
        xi.push_back(sp.outer.part(d + 1 - j) + j);
        eta.push_back(sp.inner.part(d + 1 - j) + j);
    }
    LaurentSpec<K> a = LaurentSpec<K>::from_roots(0, K(1), roots);
    MinorRequest req(n, IndexSet(n, std::move(xi)), IndexSet(n, std::move(eta)));
    return sign_pow<K>(sp.outer.weight() + sp.inner.weight()) * minor(a, req);
}

// Determinant by banded Gaussian elimination with partial pivoting, without
// materializing the full matrix. Storage per row covers the fill-in window
// [i - kl, i + ku + kl].
template <class K>
K det_banded(const LaurentSpec<K>& a, long long n) {
    if (n < 1) throw Error("det_banded: n must be positive");
    long long kl = std::min(a.p(), n - 1);
    long long ku = 0;
    if (!a.series_mode()) {
        ku = std::min(std::max(a.w() - a.p(), 0LL), n - 1);
    } else {
        ku = std::min(std::max(a.series_degree_limit() - a.p(), 0LL), n - 1);
    }
    long long width = kl + ku + kl + 1;

    // Position i holds columns i - kl .. i + ku + kl, clipped to [0, n).
    // Windows are pinned to positions: at step k every live row has its
    // nonzeros inside [k, k + ku + kl], which every candidate window covers,
    // so pivoting swaps contents over that range instead of moving storage.
    std::vector<std::vector<K>> rows;
    rows.resize(std::size_t(n));
    for (long long i = 0; i < n; ++i) {
        rows[std::size_t(i)].assign(std::size_t(width), K(0));
        for (long long j = std::max(0LL, i - kl); j <= std::min(n - 1, i + ku); ++j)
            rows[std::size_t(i)][std::size_t(j - (i - kl))] = a.coeff(i - j);
    }

    auto entry = [&](long long i, long long j) -> K& {
        return rows[std::size_t(i)][std::size_t(j - (i - kl))];
    };

    K detv(1);
    for (long long k = 0; k < n; ++k) {
        long long last = std::min(n - 1, k + kl);
        long long piv = k;
        if constexpr (scalar_traits<K>::is_exact) {
            piv = -1;
            for (long long i = k; i <= last; ++i)
                if (!is_zero(entry(i, k))) {
                    piv = i;
                    break;
                }
            if (piv < 0) return K(0);
        } else {
            double best = abs_log2(entry(k, k));
            for (long long i = k + 1; i <= last; ++i) {
                double cand = abs_log2(entry(i, k));
                if (cand > best) {
                    best = cand;
                    piv = i;
                }
            }
            if (is_zero(entry(piv, k))) return K(0);
        }
        if (piv != k) {
            for (long long j = k; j <= std::min(n - 1, k + ku + kl); ++j)
                std::swap(entry(k, j), entry(piv, j));
            detv = K(0) - detv;
        }
        detv = detv * entry(k, k);
        long long reach = std::min(n - 1, k + ku + kl);
        for (long long i = k + 1; i <= last; ++i) {
            if (is_zero(entry(i, k))) continue;
            K f = entry(i, k) / entry(k, k);
            entry(i, k) = K(0);
            for (long long j = k + 1; j <= reach; ++j) entry(i, j) = entry(i, j) - f * entry(k, j);
        }
    }
    return detv;
}

}  // namespace stz
