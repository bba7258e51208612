#pragma once

#include <random>
#include <vector>

#include "stz/partitions.hpp"
#include "stz/scalar.hpp"
#include "stz/symcore.hpp"
#include "stz/toeplitz.hpp"

namespace stz::testing {

using Rng = std::mt19937_64;

inline Rational rand_rational(Rng& rng, long num_range = 6, long den_range = 4, bool nonzero = false) {
    std::uniform_int_distribution<long> num(-num_range, num_range);
    std::uniform_int_distribution<long> den(1, den_range);
    for (;;) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        if (!nonzero || sgn(q) != 0) return q;
    }
}

// w pairwise distinct nonzero rationals.
inline std::vector<Rational> rand_distinct_rationals(Rng& rng, long long w, long num_range = 8,
                                                     long den_range = 4) {
    std::vector<Rational> out;
    while ((long long)out.size() < w) {
        Rational q = rand_rational(rng, num_range, den_range, true);
        bool fresh = true;
        for (const auto& v : out) fresh = fresh && !(v == q);
        if (fresh) out.push_back(q);
    }
    return out;
}

inline Partition rand_partition(Rng& rng, long long max_len, long long max_part) {
    std::uniform_int_distribution<long long> len(0, max_len);
    std::uniform_int_distribution<long long> part(0, max_part);
    long long l = len(rng);
    std::vector<long long> parts;
    for (long long j = 0; j < l; ++j) parts.push_back(part(rng));
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

// Valid skew pair: inner_j uniform in [outer_{j+1}.. wait, any mu with
// mu_j <= min(outer_j, mu_{j-1}).
inline SkewPartition rand_skew(Rng& rng, long long max_len, long long max_part) {
    Partition outer = rand_partition(rng, max_len, max_part);
    std::vector<long long> inner;
    long long cap = outer.part(1);
    for (long long j = 1; j <= outer.length(); ++j) {
        std::uniform_int_distribution<long long> part(0, std::min(cap, outer.part(j)));
        long long v = part(rng);
        inner.push_back(v);
        cap = v;
    }
    return SkewPartition(outer, Partition(std::move(inner)));
}

// Random d-subset of {1..n}.
inline IndexSet rand_index_set(Rng& rng, long long n, long long d) {
    std::vector<long long> pool;
    for (long long v = 1; v <= n; ++v) pool.push_back(v);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::size_t(d));
    std::sort(pool.begin(), pool.end());
    return IndexSet(n, std::move(pool));
}

// All subsets of {1..n} of size d, as sorted index tuples.
inline std::vector<std::vector<long long>> subsets(long long n, long long d) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur;
    auto rec = [&](auto&& self, long long next) -> void {
        if ((long long)cur.size() == d) {
            out.push_back(cur);
            return;
        }
        if (next > n) return;
        for (long long v = next; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// Submatrix of T with the given rows/columns struck (1-based index sets).
template <class K>
DenseMatrix<K> struck_submatrix(const DenseMatrix<K>& t, const IndexSet& xi, const IndexSet& eta) {
    IndexSet rho = xi.complement();
    IndexSet sigma = eta.complement();
    DenseMatrix<K> m(rho.size(), sigma.size());
    for (long long i = 1; i <= rho.size(); ++i)
        for (long long j = 1; j <= sigma.size(); ++j)
            m.at(i - 1, j - 1) = t.at(rho.entry(i) - 1, sigma.entry(j) - 1);
    return m;
}

inline LaurentSpec<Rational> symbol_from_roots(long long p, const Rational& ap,
                                               const std::vector<Rational>& roots) {
    return LaurentSpec<Rational>::from_roots(p, ap, RootList<Rational>(roots));
}

}  // namespace stz::testing
