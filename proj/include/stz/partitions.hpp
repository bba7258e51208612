#pragma once

#include <algorithm>
#include <ostream>
#include <utility>
#include <vector>

#include "stz/errors.hpp"

namespace stz {

// Weakly decreasing tuple of nonnegative integers. Trailing zeros are
// stripped on construction, so equality and hashing see the canonical form.
class Partition {
  public:
    Partition() = default;

    Partition(std::initializer_list<long long> parts) : Partition(std::vector<long long>(parts)) {}

    explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
        for (std::size_t j = 0; j < parts_.size(); ++j) {
            if (parts_[j] < 0) throw NegativePart("partition part is negative");
            if (j > 0 && parts_[j] > parts_[j - 1]) throw Error("partition parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    // (width^height), e.g. rectangle(3, 5) = (5,5,5).
    static Partition rectangle(long long height, long long width) {
        if (height < 0 || width < 0) throw NegativePart("rectangle dimensions must be nonnegative");
        if (width == 0) return Partition();
        return Partition(std::vector<long long>(std::size_t(height), width));
    }

    long long length() const { return (long long)parts_.size(); }
    long long weight() const {
        long long s = 0;
        for (long long p : parts_) s += p;
        return s;
    }
    bool empty() const { return parts_.empty(); }

    // 1-based part access; zero beyond the length.
    long long part(long long j) const {
        if (j < 1 || j > length()) return 0;
        return parts_[std::size_t(j - 1)];
    }

    const std::vector<long long>& parts() const { return parts_; }

    Partition conjugate() const {
        if (parts_.empty()) return Partition();
        std::vector<long long> c(std::size_t(parts_[0]), 0);
        for (long long k = 1; k <= parts_[0]; ++k) {
            long long count = 0;
            for (long long p : parts_)
                if (p >= k) ++count;
            c[std::size_t(k - 1)] = count;
        }
        return Partition(std::move(c));
    }

    // mu is contained in *this: l(mu) <= l(lambda) and mu_j <= lambda_j.
    bool contains(const Partition& mu) const {
        if (mu.length() > length()) return false;
        for (long long j = 1; j <= mu.length(); ++j)
            if (mu.part(j) > part(j)) return false;
        return true;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
        os << "(";
        for (std::size_t j = 0; j < p.parts_.size(); ++j) os << (j ? "," : "") << p.parts_[j];
        return os << ")";
    }

  private:
    std::vector<long long> parts_;
};

inline Partition conjugate(const Partition& lam) { return lam.conjugate(); }

inline bool is_contained(const Partition& mu, const Partition& lam) { return lam.contains(mu); }

// A pair of partitions; the pair may be invalid (inner not contained in
// outer), which the evaluation layer maps to the zero polynomial.
struct SkewPartition {
    Partition outer;
    Partition inner;

    SkewPartition() = default;
    SkewPartition(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {}

    bool valid() const { return outer.contains(inner); }

    friend bool operator==(const SkewPartition& a, const SkewPartition& b) {
        return a.outer == b.outer && a.inner == b.inner;
    }

    friend std::ostream& operator<<(std::ostream& os, const SkewPartition& sp) {
        return os << sp.outer << "/" << sp.inner;
    }
};

// Rectangle-complement-and-reverse map; preserves the skew Schur value.
// Defined on the canonical (zero-stripped) outer length. Inner parts beyond
// that length or exceeding outer_1 would leave partition-land and are
// rejected.
inline SkewPartition flip(const SkewPartition& sp) {
    long long len = sp.outer.length();
    long long top = sp.outer.part(1);
    if (sp.inner.length() > len)
        throw Error("flip: inner partition is longer than the outer partition");
    if (sp.inner.part(1) > top) throw NegativePart("flip: inner part exceeds the outer first part");
    std::vector<long long> a, b;
    a.reserve(std::size_t(len));
    b.reserve(std::size_t(len));
    for (long long j = 1; j <= len; ++j) {
        a.push_back(top - sp.inner.part(len + 1 - j));
        b.push_back(top - sp.outer.part(len + 1 - j));
    }
    return SkewPartition(Partition(std::move(a)), Partition(std::move(b)));
}

// Strictly increasing tuple in {1..n}, identified with a subset of {1..n}.
class IndexSet {
  public:
    IndexSet() = default;

    IndexSet(long long n, std::vector<long long> entries) : n_(n), entries_(std::move(entries)) {
        if (n_ < 0) throw Error("IndexSet: ambient size must be nonnegative");
        for (std::size_t j = 0; j < entries_.size(); ++j) {
            if (entries_[j] < 1 || entries_[j] > n_) throw InvalidIndex("IndexSet: entry out of range");
            if (j > 0 && entries_[j] <= entries_[j - 1])
                throw Error("IndexSet: entries must be strictly increasing");
        }
    }

    long long n() const { return n_; }
    long long size() const { return (long long)entries_.size(); }
    const std::vector<long long>& entries() const { return entries_; }

    // 1-based access.
    long long entry(long long j) const { return entries_.at(std::size_t(j - 1)); }

    long long index_sum() const {
        long long s = 0;
        for (long long e : entries_) s += e;
        return s;
    }

    // Ascending enumeration of {1..n} \ this, by set difference.
    IndexSet complement() const {
        std::vector<long long> out;
        out.reserve(std::size_t(n_ - size()));
        std::size_t k = 0;
        for (long long v = 1; v <= n_; ++v) {
            if (k < entries_.size() && entries_[k] == v) {
                ++k;
            } else {
                out.push_back(v);
            }
        }
        return IndexSet(n_, std::move(out));
    }

    // j-th entry of the complement by the closed form
    //   xi_j = j + #{k : rho_k - k < j},
    // with *this playing the role of rho. Must agree with complement().
    long long complement_entry(long long j) const {
        if (j < 1 || j > n_ - size()) throw InvalidIndex("complement_entry: index out of range");
        long long count = 0;
        for (long long k = 1; k <= size(); ++k)
            if (entry(k) - k < j) ++count;
        return j + count;
    }

    friend bool operator==(const IndexSet& a, const IndexSet& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

    friend std::ostream& operator<<(std::ostream& os, const IndexSet& s) {
        os << "{";
        for (std::size_t j = 0; j < s.entries_.size(); ++j) os << (j ? "," : "") << s.entries_[j];
        return os << "}";
    }

  private:
    long long n_ = 0;
    std::vector<long long> entries_;
};

// The two equivalent skew shapes attached to a struck-out minor:
//   lambda = (m^p, xi_d - d, ..., xi_1 - 1),   mu = (eta_d - d, ..., eta_1 - 1)
//   alpha  = (m^p, m+1-eta_1, ..., m+d-eta_d), beta = (m+1-xi_1, ..., m+d-xi_d)
// with m = n - d. The second is the flip of the first up to rectangle
// padding and a uniform part shift.
inline std::pair<SkewPartition, SkewPartition> minor_shapes(long long n, long long p, const IndexSet& xi,
                                                            const IndexSet& eta) {
    if (xi.size() != eta.size()) throw ShapeMismatch("minor_shapes: struck row and column counts differ");
    if (p < 0) throw Error("minor_shapes: p must be nonnegative");
    if (xi.n() != n || eta.n() != n) throw Error("minor_shapes: ambient size mismatch");
    long long d = xi.size();
    long long m = n - d;

    std::vector<long long> lam, mu, al, be;
    lam.reserve(std::size_t(p + d));
    al.reserve(std::size_t(p + d));
    mu.reserve(std::size_t(d));
    be.reserve(std::size_t(d));
    for (long long j = 0; j < p; ++j) {
        lam.push_back(m);
        al.push_back(m);
    }
    for (long long j = d; j >= 1; --j) {
        lam.push_back(xi.entry(j) - j);
        mu.push_back(eta.entry(j) - j);
    }
    for (long long j = 1; j <= d; ++j) {
        al.push_back(m + j - eta.entry(j));
        be.push_back(m + j - xi.entry(j));
    }
    return {SkewPartition(Partition(std::move(lam)), Partition(std::move(mu))),
            SkewPartition(Partition(std::move(al)), Partition(std::move(be)))};
}

// All nu obtained from lam by removing a horizontal strip of size r:
// l(nu) <= l(lam), lam_{j+1} <= nu_j <= lam_j, |lam| - |nu| = r.
// Enumerated lexicographically decreasing.
inline std::vector<Partition> skew_pieri(const Partition& lam, long long r) {
    if (r < 1) throw Error("skew_pieri: strip size must be at least 1");
    std::vector<Partition> out;
    if (lam.weight() < r) return out;
    long long len = lam.length();
    long long target = lam.weight() - r;
    std::vector<long long> nu(std::size_t(len), 0);

    auto rec = [&](auto&& self, long long j, long long partial) -> void {
        if (j > len) {
            if (partial == target) out.push_back(Partition(nu));
            return;
        }
        long long hi = lam.part(j);
        long long lo = lam.part(j + 1);
        // Remaining rows can contribute at most sum of lam_{j+1..len}.
        for (long long v = hi; v >= lo; --v) {
            long long used = partial + v;
            if (used > target) continue;
            long long rest_max = 0;
            for (long long t = j + 1; t <= len; ++t) rest_max += lam.part(t);
            if (used + rest_max < target) break;
            nu[std::size_t(j - 1)] = v;
            self(self, j + 1, used);
        }
        nu[std::size_t(j - 1)] = 0;
    };
    rec(rec, 1, 0);
    return out;
}

// Closed-form expansion of s_{(n^p, s)/(r)}:
//   { (n^{p-1}, n+s-r-k, k) : max(0, s-r) <= k <= min(n-r, s) }.
// Same enumeration order as skew_pieri on ((n^p, s), r).
inline std::vector<Partition> lr_special(long long n, long long p, long long r, long long s) {
    if (n < 1 || p < 1) throw Error("lr_special: n and p must be positive");
    if (r < 1 || r > n || s < 1 || s > n) throw InvalidIndex("lr_special: r,s out of range");
    std::vector<Partition> out;
    for (long long k = std::max(0LL, s - r); k <= std::min(n - r, s); ++k) {
        std::vector<long long> nu;
        nu.reserve(std::size_t(p + 1));
        for (long long j = 0; j < p - 1; ++j) nu.push_back(n);
        nu.push_back(n + s - r - k);
        nu.push_back(k);
        out.push_back(Partition(std::move(nu)));
    }
    return out;
}

}  // namespace stz
