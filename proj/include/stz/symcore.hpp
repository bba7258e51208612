#pragma once

#include <cmath>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "stz/errors.hpp"
#include "stz/scalar.hpp"

namespace stz {

// e_0..e_w of a fixed variable set; e_0 = 1, zero outside [0, w].
template <class K>
struct ElemSeq {
    std::vector<K> coeffs;  // e_0..e_w

    ElemSeq() : coeffs{K(1)} {}
    explicit ElemSeq(std::vector<K> c) : coeffs(std::move(c)) {
        if (coeffs.empty() || !(coeffs.front() == K(1))) throw Error("ElemSeq: e_0 must be 1");
    }

    long long w() const { return (long long)coeffs.size() - 1; }

    K at(long long r) const {
        if (r < 0 || r > w()) return K(0);
        return coeffs[std::size_t(r)];
    }
};

// Roots z_1..z_w grouped into gamma clusters of identical values. The float
// backend clusters when |z_i - z_j| <= 1e-8 * max(1, max_k |z_k|) and stores
// the cluster mean for every member; the exact backend groups on equality.
template <class K>
class RootList {
  public:
    RootList() = default;

    explicit RootList(std::vector<K> roots) {
        if (roots.empty()) return;
        double log2_threshold = -std::numeric_limits<double>::infinity();
        if constexpr (!scalar_traits<K>::is_exact) {
            double max_mag = 0.0;  // log2 of max(1, max |z|)
            for (const K& z : roots) max_mag = std::max(max_mag, abs_log2(z));
            log2_threshold = std::log2(1e-8) + std::max(0.0, max_mag);
        }
        std::vector<std::vector<K>> clusters;
        for (const K& z : roots) {
            bool placed = false;
            for (auto& c : clusters) {
                bool match;
                if constexpr (scalar_traits<K>::is_exact) {
                    match = (c.front() == z);
                } else {
                    match = abs_log2(c.front() - z) <= log2_threshold;
                }
                if (match) {
                    c.push_back(z);
                    placed = true;
                    break;
                }
            }
            if (!placed) clusters.push_back({z});
        }
        for (auto& c : clusters) {
            K rep = c.front();
            if constexpr (!scalar_traits<K>::is_exact) {
                K sum(0);
                for (const K& z : c) sum += z;
                rep = sum / k_int<K>((long long)c.size());
            }
            reps_.push_back(rep);
            mults_.push_back((long long)c.size());
            for (std::size_t i = 0; i < c.size(); ++i) flat_.push_back(rep);
        }
    }

    long long w() const { return (long long)flat_.size(); }
    long long groups() const { return (long long)reps_.size(); }
    bool simple() const { return groups() == w(); }

    const std::vector<K>& flat() const { return flat_; }
    const std::vector<K>& reps() const { return reps_; }
    const std::vector<long long>& mults() const { return mults_; }

  private:
    std::vector<K> flat_;
    std::vector<K> reps_;
    std::vector<long long> mults_;
};

// Coefficients of prod_j (1 + z_j t); exact when the roots are exact.
template <class K>
ElemSeq<K> elem_from_roots(const RootList<K>& roots) {
    std::vector<K> e{K(1)};
    for (const K& z : roots.flat()) {
        e.push_back(K(0));
        for (std::size_t r = e.size() - 1; r >= 1; --r) e[r] = e[r] + z * e[r - 1];
    }
    return ElemSeq<K>(std::move(e));
}

// h_r at pairwise distinct roots:
//   h_r = sum_j z_j^{r+w-1} / prod_{k != j} (z_j - z_k),
// O(w^2 + w log r) via binary exponentiation. Zero for r < 0.
template <class K>
K h_at_distinct_roots(long long r, const RootList<K>& roots) {
    if (!roots.simple()) throw RepeatedRoots("h_at_distinct_roots: roots are not pairwise distinct");
    if (r < 0) return K(0);
    long long w = roots.w();
    if (w == 0) return r == 0 ? K(1) : K(0);
    if (r + w - 1 < 0) return K(0);
    const auto& z = roots.flat();
    K sum(0);
    for (long long j = 0; j < w; ++j) {
        K denom(1);
        for (long long k = 0; k < w; ++k) {
            if (k == j) continue;
            denom = denom * (z[std::size_t(j)] - z[std::size_t(k)]);
        }
        sum = sum + pow_uint(z[std::size_t(j)], r + w - 1) / denom;
    }
    return sum;
}

// Complete homogeneous sequence h_0, h_1, ... with one of two strategies:
//  - closed form at pairwise distinct roots (stateless, cheap at any degree);
//  - the convolution recurrence h_j = sum_{k>=1} (-1)^{k+1} e_k h_{j-k} with
//    an append-only cache that grows geometrically.
// Copies share the cache; reads and extensions may race from several threads
// and always produce the same values.
template <class K>
class HomSeq {
  public:
    HomSeq() : HomSeq(from_elem(ElemSeq<K>())) {}

    static HomSeq from_elem(ElemSeq<K> e) { return HomSeq(std::move(e), false); }

    // e is only a prefix of an infinite sequence: degrees beyond it raise
    // SeriesTruncation instead of assuming zeros.
    static HomSeq from_elem_series(ElemSeq<K> e) { return HomSeq(std::move(e), true); }

    static HomSeq from_distinct_roots(RootList<K> roots) {
        if (!roots.simple()) throw RepeatedRoots("HomSeq: roots are not pairwise distinct");
        HomSeq h;
        h.conv_.reset();
        h.roots_ = std::make_shared<RootList<K>>(std::move(roots));
        return h;
    }

    bool root_backed() const { return roots_ != nullptr; }
    bool series() const { return conv_ && conv_->series; }

    // Highest degree answerable in series mode, -1 if unbounded.
    long long degree_limit() const { return series() ? conv_->e.w() : -1; }

    K at(long long r) const {
        if (r < 0) return K(0);
        if (roots_) return h_at_distinct_roots(r, *roots_);
        const Conv& c = *conv_;
        if (c.series && r > c.e.w())
            throw SeriesTruncation("h query beyond the supplied coefficient prefix (degree " +
                                   std::to_string(r) + " > " + std::to_string(c.e.w()) + ")");
        {
            std::shared_lock lock(c.mu);
            if (std::size_t(r) < c.h.size()) return c.h[std::size_t(r)];
        }
        std::unique_lock lock(c.mu);
        if (std::size_t(r) >= c.h.size()) {
            std::size_t target = std::max(std::size_t(r) + 1, c.h.size() * 2);
            if (c.series) target = std::min(target, std::size_t(c.e.w()) + 1);
            c.h.reserve(target);
            while (c.h.size() < target) {
                long long j = (long long)c.h.size();
                K hj(0);
                for (long long k = 1; k <= std::min(j, c.e.w()); ++k) {
                    K term = c.e.at(k) * c.h[std::size_t(j - k)];
                    if (k % 2 == 1) {
                        hj = hj + term;
                    } else {
                        hj = hj - term;
                    }
                }
                c.h.push_back(hj);
            }
        }
        return c.h[std::size_t(r)];
    }

  private:
    struct Conv {
        ElemSeq<K> e;
        bool series = false;
        mutable std::shared_mutex mu;
        mutable std::vector<K> h;
    };

    HomSeq(ElemSeq<K> e, bool series) : conv_(std::make_shared<Conv>()) {
        conv_->e = std::move(e);
        conv_->series = series;
        conv_->h.push_back(K(1));
    }

    std::shared_ptr<Conv> conv_;
    std::shared_ptr<RootList<K>> roots_;
};

// Convolution-backed h sequence for a finite variable set.
template <class K>
HomSeq<K> h_from_e(const ElemSeq<K>& e) {
    return HomSeq<K>::from_elem(e);
}

// Preferred strategy for a given root list: the closed form when all roots
// are distinct, the recurrence otherwise.
template <class K>
HomSeq<K> h_from_roots(const RootList<K>& roots) {
    if (roots.w() > 0 && roots.simple()) return HomSeq<K>::from_distinct_roots(roots);
    return HomSeq<K>::from_elem(elem_from_roots(roots));
}

}  // namespace stz
