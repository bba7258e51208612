#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <ostream>

#include "stz/errors.hpp"

namespace stz {

// Exact scalar backend: arbitrary-precision rationals.
using Rational = mpq_class;

// Float scalar backend: a complex mantissa with a separate power-of-two
// exponent. Quantities like h_n grow as max|z|^n and overflow a plain
// double near n ~ 1e3, while the closed forms target arbitrary n.
class ScaledComplex {
  public:
    ScaledComplex() = default;
    ScaledComplex(int v) : man_(double(v), 0.0) { normalize(); }
    ScaledComplex(long long v) : man_(double(v), 0.0) { normalize(); }
    ScaledComplex(double re) : man_(re, 0.0) { normalize(); }
    ScaledComplex(double re, double im) : man_(re, im) { normalize(); }
    ScaledComplex(std::complex<double> z) : man_(z) { normalize(); }
    ScaledComplex(std::complex<double> man, long long exp2) : man_(man), exp_(exp2) { normalize(); }

    bool is_zero() const { return man_ == std::complex<double>{0.0, 0.0}; }

    std::complex<double> mantissa() const { return man_; }
    long long exponent() const { return exp_; }

    // log2 of the magnitude; -inf for zero. Used for pivoting and for all
    // magnitude thresholds, so huge exponents never touch a raw double.
    double abs_log2() const {
        if (is_zero()) return -std::numeric_limits<double>::infinity();
        return double(exp_) + 0.5 * std::log2(std::norm(man_));
    }

    // Collapses to an ordinary complex double; overflows to inf / underflows
    // to 0 when the exponent leaves double range.
    std::complex<double> to_complex() const {
        if (is_zero()) return {0.0, 0.0};
        if (exp_ > 2000) {
            double s = std::numeric_limits<double>::infinity();
            return {man_.real() * s, man_.imag() * s};
        }
        if (exp_ < -2000) return {0.0, 0.0};
        int e = int(exp_);
        return {std::ldexp(man_.real(), e), std::ldexp(man_.imag(), e)};
    }

    ScaledComplex conj() const { return ScaledComplex(std::conj(man_), exp_); }

    // Magnitude as a scalar of the same type (|z|, exactly representable scale).
    ScaledComplex abs() const {
        if (is_zero()) return ScaledComplex();
        return ScaledComplex(std::complex<double>(std::abs(man_), 0.0), exp_);
    }

    friend ScaledComplex operator-(const ScaledComplex& a) {
        ScaledComplex r;
        r.man_ = -a.man_;
        r.exp_ = a.exp_;
        return r;
    }

    friend ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long long d = a.exp_ - b.exp_;
        if (d > kAlignLimit) return a;
        if (d < -kAlignLimit) return b;
        ScaledComplex r;
        if (d >= 0) {
            r.man_ = a.man_ + shifted(b.man_, -int(d));
            r.exp_ = a.exp_;
        } else {
            r.man_ = shifted(a.man_, int(d)) + b.man_;
            r.exp_ = b.exp_;
        }
        r.normalize();
        return r;
    }

    friend ScaledComplex operator-(const ScaledComplex& a, const ScaledComplex& b) { return a + (-b); }

    friend ScaledComplex operator*(const ScaledComplex& a, const ScaledComplex& b) {
        if (a.is_zero() || b.is_zero()) return ScaledComplex();
        ScaledComplex r;
        r.man_ = a.man_ * b.man_;
        r.exp_ = a.exp_ + b.exp_;
        r.normalize();
        return r;
    }

    friend ScaledComplex operator/(const ScaledComplex& a, const ScaledComplex& b) {
        if (b.is_zero()) throw MathError("ScaledComplex: division by zero");
        if (a.is_zero()) return ScaledComplex();
        ScaledComplex r;
        r.man_ = a.man_ / b.man_;
        r.exp_ = a.exp_ - b.exp_;
        r.normalize();
        return r;
    }

    ScaledComplex& operator+=(const ScaledComplex& o) { return *this = *this + o; }
    ScaledComplex& operator-=(const ScaledComplex& o) { return *this = *this - o; }
    ScaledComplex& operator*=(const ScaledComplex& o) { return *this = *this * o; }
    ScaledComplex& operator/=(const ScaledComplex& o) { return *this = *this / o; }

    // Representation is canonical after normalize(), so memberwise compare.
    friend bool operator==(const ScaledComplex& a, const ScaledComplex& b) {
        return a.man_ == b.man_ && a.exp_ == b.exp_;
    }
    friend bool operator!=(const ScaledComplex& a, const ScaledComplex& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const ScaledComplex& v) {
        return os << "(" << v.man_.real() << (v.man_.imag() < 0 ? "" : "+") << v.man_.imag() << "i)*2^"
                  << v.exp_;
    }

  private:
    // Beyond this exponent gap the smaller addend is below one ulp of the
    // larger even after denormals.
    static constexpr long long kAlignLimit = 1100;

    static std::complex<double> shifted(std::complex<double> m, int k) {
        return {std::ldexp(m.real(), k), std::ldexp(m.imag(), k)};
    }

    void normalize() {
        double a = std::max(std::fabs(man_.real()), std::fabs(man_.imag()));
        if (a == 0.0 || !std::isfinite(a)) {
            if (!std::isfinite(a)) throw MathError("ScaledComplex: non-finite mantissa");
            man_ = {0.0, 0.0};
            exp_ = 0;
            return;
        }
        int k = 0;
        std::frexp(a, &k);
        if (k != 0) {
            man_ = shifted(man_, -k);
            exp_ += k;
        }
    }

    std::complex<double> man_{0.0, 0.0};
    long long exp_ = 0;
};

template <class K>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static double abs_log2(const Rational& x) {
        if (is_zero(x)) return -std::numeric_limits<double>::infinity();
        signed long int en = 0, ed = 0;
        double mn = mpz_get_d_2exp(&en, x.get_num().get_mpz_t());
        double md = mpz_get_d_2exp(&ed, x.get_den().get_mpz_t());
        return std::log2(std::fabs(mn)) + double(en) - std::log2(std::fabs(md)) - double(ed);
    }
};

template <>
struct scalar_traits<ScaledComplex> {
    static constexpr bool is_exact = false;
    static bool is_zero(const ScaledComplex& x) { return x.is_zero(); }
    static double abs_log2(const ScaledComplex& x) { return x.abs_log2(); }
};

template <class K>
bool is_zero(const K& x) {
    return scalar_traits<K>::is_zero(x);
}

template <class K>
double abs_log2(const K& x) {
    return scalar_traits<K>::abs_log2(x);
}

inline Rational scalar_abs(const Rational& x) {
    return x < 0 ? Rational(-x) : x;
}

inline ScaledComplex scalar_abs(const ScaledComplex& x) { return x.abs(); }

// Scalar from a 64-bit integer. gmpxx lacks a long long constructor, so the
// exact backend routes through mpz.
template <class K>
K k_int(long long v) {
    return K(v);
}

template <>
inline Rational k_int<Rational>(long long v) {
    static_assert(sizeof(long) == sizeof(long long));
    return Rational(static_cast<long>(v));
}

template <class K>
K pow_uint(K base, long long e) {
    if (e < 0) throw MathError("pow_uint: negative exponent");
    K acc(1);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// (-1)^k as a scalar.
template <class K>
K sign_pow(long long k) {
    return ((k % 2 + 2) % 2 == 0) ? K(1) : K(-1);
}

}  // namespace stz
