#include "stz/roots.hpp"

#include <cmath>

#include "stz/errors.hpp"

namespace stz {

namespace {

std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> z,
                            std::complex<double>* deriv) {
    std::complex<double> v = c.back();
    std::complex<double> d = 0.0;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        d = d * z + v;
        v = v * z + c[i];
    }
    if (deriv) *deriv = d;
    return v;
}

// |c_0| + |c_1||z| + ... , the natural residual scale at z.
double residual_scale(const std::vector<std::complex<double>>& c, std::complex<double> z) {
    double az = std::abs(z);
    double s = 0.0;
    double zp = 1.0;
    for (const auto& ck : c) {
        s += std::abs(ck) * zp;
        zp *= az;
    }
    return s;
}

}  // namespace

std::vector<std::complex<double>> aberth_roots(const std::vector<std::complex<double>>& coeffs) {
    if (coeffs.size() < 2) throw Error("aberth_roots: degree must be at least 1");
    if (std::abs(coeffs.back()) == 0.0) throw Error("aberth_roots: leading coefficient is zero");
    std::size_t w = coeffs.size() - 1;

    if (w == 1) return {-coeffs[0] / coeffs[1]};

    // Cauchy-style radius for the initial circle.
    double radius = 0.0;
    for (std::size_t k = 0; k < w; ++k) {
        double r = std::pow(std::abs(coeffs[k] / coeffs[w]), 1.0 / double(w - k));
        radius = std::max(radius, r);
    }
    if (radius == 0.0) return std::vector<std::complex<double>>(w, 0.0);
    radius *= 1.1;

    std::vector<std::complex<double>> z(w);
    for (std::size_t j = 0; j < w; ++j) {
        // Irrational angle step breaks symmetric stalls.
        double ang = 2.0 * M_PI * double(j) / double(w) + 0.41;
        z[j] = radius * std::complex<double>(std::cos(ang), std::sin(ang));
    }

    const int max_sweeps = 500;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool all_converged = true;
        for (std::size_t j = 0; j < w; ++j) {
            std::complex<double> dp;
            std::complex<double> pv = horner(coeffs, z[j], &dp);
            if (std::abs(pv) <= 1e-12 * residual_scale(coeffs, z[j])) continue;
            all_converged = false;
            std::complex<double> newton = (dp == std::complex<double>(0.0)) ? std::complex<double>(0.0)
                                                                            : pv / dp;
            std::complex<double> rep = 0.0;
            for (std::size_t k = 0; k < w; ++k) {
                if (k == j) continue;
                std::complex<double> diff = z[j] - z[k];
                if (std::abs(diff) < 1e-300) diff = 1e-300;
                rep += 1.0 / diff;
            }
            std::complex<double> denom = 1.0 - newton * rep;
            std::complex<double> step = (std::abs(denom) < 1e-300) ? newton : newton / denom;
            z[j] -= step;
        }
        if (all_converged) return z;
    }
    throw NonConvergence("aberth_roots: no convergence after 500 sweeps");
}

RootList<ScaledComplex> find_roots(const LaurentSpec<ScaledComplex>& a) {
    if (a.series_mode()) throw SeriesMode("find_roots: not available in series mode");
    long long w = a.w();
    long long p = a.p();
    std::vector<std::complex<double>> c;
    c.reserve(std::size_t(w + 1));
    for (long long j = 0; j <= w; ++j) c.push_back(a.coeff(j + p - w).to_complex());
    for (const auto& v : c)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw Error("find_roots: coefficient outside double range");
    std::vector<std::complex<double>> z = aberth_roots(c);
    std::vector<ScaledComplex> out;
    out.reserve(z.size());
    for (const auto& v : z) out.push_back(ScaledComplex(v));
    return RootList<ScaledComplex>(std::move(out));
}

}  // namespace stz
