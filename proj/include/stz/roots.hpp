#pragma once

#include <complex>
#include <vector>

#include "stz/scalar.hpp"
#include "stz/symcore.hpp"
#include "stz/toeplitz.hpp"

namespace stz {

// All w roots of the degree-w polynomial with the given coefficients
// (c[0] + c[1] t + ... + c[w] t^w, c[w] != 0), by Aberth-Ehrlich iteration
// from a circular initial guess, refined until |P(z)| <= 1e-12 * scale.
// Throws NonConvergence after 500 sweeps.
std::vector<std::complex<double>> aberth_roots(const std::vector<std::complex<double>>& coeffs);

// Roots of t^{w-p} a(t) for a finite-band float symbol; multiplicity
// grouping applied to the result.
RootList<ScaledComplex> find_roots(const LaurentSpec<ScaledComplex>& a);

}  // namespace stz
