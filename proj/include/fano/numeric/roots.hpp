#pragma once

#include "fano/exact/rational.hpp"

#include <complex>
#include <span>
#include <vector>

namespace fano {

using Complex = std::complex<double>;

/// Horner evaluation; coefficients from the constant term upward.
Complex horner(std::span<const Complex> coeffs, Complex z);

/// All complex roots (with multiplicity) of a polynomial with nonzero leading coefficient.
/// Companion-matrix eigenvalues, then a few Newton steps per root that are kept only when
/// they lower the residual.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs);

/// Roots of a squarefree polynomial with rational coefficients (constant term first),
/// polished by Aberth-Ehrlich iteration in `bits`-bit floating point starting from the
/// companion-matrix approximations.
std::vector<Complex> polished_roots(std::span<const Rational> coeffs, unsigned bits = 256);

/// Principal d-th roots of w, i.e. the d solutions of c^d = w.
std::vector<Complex> nth_roots(Complex w, int d);

}  // namespace fano
