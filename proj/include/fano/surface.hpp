#pragma once

#include "fano/exact/multipoly.hpp"
#include "fano/line3.hpp"
#include "fano/p1_geometry.hpp"

#include <array>
#include <vector>

namespace fano {

/// Homogeneous quaternary form F(x, y, z, t) of degree d.
class SurfaceForm {
  public:
    /// Throws InputError unless `poly` is a nonzero homogeneous polynomial in 4 variables.
    explicit SurfaceForm(MultiPoly poly);

    const MultiPoly& poly() const { return poly_; }
    int degree() const { return poly_.degree(); }

  private:
    MultiPoly poly_;
};

/// Double-precision copy of a polynomial with cached power tables, for repeated evaluation.
class NumericPoly {
  public:
    explicit NumericPoly(const MultiPoly& p);
    Complex evaluate(std::span<const Complex> point) const;
    /// sum |c_m| |m(point)|, the natural scale for rounding error at `point`.
    double magnitude(std::span<const Complex> point) const;

  private:
    int nvars_;
    int maxdeg_;
    std::vector<double> coeffs_;
    std::vector<std::array<int, kMaxVars>> exps_;
};

/// Coefficients a_i of u^i v^(d-i) in F(u col0 + v col1), computed from an orthonormalized
/// basis of the line by a discrete Fourier transform.
std::vector<Complex> restriction_coefficients(const NumericPoly& f, int degree, const Mat42c& basis,
                                              double* scale = nullptr);

/// Largest restriction coefficient relative to the size of the terms of F on the line.
double containment_residual(const SurfaceForm& s, const Line3& line);

/// Numeric containment test: containment_residual < tol.
bool line_on_surface(const SurfaceForm& s, const Line3& line, double tol = kDefaultTol);

/// Exact containment for a line spanned by two rational points.
bool line_on_surface(const SurfaceForm& s, const std::array<std::array<Rational, 4>, 2>& points);

}  // namespace fano
