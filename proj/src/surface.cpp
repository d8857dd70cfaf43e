#include "fano/surface.hpp"

#include "fano/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fano {

SurfaceForm::SurfaceForm(MultiPoly poly) : poly_(std::move(poly)) {
    if (poly_.nvars() != 4) throw InputError("surface needs a polynomial in x, y, z, t");
    if (poly_.is_zero()) throw InputError("surface polynomial is zero");
    if (!poly_.is_homogeneous()) throw InputError("surface polynomial is not homogeneous");
    if (poly_.degree() < 1) throw InputError("surface polynomial is constant");
}

NumericPoly::NumericPoly(const MultiPoly& p) : nvars_(p.nvars()), maxdeg_(0) {
    for (const auto& t : p.terms()) {
        coeffs_.push_back(t.coeff.get_d());
        std::array<int, kMaxVars> e{};
        for (int i = 0; i < nvars_; ++i) {
            e[static_cast<std::size_t>(i)] = t.mono[i];
            maxdeg_ = std::max(maxdeg_, t.mono[i]);
        }
        exps_.push_back(e);
    }
}

namespace {

template <class T, class Fn>
T accumulate_terms(int nvars, int maxdeg, std::span<const Complex> point, const std::vector<double>& coeffs,
                   const std::vector<std::array<int, kMaxVars>>& exps, Fn&& fn) {
    std::vector<Complex> powers(static_cast<std::size_t>(nvars * (maxdeg + 1)));
    for (int i = 0; i < nvars; ++i) {
        Complex acc = 1;
        for (int e = 0; e <= maxdeg; ++e) {
            powers[static_cast<std::size_t>(i * (maxdeg + 1) + e)] = acc;
            acc *= point[static_cast<std::size_t>(i)];
        }
    }
    T sum{};
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        Complex v = coeffs[k];
        for (int i = 0; i < nvars; ++i) v *= powers[static_cast<std::size_t>(i * (maxdeg + 1) + exps[k][static_cast<std::size_t>(i)])];
        sum += fn(v);
    }
    return sum;
}

}  // namespace

Complex NumericPoly::evaluate(std::span<const Complex> point) const {
    return accumulate_terms<Complex>(nvars_, maxdeg_, point, coeffs_, exps_, [](Complex v) { return v; });
}

double NumericPoly::magnitude(std::span<const Complex> point) const {
    return accumulate_terms<double>(nvars_, maxdeg_, point, coeffs_, exps_, [](Complex v) { return std::abs(v); });
}

std::vector<Complex> restriction_coefficients(const NumericPoly& f, int degree, const Mat42c& basis, double* scale) {
    // Orthonormal basis of the column span.
    Eigen::HouseholderQR<Mat42c> qr(basis);
    Mat42c q = qr.householderQ() * Mat42c::Identity();
    const int n = degree + 1;
    std::vector<Complex> samples(static_cast<std::size_t>(n));
    double mag = 0;
    for (int k = 0; k < n; ++k) {
        Complex w = std::polar(1.0, 2 * std::numbers::pi * k / n);
        Vec4c p = w * q.col(0) + q.col(1);
        std::array<Complex, 4> pt{p(0), p(1), p(2), p(3)};
        samples[static_cast<std::size_t>(k)] = f.evaluate(pt);
        mag = std::max(mag, f.magnitude(pt));
    }
    std::vector<Complex> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Complex s = 0;
        for (int k = 0; k < n; ++k) s += samples[static_cast<std::size_t>(k)] * std::polar(1.0, -2 * std::numbers::pi * i * k / n);
        a[static_cast<std::size_t>(i)] = s / static_cast<double>(n);
    }
    if (scale) *scale = mag;
    return a;
}

double containment_residual(const SurfaceForm& s, const Line3& line) {
    NumericPoly f(s.poly());
    double scale = 0;
    auto a = restriction_coefficients(f, s.degree(), line.basis(), &scale);
    double worst = 0;
    for (Complex c : a) worst = std::max(worst, std::abs(c));
    return scale > 0 ? worst / scale : worst;
}

bool line_on_surface(const SurfaceForm& s, const Line3& line, double tol) { return containment_residual(s, line) < tol; }

bool line_on_surface(const SurfaceForm& s, const std::array<std::array<Rational, 4>, 2>& points) {
    const MultiPoly u = MultiPoly::variable(2, 0), v = MultiPoly::variable(2, 1);
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < 4; ++i) images.push_back(points[0][i] * u + points[1][i] * v);
    return s.poly().substitute(images).is_zero();
}

}  // namespace fano
