#include "fano/numeric/roots.hpp"

#include "fano/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

namespace fano {

Complex horner(std::span<const Complex> coeffs, Complex z) {
    Complex acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

namespace {

// Value and derivative together.
std::pair<Complex, Complex> horner2(std::span<const Complex> c, Complex z) {
    Complex p = 0, dp = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
    }
    return {p, dp};
}

}  // namespace

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs) {
    std::size_t n = coeffs.size();
    while (n > 0 && coeffs[n - 1] == Complex(0)) --n;
    if (n == 0) throw InputError("roots of the zero polynomial");
    const int deg = static_cast<int>(n) - 1;
    if (deg == 0) return {};
    std::span<const Complex> c = coeffs.first(n);
    if (deg == 1) return {-c[0] / c[1]};

    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[static_cast<std::size_t>(i)] / c[n - 1];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    if (es.info() != Eigen::Success) throw ComputationError("root finder did not converge");

    std::vector<Complex> roots(es.eigenvalues().data(), es.eigenvalues().data() + deg);
    for (auto& r : roots) {
        for (int it = 0; it < 8; ++it) {
            auto [p, dp] = horner2(c, r);
            if (p == Complex(0) || dp == Complex(0)) break;
            Complex next = r - p / dp;
            if (std::abs(horner(c, next)) >= std::abs(p)) break;
            r = next;
        }
    }
    return roots;
}

namespace {

struct BigComplex {
    mpf_class re, im;
};

BigComplex mul(const BigComplex& a, const BigComplex& b, unsigned bits) {
    BigComplex r{mpf_class(0, bits), mpf_class(0, bits)};
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    return r;
}

BigComplex div(const BigComplex& a, const BigComplex& b, unsigned bits) {
    mpf_class n(b.re * b.re + b.im * b.im, bits);
    BigComplex r{mpf_class(0, bits), mpf_class(0, bits)};
    r.re = (a.re * b.re + a.im * b.im) / n;
    r.im = (a.im * b.re - a.re * b.im) / n;
    return r;
}

}  // namespace

std::vector<Complex> polished_roots(std::span<const Rational> coeffs, unsigned bits) {
    std::vector<Complex> approx;
    std::vector<Complex> cd;
    for (const auto& c : coeffs) cd.push_back(c.get_d());
    approx = polynomial_roots(cd);
    const std::size_t n = approx.size();
    if (n <= 1) return approx;
    std::size_t top = coeffs.size();
    while (sgn(coeffs[top - 1]) == 0) --top;

    std::vector<mpf_class> a;
    for (std::size_t i = 0; i < top; ++i) a.emplace_back(coeffs[i], bits);
    std::vector<BigComplex> z;
    for (Complex w : approx) z.push_back({mpf_class(w.real(), bits), mpf_class(w.imag(), bits)});

    auto eval = [&](const BigComplex& x) {
        BigComplex p{mpf_class(0, bits), mpf_class(0, bits)}, dp{mpf_class(0, bits), mpf_class(0, bits)};
        for (std::size_t i = top; i-- > 0;) {
            dp = mul(dp, x, bits);
            dp.re += p.re;
            dp.im += p.im;
            p = mul(p, x, bits);
            p.re += a[i];
        }
        return std::pair{p, dp};
    };
    const mpf_class eps(std::ldexp(1.0, -static_cast<int>(bits) / 2 - 8), bits);
    for (int iter = 0; iter < 1000; ++iter) {
        bool moved = false;
        for (std::size_t k = 0; k < n; ++k) {
            auto [p, dp] = eval(z[k]);
            if (sgn(p.re) == 0 && sgn(p.im) == 0) continue;
            BigComplex ratio = div(p, dp, bits);  // Newton correction p / p'
            BigComplex sum{mpf_class(0, bits), mpf_class(0, bits)};
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                BigComplex diff{z[k].re - z[j].re, z[k].im - z[j].im};
                BigComplex inv = div({mpf_class(1, bits), mpf_class(0, bits)}, diff, bits);
                sum.re += inv.re;
                sum.im += inv.im;
            }
            // w = ratio / (1 - ratio * sum)
            BigComplex rs = mul(ratio, sum, bits);
            BigComplex den{mpf_class(1, bits) - rs.re, -rs.im};
            BigComplex w = div(ratio, den, bits);
            z[k].re -= w.re;
            z[k].im -= w.im;
            mpf_class size = abs(w.re) + abs(w.im);
            mpf_class scale = abs(z[k].re) + abs(z[k].im) + 1;
            if (size > eps * scale) moved = true;
        }
        if (!moved) break;
    }
    std::vector<Complex> out;
    for (const auto& w : z) out.emplace_back(w.re.get_d(), w.im.get_d());
    return out;
}

std::vector<Complex> nth_roots(Complex w, int d) {
    std::vector<Complex> out;
    const double mod = std::pow(std::abs(w), 1.0 / d);
    const double arg = std::arg(w) / d;
    for (int k = 0; k < d; ++k) out.push_back(std::polar(mod, arg + 2 * std::numbers::pi * k / d));
    return out;
}

}  // namespace fano
