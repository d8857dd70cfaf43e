#include "fano/covering.hpp"

#include "fano/errors.hpp"
#include "fano/exact/groebner.hpp"
#include "fano/exact/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace fano {

PlaneCurve::PlaneCurve(MultiPoly poly) : poly_(std::move(poly)) {
    if (poly_.nvars() != 3) throw InputError("plane curve needs a polynomial in x, y, z");
    if (poly_.is_zero() || !poly_.is_homogeneous()) throw InputError("plane curve polynomial must be homogeneous and nonzero");
    if (poly_.degree() < 3) throw InputError("plane curve degree must be at least 3");
}

SurfaceForm PlaneCurve::covering_surface() const {
    std::vector<MultiPoly> images;
    for (int i = 0; i < 3; ++i) images.push_back(MultiPoly::variable(4, i));
    MultiPoly t = MultiPoly::variable(4, 3);
    return SurfaceForm(t.pow(static_cast<unsigned>(degree())) - poly_.substitute(images));
}

MultiPoly hessian(const PlaneCurve& c) {
    MultiPoly h[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h[i][j] = c.poly().derivative(i).derivative(j);
    return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
           h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

bool is_smooth(const PlaneCurve& c) {
    std::vector<MultiPoly> partials;
    for (int i = 0; i < 3; ++i) {
        MultiPoly p = c.poly().derivative(i);
        if (!p.is_zero()) partials.push_back(std::move(p));
    }
    if (partials.empty()) return false;
    return buchberger(partials).is_zero_dimensional();
}

namespace {

// p(x0, y, 1) as a polynomial in y.
UniPoly slice(const MultiPoly& p, const Rational& x0) {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0, p.degree())) + 1);
    for (const auto& t : p.terms()) {
        Rational v = t.coeff;
        for (int e = 0; e < t.mono[0]; ++e) v *= x0;
        c[static_cast<std::size_t>(t.mono[1])] += v;
    }
    return UniPoly(std::move(c));
}

Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(m[piv][col]) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (sgn(m[r][col]) == 0) continue;
            Rational f = m[r][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return det;
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
    const int m = a.degree(), n = b.degree();
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = a[m - i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = b[n - i];
    return determinant(std::move(s));
}

// Newton interpolation through (xs[i], ys[i]).
UniPoly interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
    const std::size_t n = xs.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    UniPoly p({ys[n - 1]});
    for (std::size_t k = n - 1; k-- > 0;) p = p * UniPoly({-xs[k], Rational(1)}) + UniPoly({ys[k]});
    return p;
}

// Yun's squarefree decomposition: factors[i] collects the roots of multiplicity i + 1.
std::vector<UniPoly> squarefree_factors(const UniPoly& a) {
    std::vector<UniPoly> out;
    const UniPoly b = a.derivative();
    const UniPoly c = gcd(a, b);
    UniPoly w = a.divmod(c).first;
    UniPoly z = b.divmod(c).first - w.derivative();
    while (w.degree() > 0) {
        UniPoly g = gcd(w, z);
        out.push_back(g);
        w = w.divmod(g).first;
        z = z.divmod(g).first - w.derivative();
    }
    return out;
}

// Bilinear cross product (Eigen's cross conjugates complex results).
Eigen::Vector3cd cross(const Eigen::Vector3cd& a, const Eigen::Vector3cd& b) {
    return {a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0)};
}

double cross_distance(const Eigen::Vector3cd& a, const Eigen::Vector3cd& b) {
    return cross(a.normalized(), b.normalized()).norm();
}

}  // namespace

InflectionReport total_inflections(const PlaneCurve& c, double tol, std::uint64_t seed) {
    if (!is_smooth(c)) throw InputError("singular curve");
    const int d = c.degree();
    const MultiPoly h = hessian(c);
    if (h.is_zero()) throw InputError("singular curve (Hessian vanishes identically)");

    // Generic frame: f'(X) = f(A X) with f'(0,1,0) and h'(0,1,0) nonzero, no
    // intersection point on the line z' = 0 (the resultant keeps its full degree)
    // and no intersection point whose tangent passes through (0:1:0).
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-9, 9);
    const int bound = d * h.degree();
    const NumericPoly norig(c.poly());
    InflectionReport rep;
    std::vector<std::pair<Eigen::Vector3cd, int>> points;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 200) throw ComputationError("no generic frame found");
        Eigen::Matrix3d A;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) A(i, j) = entry(rng);
        const Eigen::Vector3d sv = A.jacobiSvd().singularValues();
        if (sv(2) < sv(0) / 8) continue;
        std::vector<MultiPoly> images;
        for (int i = 0; i < 3; ++i) {
            MultiPoly img(3);
            for (int j = 0; j < 3; ++j) img += MultiPoly::variable(3, j) * Rational(static_cast<long>(A(i, j)));
            images.push_back(img);
        }
        const MultiPoly fa = c.poly().substitute(images);
        const MultiPoly ha = h.substitute(images);
        Monomial yd(3), yh(3);
        yd.set(1, d);
        yh.set(1, h.degree());
        if (sgn(fa.coefficient(yd)) == 0 || sgn(ha.coefficient(yh)) == 0) continue;

        // Res_y(f'(x,y,1), h'(x,y,1)) by exact evaluation and interpolation.
        std::vector<Rational> xs, rs;
        for (int k = 0; k <= bound; ++k) {
            Rational x0(k - bound / 2);
            xs.push_back(x0);
            rs.push_back(resultant(slice(fa, x0), slice(ha, x0)));
        }
        const UniPoly res = interpolate(xs, rs);
        if (res.is_zero()) throw ComputationError("curve and Hessian share a component");
        if (res.degree() != bound) continue;

        const NumericPoly nh(ha);
        points.clear();
        bool vertical = false;
        std::vector<std::pair<Complex, int>> xroots;
        const std::vector<UniPoly> factors = squarefree_factors(res);
        for (std::size_t m = 0; m < factors.size(); ++m)
            if (factors[m].degree() > 0)
                for (Complex x0 : polished_roots(factors[m].coeffs())) xroots.emplace_back(x0, static_cast<int>(m) + 1);
        for (const auto& [x0, mult] : xroots) {
            std::vector<Complex> fy(static_cast<std::size_t>(d) + 1, Complex(0));
            for (const auto& t : fa.terms()) fy[static_cast<std::size_t>(t.mono[1])] += t.coeff.get_d() * std::pow(x0, t.mono[0]);
            const std::vector<Complex> ys = polynomial_roots(fy);
            // Relative Hessian values; a genuine intersection sits near the minimum.
            std::vector<double> hv;
            for (Complex y0 : ys) {
                std::array<Complex, 3> pt{x0, y0, 1};
                hv.push_back(std::abs(nh.evaluate(pt)) / nh.magnitude(pt));
            }
            const double best = hv.empty() ? 0 : *std::min_element(hv.begin(), hv.end());
            for (std::size_t i = 0; i < ys.size(); ++i)
                for (std::size_t j = i + 1; j < ys.size(); ++j)
                    if (std::abs(ys[i] - ys[j]) < 2e-2 * (1 + std::abs(ys[i]))) vertical = true;
            for (std::size_t i = 0; i < ys.size() && !vertical; ++i) {
                if (hv[i] > 1e-6 || hv[i] > 1e4 * best + 1e-13) continue;
                Eigen::Vector3cd p = A.cast<Complex>() * Eigen::Vector3cd(x0, ys[i], 1);
                p.normalize();
                bool dup = std::any_of(points.begin(), points.end(), [&](const auto& q) { return cross_distance(p, q.first) < 10 * tol; });
                if (!dup) points.emplace_back(p, mult);
            }
            if (vertical) break;
        }
        if (!vertical) break;
    }

    // d-point test on the tangent line.
    std::vector<MultiPoly> grads;
    for (int i = 0; i < 3; ++i) grads.push_back(c.poly().derivative(i));
    const SurfaceForm surf = c.covering_surface();
    for (const auto& [p, mult] : points) {
        std::array<Complex, 3> pt{p(0), p(1), p(2)};
        Eigen::Vector3cd g;
        for (int i = 0; i < 3; ++i) g(i) = grads[static_cast<std::size_t>(i)].evaluate(pt);
        Eigen::Vector3cd q = cross(g, p);
        if (q.norm() < 1e-12 * g.norm()) q = cross(g, Eigen::Vector3cd(p(1), p(2), p(0)));
        q.normalize();
        // f(u p + v q) = sum a_i u^i v^(d-i); a total inflection leaves only a_0.
        const int n = d + 1;
        std::vector<Complex> samples(static_cast<std::size_t>(n));
        double scale = 0;
        for (int k = 0; k < n; ++k) {
            Complex w = std::polar(1.0, 2 * std::numbers::pi * k / n);
            Eigen::Vector3cd s = w * p + q;
            std::array<Complex, 3> sp{s(0), s(1), s(2)};
            samples[static_cast<std::size_t>(k)] = norig.evaluate(sp);
            scale = std::max(scale, norig.magnitude(sp));
        }
        std::vector<Complex> a(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            Complex acc = 0;
            for (int k = 0; k < n; ++k) acc += samples[static_cast<std::size_t>(k)] * std::polar(1.0, -2 * std::numbers::pi * i * k / n);
            a[static_cast<std::size_t>(i)] = acc / static_cast<double>(n);
        }
        InflectionPoint ip;
        ip.point = p;
        ip.multiplicity = mult;
        for (int i = 1; i <= d; ++i) ip.residual = std::max(ip.residual, std::abs(a[static_cast<std::size_t>(i)]) / scale);
        const bool top = std::abs(a[0]) / scale > tol;
        if (ip.residual < tol && top) ip.kind = InflectionPoint::Kind::Total;
        else if (ip.residual > std::sqrt(tol)) ip.kind = InflectionPoint::Kind::Ordinary;
        else ip.kind = InflectionPoint::Kind::Undetermined;
        rep.candidates.push_back(ip);
        if (ip.kind == InflectionPoint::Kind::Undetermined) ++rep.undetermined;
        if (ip.kind != InflectionPoint::Kind::Total) continue;
        ++rep.beta;
        for (Complex w : nth_roots(a[0], d)) {
            Mat42c b;
            b << p(0), q(0), p(1), q(1), p(2), q(2), 0, w;
            Line3 line = Line3::from_basis(b);
            double r = containment_residual(surf, line);
            rep.max_line_residual = std::max(rep.max_line_residual, r);
            if (!(r < tol)) throw ComputationError("covering line fails containment (residual " + std::to_string(r) + ")");
            rep.lines.push_back(line);
        }
    }
    if (rep.beta > 3 * d) throw ComputationError("more than 3d total inflections found");
    std::sort(rep.lines.begin(), rep.lines.end(), plucker_less);
    return rep;
}

std::vector<Line3> covering_lines(const PlaneCurve& c, double tol, std::uint64_t seed) {
    return total_inflections(c, tol, seed).lines;
}

}  // namespace fano
