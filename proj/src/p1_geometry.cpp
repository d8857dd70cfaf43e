#include "fano/p1_geometry.hpp"

#include "fano/errors.hpp"
#include "fano/exact/univariate.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace fano {

namespace {

// Two matrices are the same projectivity when their projective distance is below this.
constexpr double kSameMap = 1e-6;

}  // namespace

Eigen::Vector2cd PointP1::homogeneous() const {
    Eigen::Vector2cd v = at_infinity ? Eigen::Vector2cd(1, 0) : Eigen::Vector2cd(value, 1);
    return v / v.norm();
}

PointP1 PointP1::from_homogeneous(const Eigen::Vector2cd& v) {
    if (std::abs(v(1)) <= 1e-300 || std::abs(v(1)) < 1e-14 * std::abs(v(0))) return infinity();
    return finite(v(0) / v(1));
}

double chordal_distance(const PointP1& a, const PointP1& b) {
    Eigen::Vector2cd u = a.homogeneous(), v = b.homogeneous();
    return std::abs(u(0) * v(1) - u(1) * v(0));
}

BinaryForm::BinaryForm(std::vector<Rational> coeffs) : a_(std::move(coeffs)) {
    if (a_.size() < 2) throw InputError("binary form must have degree >= 1");
    if (std::all_of(a_.begin(), a_.end(), [](const Rational& c) { return sgn(c) == 0; }))
        throw InputError("binary form is identically zero");
}

BinaryForm BinaryForm::from_poly(const MultiPoly& p) {
    if (p.nvars() != 2) throw InputError("binary form needs exactly two variables");
    if (p.is_zero()) throw InputError("binary form is identically zero");
    if (!p.is_homogeneous()) throw InputError("binary form is not homogeneous");
    std::vector<Rational> a(static_cast<std::size_t>(p.degree()) + 1);
    for (const auto& t : p.terms()) a[static_cast<std::size_t>(t.mono[0])] = t.coeff;
    return BinaryForm(std::move(a));
}

MultiPoly BinaryForm::to_poly(int nvars, int xi, int yi) const {
    std::vector<Term> terms;
    const int d = degree();
    for (int i = 0; i <= d; ++i) {
        if (sgn(a_[static_cast<std::size_t>(i)]) == 0) continue;
        Monomial m(nvars);
        m.set(xi, i);
        m.set(yi, d - i);
        terms.push_back({m, a_[static_cast<std::size_t>(i)]});
    }
    return MultiPoly::from_terms(nvars, std::move(terms));
}

Complex BinaryForm::evaluate(Complex x, Complex y) const {
    // Horner in whichever ratio is bounded.
    const int d = degree();
    Complex acc = 0;
    if (std::abs(x) <= std::abs(y)) {
        Complex r = x / y;
        for (int i = d; i >= 0; --i) acc = acc * r + a_[static_cast<std::size_t>(i)].get_d();
        return acc * std::pow(y, d);
    }
    Complex r = y / x;
    for (int i = 0; i <= d; ++i) acc = acc * r + a_[static_cast<std::size_t>(i)].get_d();
    return acc * std::pow(x, d);
}

std::vector<Complex> BinaryForm::compose(const Eigen::Matrix2cd& m) const {
    // Polynomials in x (y implicit), index = power of x.
    using Poly = std::vector<Complex>;
    auto mul = [](const Poly& p, const Poly& q) {
        Poly r(p.size() + q.size() - 1, Complex(0));
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
        return r;
    };
    const int d = degree();
    const Poly lx{m(0, 1), m(0, 0)}, ly{m(1, 1), m(1, 0)};
    std::vector<Poly> px{{1}}, py{{1}};
    for (int i = 1; i <= d; ++i) {
        px.push_back(mul(px.back(), lx));
        py.push_back(mul(py.back(), ly));
    }
    Poly out(static_cast<std::size_t>(d) + 1, Complex(0));
    for (int i = 0; i <= d; ++i) {
        double c = a_[static_cast<std::size_t>(i)].get_d();
        if (c == 0) continue;
        Poly t = mul(px[static_cast<std::size_t>(i)], py[static_cast<std::size_t>(d - i)]);
        for (std::size_t k = 0; k < t.size(); ++k) out[k] += c * t[k];
    }
    return out;
}

double BinaryForm::norm1() const {
    double s = 0;
    for (const auto& c : a_) s += std::abs(c.get_d());
    return s;
}

PointSetP1 make_point_set(std::vector<PointP1> points) {
    PointSetP1 s;
    s.separation = points.size() < 2 ? 1.0 : 2.0;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            s.separation = std::min(s.separation, chordal_distance(points[i], points[j]));
    s.points = std::move(points);
    return s;
}

PointSetP1 roots_p1(const BinaryForm& f, double tol) {
    const auto& a = f.coeffs();
    const int d = f.degree();
    int dx = d;
    while (sgn(a[static_cast<std::size_t>(dx)]) == 0) --dx;
    if (d - dx >= 2) throw InputError("multiple root at infinity");
    UniPoly u(std::vector<Rational>(a.begin(), a.begin() + dx + 1));
    if (dx > 0 && !u.is_squarefree()) throw InputError("multiple root");

    std::vector<Complex> c;
    for (int i = 0; i <= dx; ++i) c.push_back(a[static_cast<std::size_t>(i)].get_d());
    std::vector<PointP1> pts;
    if (d > dx) pts.push_back(PointP1::infinity());
    const double scale = f.norm1();
    for (Complex z : polynomial_roots(c)) {
        PointP1 p = PointP1::finite(z);
        Eigen::Vector2cd h = p.homogeneous();
        if (std::abs(f.evaluate(h(0), h(1))) >= tol * scale) throw ComputationError("root refinement did not converge");
        pts.push_back(p);
    }
    PointSetP1 s = make_point_set(std::move(pts));
    if (s.separation <= 2 * tol) throw InputError("multiple root (zeros closer than tolerance)");
    return s;
}

Projectivity::Projectivity(const Eigen::Matrix2cd& m) {
    double best = m.cwiseAbs().maxCoeff();
    if (!(best > 0)) throw ComputationError("projectivity: zero matrix");
    Complex pivot = 1;
    for (int k = 0; k < 4; ++k) {
        Complex v = m(k / 2, k % 2);
        if (std::abs(v) >= best * (1 - 1e-9)) {
            pivot = v;
            break;
        }
    }
    m_ = m / pivot;
    if (std::abs(m_.determinant()) < 1e-6) throw ComputationError("projectivity: matrix is singular");
}

PointP1 Projectivity::apply(const PointP1& p) const {
    Eigen::Vector2cd v = m_ * p.homogeneous();
    return PointP1::from_homogeneous(v);
}

bool Projectivity::is_real(double tol) const { return m_.imag().cwiseAbs().maxCoeff() <= tol; }

int Projectivity::order(int limit) const {
    const Projectivity id;
    Projectivity p = *this;
    for (int n = 1; n <= limit; ++n) {
        if (projective_distance(p, id) < kSameMap) return n;
        p = compose(p);
    }
    throw ComputationError("projectivity has order above " + std::to_string(limit));
}

double projective_distance(const Projectivity& a, const Projectivity& b) {
    const auto& A = a.matrix();
    const auto& B = b.matrix();
    Complex inner = (A.conjugate().cwiseProduct(B)).sum();
    double c2 = std::norm(inner) / (A.squaredNorm() * B.squaredNorm());
    return std::sqrt(std::max(0.0, 1 - c2));
}

namespace {

// Matrix sending [1:0], [0:1], [1:1] to p0, p1, p2.
Eigen::Matrix2cd frame(std::span<const PointP1, 3> p, double tol) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (chordal_distance(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]) <= tol)
                throw InputError("degenerate triple");
    Eigen::Matrix2cd b;
    b << p[0].homogeneous(), p[1].homogeneous();
    Eigen::Vector2cd ab = b.partialPivLu().solve(p[2].homogeneous());
    Eigen::Matrix2cd t;
    t << ab(0) * b.col(0), ab(1) * b.col(1);
    return t;
}

}  // namespace

Projectivity mobius_from_triples(std::span<const PointP1, 3> src, std::span<const PointP1, 3> dst, double tol) {
    Eigen::Matrix2cd s = frame(src, tol), t = frame(dst, tol);
    return Projectivity(t * s.inverse());
}

std::vector<Projectivity> projectivities_between(const PointSetP1& src, const PointSetP1& dst, double tol) {
    const std::size_t d = src.points.size();
    if (d < 3) throw InputError("projectivities need at least three points");
    if (dst.points.size() != d) return {};
    std::vector<Projectivity> out;
    std::vector<char> used(d);
    const std::array<PointP1, 3> s3{src.points[0], src.points[1], src.points[2]};
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c) {
                if (a == b || b == c || a == c) continue;
                const std::array<PointP1, 3> t3{dst.points[a], dst.points[b], dst.points[c]};
                Projectivity sigma = mobius_from_triples(s3, t3, 0);
                std::fill(used.begin(), used.end(), 0);
                used[a] = used[b] = used[c] = 1;
                bool ok = true;
                for (std::size_t k = 3; k < d && ok; ++k) {
                    PointP1 img = sigma.apply(src.points[k]);
                    std::size_t best = d;
                    double best_dist = tol;
                    for (std::size_t j = 0; j < d; ++j) {
                        if (used[j]) continue;
                        double dist = chordal_distance(img, dst.points[j]);
                        if (dist < best_dist) {
                            best_dist = dist;
                            best = j;
                        }
                    }
                    if (best == d) ok = false;
                    else used[best] = 1;
                }
                if (!ok) continue;
                bool dup = std::any_of(out.begin(), out.end(),
                                       [&](const Projectivity& p) { return projective_distance(p, sigma) < kSameMap; });
                if (!dup) out.push_back(sigma);
            }
    return out;
}

int GroupTag::order() const {
    switch (kind) {
        case Kind::Trivial: return 1;
        case Kind::Cyclic: return k;
        case Kind::Dihedral: return 2 * k;
        case Kind::Tetrahedral: return 12;
        case Kind::Octahedral: return 24;
        case Kind::Icosahedral: return 60;
    }
    return 0;
}

std::string GroupTag::to_string() const {
    switch (kind) {
        case Kind::Trivial: return "trivial";
        case Kind::Cyclic: return "cyclic:" + std::to_string(k);
        case Kind::Dihedral: return "dihedral:" + std::to_string(k);
        case Kind::Tetrahedral: return "T";
        case Kind::Octahedral: return "O";
        case Kind::Icosahedral: return "I";
    }
    return {};
}

GroupTag GroupTag::parse(const std::string& text) {
    auto number = [&](const std::string& s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw InputError("bad group '" + text + "'");
        int k = std::stoi(s);
        if (k < 2) throw InputError("group parameter must be >= 2 in '" + text + "'");
        return k;
    };
    if (text == "trivial" || text == "id") return trivial();
    if (text == "T") return tetrahedral();
    if (text == "O") return octahedral();
    if (text == "I") return icosahedral();
    if (text.rfind("cyclic:", 0) == 0) return cyclic(number(text.substr(7)));
    if (text.rfind("dihedral:", 0) == 0) return dihedral(number(text.substr(9)));
    if (text.size() > 1 && text[0] == 'C') return cyclic(number(text.substr(1)));
    if (text.size() > 1 && text[0] == 'D') return dihedral(number(text.substr(1)));
    throw InputError("unknown group '" + text + "' (expected cyclic:k, dihedral:k, T, O or I)");
}

GroupTag classify_group(const std::vector<Projectivity>& maps, double tol) {
    const double same = std::max(tol, kSameMap);
    auto find = [&](const Projectivity& p) {
        for (std::size_t i = 0; i < maps.size(); ++i)
            if (projective_distance(maps[i], p) < same) return static_cast<long>(i);
        return -1L;
    };
    const std::size_t n = maps.size();
    if (n == 0) throw ComputationError("not a group: empty set");
    for (const auto& a : maps) {
        if (find(a.inverse()) < 0) throw ComputationError("not a group: missing inverse");
        for (const auto& b : maps)
            if (find(a.compose(b)) < 0) throw ComputationError("not a group: not closed under composition");
    }
    const int order = static_cast<int>(n);
    if (order == 1) return GroupTag::trivial();
    std::vector<int> orders;
    for (const auto& a : maps) orders.push_back(a.order(order));
    if (std::find(orders.begin(), orders.end(), order) != orders.end()) return GroupTag::cyclic(order);
    if (order % 2 == 0) {
        const int k = order / 2;
        for (std::size_t r = 0; r < n; ++r) {
            if (orders[r] != k) continue;
            std::vector<Projectivity> rot{Projectivity()};
            for (int i = 1; i < k; ++i) rot.push_back(maps[r].compose(rot.back()));
            const Projectivity rinv = maps[r].inverse();
            for (std::size_t g = 0; g < n; ++g) {
                if (orders[g] != 2) continue;
                bool inside = std::any_of(rot.begin(), rot.end(),
                                          [&](const Projectivity& q) { return projective_distance(q, maps[g]) < same; });
                if (inside) continue;
                // g is an involution, so g^-1 = g.
                Projectivity conj = maps[g].compose(maps[r]).compose(maps[g]);
                if (projective_distance(conj, rinv) < same) return GroupTag::dihedral(k);
            }
        }
    }
    if (order == 12) return GroupTag::tetrahedral();
    if (order == 24) return GroupTag::octahedral();
    if (order == 60) return GroupTag::icosahedral();
    throw ComputationError("unrecognized group order " + std::to_string(order));
}

}  // namespace fano
