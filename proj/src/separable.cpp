#include "fano/separable.hpp"

#include "fano/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace fano {

SeparableSurface::SeparableSurface(BinaryForm phi, BinaryForm psi) : phi_(std::move(phi)), psi_(std::move(psi)) {
    if (phi_.degree() != psi_.degree()) throw InputError("phi and psi must have the same degree");
    if (phi_.degree() < 3) throw InputError("degree must be at least 3");
}

SurfaceForm SeparableSurface::surface() const { return SurfaceForm(phi_.to_poly(4, 0, 1) - psi_.to_poly(4, 2, 3)); }

std::vector<Line3> LineReport::all_lines() const {
    std::vector<Line3> out = grid_lines;
    for (const auto& r : rulings) out.insert(out.end(), r.lines.begin(), r.lines.end());
    std::sort(out.begin(), out.end(), plucker_less);
    return out;
}

namespace {

// Tolerance for phi o M = lambda psi, relative to the coefficient mass of phi o M.
double scalar_tolerance(double tol) { return std::max(tol, 1e-10); }

Complex scalar_of(const BinaryForm& phi, const BinaryForm& psi, const Projectivity& sigma, double tol) {
    std::vector<Complex> comp = phi.compose(sigma.matrix());
    const auto& b = psi.coeffs();
    std::size_t pivot = 0;
    double mass = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (std::abs(b[i].get_d()) > std::abs(b[pivot].get_d())) pivot = i;
    for (Complex c : comp) mass += std::abs(c);
    Complex lambda = comp[pivot] / b[pivot].get_d();
    for (std::size_t i = 0; i < b.size(); ++i)
        if (std::abs(comp[i] - lambda * b[i].get_d()) > scalar_tolerance(tol) * mass)
            throw ComputationError("scalar mismatch: phi o M is not proportional to psi");
    return lambda;
}

}  // namespace

LineReport count_and_emit(const SeparableSurface& s, double tol) {
    const int d = s.degree();
    const PointSetP1 zphi = roots_p1(s.phi(), tol);
    const PointSetP1 zpsi = roots_p1(s.psi(), tol);
    const SurfaceForm surf = s.surface();

    LineReport rep;
    rep.degree = d;
    for (const auto& p : zphi.points)
        for (const auto& q : zpsi.points) {
            Eigen::Vector2cd a = p.homogeneous(), b = q.homogeneous();
            Vec4c u, v;
            u << a(0), a(1), 0, 0;
            v << 0, 0, b(0), b(1);
            rep.grid_lines.push_back(Line3::through(u, v));
        }

    const std::vector<Projectivity> maps = projectivities_between(zpsi, zphi, tol);
    for (const auto& sigma : maps) {
        Ruling r{sigma, scalar_of(s.phi(), s.psi(), sigma, tol), {}};
        const auto& m = sigma.matrix();
        for (Complex c : nth_roots(1.0 / r.lambda, d)) {
            Mat42c b;
            b << c * m(0, 0), c * m(0, 1), c * m(1, 0), c * m(1, 1), 1, 0, 0, 1;
            r.lines.push_back(Line3::from_basis(b));
        }
        std::sort(r.lines.begin(), r.lines.end(), plucker_less);
        rep.rulings.push_back(std::move(r));
    }
    std::sort(rep.grid_lines.begin(), rep.grid_lines.end(), plucker_less);

    rep.alpha = static_cast<int>(maps.size());
    rep.total = d * d + rep.alpha * d;
    if (s.phi() == s.psi()) rep.group = classify_group(maps, tol);

    const double real_tol = std::sqrt(tol);
    for (const auto& line : rep.all_lines()) {
        double res = containment_residual(surf, line);
        rep.max_residual = std::max(rep.max_residual, res);
        if (!(res < tol)) throw ComputationError("emitted line fails containment (residual " + std::to_string(res) + ")");
        if (line.is_real(real_tol)) ++rep.real_count;
    }
    return rep;
}

RealLineCount count_real_lines(const SeparableSurface& s, double tol) {
    if (!(s.phi() == s.psi())) throw InputError("real line count needs phi = psi");
    const int d = s.degree();
    LineReport rep = count_and_emit(s, tol);
    PointSetP1 z = roots_p1(s.phi(), tol);
    const double real_tol = std::sqrt(tol);
    RealLineCount out;
    out.count = rep.real_count;
    out.formula_applies = std::all_of(z.points.begin(), z.points.end(), [&](const PointP1& p) {
        return p.at_infinity || std::abs(p.value.imag()) <= real_tol * std::max(1.0, std::abs(p.value));
    });
    for (const auto& r : rep.rulings)
        if (r.sigma.is_real(real_tol)) ++out.real_projectivities;
    out.formula = (out.formula_applies ? d * d : 0) + out.real_projectivities * (d % 2 == 1 ? 1 : 2);
    return out;
}

long maximal_count(int d) {
    if (d < 3) throw InputError("maximal_count needs d >= 3");
    switch (d) {
        case 4: return 64;
        case 6: return 180;
        case 8: return 256;
        case 12: return 864;
        case 20: return 1600;
        default: return 3L * d * d;
    }
}

// ---------------------------------------------------------------------------------------
// Form construction

namespace {

MultiPoly X() { return MultiPoly::variable(2, 0); }
MultiPoly Y() { return MultiPoly::variable(2, 1); }
MultiPoly C(const Rational& c) { return MultiPoly::constant(2, c); }

MultiPoly xk_minus(int k, const Rational& lambda) { return X().pow(static_cast<unsigned>(k)) - lambda * Y().pow(static_cast<unsigned>(k)); }

// sum c * x^i y^(deg - i)
MultiPoly form(int deg, std::initializer_list<std::pair<long, int>> terms) {
    std::vector<Term> t;
    for (auto [c, i] : terms) t.push_back({Monomial{i, deg - i}, Rational(c)});
    return MultiPoly::from_terms(2, std::move(t));
}

MultiPoly jacobian(const MultiPoly& f, const MultiPoly& g) {
    return f.derivative(0) * g.derivative(1) - f.derivative(1) * g.derivative(0);
}

// Classical invariant forms.
MultiPoly tetra_a() { return form(4, {{1, 4}, {-1, 1}}); }       // x(x^3 - y^3)
MultiPoly tetra_b() { return form(4, {{8, 3}, {1, 0}}); }        // y(8x^3 + y^3)
MultiPoly octa_v() { return form(6, {{1, 5}, {-1, 1}}); }        // xy(x^4 - y^4)
MultiPoly octa_f() { return form(8, {{1, 8}, {14, 4}, {1, 0}}); }
MultiPoly octa_e() { return form(12, {{1, 12}, {-33, 8}, {-33, 4}, {1, 0}}); }
MultiPoly ico_f() { return form(12, {{1, 11}, {11, 6}, {-1, 1}}); }
MultiPoly ico_h() { return form(20, {{-1, 20}, {-1, 0}, {228, 15}, {-228, 5}, {-494, 10}}); }
MultiPoly ico_t() { return form(30, {{1, 30}, {1, 0}, {522, 25}, {-522, 5}, {-10005, 20}, {-10005, 10}}); }

class Params {
  public:
    explicit Params(std::uint64_t seed) : rng_(seed) {}
    // Nonzero rational away from +-1 and distinct from earlier draws.
    Rational next() {
        std::uniform_int_distribution<int> num(2, 61), den(1, 17), sign(0, 1);
        while (true) {
            Rational r(num(rng_), den(rng_));
            r.canonicalize();
            if (sign(rng_)) r = -r;
            if (abs(r) == 1) continue;
            if (std::find(seen_.begin(), seen_.end(), r) != seen_.end()) continue;
            seen_.push_back(r);
            return r;
        }
    }

  private:
    std::mt19937_64 rng_;
    std::vector<Rational> seen_;
};

MultiPoly power(const MultiPoly& p, int e) { return e == 0 ? C(1) : p.pow(static_cast<unsigned>(e)); }

struct Recipe {
    std::string description;
    std::function<MultiPoly(Params&)> make;
};

std::vector<Recipe> recipes(int d, const GroupTag& tag, std::string& why) {
    using K = GroupTag::Kind;
    std::vector<Recipe> out;
    std::ostringstream reason;
    const int k = tag.k;
    switch (tag.kind) {
        case K::Trivial:
            if (d >= 5)
                out.push_back({"generic", [d](Params& p) {
                                   MultiPoly f = C(1);
                                   for (int i = 0; i < d; ++i) f = f * (X() - p.next() * Y());
                                   return f;
                               }});
            reason << "trivial group needs d >= 5 (three or four points always have symmetries)";
            break;
        case K::Cyclic:
            for (int a = 0; a <= 2; ++a) {
                if (k < 2 || d - a < k || (d - a) % k != 0) continue;
                const int beta = (d - a) / k;
                if ((a == 0 || a == 2) && beta < 3) continue;
                if (a == 1 && d < 5) continue;
                out.push_back({"cyclic", [a, beta, k](Params& p) {
                                   MultiPoly f = a == 0 ? C(1) : a == 1 ? X() : X() * Y();
                                   for (int i = 0; i < beta; ++i) f = f * xk_minus(k, p.next());
                                   return f;
                               }});
            }
            reason << "cyclic:" << k << " needs d = beta*k (beta >= 3), d = 1 + beta*k >= 5, or d = 2 + beta*k (beta >= 3)";
            break;
        case K::Dihedral:
            for (int gamma = 0; 2 * k * gamma <= d; ++gamma)
                for (int a = 0; a <= 1; ++a)
                    for (int b = 0; b <= 1; ++b) {
                        if (k < 2 || 2 * a + b * k + 2 * k * gamma != d) continue;
                        if (gamma == 0 && b == 0) continue;
                        if (gamma == 0 && a == 1 && (k == 2 || k == 4)) continue;
                        out.push_back({"dihedral", [a, b, gamma, k](Params& p) {
                                           MultiPoly f = a ? X() * Y() : C(1);
                                           if (b) f = f * xk_minus(k, 1);
                                           for (int i = 0; i < gamma; ++i) {
                                               Rational l = p.next();
                                               f = f * xk_minus(k, l) * xk_minus(k, 1 / l);
                                           }
                                           return f;
                                       }});
                    }
            reason << "dihedral:" << k << " needs d = 2a + b*k + 2k*g with a, b in {0,1}, not (g = 0, b = 0), k != 2, 4 when (g = 0, a = 1)";
            break;
        case K::Tetrahedral:
            for (int g = 0; 12 * g <= d; ++g)
                for (int a = 0; a <= 2; ++a)
                    for (int b = 0; b <= 1; ++b) {
                        if (4 * a + 6 * b + 12 * g != d) continue;
                        if (g == 0 && a != 1) continue;
                        out.push_back({"tetrahedral", [a, b, g](Params& p) {
                                           MultiPoly f = power(tetra_a(), a >= 1 ? 1 : 0) * power(tetra_b(), a == 2 ? 1 : 0);
                                           if (b) f = f * jacobian(tetra_a(), tetra_b());
                                           for (int i = 0; i < g; ++i) f = f * (tetra_a().pow(3) + p.next() * tetra_b().pow(3));
                                           return f;
                                       }});
                    }
            reason << "T needs d = 4a + 6b + 12g with a in {0,1,2}, b in {0,1}, and a = 1 when g = 0";
            break;
        case K::Octahedral:
            for (int dl = 0; 24 * dl <= d; ++dl)
                for (int mask = 0; mask < 8; ++mask) {
                    int a = mask & 1, b = (mask >> 1) & 1, c = (mask >> 2) & 1;
                    if (6 * a + 8 * b + 12 * c + 24 * dl != d) continue;
                    out.push_back({"octahedral", [a, b, c, dl](Params& p) {
                                       MultiPoly f = power(octa_v(), a) * power(octa_f(), b) * power(octa_e(), c);
                                       for (int i = 0; i < dl; ++i) f = f * (octa_f().pow(3) + p.next() * octa_v().pow(4));
                                       return f;
                                   }});
                }
            reason << "O needs d = 6a + 8b + 12c + 24e with a, b, c in {0,1}";
            break;
        case K::Icosahedral:
            for (int dl = 0; 60 * dl <= d; ++dl)
                for (int mask = 0; mask < 8; ++mask) {
                    int a = mask & 1, b = (mask >> 1) & 1, c = (mask >> 2) & 1;
                    if (12 * a + 20 * b + 30 * c + 60 * dl != d) continue;
                    out.push_back({"icosahedral", [a, b, c, dl](Params& p) {
                                       MultiPoly f = power(ico_f(), a) * power(ico_h(), b) * power(ico_t(), c);
                                       for (int i = 0; i < dl; ++i) f = f * (ico_h().pow(3) + p.next() * ico_f().pow(5));
                                       return f;
                                   }});
                }
            reason << "I needs d = 12a + 20b + 30c + 60e with a, b, c in {0,1}";
            break;
    }
    why = reason.str();
    return out;
}

}  // namespace

BinaryForm build_form(int d, const GroupTag& tag, std::uint64_t seed) {
    if (d < 3) throw InputError("degree must be at least 3");
    std::string why;
    const auto options = recipes(d, tag, why);
    if (options.empty()) throw InputError("inadmissible (d = " + std::to_string(d) + ", " + tag.to_string() + "): " + why);
    constexpr int kAttempts = 12;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        for (const auto& r : options) {
            Params params(seed + static_cast<std::uint64_t>(attempt) * 7919);
            BinaryForm f = BinaryForm::from_poly(r.make(params));
            try {
                PointSetP1 z = roots_p1(f);
                GroupTag got = classify_group(projectivities_between(z, z));
                if (got == tag) return f;
            } catch (const InputError&) {
                // A parameter choice produced a repeated zero; try the next one.
            }
        }
    }
    throw ComputationError("could not realize " + tag.to_string() + " in degree " + std::to_string(d));
}

}  // namespace fano
