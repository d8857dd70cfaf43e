#include "fano/skew.hpp"

#include "fano/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

namespace fano {

SurfaceForm rams_surface(int d) {
    if (d < 3) throw InputError("R_d needs d >= 3");
    auto v = [](int i) { return MultiPoly::variable(4, i); };
    const unsigned e = static_cast<unsigned>(d - 1);
    return SurfaceForm(v(0).pow(e) * v(1) + v(0) * v(1).pow(e) + v(2).pow(e) * v(3) + v(2) * v(3).pow(e));
}

double pairing_margin(const Line3& a, const Line3& b) {
    double na = 0, nb = 0;
    for (int i = 0; i < 6; ++i) {
        na += std::norm(a.plucker()[static_cast<std::size_t>(i)]);
        nb += std::norm(b.plucker()[static_cast<std::size_t>(i)]);
    }
    return std::abs(plucker_pairing(a.plucker(), b.plucker())) / std::sqrt(na * nb);
}

bool lines_disjoint(const Line3& a, const Line3& b, double tol) { return pairing_margin(a, b) > tol; }

bool lines_disjoint(const std::array<std::array<Rational, 4>, 2>& a, const std::array<std::array<Rational, 4>, 2>& b) {
    // Gaussian elimination on the rows a0, a1, b0, b1.
    std::array<std::array<Rational, 4>, 4> m{a[0], a[1], b[0], b[1]};
    for (int c = 0; c < 4; ++c) {
        int piv = c;
        while (piv < 4 && sgn(m[static_cast<std::size_t>(piv)][static_cast<std::size_t>(c)]) == 0) ++piv;
        if (piv == 4) return false;
        std::swap(m[static_cast<std::size_t>(c)], m[static_cast<std::size_t>(piv)]);
        for (int r = c + 1; r < 4; ++r) {
            auto& row = m[static_cast<std::size_t>(r)];
            const auto& top = m[static_cast<std::size_t>(c)];
            Rational f = row[static_cast<std::size_t>(c)] / top[static_cast<std::size_t>(c)];
            for (int k = c; k < 4; ++k) row[static_cast<std::size_t>(k)] -= f * top[static_cast<std::size_t>(k)];
        }
    }
    return true;
}

SkewCheck verify_skew_set(const SurfaceForm& s, const std::vector<Line3>& lines, double tol, unsigned threads) {
    SkewCheck out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        double r = containment_residual(s, lines[i]);
        out.max_residual = std::max(out.max_residual, r);
        if (!(r < tol) && !out.bad_line) out.bad_line = i;
    }

    // Rows i are dealt round-robin to the workers; each keeps its own minimum and first
    // violating pair, merged in row order afterwards.
    struct Partial {
        double min_margin = std::numeric_limits<double>::infinity();
        std::optional<std::pair<std::size_t, std::size_t>> bad;
    };
    const unsigned nw = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(lines.size())));
    std::vector<Partial> parts(nw);
    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < lines.size(); i += nw)
            for (std::size_t j = i + 1; j < lines.size(); ++j) {
                double m = pairing_margin(lines[i], lines[j]);
                parts[w].min_margin = std::min(parts[w].min_margin, m);
                if (!(m > tol) && (!parts[w].bad || std::pair{i, j} < *parts[w].bad)) parts[w].bad = std::pair{i, j};
            }
    };
    if (nw == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < nw; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (const auto& p : parts) {
        out.min_margin = std::min(out.min_margin, p.min_margin);
        if (p.bad && (!out.bad_pair || *p.bad < *out.bad_pair)) out.bad_pair = p.bad;
    }

    if (out.bad_line) {
        out.ok = false;
        out.message = "line " + std::to_string(*out.bad_line) + " is not on the surface";
    } else if (out.bad_pair) {
        out.ok = false;
        out.message = "lines " + std::to_string(out.bad_pair->first) + " and " + std::to_string(out.bad_pair->second) + " meet";
    }
    return out;
}

SkewFamily rams_family(int d, double tol, unsigned threads) {
    if (d < 7 || d % 2 == 0)
        throw InputError("rams family needs d >= 7 with gcd(d, d-2) = 1, i.e. d odd (got d = " + std::to_string(d) + ")");
    SkewFamily fam{d, rams_surface(d), {}, d * (d - 2) + 4, {}};
    const Complex eps = std::polar(1.0, 2 * std::numbers::pi / (d - 2));
    const Complex gam = std::polar(1.0, 2 * std::numbers::pi / d);
    for (int l = 0; l <= d - 3; ++l)
        for (int s = 0; s <= d - 1; ++s) {
            const Complex eta = std::pow(eps, l) * std::pow(gam, s);
            Vec4c p(0, 1, 0, -std::pow(eta, d - 1));
            Vec4c q(-eta, 0, 1, 0);
            fam.lines.push_back(Line3::through(p, q));
        }
    // {x=0, z+eps t=0}, {y=0, z+t=0}, {z=0, x+eps y=0}, {t=0, x+y=0}
    fam.lines.push_back(Line3::through(Vec4c(0, 1, 0, 0), Vec4c(0, 0, -eps, 1)));
    fam.lines.push_back(Line3::through(Vec4c(1, 0, 0, 0), Vec4c(0, 0, -1, 1)));
    fam.lines.push_back(Line3::through(Vec4c(-eps, 1, 0, 0), Vec4c(0, 0, 0, 1)));
    fam.lines.push_back(Line3::through(Vec4c(-1, 1, 0, 0), Vec4c(0, 0, 1, 0)));

    fam.check = verify_skew_set(fam.surface, fam.lines, tol, threads);
    if (!fam.check.ok) throw ComputationError("rams family verification failed: " + fam.check.message);
    return fam;
}

SkewBounds skew_bounds(int d) {
    if (d < 3) throw InputError("skew bounds need d >= 3");
    const long n = d;
    SkewBounds b;
    b.miyaoka = 2 * n * (n - 2);
    b.rams_old = n * (n - 2) + 2;
    b.this_construction = n * (n - 2) + 4;
    if (d == 3) b.known_max = 6;
    if (d == 4) b.known_max = 16;
    return b;
}

}  // namespace fano
