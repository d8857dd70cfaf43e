#include "fano/plucker_enum.hpp"

#include "fano/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

namespace fano {

namespace {

// Column entry: constant, or +-variable.
struct Entry {
    int var;  // -1 for a constant
    int value;  // the constant, or the sign of the variable
};

struct Cell {
    std::vector<std::string> vars;
    std::array<std::array<Entry, 4>, 2> cols;
};

constexpr Entry k0{-1, 0}, k1{-1, 1};
constexpr Entry pos(int v) { return {v, 1}; }
constexpr Entry neg(int v) { return {v, -1}; }

const Cell& cell(int stratum) {
    static const std::array<Cell, kStrata> cells = {{
        // p12 = 1: x = u, y = v, z = -p23 u + p13 v, t = -p24 u + p14 v
        {{"c", "d", "g", "h"}, {{{k1, k0, neg(0), neg(1)}, {k0, k1, pos(2), pos(3)}}}},
        // p12 = 0, p13 = 1
        {{"p23", "p34", "p14"}, {{{k1, pos(0), k0, neg(1)}, {k0, k0, k1, pos(2)}}}},
        // p12 = p13 = 0, p14 = 1
        {{"p24", "p34"}, {{{k1, pos(0), pos(1), k0}, {k0, k0, k0, k1}}}},
        // p1j = 0, p23 = 1
        {{"p34", "p24"}, {{{k0, k1, k0, neg(0)}, {k0, k0, k1, pos(1)}}}},
        // p1j = p23 = 0, p24 = 1
        {{"p34"}, {{{k0, k1, pos(0), k0}, {k0, k0, k0, k1}}}},
        // the line x = y = 0
        {{}, {{{k0, k0, k1, k0}, {k0, k0, k0, k1}}}},
    }};
    if (stratum < 1 || stratum > kStrata) throw InputError("stratum must be in 1..6");
    return cells[static_cast<std::size_t>(stratum - 1)];
}

MultiPoly entry_poly(const Entry& e, int nvars) {
    if (e.var < 0) return MultiPoly::constant(nvars, e.value);
    return MultiPoly::variable(nvars, e.var) * Rational(e.value);
}

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

StratumSystem build_stratum_system(const SurfaceForm& s, int stratum) {
    const Cell& c = cell(stratum);
    StratumSystem sys;
    sys.stratum = stratum;
    sys.var_names = c.vars;
    const int n = sys.nvars();
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t i = 0; i < 4; ++i) sys.columns[j][i] = entry_poly(c.cols[j][i], n);

    // Ring (vars..., u, v).
    const int m = n + 2;
    const MultiPoly u = MultiPoly::variable(m, n), v = MultiPoly::variable(m, n + 1);
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < 4; ++i)
        images.push_back(entry_poly(c.cols[0][i], m) * u + entry_poly(c.cols[1][i], m) * v);
    const MultiPoly restricted = s.poly().substitute(images);

    const int d = s.degree();
    std::vector<std::vector<Term>> parts(static_cast<std::size_t>(d) + 1);
    for (const auto& t : restricted.terms()) {
        Monomial mono(n);
        for (int k = 0; k < n; ++k) mono.set(k, t.mono[k]);
        parts[static_cast<std::size_t>(t.mono[n])].push_back({mono, t.coeff});
    }
    for (auto& p : parts) sys.equations.push_back(MultiPoly::from_terms(n, std::move(p)));
    return sys;
}

std::string to_string(StratumCount::Status status) {
    switch (status) {
        case StratumCount::Status::Finite: return "finite";
        case StratumCount::Status::PositiveDimensional: return "positive-dimensional";
        case StratumCount::Status::BudgetExceeded: return "budget exceeded";
    }
    return {};
}

StratumCount count_stratum(const StratumSystem& sys, const GroebnerOptions& options, bool certify) {
    const auto t0 = std::chrono::steady_clock::now();
    StratumCount out;
    out.stratum = sys.stratum;
    std::vector<MultiPoly> gens;
    for (const auto& e : sys.equations)
        if (!e.is_zero()) gens.push_back(e);

    if (sys.nvars() == 0) {
        out.count = gens.empty() ? 1 : 0;
        out.certified_reduced = true;
        out.seconds = elapsed(t0);
        return out;
    }
    if (gens.empty()) {
        out.status = StratumCount::Status::PositiveDimensional;
        out.message = "every equation vanishes identically";
        out.seconds = elapsed(t0);
        return out;
    }
    try {
        GroebnerBasis gb = buchberger(gens, options);
        out.stats = gb.stats();
        auto dim = quotient_dimension(gb);
        if (!dim) {
            out.status = StratumCount::Status::PositiveDimensional;
        } else {
            out.count = *dim;
            if (out.count == 0) {
                out.certified_reduced = true;
            } else if (certify) {
                out.certified_reduced = true;
                for (int v = 0; v < sys.nvars(); ++v) {
                    out.eliminants.push_back(gb.minimal_polynomial(v));
                    if (!out.eliminants.back().is_squarefree()) out.certified_reduced = false;
                }
                if (!out.certified_reduced) out.message = "count with multiplicity (an eliminant is not squarefree)";
            }
        }
        out.basis = std::move(gb);
    } catch (const BudgetExceeded& e) {
        out.status = StratumCount::Status::BudgetExceeded;
        out.stats = e.stats();
        out.message = e.what();
    }
    out.seconds = elapsed(t0);
    return out;
}

LineCount count_lines(const SurfaceForm& s, const CountOptions& options) {
    if (s.degree() < 3) throw InputError("line counting needs degree >= 3");
    if (options.check_smooth && !is_smooth(s, options.groebner)) throw InputError("surface is singular");

    LineCount out;
    // Cheapest strata first.
    const std::array<int, kStrata> order{6, 5, 4, 3, 2, 1};
    unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, kStrata);
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(kStrata);
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < kStrata;) {
            const int k = order[i];
            try {
                out.strata[static_cast<std::size_t>(k - 1)] =
                    count_stratum(build_stratum_system(s, k), options.groebner, options.certify);
            } catch (...) {
                errors[static_cast<std::size_t>(k - 1)] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    out.complete = true;
    out.certified = true;
    for (const auto& st : out.strata) {
        if (st.status != StratumCount::Status::Finite) out.complete = false;
        if (!st.certified_reduced) out.certified = false;
        out.total += st.count;
    }
    return out;
}

bool is_smooth(const SurfaceForm& s, const GroebnerOptions& options) {
    std::vector<MultiPoly> partials;
    for (int i = 0; i < 4; ++i) {
        MultiPoly p = s.poly().derivative(i);
        if (!p.is_zero()) partials.push_back(std::move(p));
    }
    if (partials.empty()) return false;
    return buchberger(partials, options).is_zero_dimensional();
}

std::vector<Line3> emit_stratum_lines(const StratumSystem& sys, const StratumCount& count, std::uint64_t seed) {
    if (count.status != StratumCount::Status::Finite) throw InputError("lines can only be emitted for a finite stratum");
    std::vector<Line3> lines;
    if (count.count == 0) return lines;
    const int n = sys.nvars();
    auto column_point = [&](const std::vector<Complex>& x) {
        Mat42c b;
        for (int j = 0; j < 2; ++j)
            for (int i = 0; i < 4; ++i)
                b(i, j) = sys.columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)].evaluate(x);
        return b;
    };
    if (n == 0) {
        lines.push_back(Line3::from_basis(column_point({})));
        return lines;
    }
    if (!count.basis) throw InputError("stratum count carries no basis");
    const GroebnerBasis& gb = *count.basis;
    const auto std_monos = gb.standard_monomials();
    const std::size_t D = std_monos.size();
    const std::size_t one = static_cast<std::size_t>(std::find(std_monos.begin(), std_monos.end(), Monomial(n)) - std_monos.begin());

    // Transposed multiplication matrices: the evaluation vector (m_j(p))_j is a common
    // eigenvector with eigenvalue x_i(p).
    std::vector<Eigen::MatrixXd> mt;
    for (int v = 0; v < n; ++v) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(D), static_cast<Eigen::Index>(D));
        const auto cols = gb.multiplication_matrix(v);
        for (std::size_t j = 0; j < D; ++j)
            for (const auto& [i, c] : cols[j]) m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = c.get_d();
        mt.push_back(std::move(m));
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coef(0.5, 1.5);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(D), static_cast<Eigen::Index>(D));
    for (const auto& m : mt) a += coef(rng) * m;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a.cast<Complex>());
    if (es.info() != Eigen::Success) throw ComputationError("eigenvalue solver did not converge");

    std::vector<NumericPoly> eqs, jac;
    for (const auto& e : sys.equations) {
        eqs.emplace_back(e);
        for (int v = 0; v < n; ++v) jac.emplace_back(e.derivative(v));
    }
    const auto ne = static_cast<Eigen::Index>(eqs.size());
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(D); ++k) {
        Eigen::VectorXcd w = es.eigenvectors().col(k);
        if (std::abs(w(static_cast<Eigen::Index>(one))) < 1e-12) continue;
        std::vector<Complex> x(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            Eigen::VectorXcd mw = mt[static_cast<std::size_t>(v)].cast<Complex>() * w;
            x[static_cast<std::size_t>(v)] = mw(static_cast<Eigen::Index>(one)) / w(static_cast<Eigen::Index>(one));
        }
        for (int it = 0; it < 6; ++it) {
            Eigen::VectorXcd r(ne);
            Eigen::MatrixXcd J(ne, n);
            for (Eigen::Index e = 0; e < ne; ++e) {
                r(e) = eqs[static_cast<std::size_t>(e)].evaluate(x);
                for (int v = 0; v < n; ++v) J(e, v) = jac[static_cast<std::size_t>(e * n + v)].evaluate(x);
            }
            Eigen::VectorXcd dx = J.colPivHouseholderQr().solve(r);
            for (int v = 0; v < n; ++v) x[static_cast<std::size_t>(v)] -= dx(v);
            if (dx.norm() < 1e-15 * (1 + Eigen::Map<Eigen::VectorXcd>(x.data(), n).norm())) break;
        }
        lines.push_back(Line3::from_basis(column_point(x)));
    }
    std::sort(lines.begin(), lines.end(), plucker_less);
    return lines;
}

}  // namespace fano
