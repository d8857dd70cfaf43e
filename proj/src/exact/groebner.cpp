#include "fano/exact/groebner.hpp"

#include "fano/exact/univariate.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace fano {

namespace {

struct ITerm {
    Monomial m;
    Integer c;
};

// Integer polynomial sorted by descending monomial order; positive leading coefficient
// once normalized.
struct IntPoly {
    std::vector<ITerm> terms;
    int sugar = 0;
    // Total coefficient size in bits; reducers with small weight are preferred.
    std::size_t weight = 0;

    void update_weight() {
        weight = 0;
        for (const auto& t : terms) weight += mpz_sizeinbase(t.c.get_mpz_t(), 2);
    }
    bool zero() const { return terms.empty(); }
    const Monomial& lm() const { return terms.front().m; }
    const Integer& lc() const { return terms.front().c; }
};

class Order {
  public:
    explicit Order(MonomialOrder o) : order_(o) {}
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b, order_) > 0; }
    int cmp(const Monomial& a, const Monomial& b) const { return compare(a, b, order_); }
    MonomialOrder kind() const { return order_; }

  private:
    MonomialOrder order_;
};

Integer content(const std::vector<ITerm>& terms) {
    Integer g = 0;
    for (const auto& t : terms) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Divides by content and fixes the sign of the leading coefficient. Returns the factor divided out
// (signed), so that new = old / factor.
Integer make_primitive(IntPoly& p) {
    if (p.zero()) return 1;
    Integer g = content(p.terms);
    if (sgn(p.lc()) < 0) g = -g;
    if (g != 1)
        for (auto& t : p.terms) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    return g;
}

IntPoly to_int_poly(const MultiPoly& p, const Order& order, Rational* scale_out = nullptr) {
    Integer den_lcm = 1;
    for (const auto& t : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    IntPoly out;
    out.terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        Integer c = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
        out.terms.push_back({t.mono, std::move(c)});
    }
    std::sort(out.terms.begin(), out.terms.end(), [&](const ITerm& a, const ITerm& b) { return order.greater(a.m, b.m); });
    out.sugar = p.is_zero() ? 0 : p.degree();
    // int_poly = den_lcm * p
    if (scale_out) *scale_out = Rational(den_lcm);
    return out;
}

MultiPoly to_multi_poly(const IntPoly& p, int nvars, const Rational& divide_by = 1) {
    std::vector<Term> terms;
    terms.reserve(p.terms.size());
    for (const auto& t : p.terms) {
        Rational c(t.c);
        c /= divide_by;
        terms.push_back({t.m, std::move(c)});
    }
    return MultiPoly::from_terms(nvars, std::move(terms));
}

// Appends scale*a[from..] - mult*shift*b[1..] to out (both sorted).
void combine(std::vector<ITerm>& out, std::vector<ITerm>& a, std::size_t from, const Integer& scale, const Integer& mult,
             const Monomial& shift, const IntPoly& b, const Order& order) {
    std::size_t i = from, j = 1;
    const bool unit_scale = scale == 1;
    Integer tmp;
    while (i < a.size() || j < b.terms.size()) {
        if (j < b.terms.size()) {
            Monomial bm = b.terms[j].m * shift;
            int c = i < a.size() ? order.cmp(a[i].m, bm) : -1;
            if (c > 0) {
                if (!unit_scale) a[i].c *= scale;
                out.push_back(std::move(a[i++]));
            } else if (c < 0) {
                tmp = b.terms[j].c * mult;
                out.push_back({bm, -tmp});
                ++j;
            } else {
                if (!unit_scale) a[i].c *= scale;
                mpz_submul(a[i].c.get_mpz_t(), b.terms[j].c.get_mpz_t(), mult.get_mpz_t());
                if (sgn(a[i].c) != 0) out.push_back(std::move(a[i]));
                ++i;
                ++j;
            }
        } else {
            if (!unit_scale) a[i].c *= scale;
            out.push_back(std::move(a[i++]));
        }
    }
}

class Reducer {
  public:
    Reducer(const Order& order, const std::vector<IntPoly>& polys, const std::vector<std::size_t>& active)
        : order_(order), polys_(polys), active_(active) {}

    const IntPoly* find(const Monomial& m, std::size_t skip = SIZE_MAX) const {
        const IntPoly* best = nullptr;
        const std::uint32_t ms = m.support();
        for (std::size_t idx : active_) {
            if (idx == skip) continue;
            const IntPoly& g = polys_[idx];
            const Monomial& lm = g.lm();
            if ((lm.support() & ~ms) != 0) continue;
            if (!lm.divides(m)) continue;
            if (!best || g.weight < best->weight) best = &g;
        }
        return best;
    }

    // Fully (or top-) reduces p. Returns the rational factor r with p_new = r * NF(p_old).
    Rational reduce(IntPoly& p, bool full, std::size_t skip = SIZE_MAX) const {
        Rational factor = 1;
        std::vector<ITerm> done;
        std::vector<ITerm> rest = std::move(p.terms);
        std::vector<ITerm> next;
        std::size_t pos = 0;
        Integer g, a, b;
        unsigned since_content = 0;
        while (pos < rest.size()) {
            const IntPoly* red = find(rest[pos].m, skip);
            if (!red) {
                if (!full) break;
                done.push_back(std::move(rest[pos++]));
                continue;
            }
            mpz_gcd(g.get_mpz_t(), rest[pos].c.get_mpz_t(), red->lc().get_mpz_t());
            mpz_divexact(a.get_mpz_t(), rest[pos].c.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(b.get_mpz_t(), red->lc().get_mpz_t(), g.get_mpz_t());
            const Monomial shift = rest[pos].m / red->lm();
            p.sugar = std::max(p.sugar, red->sugar + shift.degree());
            next.clear();
            next.reserve(rest.size() - pos + red->terms.size());
            combine(next, rest, pos + 1, b, a, shift, *red, order_);
            if (b != 1) {
                for (auto& t : done) t.c *= b;
                factor *= Rational(b);
            }
            std::swap(rest, next);
            pos = 0;
            if (++since_content >= 8) {
                since_content = 0;
                Integer c = content(done);
                if (c != 1) {
                    for (const auto& t : rest) {
                        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
                        if (c == 1) break;
                    }
                }
                if (c > 1) {
                    for (auto& t : done) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
                    for (auto& t : rest) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
                    factor /= Rational(c);
                }
            }
        }
        for (std::size_t i = pos; i < rest.size(); ++i) done.push_back(std::move(rest[i]));
        p.terms = std::move(done);
        Integer c = make_primitive(p);
        factor /= Rational(c);
        return factor;
    }

  private:
    const Order& order_;
    const std::vector<IntPoly>& polys_;
    const std::vector<std::size_t>& active_;
};

struct CoefficientSwell {};

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int sugar;
};

class Engine {
  public:
    Engine(int nvars, const GroebnerOptions& opts, std::size_t swell_limit, GroebnerStats stats)
        : nvars_(nvars), opts_(opts), order_(opts.order), swell_limit_(swell_limit), stats_(stats) {
        start_ = std::chrono::steady_clock::now();
        trace_ = std::getenv("FANO_GB_TRACE") != nullptr;
    }

    GroebnerBasis run(std::span<const MultiPoly> generators) {
        std::vector<IntPoly> inputs;
        for (const auto& f : generators) {
            if (f.nvars() != nvars_) throw std::invalid_argument("buchberger: generators from different rings");
            if (f.is_zero()) continue;
            inputs.push_back(to_int_poly(f, order_));
            make_primitive(inputs.back());
        }
        std::stable_sort(inputs.begin(), inputs.end(),
                         [&](const IntPoly& a, const IntPoly& b) { return order_.greater(b.lm(), a.lm()); });
        for (auto& f : inputs) {
            Reducer(order_, polys_, active_).reduce(f, true);
            if (f.zero()) continue;
            if (insert(std::move(f))) return unit();
        }
        while (!pairs_.empty()) {
            check_budget();
            Pair pr = pop_pair();
            IntPoly s = spoly(polys_[pr.i], polys_[pr.j], pr.lcm);
            s.sugar = pr.sugar;
            ++stats_.pairs_reduced;
            Reducer(order_, polys_, active_).reduce(s, true);
            if (s.zero()) {
                ++stats_.zero_reductions;
                continue;
            }
            if (trace_ && stats_.pairs_reduced % 50 == 0) {
                std::size_t len = 0, bits = 0;
                for (auto idx : active_) {
                    len = std::max(len, polys_[idx].terms.size());
                    for (const auto& t : polys_[idx].terms) bits = std::max(bits, mpz_sizeinbase(t.c.get_mpz_t(), 2));
                }
                std::fprintf(stderr, "[gb] reduced=%zu pending=%zu basis=%zu sugar=%d maxlen=%zu maxbits=%zu\n",
                             stats_.pairs_reduced, pairs_.size(), active_.size(), pr.sugar, len, bits);
            }
            if (insert(std::move(s))) return unit();
        }
        return finish();
    }

  private:
    GroebnerBasis unit() const {
        return GroebnerBasis(nvars_, opts_.order, {MultiPoly::constant(nvars_, 1)}, stats_);
    }

    void check_budget() const {
        if (stats_.pairs_reduced >= opts_.max_pair_reductions)
            throw BudgetExceeded("groebner: pair-reduction budget exceeded", stats_, pairs_.size());
        if (opts_.time_limit.count() > 0 && std::chrono::steady_clock::now() - start_ > opts_.time_limit)
            throw BudgetExceeded("groebner: time budget exceeded", stats_, pairs_.size());
    }

    IntPoly spoly(const IntPoly& f, const IntPoly& g, const Monomial& lcm) const {
        Integer gg;
        mpz_gcd(gg.get_mpz_t(), f.lc().get_mpz_t(), g.lc().get_mpz_t());
        Integer a = g.lc() / gg, b = f.lc() / gg;
        // a * (lcm/lm f) * f - b * (lcm/lm g) * g, leading terms cancel
        const Monomial sf = lcm / f.lm(), sg = lcm / g.lm();
        std::vector<ITerm> left;
        left.reserve(f.terms.size());
        for (std::size_t k = 0; k < f.terms.size(); ++k) left.push_back({f.terms[k].m * sf, f.terms[k].c});
        IntPoly out;
        out.terms.reserve(f.terms.size() + g.terms.size());
        combine(out.terms, left, 1, a, b, sg, g, order_);
        make_primitive(out);
        return out;
    }

    Pair pop_pair() {
        auto better = [&](const Pair& x, const Pair& y) {
            if (opts_.strategy == PairStrategy::Sugar && x.sugar != y.sugar) return x.sugar < y.sugar;
            int c = order_.cmp(x.lcm, y.lcm);
            if (c != 0) return c < 0;
            if (x.j != y.j) return x.j < y.j;
            return x.i < y.i;
        };
        auto it = std::min_element(pairs_.begin(), pairs_.end(), better);
        Pair p = *it;
        *it = pairs_.back();
        pairs_.pop_back();
        return p;
    }

    // Gebauer-Moeller update. Returns true when h is a nonzero constant.
    bool insert(IntPoly h) {
        if (h.lm().is_one()) return true;
        const std::size_t hi = polys_.size();
        h.update_weight();
        if (swell_limit_ > 0) {
            for (const auto& t : h.terms)
                if (mpz_sizeinbase(t.c.get_mpz_t(), 2) > swell_limit_) throw CoefficientSwell{};
        }
        polys_.push_back(std::move(h));
        const IntPoly& hp = polys_[hi];
        const Monomial hlm = hp.lm();

        std::vector<Pair> cands;
        for (std::size_t g : active_) {
            const IntPoly& gp = polys_[g];
            Monomial l = hlm.lcm(gp.lm());
            int sugar = std::max(hp.sugar + (l.degree() - hlm.degree()), gp.sugar + (l.degree() - gp.lm().degree()));
            cands.push_back({g, hi, l, sugar});
        }
        std::vector<Pair> kept;
        std::vector<bool> in_c(cands.size(), true);
        for (std::size_t k = 0; k < cands.size(); ++k) {
            in_c[k] = false;
            const Pair& p = cands[k];
            bool coprime = polys_[p.i].lm().coprime(hlm);
            bool dominated = false;
            if (!coprime) {
                for (std::size_t q = 0; q < cands.size() && !dominated; ++q)
                    if (in_c[q] && cands[q].lcm.divides(p.lcm)) dominated = true;
                for (std::size_t q = 0; q < kept.size() && !dominated; ++q)
                    if (kept[q].lcm.divides(p.lcm)) dominated = true;
            }
            if (coprime || !dominated) kept.push_back(p);
        }
        std::erase_if(kept, [&](const Pair& p) { return polys_[p.i].lm().coprime(hlm); });

        std::erase_if(pairs_, [&](const Pair& p) {
            if (!hlm.divides(p.lcm)) return false;
            Monomial l1 = polys_[p.i].lm().lcm(hlm), l2 = polys_[p.j].lm().lcm(hlm);
            return l1 != p.lcm && l2 != p.lcm;
        });
        stats_.pairs_created += kept.size();
        pairs_.insert(pairs_.end(), kept.begin(), kept.end());

        std::erase_if(active_, [&](std::size_t g) { return hlm.divides(polys_[g].lm()); });
        active_.push_back(hi);
        // Keep tails reduced against the new element; keeps later reducers small.
        for (std::size_t g : active_) {
            if (g == hi) continue;
            IntPoly& gp = polys_[g];
            bool hit = std::any_of(gp.terms.begin() + 1, gp.terms.end(), [&](const ITerm& t) { return hlm.divides(t.m); });
            if (!hit) continue;
            Reducer(order_, polys_, active_).reduce(gp, true, g);
            gp.update_weight();
        }
        stats_.max_basis_size = std::max(stats_.max_basis_size, active_.size());
        return false;
    }

    GroebnerBasis finish() {
        std::vector<std::size_t> order = active_;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return order_.greater(polys_[b].lm(), polys_[a].lm()); });
        std::vector<MultiPoly> gens;
        for (std::size_t idx : order) {
            IntPoly p = polys_[idx];
            // Tail-reduce against the other basis elements; the leading term is already minimal.
            Reducer(order_, polys_, active_).reduce(p, true, idx);
            polys_[idx] = p;
            MultiPoly mp = to_multi_poly(p, nvars_);
            gens.push_back(mp.monic(opts_.order));
        }
        return GroebnerBasis(nvars_, opts_.order, std::move(gens), stats_);
    }

    int nvars_;
    GroebnerOptions opts_;
    Order order_;
    std::chrono::steady_clock::time_point start_;
    std::vector<IntPoly> polys_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;
    std::size_t swell_limit_;
    GroebnerStats stats_;
    bool trace_ = false;
};

}  // namespace

GroebnerBasis::GroebnerBasis(int nvars, MonomialOrder order, std::vector<MultiPoly> generators, GroebnerStats stats)
    : nvars_(nvars), order_(order), gens_(std::move(generators)), stats_(stats) {
    for (const auto& g : gens_) leads_.push_back(g.leading_term(order_).mono);
}

bool GroebnerBasis::is_unit_ideal() const {
    return std::any_of(leads_.begin(), leads_.end(), [](const Monomial& m) { return m.is_one(); });
}

bool GroebnerBasis::is_zero_dimensional() const {
    if (is_unit_ideal()) return true;
    for (int v = 0; v < nvars_; ++v) {
        bool found = std::any_of(leads_.begin(), leads_.end(), [&](const Monomial& m) { return m.pure_power_variable() == v; });
        if (!found) return false;
    }
    return true;
}

std::vector<Monomial> GroebnerBasis::standard_monomials() const {
    if (!is_zero_dimensional()) throw std::domain_error("standard monomials: ideal is not zero-dimensional");
    std::vector<Monomial> out;
    if (is_unit_ideal()) return out;
    std::vector<int> bound(static_cast<std::size_t>(nvars_), 0);
    for (const auto& m : leads_) {
        int v = m.pure_power_variable();
        if (v >= 0 && (bound[static_cast<std::size_t>(v)] == 0 || m[v] < bound[static_cast<std::size_t>(v)]))
            bound[static_cast<std::size_t>(v)] = m[v];
    }
    // Depth-first walk over the box; a monomial divisible by a leading monomial prunes
    // every multiple in the remaining coordinates.
    Monomial cur(nvars_);
    auto standard = [&](const Monomial& m) {
        return std::none_of(leads_.begin(), leads_.end(), [&](const Monomial& l) { return l.divides(m); });
    };
    std::function<void(int)> walk = [&](int v) {
        if (v == nvars_) {
            if (standard(cur)) out.push_back(cur);
            return;
        }
        for (int e = 0; e < bound[static_cast<std::size_t>(v)]; ++e) {
            cur.set(v, e);
            if (!standard(cur)) break;
            walk(v + 1);
        }
        cur.set(v, 0);
    };
    walk(0);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return compare(a, b, order_) < 0; });
    return out;
}

MultiPoly GroebnerBasis::normal_form(const MultiPoly& p) const { return fano::normal_form(p, gens_, order_); }

std::optional<MultiPoly> GroebnerBasis::univariate_generator(int var) const {
    for (const auto& g : gens_) {
        bool uni = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
            return t.mono.degree() == t.mono[var];
        });
        if (uni && g.degree() > 0) return g;
    }
    return std::nullopt;
}

std::vector<GroebnerBasis::SparseColumn> GroebnerBasis::multiplication_matrix(int var) const {
    const std::vector<Monomial> std_monos = standard_monomials();
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t i = 0; i < std_monos.size(); ++i) index.emplace(std_monos[i], i);

    Order ord(order_);
    std::vector<IntPoly> polys;
    std::vector<std::size_t> active;
    for (const auto& g : gens_) {
        polys.push_back(to_int_poly(g, ord));
        make_primitive(polys.back());
        polys.back().update_weight();
        active.push_back(polys.size() - 1);
    }
    const Reducer reducer(ord, polys, active);
    const Monomial x = Monomial::variable(nvars_, var);
    std::vector<SparseColumn> cols;
    for (const auto& m : std_monos) {
        const Monomial xm = x * m;
        SparseColumn col;
        if (auto it = index.find(xm); it != index.end()) {
            col.emplace_back(it->second, Rational(1));
        } else {
            IntPoly ip;
            ip.terms.push_back({xm, Integer(1)});
            Rational factor = reducer.reduce(ip, true);
            for (const auto& t : ip.terms) {
                Rational c(t.c);
                c /= factor;
                col.emplace_back(index.at(t.m), std::move(c));
            }
        }
        cols.push_back(std::move(col));
    }
    return cols;
}

UniPoly GroebnerBasis::minimal_polynomial(int var) const {
    if (auto g = univariate_generator(var)) return UniPoly::from_multi(*g, var).monic();
    if (is_unit_ideal()) return UniPoly({Rational(1)});
    const std::vector<Monomial> std_monos = standard_monomials();
    const std::size_t n = std_monos.size();
    const auto mat = multiplication_matrix(var);

    // Krylov sequence v_k = NF(x^k) with incremental elimination. Each stored row keeps
    // its pivot, the reduced vector and the combination of Krylov vectors producing it.
    struct Row {
        std::size_t pivot;
        std::vector<Rational> vec;
        std::vector<Rational> comb;
    };
    std::vector<Row> rows;
    std::vector<Rational> v(n);
    v[static_cast<std::size_t>(std::find(std_monos.begin(), std_monos.end(), Monomial(nvars_)) - std_monos.begin())] = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<Rational> r = v;
        std::vector<Rational> comb(k + 1);
        comb[k] = 1;
        for (const auto& row : rows) {
            if (sgn(r[row.pivot]) == 0) continue;
            Rational f = r[row.pivot] / row.vec[row.pivot];
            for (std::size_t i = 0; i < n; ++i)
                if (sgn(row.vec[i]) != 0) r[i] -= f * row.vec[i];
            for (std::size_t i = 0; i < row.comb.size(); ++i)
                if (sgn(row.comb[i]) != 0) comb[i] -= f * row.comb[i];
        }
        auto nz = std::find_if(r.begin(), r.end(), [](const Rational& c) { return sgn(c) != 0; });
        if (nz == r.end()) return UniPoly(std::move(comb)).monic();
        rows.push_back({static_cast<std::size_t>(nz - r.begin()), std::move(r), std::move(comb)});
        std::vector<Rational> next(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(v[j]) == 0) continue;
            for (const auto& [i, c] : mat[j]) next[i] += c * v[j];
        }
        v = std::move(next);
    }
    throw std::logic_error("minimal polynomial: no dependency found");
}

MultiPoly normal_form(const MultiPoly& p, std::span<const MultiPoly> divisors, MonomialOrder order) {
    if (p.is_zero()) return p;
    Order ord(order);
    std::vector<IntPoly> polys;
    std::vector<std::size_t> active;
    for (const auto& d : divisors) {
        if (d.nvars() != p.nvars()) throw std::invalid_argument("normal_form: ring mismatch");
        if (d.is_zero()) continue;
        polys.push_back(to_int_poly(d, ord));
        make_primitive(polys.back());
        polys.back().update_weight();
        active.push_back(polys.size() - 1);
    }
    Rational scale;
    IntPoly ip = to_int_poly(p, ord, &scale);
    Rational factor = Reducer(ord, polys, active).reduce(ip, true);
    // ip = factor * NF(scale * p) = factor * scale * NF(p)
    return to_multi_poly(ip, p.nvars(), factor * scale);
}

GroebnerBasis buchberger(std::span<const MultiPoly> generators, const GroebnerOptions& options) {
    if (generators.empty()) throw std::invalid_argument("buchberger: empty generator list");
    const int nvars = generators.front().nvars();
    if (options.strategy != PairStrategy::Auto) return Engine(nvars, options, 0, {}).run(generators);
    GroebnerStats stats;
    GroebnerOptions o = options;
    o.strategy = PairStrategy::Sugar;
    try {
        return Engine(nvars, o, options.swell_limit_bits, stats).run(generators);
    } catch (const CoefficientSwell&) {
        ++stats.restarts;
    }
    o.strategy = PairStrategy::Normal;
    return Engine(nvars, o, 0, stats).run(generators);
}

std::optional<std::size_t> quotient_dimension(const GroebnerBasis& basis) {
    if (!basis.is_zero_dimensional()) return std::nullopt;
    return basis.standard_monomials().size();
}

bool is_squarefree_univariate(const MultiPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree test of the zero polynomial");
    int var = -1;
    for (const auto& t : p.terms()) {
        for (int v = 0; v < p.nvars(); ++v) {
            if (t.mono[v] == 0) continue;
            if (var >= 0 && var != v) throw std::invalid_argument("squarefree test: polynomial is not univariate");
            var = v;
        }
    }
    if (var < 0) return true;  // nonzero constant
    return UniPoly::from_multi(p, var).is_squarefree();
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, MonomialOrder order) {
    const Term& lf = f.leading_term(order);
    const Term& lg = g.leading_term(order);
    Monomial l = lf.mono.lcm(lg.mono);
    return MultiPoly::monomial(l / lf.mono, 1 / lf.coeff) * f - MultiPoly::monomial(l / lg.mono, 1 / lg.coeff) * g;
}

}  // namespace fano
