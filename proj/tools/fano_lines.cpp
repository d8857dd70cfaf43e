// fano-lines: count, enumerate and verify lines on smooth surfaces in P^3.

#include "fano/bounds.hpp"
#include "fano/catalog.hpp"
#include "fano/covering.hpp"
#include "fano/errors.hpp"
#include "fano/parse.hpp"
#include "fano/plucker_enum.hpp"
#include "fano/separable.hpp"
#include "fano/skew.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

using json = nlohmann::json;
using namespace fano;

namespace {

constexpr const char* kSchema = "fano-lines/1";

struct Config {
    double tol = 1e-8;
    std::uint64_t seed = 0;
    std::size_t budget = 1'000'000;
    unsigned threads = 0;
    std::string format = "json";
    std::string catalog;
};

std::string num(double x) {
    if (x == 0 || std::isnan(x)) return std::isnan(x) ? "nan" : "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

json cnum(Complex z) { return json::array({num(z.real()), num(z.imag())}); }

json line_json(const Line3& l, const SurfaceForm* s) {
    json j;
    json p = json::array();
    for (Complex c : l.plucker()) p.push_back(cnum(c));
    j["plucker"] = p;
    if (s) j["residual"] = num(containment_residual(*s, l));
    return j;
}

json lines_json(const std::vector<Line3>& lines, const SurfaceForm* s) {
    json a = json::array();
    for (const auto& l : lines) a.push_back(line_json(l, s));
    return a;
}

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("FANO_LINES_THREADS"); env && *env) {
        try {
            int v = std::stoi(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        throw InputError("FANO_LINES_THREADS must be a positive integer");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

GroebnerOptions groebner_options(const Config& c) {
    GroebnerOptions o;
    o.max_pair_reductions = c.budget;
    return o;
}

Catalog load_catalog(const Config& c) { return Catalog::load(c.catalog.empty() ? Catalog::default_path() : c.catalog); }

/// A catalog name or an expression in x, y, z, t.
SurfaceForm resolve_surface(const std::string& text, const Config& c, std::string& expr) {
    expr = text;
    bool looks_named = text.find_first_of("+-*^() ") == std::string::npos;
    if (looks_named) {
        Catalog cat = load_catalog(c);
        if (auto e = cat.lookup(text)) expr = *e;
    }
    return SurfaceForm(parse_poly(expr, VarNames::xyzt()));
}

BinaryForm parse_binary(const std::string& text) {
    try {
        return BinaryForm::from_poly(parse_poly(text, VarNames::xy()));
    } catch (const ParseError&) {
        return BinaryForm::from_poly(parse_poly(text, VarNames{{"z", "t"}}));
    }
}

void emit(const json& j, const std::string& table, const Config& c) {
    if (c.format == "table")
        std::cout << table;
    else
        std::cout << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------------------

int run_separable(const Config& c, const std::string& phi_text, const std::string& psi_text, bool real, bool emit_lines) {
    SeparableSurface s(parse_binary(phi_text), parse_binary(psi_text));
    LineReport rep = count_and_emit(s, c.tol);
    const SurfaceForm surf = s.surface();

    json j;
    j["schema"] = kSchema;
    j["command"] = "lines separable";
    j["surface"] = to_string(surf.poly(), VarNames::xyzt());
    j["degree"] = rep.degree;
    j["grid_lines"] = rep.grid_lines.size();
    j["alpha"] = rep.alpha;
    j["total"] = rep.total;
    j["identity"] = rep.total == rep.degree * rep.degree + rep.alpha * rep.degree;
    j["group"] = rep.group ? json(rep.group->to_string()) : json(nullptr);
    j["max_residual"] = num(rep.max_residual);
    json rulings = json::array();
    for (const auto& r : rep.rulings) {
        const auto& m = r.sigma.matrix();
        rulings.push_back({{"matrix", {cnum(m(0, 0)), cnum(m(0, 1)), cnum(m(1, 0)), cnum(m(1, 1))}}, {"lambda", cnum(r.lambda)}});
    }
    j["rulings"] = rulings;
    std::ostringstream t;
    t << "degree " << rep.degree << "  grid " << rep.grid_lines.size() << "  alpha " << rep.alpha << "  total " << rep.total;
    if (rep.group) t << "  group " << rep.group->to_string();
    t << "\n";
    if (real) {
        RealLineCount rc = count_real_lines(s, c.tol);
        j["real"] = {{"count", rc.count},
                     {"formula", rc.formula},
                     {"formula_applies", rc.formula_applies},
                     {"real_projectivities", rc.real_projectivities}};
        t << "real lines " << rc.count << "  formula " << rc.formula << (rc.formula_applies ? "" : " (not applicable)") << "\n";
    }
    if (emit_lines) j["lines"] = lines_json(rep.all_lines(), &surf);
    emit(j, t.str(), c);
    return 0;
}

int run_plucker(const Config& c, const std::string& surface, bool emit_lines, bool skip_smooth) {
    std::string expr;
    SurfaceForm s = resolve_surface(surface, c, expr);
    CountOptions o;
    o.groebner = groebner_options(c);
    o.check_smooth = !skip_smooth;
    o.threads = resolve_threads(c.threads);
    LineCount lc = count_lines(s, o);

    json j;
    j["schema"] = kSchema;
    j["command"] = "lines plucker";
    j["surface"] = to_string(s.poly(), VarNames::xyzt());
    j["degree"] = s.degree();
    j["total"] = lc.total;
    j["complete"] = lc.complete;
    j["certified"] = lc.certified;
    json strata = json::object(), details = json::array();
    std::ostringstream t;
    for (const auto& st : lc.strata) {
        const std::string key = std::to_string(st.stratum);
        if (st.status == StratumCount::Status::Finite)
            strata[key] = st.count;
        else
            strata[key] = nullptr;
        json d = {{"stratum", st.stratum},
                  {"status", to_string(st.status)},
                  {"count", st.count},
                  {"certified_reduced", st.certified_reduced},
                  {"pairs_reduced", st.stats.pairs_reduced},
                  {"max_basis_size", st.stats.max_basis_size}};
        json elim = json::array();
        for (const auto& e : st.eliminants) elim.push_back(e.degree());
        d["eliminant_degrees"] = elim;
        if (!st.message.empty()) d["message"] = st.message;
        details.push_back(d);
        t << "stratum " << st.stratum << "  " << to_string(st.status) << "  " << st.count << (st.certified_reduced ? "  certified" : "")
          << "  " << num(st.seconds) << " s\n";
    }
    j["strata"] = strata;
    j["stratum_details"] = details;
    t << "total " << lc.total << (lc.complete ? "" : " (incomplete)") << "\n";

    if (emit_lines && lc.complete) {
        std::vector<Line3> all;
        for (const auto& st : lc.strata) {
            if (st.count == 0) continue;
            auto sys = build_stratum_system(s, st.stratum);
            auto ls = emit_stratum_lines(sys, st, c.seed);
            all.insert(all.end(), ls.begin(), ls.end());
        }
        std::sort(all.begin(), all.end(), plucker_less);
        j["lines"] = lines_json(all, &s);
    }
    emit(j, t.str(), c);
    if (!lc.complete) {
        std::cerr << "error: some strata did not finish (raise --budget)\n";
        return 2;
    }
    return 0;
}

std::string kind_name(InflectionPoint::Kind k) {
    switch (k) {
        case InflectionPoint::Kind::Total: return "total";
        case InflectionPoint::Kind::Ordinary: return "ordinary";
        case InflectionPoint::Kind::Undetermined: return "undetermined";
    }
    return "?";
}

int run_covering(const Config& c, const std::string& curve, bool emit_lines) {
    PlaneCurve pc(parse_poly(curve, VarNames::xyz()));
    InflectionReport rep = total_inflections(pc, c.tol, c.seed);
    const SurfaceForm surf = pc.covering_surface();

    json j;
    j["schema"] = kSchema;
    j["command"] = "covering";
    j["curve"] = to_string(pc.poly(), VarNames::xyz());
    j["surface"] = to_string(surf.poly(), VarNames::xyzt());
    j["degree"] = pc.degree();
    j["beta"] = rep.beta;
    j["line_count"] = rep.lines.size();
    j["undetermined"] = rep.undetermined;
    j["max_line_residual"] = num(rep.max_line_residual);
    json cands = json::array();
    for (const auto& p : rep.candidates) {
        json pt = json::array();
        for (int i = 0; i < 3; ++i) pt.push_back(cnum(p.point(i)));
        cands.push_back({{"point", pt}, {"multiplicity", p.multiplicity}, {"kind", kind_name(p.kind)}, {"residual", num(p.residual)}});
    }
    j["candidates"] = cands;
    if (emit_lines) j["lines"] = lines_json(rep.lines, &surf);
    std::ostringstream t;
    t << "degree " << pc.degree() << "  candidates " << rep.candidates.size() << "  beta " << rep.beta << "  lines " << rep.lines.size();
    if (rep.undetermined) t << "  undetermined " << rep.undetermined;
    t << "\n";
    emit(j, t.str(), c);
    return 0;
}

json skew_bounds_json(const SkewBounds& b) {
    return {{"miyaoka", b.miyaoka},
            {"rams_old", b.rams_old},
            {"this_construction", b.this_construction},
            {"known_max", b.known_max ? json(*b.known_max) : json("open")}};
}

int run_skew(const Config& c, int d, bool emit_lines) {
    SkewFamily f = rams_family(d, c.tol, resolve_threads(c.threads));
    json j;
    j["schema"] = kSchema;
    j["command"] = "skew rams";
    j["degree"] = d;
    j["surface"] = to_string(f.surface.poly(), VarNames::xyzt());
    j["count"] = f.lines.size();
    j["claimed"] = f.claimed_size;
    j["disjoint"] = f.check.ok;
    j["min_margin"] = num(f.check.min_margin);
    j["max_residual"] = num(f.check.max_residual);
    j["bounds"] = skew_bounds_json(skew_bounds(d));
    if (emit_lines) j["lines"] = lines_json(f.lines, &f.surface);
    std::ostringstream t;
    t << "degree " << d << "  lines " << f.lines.size() << "  disjoint " << (f.check.ok ? "yes" : "no") << "  min margin "
      << num(f.check.min_margin) << "  miyaoka " << skew_bounds(d).miyaoka << "\n";
    emit(j, t.str(), c);
    return 0;
}

int run_bounds(const Config& c, const std::vector<int>& ds) {
    json rows = json::array();
    std::ostringstream t;
    t << "   d   segre  uniform  per_line  separable  known  miyaoka\n";
    for (int d : ds) {
        BoundTable b = bound_table(d);
        UniformDerivation u = uniform_bound_derivation(d);
        rows.push_back({{"d", d},
                        {"segre", b.segre},
                        {"uniform", b.uniform},
                        {"per_line_cap", b.per_line_cap},
                        {"separable_max", b.separable_max},
                        {"known_max", b.known_max},
                        {"miyaoka", b.miyaoka},
                        {"derivation", {{"per_line", u.per_line}, {"off_plane_per_line", u.off_plane_per_line}, {"total", u.total}}}});
        char buf[120];
        std::snprintf(buf, sizeof buf, "%4d %7ld %8ld %9ld %10ld %6ld %8ld\n", d, b.segre, b.uniform, b.per_line_cap, b.separable_max,
                      b.known_max, b.miyaoka);
        t << buf;
    }
    json j = {{"schema", kSchema}, {"command", "bounds"}, {"rows", rows}};
    emit(j, t.str(), c);
    return 0;
}

int run_construct(const Config& c, int degree, const std::string& group) {
    GroupTag tag = GroupTag::parse(group);
    BinaryForm f = build_form(degree, tag, c.seed);
    LineReport rep = count_and_emit(SeparableSurface(f, f), c.tol);
    json coeffs = json::array();
    for (const auto& a : f.coeffs()) coeffs.push_back(to_string(a));
    json j = {{"schema", kSchema},
              {"command", "construct"},
              {"degree", degree},
              {"group", tag.to_string()},
              {"form", to_string(f.to_poly(), VarNames::xy())},
              {"coefficients", coeffs},
              {"alpha", rep.alpha},
              {"total", rep.total}};
    std::ostringstream t;
    t << to_string(f.to_poly(), VarNames::xy()) << "\ngroup " << tag.to_string() << "  alpha " << rep.alpha << "  lines on phi(x,y) = phi(z,t): "
      << rep.total << "\n";
    emit(j, t.str(), c);
    return 0;
}

int run_catalog(const Config& c) {
    Catalog cat = load_catalog(c);
    json entries = json::array();
    std::ostringstream t;
    for (const auto& e : cat.entries()) {
        entries.push_back({{"name", e.name}, {"expr", e.expr}, {"family", e.family}});
        t << e.name << " = " << e.expr << "\n";
    }
    json j = {{"schema", kSchema}, {"command", "catalog"}, {"entries", entries}};
    emit(j, t.str(), c);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Count, enumerate and verify lines on smooth surfaces in P^3"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--tol", cfg.tol, "Numerical tolerance")->check(CLI::Range(0.0, 1e-2))->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for generic choices")->capture_default_str();
    app.add_option("--budget", cfg.budget, "Cap on S-pair reductions per Groebner basis")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--threads", cfg.threads, "Worker threads (default: FANO_LINES_THREADS or all cores)");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
    app.add_option("--catalog", cfg.catalog, "Catalog file of named surfaces");

    auto* lines = app.add_subcommand("lines", "Count lines on a surface");
    lines->require_subcommand(1);
    auto* sep = lines->add_subcommand("separable", "Surface phi(x,y) = psi(z,t)");
    std::string phi, psi;
    bool real = false, emit_lines = false, skip_smooth = false;
    sep->add_option("--phi", phi, "Binary form in x, y")->required();
    sep->add_option("--psi", psi, "Binary form in z, t (or x, y)")->required();
    sep->add_flag("--real", real, "Also count real lines");
    sep->add_flag("--emit", emit_lines, "List the lines");

    auto* pl = lines->add_subcommand("plucker", "Exact count over the Plücker strata");
    std::string surface;
    pl->add_option("--surface", surface, "Expression in x, y, z, t or a catalog name")->required();
    pl->add_flag("--emit", emit_lines, "List the lines");
    pl->add_flag("--skip-smooth-check", skip_smooth, "Do not test smoothness first");

    auto* cov = app.add_subcommand("covering", "Lines on t^d = f(x,y,z)");
    std::string curve;
    cov->add_option("--curve", curve, "Plane curve in x, y, z")->required();
    cov->add_flag("--emit", emit_lines, "List the lines");

    auto* skew = app.add_subcommand("skew", "Skew line families");
    skew->require_subcommand(1);
    auto* rams = skew->add_subcommand("rams", "The d(d-2)+4 disjoint lines on R_d");
    int skew_d = 0;
    rams->add_option("--d", skew_d, "Degree (odd, at least 7)")->required();
    rams->add_flag("--emit", emit_lines, "List the lines");

    auto* bounds = app.add_subcommand("bounds", "Upper bounds for the number of lines");
    std::vector<int> bound_ds{4, 5, 6, 7, 8, 9, 10, 11, 12, 20};
    bounds->add_option("--d", bound_ds, "Degrees (default 4..12 and 20)");

    auto* cons = app.add_subcommand("construct", "Binary form with a given automorphism group");
    int cons_degree = 0;
    std::string group;
    cons->add_option("--degree", cons_degree, "Degree")->required();
    cons->add_option("--group", group, "trivial, cyclic:k, dihedral:k, T, O or I")->required();

    auto* cat = app.add_subcommand("catalog", "List the named surfaces");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sep->parsed()) return run_separable(cfg, phi, psi, real, emit_lines);
        if (pl->parsed()) return run_plucker(cfg, surface, emit_lines, skip_smooth);
        if (cov->parsed()) return run_covering(cfg, curve, emit_lines);
        if (rams->parsed()) return run_skew(cfg, skew_d, emit_lines);
        if (bounds->parsed()) return run_bounds(cfg, bound_ds);
        if (cons->parsed()) return run_construct(cfg, cons_degree, group);
        if (cat->parsed()) return run_catalog(cfg);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
