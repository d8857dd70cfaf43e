#include "fano/exact/groebner.hpp"
#include "fano/exact/univariate.hpp"
#include "fano/parse.hpp"

#include <doctest.h>

#include <random>

using namespace fano;

namespace {

MultiPoly P(const char* s, const VarNames& v = VarNames::xyzt()) { return parse_poly(s, v); }

MultiPoly random_poly(std::mt19937_64& rng, int nvars, int maxdeg, int terms) {
    std::uniform_int_distribution<int> e(0, maxdeg), c(-9, 9), den(1, 4);
    std::vector<Term> ts;
    for (int i = 0; i < terms; ++i) {
        Monomial m(nvars);
        for (int v = 0; v < nvars; ++v) m.set(v, e(rng) / nvars);
        ts.push_back({m, make_rational(c(rng), den(rng))});
    }
    return MultiPoly::from_terms(nvars, std::move(ts));
}

}  // namespace

TEST_CASE("arithmetic against expanded forms") {
    const auto xy = VarNames::xy();
    CHECK(P("(x+y)^2", xy) == P("x^2+2xy+y^2", xy));
    CHECK(P("(x-y)(x+y)", xy) == P("x^2-y^2", xy));
    CHECK(P("(x+1/2)^3", xy) == P("x^3+3/2x^2+3/4x+1/8", xy));
    CHECK(P("x - x", xy).is_zero());
    CHECK(P("x^3y", xy).derivative(0) == P("3x^2y", xy));
}

TEST_CASE("parser") {
    const auto xy = VarNames::xy();
    MultiPoly klein = P("x^8+14x^4y^4+y^8", xy);
    CHECK(klein.size() == 3);
    CHECK(klein.coefficient(Monomial{4, 4}) == 14);

    // xy(x^10 + 11 x^5 y^5 - y^10) expanded by hand
    MultiPoly ico = P("xy(x^10+11x^5y^5-y^10)", xy);
    CHECK(ico == P("x^11y + 11x^6y^6 - xy^11", xy));
    CHECK(ico.degree() == 12);

    CHECK(P("2x^2y", xy) == P("2*x^2*y", xy));
    CHECK(P("-x^2", xy) == P("0 - x*x", xy));
    CHECK(P("2^3", xy) == P("8", xy));

    try {
        parse_poly("x^2(", xy);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
    }
    CHECK_THROWS_AS(parse_poly("x + w", xy), ParseError);
    CHECK_THROWS_AS(parse_poly("x^65", xy), ParseError);
    CHECK_NOTHROW(parse_poly("x^64", xy));
    CHECK_THROWS_AS(parse_poly("x +", xy), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0", xy), ParseError);
}

TEST_CASE("print and parse round trip") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        MultiPoly p = random_poly(rng, 4, 12, 1 + i % 9);
        CHECK(parse_poly(to_string(p, VarNames::xyzt()), VarNames::xyzt()) == p);
    }
    MultiPoly zero(4);
    CHECK(parse_poly(to_string(zero, VarNames::xyzt()), VarNames::xyzt()) == zero);
}

TEST_CASE("univariate gcd and squarefree part") {
    // (u-1)^2 (u+2)
    UniPoly a({Rational(2), Rational(-3), Rational(0), Rational(1)});
    CHECK_FALSE(a.is_squarefree());
    CHECK(a.squarefree_part() == UniPoly({Rational(-2), Rational(1), Rational(1)}));
    UniPoly b({Rational(-1), Rational(1)});
    CHECK(gcd(a, UniPoly({Rational(1), Rational(-2), Rational(1)})) == UniPoly({Rational(1), Rational(-2), Rational(1)}));
    auto [q, r] = a.divmod(b);
    CHECK(r.is_zero());
    CHECK(q * b == a);
}

TEST_CASE("groebner: counts checked against direct solutions") {
    const auto xy = VarNames::xy();
    SUBCASE("circle and diagonal meet twice") {
        std::vector<MultiPoly> g{P("x^2+y^2-1", xy), P("x-y", xy)};
        auto gb = buchberger(g);
        CHECK(quotient_dimension(gb) == 2);
        CHECK(gb.minimal_polynomial(0) == UniPoly({make_rational(-1, 2), Rational(0), Rational(1)}));
    }
    SUBCASE("double point counts twice") {
        std::vector<MultiPoly> g{P("y - x^2", xy), P("y", xy)};
        auto gb = buchberger(g);
        CHECK(quotient_dimension(gb) == 2);
        CHECK_FALSE(gb.minimal_polynomial(0).is_squarefree());
    }
    SUBCASE("unit ideal") {
        std::vector<MultiPoly> g{P("x", xy), P("x-1", xy)};
        auto gb = buchberger(g);
        CHECK(gb.is_unit_ideal());
        CHECK(quotient_dimension(gb) == 0);
    }
    SUBCASE("positive dimensional") {
        std::vector<MultiPoly> g{P("xy", xy)};
        auto gb = buchberger(g);
        CHECK_FALSE(gb.is_zero_dimensional());
        CHECK_FALSE(quotient_dimension(gb).has_value());
    }
    SUBCASE("cyclic-3 has 6 solutions") {
        // x, y, z are the three cube roots of unity in some order: 3! solutions
        const auto xyz = VarNames::xyz();
        std::vector<MultiPoly> g{P("x+y+z", xyz), P("xy+yz+zx", xyz), P("xyz-1", xyz)};
        for (auto order : {MonomialOrder::DegRevLex, MonomialOrder::Lex}) {
            GroebnerOptions o;
            o.order = order;
            auto gb = buchberger(g, o);
            CHECK(quotient_dimension(gb) == 6);
            CHECK(gb.minimal_polynomial(0) == UniPoly({Rational(-1), Rational(0), Rational(0), Rational(1)}));
        }
    }
    SUBCASE("budget") {
        const auto xyz = VarNames::xyz();
        std::vector<MultiPoly> g{P("x^3+y^3+z^3-1", xyz), P("x^2y+y^2z+z^2x-2", xyz), P("xyz+x+y+z-3", xyz)};
        GroebnerOptions o;
        o.max_pair_reductions = 2;
        CHECK_THROWS_AS(buchberger(g, o), BudgetExceeded);
    }
}

TEST_CASE("groebner: every S-polynomial reduces to zero") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<MultiPoly> g;
        for (int i = 0; i < 3; ++i) g.push_back(random_poly(rng, 3, 6, 3));
        for (auto order : {MonomialOrder::DegRevLex, MonomialOrder::Lex}) {
            GroebnerOptions o;
            o.order = order;
            auto gb = buchberger(g, o);
            const auto& b = gb.generators();
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = i + 1; j < b.size(); ++j)
                    CHECK(normal_form(s_polynomial(b[i], b[j], order), b, order).is_zero());
            // the input lies in the ideal
            for (const auto& p : g) CHECK(gb.normal_form(p).is_zero());
        }
    }
}

TEST_CASE("multiplication matrices commute") {
    const auto xyz = VarNames::xyz();
    std::vector<MultiPoly> g{P("x^2+y^2+z^2-3", xyz), P("xy-1", xyz), P("z^2-x", xyz)};
    auto gb = buchberger(g);
    auto n = quotient_dimension(gb);
    REQUIRE(n.has_value());
    auto basis = gb.standard_monomials();
    // x*(y*m) and y*(x*m) have the same normal form for every standard monomial m
    for (const auto& m : basis) {
        MultiPoly mm = MultiPoly::monomial(m);
        MultiPoly xm = gb.normal_form(MultiPoly::variable(3, 0) * mm);
        MultiPoly yxm = gb.normal_form(MultiPoly::variable(3, 1) * xm);
        MultiPoly ym = gb.normal_form(MultiPoly::variable(3, 1) * mm);
        MultiPoly xym = gb.normal_form(MultiPoly::variable(3, 0) * ym);
        CHECK(yxm == xym);
    }
    // minimal polynomial annihilates x in the quotient
    UniPoly mx = gb.minimal_polynomial(0);
    CHECK(gb.normal_form(mx.to_multi(3, 0)).is_zero());
}
