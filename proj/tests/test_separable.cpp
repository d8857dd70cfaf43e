#include "fano/errors.hpp"
#include "fano/parse.hpp"
#include "fano/separable.hpp"

#include <doctest.h>

#include <random>

using namespace fano;

namespace {

BinaryForm F(const char* s) { return BinaryForm::from_poly(parse_poly(s, VarNames::xy())); }

BinaryForm negated(const BinaryForm& f) {
    std::vector<Rational> a = f.coeffs();
    for (auto& c : a) c = -c;
    return BinaryForm(a);
}

void check_report(const SeparableSurface& s, const LineReport& rep) {
    const int d = s.degree();
    CHECK(rep.total == d * d + rep.alpha * d);
    CHECK(static_cast<int>(rep.grid_lines.size()) == d * d);
    CHECK(static_cast<int>(rep.rulings.size()) == rep.alpha);
    auto all = rep.all_lines();
    CHECK(static_cast<int>(all.size()) == rep.total);
    const SurfaceForm surf = s.surface();
    for (const auto& l : all) {
        CHECK(containment_residual(surf, l) < 1e-9);
        CHECK(l.plucker_residual() < 1e-9);
    }
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(line_distance(all[i], all[j]) > 1e-6);
}

int count(const BinaryForm& phi, const BinaryForm& psi) {
    SeparableSurface s(phi, psi);
    auto rep = count_and_emit(s);
    check_report(s, rep);
    return rep.total;
}

}  // namespace

TEST_CASE("line counts of the classical separable surfaces") {
    CHECK(count(F("x^3+y^3"), negated(F("x^3+y^3"))) == 27);
    CHECK(count(F("x(x^3-y^3)"), F("x(x^3-y^3)")) == 64);
    CHECK(count(F("x^4+y^4"), negated(F("x^4+y^4"))) == 48);
    CHECK(count(F("xy(x^4-y^4)"), F("xy(x^4-y^4)")) == 180);
    CHECK(count(F("x^8+14x^4y^4+y^8"), F("x^8+14x^4y^4+y^8")) == 256);
    CHECK(count(F("xy(x^10+11x^5y^5-y^10)"), F("xy(x^10+11x^5y^5-y^10)")) == 864);
    BinaryForm h20 = F("-(x^20+y^20)+228(x^15y^5-x^5y^15)-494x^10y^10");
    CHECK(count(h20, h20) == 1600);
}

TEST_CASE("degree five spectrum") {
    // phi = psi gives alpha = |Aut|; unrelated forms give alpha = 0
    auto total_for = [](const GroupTag& tag) {
        BinaryForm f = build_form(5, tag, 1);
        return count(f, f);
    };
    CHECK(count(build_form(5, GroupTag::trivial(), 1), build_form(5, GroupTag::trivial(), 2)) == 25);
    CHECK(total_for(GroupTag::trivial()) == 30);
    CHECK(total_for(GroupTag::cyclic(4)) == 45);
    CHECK(total_for(GroupTag::dihedral(3)) == 55);
    CHECK(total_for(GroupTag::dihedral(5)) == 75);
    CHECK(total_for(GroupTag::cyclic(2)) == 35);
}

TEST_CASE("constructed forms carry the requested group") {
    struct Case {
        int d;
        GroupTag tag;
    };
    for (const auto& c : {Case{6, GroupTag::octahedral()}, Case{4, GroupTag::tetrahedral()}, Case{12, GroupTag::icosahedral()},
                          Case{7, GroupTag::cyclic(3)}, Case{8, GroupTag::dihedral(4)}, Case{9, GroupTag::cyclic(2)}}) {
        BinaryForm f = build_form(c.d, c.tag, 3);
        CHECK(f.degree() == c.d);
        auto rep = count_and_emit(SeparableSurface(f, f));
        REQUIRE(rep.group.has_value());
        CHECK(*rep.group == c.tag);
        CHECK(rep.alpha == c.tag.order());
        CHECK(rep.total <= maximal_count(c.d));
    }
    CHECK(to_string(build_form(6, GroupTag::octahedral()).to_poly(), VarNames::xy()) == "x^5*y - x*y^5");
    BinaryForm h20 = build_form(20, GroupTag::icosahedral());
    BinaryForm klein = F("-(x^20+y^20)+228(x^15y^5-x^5y^15)-494x^10y^10");
    // equal up to a scalar
    Rational r = klein.coeffs()[20] / h20.coeffs()[20];
    for (int i = 0; i <= 20; ++i) CHECK(klein.coeffs()[static_cast<std::size_t>(i)] == r * h20.coeffs()[static_cast<std::size_t>(i)]);
    CHECK_THROWS_AS(build_form(10, GroupTag::octahedral()), InputError);
    CHECK_THROWS_AS(build_form(5, GroupTag::icosahedral()), InputError);
}

TEST_CASE("swapping phi and psi keeps the count") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int i = 0; i < 6; ++i) {
        const int d = 3 + i % 3;
        std::vector<Rational> a, b;
        for (int k = 0; k <= d; ++k) {
            a.push_back(c(rng));
            b.push_back(c(rng));
        }
        a.back() = b.back() = 1;
        a.front() = b.front() = 2;
        BinaryForm phi(a), psi(b);
        try {
            auto r1 = count_and_emit(SeparableSurface(phi, psi));
            auto r2 = count_and_emit(SeparableSurface(psi, phi));
            CHECK(r1.alpha == r2.alpha);
            CHECK(r1.total == r2.total);
        } catch (const InputError&) {
            // repeated root: not smooth
        }
    }
}

TEST_CASE("maximal counts") {
    CHECK(maximal_count(5) == 75);
    CHECK(maximal_count(7) == 147);
    CHECK(maximal_count(8) == 256);
    CHECK(maximal_count(4) == 64);
    CHECK(maximal_count(20) == 1600);
    CHECK_THROWS_AS(maximal_count(2), InputError);
}

TEST_CASE("real lines") {
    // x(x^2 - y^2) has real zeros 0, 1, -1 and all six permutations are real maps
    SeparableSurface s(F("x^3-xy^2"), F("x^3-xy^2"));
    auto rc = count_real_lines(s);
    CHECK(rc.formula_applies);
    CHECK(rc.real_projectivities == 6);
    CHECK(rc.formula == 9 + 6);
    auto rep = count_and_emit(s);
    int real = 0;
    for (const auto& l : rep.all_lines()) real += l.is_real(1e-6);
    CHECK(rc.count == real);
    CHECK(rc.count == rc.formula);
    CHECK(rc.count <= rep.total);

    SeparableSurface klein(F("x^8+14x^4y^4+y^8"), F("x^8+14x^4y^4+y^8"));
    CHECK_FALSE(count_real_lines(klein).formula_applies);
    CHECK_THROWS_AS(count_real_lines(SeparableSurface(F("x^3+y^3"), F("x^3+2y^3"))), InputError);
}

TEST_CASE("rejected inputs") {
    CHECK_THROWS_AS(SeparableSurface(F("x^2+y^2"), F("x^2+y^2")), InputError);
    CHECK_THROWS_AS(SeparableSurface(F("x^3+y^3"), F("x^4+y^4")), InputError);
    CHECK_THROWS_AS(count_and_emit(SeparableSurface(F("x^2y"), F("x^3+y^3"))), InputError);
}
