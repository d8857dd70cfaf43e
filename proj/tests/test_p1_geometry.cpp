#include "fano/errors.hpp"
#include "fano/p1_geometry.hpp"
#include "fano/parse.hpp"

#include <doctest.h>

#include <random>

using namespace fano;

namespace {

BinaryForm F(const char* s) { return BinaryForm::from_poly(parse_poly(s, VarNames::xy())); }

bool contains(const std::vector<Projectivity>& set, const Projectivity& g) {
    for (const auto& h : set)
        if (projective_distance(g, h) < 1e-6) return true;
    return false;
}

int group_order(const char* form) {
    auto pts = roots_p1(F(form));
    return static_cast<int>(projectivities_between(pts, pts).size());
}

}  // namespace

TEST_CASE("roots on P1") {
    auto pts = roots_p1(F("x^3-y^3"));
    REQUIRE(pts.points.size() == 3);
    for (const auto& p : pts.points) CHECK(std::abs(std::pow(p.value, 3) - 1.0) < 1e-12);
    // x y (x - y): 0, 1 and infinity
    auto inf = roots_p1(F("x^2y - xy^2"));
    int at_inf = 0;
    for (const auto& p : inf.points) at_inf += p.at_infinity;
    CHECK(at_inf == 1);
    CHECK_THROWS_AS(roots_p1(F("x^2y")), InputError);
    CHECK_THROWS_AS(roots_p1(F("(x-y)^2(x+y)")), InputError);
}

TEST_CASE("mobius from triples sends each point to its image") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> n;
    for (int i = 0; i < 20; ++i) {
        std::array<PointP1, 3> a, b;
        for (int k = 0; k < 3; ++k) {
            a[static_cast<std::size_t>(k)] = PointP1::finite({n(rng), n(rng)});
            b[static_cast<std::size_t>(k)] = PointP1::finite({n(rng), n(rng)});
        }
        if (i == 0) a[0] = PointP1::infinity();
        Projectivity m = mobius_from_triples(a, b);
        for (int k = 0; k < 3; ++k)
            CHECK(chordal_distance(m.apply(a[static_cast<std::size_t>(k)]), b[static_cast<std::size_t>(k)]) < 1e-9);
    }
}

TEST_CASE("automorphism groups of classical forms") {
    CHECK(group_order("x^5-y^5") == 10);
    CHECK(group_order("x(x^3-y^3)") == 12);
    CHECK(group_order("xy(x^4-y^4)") == 24);
    CHECK(group_order("x^8+14x^4y^4+y^8") == 24);
    CHECK(group_order("xy(x^10+11x^5y^5-y^10)") == 60);
    CHECK(group_order("x^5+2x^4y-x^3y^2+5xy^4+3y^5") == 1);

    auto tag = [](const char* f) {
        auto pts = roots_p1(F(f));
        return classify_group(projectivities_between(pts, pts));
    };
    CHECK(tag("x^5-y^5") == GroupTag::dihedral(5));
    CHECK(tag("x(x^3-y^3)") == GroupTag::tetrahedral());
    CHECK(tag("xy(x^4-y^4)") == GroupTag::octahedral());
    CHECK(tag("xy(x^10+11x^5y^5-y^10)") == GroupTag::icosahedral());
    // four points with a non-special cross-ratio: the Klein four-group
    CHECK(tag("x(x-y)(x-2y)(x-3y)") == GroupTag::dihedral(2));
    // only t -> -t preserves {0, 1, -1, 2, -2}
    CHECK(tag("x(x^2-y^2)(x^2-4y^2)") == GroupTag::cyclic(2));
    // a square on the equator
    CHECK(tag("x^4-y^4") == GroupTag::dihedral(4));
    // {0, inf} and the fourth roots of -1 are the octahedron again
    CHECK(tag("xy(x^4+y^4)") == GroupTag::octahedral());
}

TEST_CASE("group tags round trip") {
    for (const char* s : {"trivial", "cyclic:3", "dihedral:7", "T", "O", "I"}) CHECK(GroupTag::parse(s).to_string() == s);
    CHECK(GroupTag::parse("C4") == GroupTag::cyclic(4));
    CHECK(GroupTag::parse("D5") == GroupTag::dihedral(5));
    CHECK(GroupTag::icosahedral().order() == 60);
    CHECK(GroupTag::dihedral(3).order() == 6);
    CHECK_THROWS_AS(GroupTag::parse("Q8"), InputError);
}

TEST_CASE("self-projectivities form a group on seeded root sets") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> c(-4, 4);
    const char* symmetric[] = {"x^4-y^4", "x^6-y^6", "x(x^3-y^3)", "xy(x^4-y^4)", "x^3-y^3", "xy(x^2-y^2)", "x^5-y^5",
                               "x^8+14x^4y^4+y^8", "xy(x^3-y^3)", "x^4+y^4"};
    int checked = 0;
    for (int i = 0; checked < 20; ++i) {
        BinaryForm f = [&] {
            if (i < 10) return F(symmetric[i]);
            int d = 4 + i % 3;
            std::vector<Rational> a;
            for (int k = 0; k <= d; ++k) a.push_back(c(rng));
            a.back() = 1;
            return BinaryForm(a);
        }();
        PointSetP1 pts;
        try {
            pts = roots_p1(f);
        } catch (const InputError&) {
            continue;  // repeated root
        }
        auto g = projectivities_between(pts, pts);
        REQUIRE_FALSE(g.empty());
        CHECK(contains(g, Projectivity()));
        for (const auto& a : g) {
            CHECK(contains(g, a.inverse()));
            for (const auto& b : g) CHECK(contains(g, a.compose(b)));
            // each map permutes the roots
            for (const auto& p : pts.points) {
                double best = 1;
                for (const auto& q : pts.points) best = std::min(best, chordal_distance(a.apply(p), q));
                CHECK(best < 1e-8);
            }
        }
        ++checked;
    }
}

TEST_CASE("projectivities between different sets") {
    // x^4 - y^4 and x^4 - 16 y^4: roots scaled by 2, same group size
    auto a = roots_p1(F("x^4-y^4"));
    auto b = roots_p1(F("x^4-16y^4"));
    auto maps = projectivities_between(a, b);
    CHECK(maps.size() == 8);
    for (const auto& m : maps)
        for (const auto& p : a.points) {
            double best = 1;
            for (const auto& q : b.points) best = std::min(best, chordal_distance(m.apply(p), q));
            CHECK(best < 1e-8);
        }
    // different cross-ratio: no map
    auto c = roots_p1(F("x(x-y)(x-2y)(x-5y)"));
    CHECK(projectivities_between(a, c).empty());
}
