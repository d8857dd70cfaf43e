#include "fano/errors.hpp"
#include "fano/parse.hpp"
#include "fano/plucker_enum.hpp"
#include "fano/separable.hpp"

#include <doctest.h>

#include <numbers>
#include <random>

using namespace fano;

namespace {

SurfaceForm S(const char* s) { return SurfaceForm(parse_poly(s, VarNames::xyzt())); }

const char* kS8 = "x^8+y^8+z^8+t^8+168x^2y^2z^2t^2+14(x^4y^4+x^4z^4+x^4t^4+y^4z^4+y^4t^4+z^4t^4)";
const char* kSarti6 = "8(x^6+y^6+z^6+t^6+15(x^2y^2z^2+x^2y^2t^2+x^2z^2t^2+y^2z^2t^2))-5(x^2+y^2+z^2+t^2)^3";

std::array<std::size_t, kStrata> per_stratum(const LineCount& lc) {
    std::array<std::size_t, kStrata> a{};
    for (int i = 0; i < kStrata; ++i) a[static_cast<std::size_t>(i)] = lc.strata[static_cast<std::size_t>(i)].count;
    return a;
}

std::vector<Line3> emit_all(const SurfaceForm& s, const LineCount& lc) {
    std::vector<Line3> out;
    for (const auto& st : lc.strata) {
        if (st.count == 0) continue;
        auto ls = emit_stratum_lines(build_stratum_system(s, st.stratum), st);
        out.insert(out.end(), ls.begin(), ls.end());
    }
    return out;
}

}  // namespace

TEST_CASE("fermat cubic: 27 lines matching the explicit list") {
    SurfaceForm s = S("x^3+y^3+z^3+t^3");
    auto lc = count_lines(s);
    CHECK(lc.total == 27);
    CHECK(lc.complete);
    CHECK(lc.certified);

    // The 27 lines: pair the coordinates in one of three ways, x = -a y, z = -b t with a^3 = b^3 = 1.
    std::vector<Line3> explicit_lines;
    const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& pr : pairings)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Complex a = std::polar(1.0, 2 * std::numbers::pi * i / 3), b = std::polar(1.0, 2 * std::numbers::pi * j / 3);
                Vec4c p = Vec4c::Zero(), q = Vec4c::Zero();
                p(pr[0]) = -a;
                p(pr[1]) = 1;
                q(pr[2]) = -b;
                q(pr[3]) = 1;
                explicit_lines.push_back(Line3::through(p, q));
            }
    auto emitted = emit_all(s, lc);
    REQUIRE(emitted.size() == 27);
    for (const auto& l : emitted) {
        CHECK(containment_residual(s, l) < 1e-10);
        CHECK(l.plucker_residual() < 1e-10);
        double best = 1;
        for (const auto& e : explicit_lines) best = std::min(best, line_distance(l, e));
        CHECK(best < 1e-6);
    }
}

TEST_CASE("quartics") {
    auto schur = count_lines(S("x(x^3-y^3)-z(z^3-t^3)"));
    CHECK(schur.total == 64);
    CHECK(schur.certified);
    auto fermat = count_lines(S("x^4+y^4+z^4+t^4"));
    CHECK(fermat.total == 48);
}

TEST_CASE("symmetric octic: 320 + 32 lines") {
    SurfaceForm s = S(kS8);
    auto lc = count_lines(s);
    auto a = per_stratum(lc);
    CHECK(a == std::array<std::size_t, kStrata>{320, 32, 0, 0, 0, 0});
    CHECK(lc.total == 352);
    for (const auto& st : lc.strata) CHECK(st.certified_reduced);
    auto lines = emit_all(s, lc);
    CHECK(lines.size() == 352);
    for (const auto& l : lines) {
        CHECK(containment_residual(s, l) < 1e-9);
        CHECK(l.plucker_residual() < 1e-9);
    }
}

TEST_CASE("sextic with 132 lines") {
    auto lc = count_lines(S(kSarti6));
    CHECK(lc.total == 132);
    CHECK(lc.certified);
}

TEST_CASE("a line inside a single stratum") {
    // contains x = y = 0, the only point of the last stratum
    SurfaceForm s = S("x^3+y^3+xz^2+yt^2");
    auto sys = build_stratum_system(s, 6);
    CHECK(sys.nvars() == 0);
    CHECK(count_stratum(sys).count == 1);
    auto sys5 = build_stratum_system(s, 5);
    CHECK(sys5.nvars() == 1);
}

TEST_CASE("smoothness and budget") {
    CHECK(is_smooth(S("x^3+y^3+z^3+t^3")));
    CHECK_FALSE(is_smooth(S("x^3+y^3+z^3")));
    CHECK_THROWS_AS(count_lines(S("x^3+y^3+z^3")), InputError);
    CountOptions o;
    o.groebner.max_pair_reductions = 1;
    o.check_smooth = false;
    auto lc = count_lines(S(kS8), o);
    CHECK_FALSE(lc.complete);
    bool any = false;
    for (const auto& st : lc.strata) any = any || st.status == StratumCount::Status::BudgetExceeded;
    CHECK(any);
}

TEST_CASE("exact counts agree with the separable count") {
    struct Pair {
        BinaryForm phi, psi;
    };
    std::vector<Pair> cases;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int trial = 0; trial < 5; ++trial) {
        auto rnd = [&] {
            std::vector<Rational> a;
            for (int i = 0; i <= 4; ++i) a.push_back(c(rng));
            if (a[4] == 0) a[4] = 1;
            if (a[0] == 0) a[0] = 1;
            return BinaryForm(a);
        };
        BinaryForm phi = rnd();
        cases.push_back({phi, trial % 3 == 0 ? phi : rnd()});
    }
    // trinomial quintics x^5 + a x^k y^(5-k) + b y^5
    std::mt19937_64 rng5(11);
    for (int trial = 0; trial < 5; ++trial) {
        auto rnd = [&] {
            std::vector<Rational> a(6);
            a[5] = 1;
            a[0] = c(rng5) ? c(rng5) : 2;
            a[static_cast<std::size_t>(1 + trial % 3)] = c(rng5);
            return BinaryForm(a);
        };
        BinaryForm phi = rnd();
        cases.push_back({phi, trial % 2 == 0 ? phi : rnd()});
    }
    int compared = 0;
    for (const auto& [phi, psi] : cases) {
        SeparableSurface s(phi, psi);
        int sep = 0;
        try {
            sep = count_and_emit(s).total;
        } catch (const InputError&) {
            continue;
        }
        auto lc = count_lines(s.surface());
        REQUIRE(lc.complete);
        CHECK(lc.total == static_cast<std::size_t>(sep));
        ++compared;
    }
    CHECK(compared == 10);
}
