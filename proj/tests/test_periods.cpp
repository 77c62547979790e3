#include <doctest.h>

#include "lym/periods.hpp"
#include "lym/scattering.hpp"

using namespace lym;

namespace {

std::vector<long long> head(const PeriodSeries& p, int n) {
    std::vector<long long> out;
    for (int i = 0; i <= n && i < (int)p.coeffs.size(); ++i)
        out.push_back(p.coeffs[(size_t)i].to_ll());
    return out;
}

struct Rng {
    uint64_t s = 0x243f6a8885a308d3ull;
    uint64_t next() {
        s ^= s << 13; s ^= s >> 7; s ^= s << 17;
        return s;
    }
};

} // namespace

TEST_CASE("golden period values at depth 7") {
    CHECK(head(period(potential_dp5(), 7), 7) ==
          std::vector<long long>{1, 0, 10, 30, 270, 1560, 11350, 77700});
    CHECK(head(period(potential_wQ(), 7), 7) ==
          std::vector<long long>{1, 0, 48, 600, 13176, 276480, 6259800, 146064240});
    CHECK(head(period(potential_wP(), 7), 7) ==
          std::vector<long long>{1, 0, 24, 192, 2904, 40320, 611520, 9515520});
    CHECK(head(period(potential_mm221(), 7), 7) ==
          std::vector<long long>{1, 0, 8, 24, 240, 1440, 11960, 89040});
}

TEST_CASE("shifted series") {
    PeriodSeries dp5 = period(potential_dp5(), 10);
    CHECK(head(shift_series(dp5, 3, 6), 6) ==
          std::vector<long long>{1, 3, 19, 147, 1251, 11253, 104959});
    PeriodSeries v12 = period(potential_wQ(), 10);
    CHECK(head(shift_series(v12, 5, 6), 6) ==
          std::vector<long long>{1, 5, 73, 1445, 33001, 819005, 21460825});
    CHECK(shift_series(dp5, 0, 10).coeffs == dp5.coeffs);
    // applying s then -s is the identity on the coefficients
    PeriodSeries back = shift_series(shift_series(dp5, 7, 10), -7, 10);
    CHECK(back.coeffs == dp5.coeffs);
}

TEST_CASE("Apery identities") {
    CHECK(apery(0).to_ll() == 1);
    CHECK(apery(3).to_ll() == 147);
    CHECK(apery2(3).to_ll() == 1445);
    PeriodSeries dp5 = shift_series(period(potential_dp5(), 10), 3, 10);
    PeriodSeries v12 = shift_series(period(potential_wQ(), 10), 5, 10);
    for (int n = 0; n <= 10; ++n) {
        CHECK(dp5.coeffs[(size_t)n] == apery(n));
        CHECK(v12.coeffs[(size_t)n] == apery2(n));
    }
}

TEST_CASE("degree-2 del Pezzo coefficients") {
    CHECK(dp2_coefficient(0).to_ll() == 1);
    CHECK(dp2_coefficient(1).to_ll() == 12);
    CHECK(dp2_coefficient(2).to_ll() == 420);
    LaurentPoly w = potential_dp2() + LaurentPoly(2, 12);
    PeriodSeries p = period(w, 8);
    for (int n = 0; n <= 8; ++n) CHECK(p.coeffs[(size_t)n] == dp2_coefficient(n));
}

TEST_CASE("shift identity: period(w+s) equals the shifted series") {
    struct Case { LaurentPoly w; long long s; };
    std::vector<Case> cases = {
        {potential_dp5(), 3}, {potential_wP(), 4}, {potential_wQ(), 5}, {potential_dp2(), 12}};
    for (auto& c : cases) {
        PeriodSeries direct = period(c.w + LaurentPoly(c.w.dim(), c.s), 6);
        PeriodSeries shifted = shift_series(period(c.w, 6), c.s, 6);
        CHECK(direct.coeffs == shifted.coeffs);
    }
}

TEST_CASE("pruned and unpruned computations agree") {
    Rng rng;
    for (int it = 0; it < 50; ++it) {
        uint16_t eps = (uint16_t)(rng.next() % 1024);
        LaurentPoly w = potential_eps(eps);
        if (w.is_zero()) continue;
        PeriodSeries a = period(w, 8, true);
        PeriodSeries b = period(w, 8, false);
        CHECK(a.coeffs == b.coeffs);
    }
}

TEST_CASE("period is invariant under unimodular monomial substitution") {
    Rng rng;
    for (int it = 0; it < 12; ++it) {
        uint16_t eps = (uint16_t)(rng.next() % 1024);
        LaurentPoly w = potential_eps(eps);
        if (w.is_zero()) continue;
        // random unimodular exponent map from elementary shears
        Mat m = mat_identity(3);
        for (int k = 0; k < 4; ++k) {
            int i = (int)(rng.next() % 3), j = (int)(rng.next() % 3);
            if (i == j) continue;
            Mat sh = mat_identity(3);
            sh[(size_t)i][(size_t)j] = (long long)(rng.next() % 3) - 1;
            m = mat_mul(sh, m);
        }
        LaurentPoly w2 = monomial_remap(w, m);
        CHECK(period(w, 6).coeffs == period(w2, 6).coeffs);
    }
}

TEST_CASE("Newton polytopes and the Fano test") {
    IntPolytope3 full = newton_polytope(potential_wQ());
    CHECK(full.full_dim);
    CHECK(is_fano(full));

    LaurentPoly just_x1 = potential_eps(1);
    IntPolytope3 pt = newton_polytope(just_x1);
    CHECK_FALSE(pt.full_dim);
    CHECK_FALSE(is_fano(pt));

    // the 2D octagon-dual mirror x1x2 + 1/x1 + 1/x2 + 1/(x1x2) is reflexive
    LaurentPoly f1 = potential_f1();
    CHECK(f1.term_count() == 4);
    CHECK(newton_polygon_reflexive(f1));
    // 0 on the boundary: not reflexive
    LaurentPoly tri = LaurentPoly(2, 1) + LaurentPoly::variable(2, 0) + LaurentPoly::variable(2, 1);
    CHECK_FALSE(newton_polygon_reflexive(tri));
}

TEST_CASE("octagon potentials have pairwise distinct periods") {
    auto ws = octagon_potentials();
    PeriodSeries p0 = period(ws[0], 10);
    PeriodSeries p1 = period(ws[1], 10);
    PeriodSeries p2 = period(ws[2], 10);
    CHECK(p0.coeffs[0].is_one());
    CHECK(p1.coeffs[0].is_one());
    CHECK(p2.coeffs[0].is_one());
    CHECK(p0.coeffs != p1.coeffs);
    CHECK(p0.coeffs != p2.coeffs);
    CHECK(p1.coeffs != p2.coeffs);
    // heads frozen from the engine (the distinctness is visible by depth 2)
    CHECK(head(p0, 4) == std::vector<long long>{1, 0, 216, 9216, 546264});
    CHECK(head(p1, 4) == std::vector<long long>{1, 0, 286, 13386, 885450});
    CHECK(head(p2, 4) == std::vector<long long>{1, 0, 288, 13356, 887304});
}

TEST_CASE("survey smoke run at low depth") {
    SurveyReport rep = survey(4, {}, 2);
    CHECK(rep.fano_count == 705);
    CHECK(rep.distinct_periods <= 46);
    CHECK(rep.matched == 0);
    // the named mirror potentials are all Fano
    for (unsigned eps : {0x3ffu, 0x1ffu, 0xffu, 0x7fu, 0x3fu, 0x300u}) {
        bool found = false;
        for (const auto& b : rep.buckets)
            for (uint16_t e : b.eps) found = found || e == (uint16_t)eps;
        CHECK(found);
    }
}
