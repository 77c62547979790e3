#include <doctest.h>

#include "lym/lyness.hpp"

using namespace lym;

namespace {

LaurentPoly v(int dim, int i) { return LaurentPoly::variable(dim, i); }

// p == num / den, cleared
bool eq_frac(const LaurentPoly& p, const LaurentPoly& num, const LaurentPoly& den) {
    return p * den == num;
}

} // namespace

TEST_CASE("d=2 orbit: the five terms and period 5") {
    OrbitResult r = iterate({2, Mode::Plain}, 7);
    REQUIRE(r.terms.size() == 7);
    const LaurentPoly x1 = v(2, 0), x2 = v(2, 1), one(2, 1);
    CHECK(eq_frac(r.terms[2], x2 + one, x1));
    CHECK(eq_frac(r.terms[3], x1 + x2 + one, x1 * x2));
    CHECK(eq_frac(r.terms[4], x1 + one, x2));
    CHECK(r.terms[5] == x1);
    CHECK(r.terms[6] == x2);
    REQUIRE(r.period.has_value());
    CHECK(*r.period == 5);
    CHECK_FALSE(r.laurent_failure_index.has_value());
}

TEST_CASE("d=3 orbit: printed expansions and period 8") {
    OrbitResult r = iterate({3, Mode::Plain}, 11);
    REQUIRE(r.terms.size() == 11);
    const LaurentPoly x1 = v(3, 0), x2 = v(3, 1), x3 = v(3, 2), one(3, 1);
    CHECK(eq_frac(r.terms[3], x2 + x3 + one, x1));
    CHECK(eq_frac(r.terms[4], (x1 + one) * (x3 + one) + x2, x1 * x2));
    CHECK(eq_frac(r.terms[5], (x1 + x2 + one) * (x2 + x3 + one), x1 * x2 * x3));
    CHECK(eq_frac(r.terms[6], (x1 + one) * (x3 + one) + x2, x2 * x3));
    CHECK(eq_frac(r.terms[7], x1 + x2 + one, x3));
    CHECK(r.terms[8] == x1);
    REQUIRE(r.period.has_value());
    CHECK(*r.period == 8);
}

TEST_CASE("d=4 has no Laurent phenomenon: failure recorded, no period") {
    OrbitResult r = iterate({4, Mode::Plain}, 40);
    REQUIRE(r.laurent_failure_index.has_value());
    CHECK(*r.laurent_failure_index <= 40);
    CHECK_FALSE(r.period.has_value());
    // the failure index is data, not an error; everything before it is Laurent
    CHECK((int)r.terms.size() == *r.laurent_failure_index - 1);
}

TEST_CASE("homogenised orbits stay periodic") {
    OrbitResult r2 = iterate({2, Mode::FullY}, 7);
    REQUIRE(r2.period.has_value());
    CHECK(*r2.period == 5);
    OrbitResult r3 = iterate({3, Mode::FullY}, 11);
    REQUIRE(r3.period.has_value());
    CHECK(*r3.period == 8);
    OrbitResult rl = iterate({3, Mode::LambdaMu}, 11);
    REQUIRE(rl.period.has_value());
    CHECK(*rl.period == 8);
}

TEST_CASE("invariants q1, q2 in the plain chart") {
    auto [q1, q2] = invariants_q(Mode::Plain);
    const LaurentPoly x1 = v(3, 0), x2 = v(3, 1), x3 = v(3, 2), one(3, 1);
    CHECK(eq_frac(q1, (x1 + one) * (x3 + one), x2));
    CHECK(eq_frac(q2, (x1 + x2 + x3 + one) * (x2 + one), x1 * x3));
    // full-y and lambda-mu representations agree (throws on mismatch)
    CHECK_NOTHROW(invariants_q(Mode::FullY));
    CHECK_NOTHROW(invariants_q(Mode::LambdaMu));
}

TEST_CASE("chart expansions: all 16 charts, all modes of interest") {
    for (Mode mode : {Mode::Plain, Mode::LambdaMu, Mode::FullY}) {
        for (int i = 1; i <= 8; ++i) {
            ChartExpansion ec = chart_expansions({ChartKind::Consecutive, i}, mode);
            ChartExpansion eq = chart_expansions({ChartKind::Quad, i}, mode);
            // ten entries, all Laurent by construction; verify the ten equations
            for (const ChartExpansion* e : {&ec, &eq}) {
                for (int k = 1; k <= 8; ++k) {
                    EqCoef c = eq_coef(mode, k);
                    LaurentPoly rhs = LaurentPoly::constant(3, c.a) +
                                      e->xi(k + 1).scaled(c.b) + e->xi(k + 2).scaled(c.c);
                    CHECK(e->xi(k) * e->xi(k + 3) == rhs);
                }
            }
        }
    }
}

TEST_CASE("T_{1q3} expansions are monic") {
    // the two-parameter rescaling is tuned so that in the (x1, q1, x3)
    // coordinates every cluster variable has numerator with constant term 1;
    // the scattering functions are read off from these leading monomials
    ChartExpansion e = chart_expansions({ChartKind::Quad, 1}, Mode::LambdaMu);
    for (int j = 1; j <= 8; ++j) {
        const LaurentPoly& p = e.xi(j);
        auto it = p.terms().find(p.min_exponents());
        REQUIRE(it != p.terms().end());
        CHECK(it->second.is_one());
    }
    // at lambda = mu = 1 every chart is monic
    for (int i = 1; i <= 8; ++i) {
        ChartExpansion ep = chart_expansions({ChartKind::Quad, i}, Mode::Plain);
        for (int j = 1; j <= 8; ++j) {
            const LaurentPoly& p = ep.xi(j);
            auto it = p.terms().find(p.min_exponents());
            REQUIRE(it != p.terms().end());
            CHECK(it->second.is_one());
        }
    }
}

TEST_CASE("T123 expansion of x6 at lambda = mu = 1") {
    ChartExpansion e = chart_expansions({ChartKind::Consecutive, 1}, Mode::Plain);
    const LaurentPoly x1 = v(3, 0), x2 = v(3, 1), x3 = v(3, 2), one(3, 1);
    CHECK(eq_frac(e.xi(6), (x1 + x2 + one) * (x2 + x3 + one), x1 * x2 * x3));
}

TEST_CASE("verification suites") {
    for (const auto& c : verify_quadrics_ogr()) { INFO(c.name, " ", c.witness); CHECK(c.ok); }
    for (const auto& c : verify_pfaffians_dp5()) { INFO(c.name, " ", c.witness); CHECK(c.ok); }
    for (const auto& c : verify_unprojection_equations()) { INFO(c.name, " ", c.witness); CHECK(c.ok); }
    for (const auto& c : verify_factorizations()) { INFO(c.name, " ", c.witness); CHECK(c.ok); }
    for (const auto& c : verify_sigma_invariance()) { INFO(c.name, " ", c.witness); CHECK(c.ok); }
    for (const auto& c : verify_specialisation_coherence()) { INFO(c.name, " ", c.witness); CHECK(c.ok); }
    CHECK(verify_unprojection_equations().size() == 21);
}
