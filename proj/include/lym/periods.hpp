#ifndef LYM_PERIODS_HPP
#define LYM_PERIODS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lym/fan.hpp"
#include "lym/laurent.hpp"

namespace lym {

// alpha_0..alpha_N with provenance (potential, chart, shift)
struct PeriodSeries {
    std::vector<BigInt> coeffs;
    std::string source;
};

// alpha_n = constant term of w^n, by iterated sparse multiplication. With
// prune on, monomials whose exponent cannot return to zero within the
// remaining multiplications are dropped; this is loss-free and the tests
// check it against the unpruned computation.
PeriodSeries period(const LaurentPoly& w, int depth, bool prune = true);

// pi_{w+s}(t) = (1/(1-st)) pi_w(t/(1-st)): beta_n = sum_k C(n,k) s^{n-k} alpha_k
PeriodSeries shift_series(const PeriodSeries& p, long long s, int depth);

BigInt apery(int n);             // sum_k C(n,k)^2 C(n+k,k)
BigInt apery2(int n);            // sum_k C(n,k)^2 C(n+k,k)^2
BigInt dp2_coefficient(int n);   // C(2n,n) C(4n,2n)

// ---- potentials, restricted to the initial torus chart ----

// epsilon bit i (0..7) selects x_{i+1}; bit 8 selects q1; bit 9 selects q2
LaurentPoly potential_eps(uint16_t eps);
LaurentPoly potential_wQ();   // all ten
LaurentPoly potential_wP();   // the eight x's
LaurentPoly potential_mm221();  // q1 + q2
LaurentPoly potential_dp5();  // d = 2: x1 + ... + x5 in (x1, x2)
LaurentPoly potential_dp2();  // the degree-2 del Pezzo potential, d = 2
LaurentPoly potential_f1();   // the octagon-dual potential x1x2 + x4, d = 2

// the three labelled potentials on the octagon-pair polytope; vertices carry
// coefficient 1, the face interior points x1..x8 the given patterns
std::array<LaurentPoly, 3> octagon_potentials();
std::array<std::array<int, 8>, 3> octagon_coefficient_patterns();

// ---- exact integer Newton polytopes ----

struct IntPolytope3 {
    std::vector<Vec> points;                        // the support
    std::vector<std::pair<Vec, long long>> facets;  // primitive outward u, offset c: u.x <= c
    std::vector<Vec> vertices;
    bool full_dim = false;
};

IntPolytope3 newton_polytope(const LaurentPoly& w);  // w in 3 variables
// primitive vertices and 0 strictly interior; degenerate hulls are not Fano
bool is_fano(const IntPolytope3& P);

// 2D pipeline for the F1 example: Newton polygon is reflexive (0 strictly
// interior, every edge at lattice distance 1)
bool newton_polygon_reflexive(const LaurentPoly& w);

// ---- the 1024-potential survey ----

struct FixtureEntry {
    std::string name;
    std::vector<BigInt> coeffs;
};
std::vector<FixtureEntry> load_fixture(const std::string& path);

struct SurveyBucket {
    std::vector<BigInt> head;         // period coefficients 0..depth
    std::vector<uint16_t> eps;        // potentials in this bucket
    std::string match;                // fixture name, empty if unmatched
};

struct SurveyReport {
    int depth = 0;
    int fano_count = 0;
    int distinct_periods = 0;
    int stabilisation_depth = 0;  // least depth at which the bucket count settles
    int matched = 0;
    std::vector<SurveyBucket> buckets;
};

SurveyReport survey(int depth, const std::vector<FixtureEntry>& fixture, int threads = 1);

} // namespace lym

#endif
