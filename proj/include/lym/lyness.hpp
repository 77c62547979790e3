#ifndef LYM_LYNESS_HPP
#define LYM_LYNESS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lym/laurent.hpp"

namespace lym {

// Coefficient mode for the recurrence x_i x_{d+i} = 1 + x_{i+1} + ... + x_{d+i-1}
// and its homogenisations.
enum class Mode {
    Plain,     // all coefficients 1, any d
    LambdaMu,  // the two-parameter homogenisation, d = 3 only
    FullY,     // y1..y5 (d = 2) or y1..y8 (d = 3) homogenisation
};

struct RecurrenceSpec {
    int d = 2;
    Mode mode = Mode::Plain;
};

struct OrbitResult {
    std::vector<LaurentPoly> terms;  // terms[k] is x_{k+1} in the initial chart
    std::optional<int> period;
    std::optional<int> laurent_failure_index;  // 1-based index where division failed
};

// Iterate the recurrence; division failure halts iteration and is recorded,
// never thrown. period and laurent_failure_index are mutually exclusive.
OrbitResult iterate(const RecurrenceSpec& spec, int steps);

// ---- chart expansions for the d = 3 family ----

enum class ChartKind {
    Consecutive,  // T_{i,i+1,i+2} with coordinates (x_i, x_{i+1}, x_{i+2})
    Quad,         // T_{i,q,i+2}   with coordinates (x_i, q_i, x_{i+2})
};

struct Chart {
    ChartKind kind = ChartKind::Consecutive;
    int i = 1;  // 1-based anchor, mod 8
};

// All ten cluster variables expanded in one chart. Construction performs the
// whole derivation; any indivisibility or representation mismatch throws,
// since it would mean the equations themselves are broken.
struct ChartExpansion {
    Chart chart;
    Mode mode = Mode::Plain;
    std::array<LaurentPoly, 8> x;  // x[k] is x_{k+1}
    LaurentPoly q1, q2;
    std::vector<std::string> var_names;

    const LaurentPoly& xi(int i) const;  // 1-based, mod 8
    const LaurentPoly& qi(int i) const { return (i % 2) ? q1 : q2; }
};

ChartExpansion chart_expansions(const Chart& chart, Mode mode);

// q1, q2 expanded in T_{123}; verifies the two defining representations of
// each invariant agree before returning.
std::pair<LaurentPoly, LaurentPoly> invariants_q(Mode mode);

// The five d = 2 terms x1..x5 expanded in the chart (x1, x2).
std::array<LaurentPoly, 5> dp5_chart_terms();

// ---- verification reports ----

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string witness;  // diff polynomial or message when failed
};
using Report = std::vector<CheckResult>;

bool report_ok(const Report& r);

// The ten spinor-coordinate quadrics hold on the y-homogenised chart
// expansions, and the signed variable swap permutes the quadric set.
Report verify_quadrics_ogr();

// The five maximal Pfaffians of the 5x5 skew matrix reproduce the y-homogenised
// d = 2 relations, plus the two specialisations (x_i = -1 and y_i = 1).
Report verify_pfaffians_dp5();

// The 21 equations of the contracted model at lambda = mu = 1, x0 = 1.
Report verify_unprojection_equations();

// Product identities for the shifted potentials: w+3 (d = 2), w_Q+5, w_P+4,
// and the degree-2 del Pezzo identity in the d = 2 chart.
Report verify_factorizations();

// sigma-invariance of the three potentials (d = 2 sum, w_Q, w_P).
Report verify_sigma_invariance();

// mode coherence: full-y at y = 1 and lambda-mu at lambda = mu = 1 both equal plain
Report verify_specialisation_coherence();

// equation tables (shared with the scattering builtins)
struct EqCoef { ParamPoly a, b, c; };   // x_k x_{k+3} = a + b x_{k+1} + c x_{k+2}
EqCoef eq_coef(Mode mode, int k);
struct QRelCoef { ParamPoly c0, c1, c2, c3; };  // x_{j+1} q_j = c0 + c1 x_j + c2 x_{j+2} + c3 x_j x_{j+2}
QRelCoef q_rel_coef(Mode mode, int j);
struct PairCoef { ParamPoly alpha, beta; };  // x_i x_{i+4} = alpha q_i + beta
PairCoef pair_coef(Mode mode, int i);

int idx8(int i);  // 1-based wrap
ParamPoly ypar(int i, int modulus = 8);

} // namespace lym

#endif
