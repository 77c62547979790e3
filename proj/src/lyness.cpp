#include "lym/lyness.hpp"

#include <stdexcept>

namespace lym {

int idx8(int i) { return ((i - 1) % 8 + 8) % 8 + 1; }
static int idx5(int i) { return ((i - 1) % 5 + 5) % 5 + 1; }

ParamPoly ypar(int i, int modulus) {
    int k = ((i - 1) % modulus + modulus) % modulus + 1;
    return ParamPoly::param(P_Y1 + (k - 1));
}

static ParamPoly lam() { return ParamPoly::param(P_LAMBDA); }
static ParamPoly mu() { return ParamPoly::param(P_MU); }

EqCoef eq_coef(Mode mode, int k) {
    k = idx8(k);
    switch (mode) {
        case Mode::Plain:
            return {ParamPoly(1), ParamPoly(1), ParamPoly(1)};
        case Mode::FullY:
            // x_k x_{k+3} = x_{k+1} y_{k+4} + x_{k+2} y_{k-1} + y_{k+1} y_{k+2}
            return {ypar(k + 1) * ypar(k + 2), ypar(k + 4), ypar(k - 1)};
        case Mode::LambdaMu: {
            const ParamPoly L = lam(), M = mu(), one(1);
            switch (k) {
                case 1: return {L, one, L};
                case 2: return {L, L * M, one};
                case 3: return {one, one, one};
                case 4: return {M, one, one};
                case 5: return {L * M, one, L};
                case 6: return {L, L, one};
                case 7: return {one, one, M};
                case 8: return {one, one, one};
            }
        }
    }
    throw std::logic_error("eq_coef");
}

QRelCoef q_rel_coef(Mode mode, int j) {
    j = idx8(j);
    switch (mode) {
        case Mode::Plain:
            // x_{j+1} q_j = (1 + x_j)(1 + x_{j+2})
            return {ParamPoly(1), ParamPoly(1), ParamPoly(1), ParamPoly(1)};
        case Mode::FullY:
            return {ypar(j) * ypar(j + 1) * ypar(j + 2), ypar(j + 2) * ypar(j + 3),
                    ypar(j) * ypar(j - 1), ypar(j + 5)};
        case Mode::LambdaMu: {
            const ParamPoly L = lam(), M = mu(), one(1);
            switch (j) {
                case 1: return {one, one, one, M};
                case 2: return {L, one, one, one};
                case 3: return {one, M, one, one};
                case 4: return {L * M, L * M, L, one};
                case 5: return {M, one, one, one};
                case 6: return {L * M, one, M, one};
                case 7: return {one, one, M, one};
                case 8: return {L, L, L, one};
            }
        }
    }
    throw std::logic_error("q_rel_coef");
}

PairCoef pair_coef(Mode mode, int i) {
    i = idx8(i);
    switch (mode) {
        case Mode::Plain:
            return {ParamPoly(1), ParamPoly(1)};
        case Mode::FullY:
            return {ParamPoly(1), ypar(i) * ypar(i + 4)};
        case Mode::LambdaMu:
            // q1 = x3 x7 - 1, q2 = x4 x8 - lambda
            switch (i) {
                case 1: case 5: return {lam(), ParamPoly(1)};
                case 3: case 7: return {ParamPoly(1), ParamPoly(1)};
                case 2: case 6: return {ParamPoly(1), lam() * mu()};
                case 4: case 8: return {ParamPoly(1), lam()};
            }
    }
    throw std::logic_error("pair_coef");
}

OrbitResult iterate(const RecurrenceSpec& spec, int steps) {
    const int d = spec.d;
    if (d < 2) throw std::invalid_argument("iterate: d must be >= 2");
    if (spec.mode == Mode::LambdaMu && d != 3)
        throw std::invalid_argument("iterate: lambda-mu mode needs d = 3");
    if (spec.mode == Mode::FullY && d != 2 && d != 3)
        throw std::invalid_argument("iterate: full-y mode needs d in {2,3}");
    if (steps < d) throw std::invalid_argument("iterate: steps must be >= d");

    OrbitResult out;
    for (int i = 0; i < d; ++i) out.terms.push_back(LaurentPoly::variable(d, i));

    for (int n = d + 1; n <= steps; ++n) {
        const int k = n - d;  // relation x_k x_n = rhs(x_{k+1}..x_{n-1})
        LaurentPoly rhs(d);
        if (spec.mode == Mode::Plain) {
            rhs = LaurentPoly(d, 1);
            for (int j = k + 1; j <= n - 1; ++j) rhs += out.terms[j - 1];
        } else if (d == 3) {
            EqCoef e = eq_coef(spec.mode, k);
            rhs = LaurentPoly::constant(3, e.a) + out.terms[k].scaled(e.b) +
                  out.terms[k + 1].scaled(e.c);
        } else {
            // full-y, d = 2: x_k x_{k+2} = x_{k+1} y_{k+1} + y_{k-1} y_{k+3}
            rhs = out.terms[k].scaled(ypar(idx5(k + 1), 5)) +
                  LaurentPoly::constant(2, ypar(idx5(k - 1), 5) * ypar(idx5(k + 3), 5));
        }
        auto q = rhs.exact_div(out.terms[k - 1]);
        if (!q) {
            out.laurent_failure_index = n;
            return out;
        }
        out.terms.push_back(*q);
    }

    const int len = (int)out.terms.size();
    for (int p = 1; p < len; ++p) {
        bool ok = true;
        for (int i = 0; i + p < len && ok; ++i) ok = out.terms[i] == out.terms[i + p];
        if (ok) { out.period = p; break; }
    }
    return out;
}

const LaurentPoly& ChartExpansion::xi(int i) const { return x[idx8(i) - 1]; }

static LaurentPoly must_div(const LaurentPoly& num, const LaurentPoly& den, const char* what) {
    auto q = num.exact_div(den);
    if (!q) throw std::logic_error(std::string("chart expansion: indivisible at ") + what);
    return *q;
}

// q_i from its canonical defining representation, given the x expansions
static LaurentPoly q_def(Mode mode, int which, const std::array<LaurentPoly, 8>& x) {
    const int dim = x[0].dim();
    if (which == 1) {
        switch (mode) {
            case Mode::Plain: return x[2] * x[6] - LaurentPoly(dim, 1);
            case Mode::LambdaMu: return x[2] * x[6] - LaurentPoly(dim, 1);
            case Mode::FullY:
                return x[2] * x[6] - LaurentPoly::constant(dim, ypar(3) * ypar(7));
        }
    } else {
        switch (mode) {
            case Mode::Plain: return x[3] * x[7] - LaurentPoly(dim, 1);
            case Mode::LambdaMu: return x[3] * x[7] - LaurentPoly::constant(dim, lam());
            case Mode::FullY:
                return x[3] * x[7] - LaurentPoly::constant(dim, ypar(4) * ypar(8));
        }
    }
    throw std::logic_error("q_def");
}

// the other defining representation, used as the built-in cross-check
static LaurentPoly q_def_alt(Mode mode, int which, const std::array<LaurentPoly, 8>& x) {
    const int dim = x[0].dim();
    if (which == 1) {
        switch (mode) {
            case Mode::Plain: return x[0] * x[4] - LaurentPoly(dim, 1);
            case Mode::LambdaMu: {
                // x1 x5 - 1 = lambda q1: return (x1 x5 - 1) scaled for comparison
                return x[0] * x[4] - LaurentPoly(dim, 1);
            }
            case Mode::FullY:
                return x[0] * x[4] - LaurentPoly::constant(dim, ypar(1) * ypar(5));
        }
    } else {
        switch (mode) {
            case Mode::Plain: return x[1] * x[5] - LaurentPoly(dim, 1);
            case Mode::LambdaMu:
                return x[1] * x[5] - LaurentPoly::constant(dim, lam() * mu());
            case Mode::FullY:
                return x[1] * x[5] - LaurentPoly::constant(dim, ypar(2) * ypar(6));
        }
    }
    throw std::logic_error("q_def_alt");
}

static void check_q_reps(Mode mode, const std::array<LaurentPoly, 8>& x,
                         const LaurentPoly& q1, const LaurentPoly& q2) {
    LaurentPoly alt1 = q_def_alt(mode, 1, x);
    LaurentPoly alt2 = q_def_alt(mode, 2, x);
    bool ok1, ok2;
    if (mode == Mode::LambdaMu) {
        ok1 = alt1 == q1.scaled(lam());  // x1 x5 - 1 = lambda (x3 x7 - 1)
        ok2 = alt2 == q2;                // x2 x6 - lambda mu = x4 x8 - lambda
    } else {
        ok1 = alt1 == q1;
        ok2 = alt2 == q2;
    }
    if (!ok1 || !ok2)
        throw std::logic_error("invariants_q: defining representations disagree");
}

ChartExpansion chart_expansions(const Chart& chart, Mode mode) {
    if (mode == Mode::FullY && chart.kind == ChartKind::Quad) {
        // supported, same relations; nothing special to do
    }
    ChartExpansion out;
    out.chart = chart;
    out.mode = mode;
    const int i = idx8(chart.i);
    auto X = [&](int k) -> LaurentPoly& { return out.x[idx8(k) - 1]; };
    auto eqrhs = [&](int k, const LaurentPoly& u, const LaurentPoly& v) {
        EqCoef e = eq_coef(mode, k);
        return LaurentPoly::constant(3, e.a) + u.scaled(e.b) + v.scaled(e.c);
    };

    if (chart.kind == ChartKind::Consecutive) {
        X(i) = LaurentPoly::variable(3, 0);
        X(i + 1) = LaurentPoly::variable(3, 1);
        X(i + 2) = LaurentPoly::variable(3, 2);
        X(i + 3) = must_div(eqrhs(i, X(i + 1), X(i + 2)), X(i), "x_{i+3}");
        X(i + 4) = must_div(eqrhs(i + 1, X(i + 2), X(i + 3)), X(i + 1), "x_{i+4}");
        X(i + 5) = must_div(eqrhs(i + 2, X(i + 3), X(i + 4)), X(i + 2), "x_{i+5}");
        X(i - 1) = must_div(eqrhs(i - 1, X(i), X(i + 1)), X(i + 2), "x_{i-1}");
        X(i - 2) = must_div(eqrhs(i - 2, X(i - 1), X(i)), X(i + 1), "x_{i-2}");
        out.q1 = q_def(mode, 1, out.x);
        out.q2 = q_def(mode, 2, out.x);
        out.var_names = {"x" + std::to_string(i), "x" + std::to_string(idx8(i + 1)),
                         "x" + std::to_string(idx8(i + 2))};
    } else {
        // chart (x_i, q_i, x_{i+2}); every derivation divides by a chart monomial
        LaurentPoly q = LaurentPoly::variable(3, 1);
        X(i) = LaurentPoly::variable(3, 0);
        X(i + 2) = LaurentPoly::variable(3, 2);
        QRelCoef r = q_rel_coef(mode, i);
        LaurentPoly qrhs = LaurentPoly::constant(3, r.c0) + X(i).scaled(r.c1) +
                           X(i + 2).scaled(r.c2) + (X(i) * X(i + 2)).scaled(r.c3);
        X(i + 1) = must_div(qrhs, q, "x_{i+1}");
        X(i + 3) = must_div(eqrhs(i, X(i + 1), X(i + 2)), X(i), "x_{i+3}");
        X(i - 1) = must_div(eqrhs(i - 1, X(i), X(i + 1)), X(i + 2), "x_{i-1}");
        PairCoef p4 = pair_coef(mode, i);
        X(i + 4) = must_div(q.scaled(p4.alpha) + LaurentPoly::constant(3, p4.beta), X(i), "x_{i+4}");
        PairCoef p4b = pair_coef(mode, i + 2);
        X(i - 2) = must_div(q.scaled(p4b.alpha) + LaurentPoly::constant(3, p4b.beta), X(i + 2), "x_{i-2}");
        X(i + 5) = must_div(eqrhs(i + 2, X(i + 3), X(i + 4)), X(i + 2), "x_{i+5}");

        out.q1 = q_def(mode, 1, out.x);
        out.q2 = q_def(mode, 2, out.x);
        // the derived q_i must reproduce the chart coordinate itself
        const LaurentPoly& qi = (i % 2) ? out.q1 : out.q2;
        if (qi != q) throw std::logic_error("chart expansion: q coordinate mismatch");
        out.var_names = {"x" + std::to_string(i), (i % 2) ? "q1" : "q2",
                         "x" + std::to_string(idx8(i + 2))};
    }
    check_q_reps(mode, out.x, out.q1, out.q2);
    return out;
}

std::pair<LaurentPoly, LaurentPoly> invariants_q(Mode mode) {
    ChartExpansion e = chart_expansions({ChartKind::Consecutive, 1}, mode);
    return {e.q1, e.q2};
}

std::array<LaurentPoly, 5> dp5_chart_terms() {
    OrbitResult orb = iterate({2, Mode::Plain}, 5);
    std::array<LaurentPoly, 5> out;
    for (int k = 0; k < 5; ++k) out[k] = orb.terms[k];
    return out;
}

bool report_ok(const Report& r) {
    for (const auto& c : r)
        if (!c.ok) return false;
    return true;
}

static void check_eq(Report& rep, const std::string& name, const LaurentPoly& lhs,
                     const LaurentPoly& rhs) {
    CheckResult c;
    c.name = name;
    c.ok = lhs == rhs;
    if (!c.ok) c.witness = (lhs - rhs).to_string();
    rep.push_back(c);
}

// ---- OGr(5,10) quadrics ----
//
// Polynomial ring in 16 variables: slots 0..7 are x1..x8, slots 8..15 are y1..y8.
namespace {

LaurentPoly sx(int i) { return LaurentPoly::variable(16, idx8(i) - 1); }
LaurentPoly sy(int i) { return LaurentPoly::variable(16, 8 + idx8(i) - 1); }

LaurentPoly ogr_quadric(int i) {
    // x_i x_{i+3} - x_{i+1} y_{i+4} - x_{i+2} y_{i-1} - y_{i+1} y_{i+2}
    return sx(i) * sx(i + 3) - sx(i + 1) * sy(i + 4) - sx(i + 2) * sy(i - 1) -
           sy(i + 1) * sy(i + 2);
}

LaurentPoly ogr_orthoplex(int which) {
    if (which == 1) return sx(1) * sx(5) - sx(3) * sx(7) - sy(1) * sy(5) + sy(3) * sy(7);
    return sx(2) * sx(6) - sx(4) * sx(8) - sy(2) * sy(6) + sy(4) * sy(8);
}

// the signed swap x_i -> -y_{3i}, y_i -> x_{3i+4} as images for substitute()
std::vector<LaurentFraction> ogr_involution_images() {
    std::vector<LaurentFraction> img;
    for (int i = 1; i <= 8; ++i) img.push_back(LaurentFraction(-sy(3 * i)));
    for (int i = 1; i <= 8; ++i) img.push_back(LaurentFraction(sx(3 * i + 4)));
    return img;
}

} // namespace

Report verify_quadrics_ogr() {
    Report rep;

    // chart identities: x1,x2,x3 free over Z[y1..y8], the rest derived
    ChartExpansion e = chart_expansions({ChartKind::Consecutive, 1}, Mode::FullY);
    for (int k = 1; k <= 8; ++k) {
        EqCoef c = eq_coef(Mode::FullY, k);
        LaurentPoly rhs = LaurentPoly::constant(3, c.a) + e.xi(k + 1).scaled(c.b) +
                          e.xi(k + 2).scaled(c.c);
        check_eq(rep, "ogr quadric x" + std::to_string(k) + "*x" + std::to_string(idx8(k + 3)),
                 e.xi(k) * e.xi(k + 3), rhs);
    }
    check_eq(rep, "ogr orthoplex x1x5-x3x7 = y1y5-y3y7",
             e.xi(1) * e.xi(5) - e.xi(3) * e.xi(7),
             LaurentPoly::constant(3, ypar(1) * ypar(5) - ypar(3) * ypar(7)));
    check_eq(rep, "ogr orthoplex x2x6-x4x8 = y2y6-y4y8",
             e.xi(2) * e.xi(6) - e.xi(4) * e.xi(8),
             LaurentPoly::constant(3, ypar(2) * ypar(6) - ypar(4) * ypar(8)));

    // involution permutes the ten quadrics up to sign
    std::vector<LaurentPoly> quads;
    for (int i = 1; i <= 8; ++i) quads.push_back(ogr_quadric(i));
    quads.push_back(ogr_orthoplex(1));
    quads.push_back(ogr_orthoplex(2));
    auto img = ogr_involution_images();
    std::vector<bool> hit(quads.size(), false);
    bool all_mapped = true;
    for (size_t a = 0; a < quads.size(); ++a) {
        auto f = quads[a].substitute(img).to_laurent();
        bool found = false;
        if (f) {
            for (size_t b = 0; b < quads.size() && !found; ++b) {
                if (*f == quads[b] || *f == -quads[b]) {
                    hit[b] = true;
                    found = true;
                }
            }
        }
        all_mapped = all_mapped && found;
    }
    bool onto = true;
    for (bool h : hit) onto = onto && h;
    rep.push_back({"ogr involution permutes the quadric set up to sign",
                   all_mapped && onto, all_mapped ? "" : "some image not a signed quadric"});
    return rep;
}

// ---- dP5 Pfaffians ----

namespace {

LaurentPoly px(int i) { return LaurentPoly::variable(5, (idx5(i)) - 1); }

// skew 5x5 matrix of the homogenised d = 2 relations; upper entries
LaurentPoly pf_entry(int r, int c) {
    struct E { int r, c; int var; bool is_y; };
    // m12=y5 m13=x1 m14=x2 m15=y3 m23=y2 m24=x3 m25=x4 m34=y4 m35=x5 m45=y1
    static const E tab[] = {
        {1, 2, 5, true}, {1, 3, 1, false}, {1, 4, 2, false}, {1, 5, 3, true},
        {2, 3, 2, true}, {2, 4, 3, false}, {2, 5, 4, false},
        {3, 4, 4, true}, {3, 5, 5, false},
        {4, 5, 1, true},
    };
    for (const auto& e : tab)
        if (e.r == r && e.c == c)
            return e.is_y ? LaurentPoly::constant(5, ypar(e.var, 5)) : px(e.var);
    throw std::logic_error("pf_entry");
}

LaurentPoly pfaffian4(int skip) {
    int idx[4], n = 0;
    for (int i = 1; i <= 5; ++i)
        if (i != skip) idx[n++] = i;
    // Pf = m_ab m_cd - m_ac m_bd + m_ad m_bc
    return pf_entry(idx[0], idx[1]) * pf_entry(idx[2], idx[3]) -
           pf_entry(idx[0], idx[2]) * pf_entry(idx[1], idx[3]) +
           pf_entry(idx[0], idx[3]) * pf_entry(idx[1], idx[2]);
}

LaurentPoly dp2_relation(int i) {
    // x_{i-1} x_{i+1} - x_i y_i - y_{i-2} y_{i+2}
    return px(i - 1) * px(i + 1) - px(i).scaled(ypar(idx5(i), 5)) -
           LaurentPoly::constant(5, ypar(idx5(i - 2), 5) * ypar(idx5(i + 2), 5));
}

// evaluate a polynomial with only nonnegative x-exponents at all x_i = -1
ParamPoly eval_x_neg1(const LaurentPoly& p) {
    ParamPoly out;
    for (const auto& [e, c] : p.terms()) {
        long long total = 0;
        for (int v : e) total += v;
        out += (total % 2 == 0) ? c : -c;
    }
    return out;
}

} // namespace

Report verify_pfaffians_dp5() {
    Report rep;
    std::vector<LaurentPoly> rels;
    for (int i = 1; i <= 5; ++i) rels.push_back(dp2_relation(i));

    for (int skip = 1; skip <= 5; ++skip) {
        LaurentPoly pf = pfaffian4(skip);
        bool found = false;
        for (int i = 0; i < 5 && !found; ++i)
            if (pf == rels[i] || pf == -rels[i]) found = true;
        rep.push_back({"pfaffian " + std::to_string(skip) + " reproduces a homogenised relation",
                       found, found ? "" : pf.to_string()});
    }
    // all five relations covered
    {
        bool covered = true;
        for (int i = 0; i < 5; ++i) {
            bool found = false;
            for (int skip = 1; skip <= 5 && !found; ++skip) {
                LaurentPoly pf = pfaffian4(skip);
                if (pf == rels[i] || pf == -rels[i]) found = true;
            }
            covered = covered && found;
        }
        rep.push_back({"pfaffians cover all five relations", covered, ""});
    }

    // x_i = -1 for all i: relations become the recurrence in y_{2i}
    for (int i = 1; i <= 5; ++i) {
        ParamPoly v = eval_x_neg1(rels[i - 1]);
        // 1 + y_i - y_{i-2} y_{i+2}, i.e. z_{k-1} z_{k+1} = z_k + 1 for z_k = y_{2k}
        ParamPoly expect = ParamPoly(1) + ypar(idx5(i), 5) - ypar(idx5(i - 2), 5) * ypar(idx5(i + 2), 5);
        bool ok = v == expect || v == -expect;
        rep.push_back({"x=-1 specialisation of relation " + std::to_string(i), ok,
                       ok ? "" : v.to_string()});
    }

    // y_i = 1 recovers the plain recurrence
    std::array<long long, N_PARAMS> asg{};
    std::array<bool, N_PARAMS> has{};
    for (int i = 0; i < 5; ++i) { asg[P_Y1 + i] = 1; has[P_Y1 + i] = true; }
    for (int i = 1; i <= 5; ++i) {
        LaurentPoly v = rels[i - 1].param_eval(asg, has);
        LaurentPoly expect = px(i - 1) * px(i + 1) - px(i) - LaurentPoly(5, 1);
        check_eq(rep, "y=1 specialisation of relation " + std::to_string(i), v, expect);
    }
    return rep;
}

Report verify_unprojection_equations() {
    Report rep;
    ChartExpansion e = chart_expansions({ChartKind::Consecutive, 1}, Mode::Plain);
    const LaurentPoly one(3, 1);

    for (int i = 1; i <= 8; ++i)
        check_eq(rep, "x" + std::to_string(i) + "*x" + std::to_string(idx8(i + 3)) +
                          " = 1 + x" + std::to_string(idx8(i + 1)) + " + x" + std::to_string(idx8(i + 2)),
                 e.xi(i) * e.xi(i + 3), one + e.xi(i + 1) + e.xi(i + 2));

    for (int i = 1; i <= 4; ++i)
        check_eq(rep, "x" + std::to_string(i) + "*x" + std::to_string(i + 4) + " = q + 1",
                 e.xi(i) * e.xi(i + 4), e.qi(i) + one);

    for (int i = 1; i <= 8; ++i)
        check_eq(rep, "x" + std::to_string(i) + "*q_(i+1) = (1+x_{i+1})(1+x_{i-1})",
                 e.xi(i) * e.qi(i + 1), (one + e.xi(i + 1)) * (one + e.xi(i - 1)));

    LaurentPoly sum(3);
    for (int i = 1; i <= 8; ++i) sum += e.xi(i);
    check_eq(rep, "q1*q2 = 4 + x1 + ... + x8", e.q1 * e.q2, LaurentPoly(3, 4) + sum);
    return rep;
}

Report verify_factorizations() {
    Report rep;

    // d = 2: w + 3 = x1 x2 x3 x4 x5
    auto t = dp5_chart_terms();
    LaurentPoly w2(2);
    for (const auto& x : t) w2 += x;
    LaurentPoly prod = t[0] * t[1] * t[2] * t[3] * t[4];
    check_eq(rep, "w + 3 = x1*x2*x3*x4*x5 (d=2)", w2 + LaurentPoly(2, 3), prod);

    // d = 3 at lambda = mu = 1
    ChartExpansion e = chart_expansions({ChartKind::Consecutive, 1}, Mode::Plain);
    const LaurentPoly x1 = e.xi(1), x2 = e.xi(2), x3 = e.xi(3);
    const LaurentPoly one(3, 1);
    LaurentPoly wq(3);
    for (int i = 1; i <= 8; ++i) wq += e.xi(i);
    wq += e.q1 + e.q2;
    LaurentPoly m = x1 * x2 * x3;
    check_eq(rep, "(w_Q + 5)*x1x2x3 = (1+x1+x2)(1+x2+x3)(1+x1+x2+x3+x1x3)",
             (wq + LaurentPoly(3, 5)) * m,
             (one + x1 + x2) * (one + x2 + x3) * (one + x1 + x2 + x3 + x1 * x3));

    LaurentPoly wp(3);
    for (int i = 1; i <= 8; ++i) wp += e.xi(i);
    check_eq(rep, "(w_P + 4)*x1x2x3 = (1+x1)(1+x2)(1+x3)(1+x1+x2+x3)",
             (wp + LaurentPoly(3, 4)) * m,
             (one + x1) * (one + x2) * (one + x3) * (one + x1 + x2 + x3));

    // degree-2 del Pezzo potential in the d = 2 chart
    const LaurentPoly a1 = t[0], a2 = t[1], a3 = t[2], a5 = t[4];
    LaurentPoly wdp2 = a1 * a5 * a5 + (a1 * a5).scaled(ParamPoly(5)) + a1.scaled(ParamPoly(10)) +
                       a5.scaled(ParamPoly(3)) + a3.scaled(ParamPoly(3)) +
                       a2.scaled(ParamPoly(10)) + (a2 * a3).scaled(ParamPoly(5)) + a2 * a3 * a3;
    LaurentPoly m2 = (a1 * a2) * (a1 * a2);
    LaurentPoly lhs = (wdp2 + LaurentPoly(2, 12)) * m2;
    LaurentPoly b = LaurentPoly(2, 1) + a1 + a2;
    LaurentPoly c = a1 + a2;
    check_eq(rep, "(w_P^dP2 + 12)*x1^2x2^2 = (1+x1+x2)^2 (x1+x2)^3", lhs, b * b * c * c * c);
    return rep;
}

Report verify_sigma_invariance() {
    Report rep;

    // d = 2 shift: (x1, x2) -> (x2, (1+x2)/x1)
    auto t = dp5_chart_terms();
    LaurentPoly w2(2);
    for (const auto& x : t) w2 += x;
    LaurentFraction s2(LaurentPoly(2, 1) + LaurentPoly::variable(2, 1));
    s2.push_den(LaurentPoly::variable(2, 0), 1);
    std::vector<LaurentFraction> shift2 = {LaurentFraction(LaurentPoly::variable(2, 1)), s2};
    bool ok2 = w2.substitute(shift2).equals(LaurentFraction(w2));
    rep.push_back({"w is sigma-invariant (d=2)", ok2, ""});

    // d = 3 shift: (x1, x2, x3) -> (x2, x3, (1+x2+x3)/x1)
    ChartExpansion e = chart_expansions({ChartKind::Consecutive, 1}, Mode::Plain);
    LaurentFraction s3(LaurentPoly(3, 1) + LaurentPoly::variable(3, 1) + LaurentPoly::variable(3, 2));
    s3.push_den(LaurentPoly::variable(3, 0), 1);
    std::vector<LaurentFraction> shift3 = {LaurentFraction(LaurentPoly::variable(3, 1)),
                                           LaurentFraction(LaurentPoly::variable(3, 2)), s3};
    LaurentPoly wq(3), wp(3);
    for (int i = 1; i <= 8; ++i) wp += e.xi(i);
    wq = wp + e.q1 + e.q2;
    rep.push_back({"w_Q is sigma-invariant", wq.substitute(shift3).equals(LaurentFraction(wq)), ""});
    rep.push_back({"w_P is sigma-invariant", wp.substitute(shift3).equals(LaurentFraction(wp)), ""});
    return rep;
}

Report verify_specialisation_coherence() {
    Report rep;
    std::array<long long, N_PARAMS> asg{};
    std::array<bool, N_PARAMS> has{};
    asg[P_LAMBDA] = 1; has[P_LAMBDA] = true;
    asg[P_MU] = 1; has[P_MU] = true;
    for (int i = 0; i < 8; ++i) { asg[P_Y1 + i] = 1; has[P_Y1 + i] = true; }

    ChartExpansion plain = chart_expansions({ChartKind::Consecutive, 1}, Mode::Plain);
    ChartExpansion lm = chart_expansions({ChartKind::Consecutive, 1}, Mode::LambdaMu);
    ChartExpansion fy = chart_expansions({ChartKind::Consecutive, 1}, Mode::FullY);
    for (int i = 1; i <= 8; ++i) {
        check_eq(rep, "lambda-mu x" + std::to_string(i) + " at lambda=mu=1 equals plain",
                 lm.xi(i).param_eval(asg, has), plain.xi(i));
        check_eq(rep, "full-y x" + std::to_string(i) + " at y=1 equals plain",
                 fy.xi(i).param_eval(asg, has), plain.xi(i));
    }
    check_eq(rep, "lambda-mu q1 at 1 equals plain", lm.q1.param_eval(asg, has), plain.q1);
    check_eq(rep, "lambda-mu q2 at 1 equals plain", lm.q2.param_eval(asg, has), plain.q2);
    check_eq(rep, "full-y q1 at 1 equals plain", fy.q1.param_eval(asg, has), plain.q1);
    check_eq(rep, "full-y q2 at 1 equals plain", fy.q2.param_eval(asg, has), plain.q2);
    return rep;
}

} // namespace lym
