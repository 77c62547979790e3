// lym: exact-arithmetic toolkit for the Lyness recurrences, the associated
// scattering diagrams and tropical polytopes, and classical periods of the
// mirror Landau-Ginzburg potentials.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "lym/lyness.hpp"
#include "lym/periods.hpp"
#include "lym/scattering.hpp"
#include "lym/tropical.hpp"

using namespace lym;
using json = nlohmann::ordered_json;

namespace {

constexpr int EXIT_VERIFY_FAILED = 2;
constexpr int EXIT_CONFIG = 3;

json laurent_to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        t["exp"] = e;
        t["coeff"] = c.to_string();
        terms.push_back(t);
    }
    return json{{"dim", p.dim()}, {"terms", terms}};
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write " + out_path);
        f << j.dump(2) << "\n";
    }
}

Mode parse_mode(const std::string& s) {
    if (s == "plain") return Mode::Plain;
    if (s == "lambda-mu") return Mode::LambdaMu;
    if (s == "full-y") return Mode::FullY;
    throw CLI::ValidationError("mode must be plain, lambda-mu or full-y");
}

int thread_count(int flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("LYM_THREADS")) return std::max(1, atoi(env));
    return (int)std::max(1u, std::thread::hardware_concurrency());
}

std::filesystem::path cache_dir() {
    if (const char* env = std::getenv("LYM_CACHE_DIR")) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return std::filesystem::path(xdg) / "lym";
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".cache" / "lym";
    return std::filesystem::temp_directory_path() / "lym-cache";
}

uint64_t fnv1a(const std::string& s, uint64_t h = 14695981039346656037ull) {
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
    return h;
}

// ---- verify: every identity the toolkit asserts, as one named line each ----

struct VerifyContext {
    std::vector<CheckResult> results;
    void add(const std::string& name, bool ok, const std::string& witness = "") {
        results.push_back({name, ok, witness});
    }
    void add(const Report& rep, const std::string& prefix) {
        for (const auto& c : rep) results.push_back({prefix + ": " + c.name, c.ok, c.witness});
    }
};

void verify_lyness(VerifyContext& ctx) {
    OrbitResult r2 = iterate({2, Mode::Plain}, 7);
    ctx.add("lyness: d=2 period 5", r2.period && *r2.period == 5);
    OrbitResult r3 = iterate({3, Mode::Plain}, 11);
    ctx.add("lyness: d=3 period 8", r3.period && *r3.period == 8);
    OrbitResult r4 = iterate({4, Mode::Plain}, 40);
    ctx.add("lyness: d=4 drops the Laurent property",
            r4.laurent_failure_index.has_value() && !r4.period.has_value());

    bool charts_ok = true;
    for (Mode mode : {Mode::Plain, Mode::LambdaMu, Mode::FullY})
        for (int i = 1; i <= 8 && charts_ok; ++i)
            for (ChartKind kind : {ChartKind::Consecutive, ChartKind::Quad}) {
                ChartExpansion e = chart_expansions({kind, i}, mode);
                for (int k = 1; k <= 8 && charts_ok; ++k) {
                    EqCoef c = eq_coef(mode, k);
                    LaurentPoly rhs = LaurentPoly::constant(3, c.a) + e.xi(k + 1).scaled(c.b) +
                                      e.xi(k + 2).scaled(c.c);
                    charts_ok = e.xi(k) * e.xi(k + 3) == rhs;
                }
            }
    ctx.add("lyness: all 16 charts satisfy the ten equations in all modes", charts_ok);
    ctx.add(verify_quadrics_ogr(), "quadrics");
    ctx.add(verify_pfaffians_dp5(), "pfaffians");
    ctx.add(verify_unprojection_equations(), "unprojection");
    ctx.add(verify_factorizations(), "factorization");
    ctx.add(verify_sigma_invariance(), "sigma");
    ctx.add(verify_specialisation_coherence(), "specialisation");
}

void verify_scattering(VerifyContext& ctx) {
    ScatteringDiagram dp5 = builtin_dp5();
    for (const auto& r : check_consistency(dp5))
        ctx.add("scattering: dp5 joint " + r.joint, r.consistent, r.witness);
    ScatteringDiagram v12 = builtin_v12();
    for (const auto& r : check_consistency(v12))
        ctx.add("scattering: v12 joint " + r.joint + " (symbolic)", r.consistent, r.witness);
    bool derived_ok = true;
    for (const Wall& w : v12.walls)
        derived_ok = derived_ok && w.function == derived_wall_function_v12(w.name);
    ctx.add("scattering: wall table matches the exchange-relation derivation", derived_ok);
    // mutation testing: a perturbed wall function must break a joint
    ScatteringDiagram bad = v12;
    bad.walls[(size_t)bad.wall_index("d1q")].function +=
        LaurentPoly::monomial(3, {0, 2, 0}, ParamPoly(1));
    ctx.add("scattering: single-wall perturbation is detected",
            !all_consistent(check_consistency(bad)));
}

void verify_tropical(VerifyContext& ctx) {
    TropSpace S2 = builtin_dp5_space();
    auto pent = make_polytope(S2, {{-1, 0}, {0, -1}, {1, 0}, {1, 1}, {0, 1}});
    auto pent_polar = pent ? polar(S2, *pent) : std::nullopt;
    ctx.add("tropical: pentagon is self-polar",
            pent && pent_polar && pent_polar->lattice == pent->lattice);
    ctx.add("tropical: pentagon is reflexive", pent && is_reflexive(S2, *pent));

    TropSpace S3 = builtin_v12_space();
    std::vector<Vec> xg, ag;
    for (int i = 0; i < 8; ++i) xg.push_back(S3.fan.rays[(size_t)i]);
    ag = xg;
    ag.push_back(S3.fan.rays[8]);
    ag.push_back(S3.fan.rays[9]);
    auto P = make_polytope(S3, xg);
    auto Q = make_polytope(S3, ag);
    auto Pp = P ? polar(S3, *P) : std::nullopt;
    auto Qp = Q ? polar(S3, *Q) : std::nullopt;
    ctx.add("tropical: polar(P) = Q for the x/xq pair",
            P && Q && Pp && Pp->lattice == Q->lattice);
    ctx.add("tropical: polar(Q) = P for the x/xq pair",
            P && Q && Qp && Qp->lattice == P->lattice);

    auto Pb = make_polytope(S3, {S3.fan.rays[8], S3.fan.rays[9]});
    auto Qb = Pb ? polar(S3, *Pb) : std::nullopt;
    auto Pbb = Qb ? polar(S3, *Qb) : std::nullopt;
    ctx.add("tropical: beachball pair is polar-dual",
            Pb && Qb && Pbb && Pbb->lattice == Pb->lattice && Qb->lattice.size() == 17);
    ctx.add("tropical: beachball vertex counts 2 and 8",
            Pb && Qb && vertices(S3, *Pb).size() == 2 && vertices(S3, *Qb).size() == 8);

    std::vector<long long> phiP = {1, 1, 1, 1, 1, 1, 1, 1, 2, 2};
    std::vector<long long> phiQ(10, 1);
    bool pat = true;
    for (const auto& w : S3.walls) {
        int a = w.span[0], b = w.span[1];
        int fam = b >= 8 ? 2 : (((b - a + 8) % 8 == 1 || (b - a + 8) % 8 == 7) ? 0 : 1);
        pat = pat && pl_linear_across(S3, phiP, w) == (fam == 2);
        pat = pat && pl_linear_across(S3, phiQ, w) == (fam == 1);
    }
    ctx.add("tropical: flat-face pattern of the dual pair", pat);

    ScatteringDiagram D = builtin_dp5();
    QVec q = {Rat(-7, 8), Rat(9, 8)};
    auto lp2 = [](std::vector<Exp> exps) {
        LaurentPoly p(2);
        for (auto& e : exps) p += LaurentPoly::monomial(2, e, ParamPoly(1));
        return p;
    };
    ctx.add("tropical: theta_1 = z1^{-1}", theta_expand(D, {-1, 0}, q) == lp2({{-1, 0}}));
    ctx.add("tropical: theta_2 = z2^{-1}(1+z1^{-1})",
            theta_expand(D, {0, -1}, q) == lp2({{0, -1}, {-1, -1}}));
    ctx.add("tropical: theta_3 = z1+z1z2^{-1}+z2^{-1}",
            theta_expand(D, {1, 0}, q) == lp2({{1, 0}, {1, -1}, {0, -1}}));
    ctx.add("tropical: theta_4 = z1(1+z2)", theta_expand(D, {1, 1}, q) == lp2({{1, 0}, {1, 1}}));
    ctx.add("tropical: theta_5 = z2", theta_expand(D, {0, 1}, q) == lp2({{0, 1}}));

    ReflexiveScan scan = classify_reflexive_dp5();
    ctx.add("tropical: 23 reflexive polygon classes", scan.classes.size() == 23);
    bool sums = true;
    int self_dual = 0;
    for (const auto& cls : scan.classes) {
        sums = sums && cls.boundary_points +
                               scan.classes[(size_t)cls.dual_class].boundary_points == 10;
        if (cls.self_dual) ++self_dual;
    }
    ctx.add("tropical: dual pairs satisfy d(P)+d(P*) = 10", sums);
    ctx.add("tropical: three self-dual pentagons", self_dual == 3);
}

void verify_mirrorscan(VerifyContext& ctx) {
    auto heads_equal = [](const PeriodSeries& p, std::vector<long long> h) {
        for (size_t i = 0; i < h.size(); ++i)
            if (!(p.coeffs[i] == BigInt(h[i]))) return false;
        return true;
    };
    ctx.add("period: dp5 head", heads_equal(period(potential_dp5(), 7),
                                            {1, 0, 10, 30, 270, 1560, 11350, 77700}));
    ctx.add("period: w_Q head", heads_equal(period(potential_wQ(), 7),
                                            {1, 0, 48, 600, 13176, 276480, 6259800, 146064240}));
    ctx.add("period: w_P head", heads_equal(period(potential_wP(), 7),
                                            {1, 0, 24, 192, 2904, 40320, 611520, 9515520}));
    ctx.add("period: q1+q2 head", heads_equal(period(potential_mm221(), 7),
                                              {1, 0, 8, 24, 240, 1440, 11960, 89040}));
    PeriodSeries a = shift_series(period(potential_dp5(), 10), 3, 10);
    PeriodSeries b = shift_series(period(potential_wQ(), 10), 5, 10);
    bool apery_ok = true, apery2_ok = true;
    for (int n = 0; n <= 10; ++n) {
        apery_ok = apery_ok && a.coeffs[(size_t)n] == apery(n);
        apery2_ok = apery2_ok && b.coeffs[(size_t)n] == apery2(n);
    }
    ctx.add("period: Apery identity for the surface", apery_ok);
    ctx.add("period: Apery identity for the 3-fold", apery2_ok);
    PeriodSeries dp2 = period(potential_dp2() + LaurentPoly(2, 12), 8);
    bool dp2_ok = true;
    for (int n = 0; n <= 8; ++n) dp2_ok = dp2_ok && dp2.coeffs[(size_t)n] == dp2_coefficient(n);
    ctx.add("period: binomial closed form for the degree-2 surface", dp2_ok);
    auto oct = octagon_potentials();
    PeriodSeries o0 = period(oct[0], 10), o1 = period(oct[1], 10), o2 = period(oct[2], 10);
    ctx.add("period: octagon potentials pairwise distinct",
            o0.coeffs != o1.coeffs && o0.coeffs != o2.coeffs && o1.coeffs != o2.coeffs);
    SurveyReport rep = survey(4, {}, thread_count(0));
    ctx.add("survey: 705 Fano Newton polytopes", rep.fano_count == 705);
    ctx.add("survey: at most 46 period buckets at depth 4", rep.distinct_periods <= 46);
}

int cmd_verify(const std::string& only, const std::string& out_path) {
    VerifyContext ctx;
    if (only.empty() || only == "lyness") verify_lyness(ctx);
    if (only.empty() || only == "scattering") verify_scattering(ctx);
    if (only.empty() || only == "tropical") verify_tropical(ctx);
    if (only.empty() || only == "mirrorscan") verify_mirrorscan(ctx);
    if (ctx.results.empty()) {
        std::cerr << "unknown --only section: " << only << "\n";
        return EXIT_CONFIG;
    }
    json out = json::array();
    bool all_ok = true;
    for (const auto& c : ctx.results) {
        json row;
        row["identity_name"] = c.name;
        row["status"] = c.ok ? "pass" : "fail";
        if (!c.ok && !c.witness.empty()) row["witness"] = c.witness;
        out.push_back(row);
        all_ok = all_ok && c.ok;
        std::cerr << (c.ok ? "[pass] " : "[FAIL] ") << c.name << "\n";
    }
    emit(json{{"identities", out}, {"total", ctx.results.size()}, {"ok", all_ok}}, out_path);
    return all_ok ? 0 : EXIT_VERIFY_FAILED;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cluster recurrence, scattering and period computations"};
    app.require_subcommand(1);

    // lyness
    auto* lyn = app.add_subcommand("lyness", "iterate the recurrence");
    int lyn_d = 2, lyn_steps = 7;
    std::string lyn_mode = "plain", lyn_out;
    lyn->add_option("--d", lyn_d, "dimension of the recurrence");
    lyn->add_option("--steps", lyn_steps, "number of terms to compute");
    lyn->add_option("--mode", lyn_mode, "plain, lambda-mu or full-y");
    lyn->add_option("--out", lyn_out, "write JSON here instead of stdout");

    // period
    auto* per = app.add_subcommand("period", "classical period of a potential");
    std::string per_pot = "wQ", per_out;
    int per_depth = 7;
    long long per_shift = 0;
    bool per_csv = false, per_noprune = false;
    per->add_option("--potential", per_pot, "wQ, wP, dp5, dp2, mm221, oct1..oct3 or eps:<0..1023>");
    per->add_option("--depth", per_depth, "number of coefficients after alpha_0");
    per->add_option("--shift", per_shift, "shift the potential by an integer");
    per->add_flag("--csv", per_csv, "emit CSV instead of JSON");
    per->add_flag("--no-prune", per_noprune, "disable reachability pruning");
    per->add_option("--out", per_out, "write output here instead of stdout");

    // scatter
    auto* sc = app.add_subcommand("scatter", "scattering diagram operations");
    auto* sc_check = sc->add_subcommand("check", "consistency at every joint");
    std::string sc_diagram = "dp5", sc_lambda = "symbolic", sc_mu = "symbolic", sc_out;
    sc_check->add_option("--diagram", sc_diagram, "dp5 or v12");
    sc_check->add_option("--lambda", sc_lambda, "integer or 'symbolic'");
    sc_check->add_option("--mu", sc_mu, "integer or 'symbolic'");
    sc_check->add_option("--out", sc_out, "write JSON here instead of stdout");

    // trop
    auto* tr = app.add_subcommand("trop", "tropical polytope operations");
    auto* tr_polar = tr->add_subcommand("polar", "lattice points of the polar");
    std::string tr_space = "dp5", tr_points, tr_out;
    tr_polar->add_option("--space", tr_space, "dp5 or v12");
    tr_polar->add_option("--points", tr_points, "generators, e.g. \"-1,0;0,-1;1,0\"")->required();
    tr_polar->add_option("--out", tr_out, "write JSON here instead of stdout");
    auto* tr_scan = tr->add_subcommand("reflexive-scan", "classify reflexive polygons");
    std::string tr_scan_out;
    tr_scan->add_option("--out", tr_scan_out, "write JSON here instead of stdout");
    auto* tr_theta = tr->add_subcommand("theta", "theta function of an integral point");
    std::string tr_n, tr_theta_out;
    tr_theta->add_option("--n", tr_n, "a,b for the surface or a,b,c for the 3-fold")->required();
    tr_theta->add_option("--out", tr_theta_out, "write JSON here instead of stdout");

    // survey
    auto* sv = app.add_subcommand("survey", "the 1024-potential survey");
    int sv_depth = 10, sv_threads = 0;
    std::string sv_fixture, sv_out;
    sv->add_option("--depth", sv_depth, "period truncation depth");
    sv->add_option("--fixture", sv_fixture, "quantum period fixture JSON");
    sv->add_option("--threads", sv_threads, "worker threads (default LYM_THREADS or hardware)");
    sv->add_option("--out", sv_out, "write survey_results.json here");

    // verify
    auto* vf = app.add_subcommand("verify", "re-run every identity check");
    std::string vf_only, vf_out;
    vf->add_option("--only", vf_only, "restrict to lyness, scattering, tropical or mirrorscan");
    vf->add_option("--out", vf_out, "write JSON here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*lyn) {
            Mode mode = parse_mode(lyn_mode);
            OrbitResult r = iterate({lyn_d, mode}, lyn_steps);
            json j;
            j["d"] = lyn_d;
            j["mode"] = lyn_mode;
            j["steps"] = lyn_steps;
            if (r.period) j["period"] = *r.period;
            if (r.laurent_failure_index) j["laurent_failure_index"] = *r.laurent_failure_index;
            std::vector<std::string> vars;
            for (int i = 1; i <= lyn_d; ++i) vars.push_back("x" + std::to_string(i));
            json terms = json::array();
            for (const auto& t : r.terms) terms.push_back(t.to_string(vars));
            j["terms"] = terms;
            emit(j, lyn_out);
            return 0;
        }
        if (*per) {
            LaurentPoly w;
            if (per_pot == "wQ") w = potential_wQ();
            else if (per_pot == "wP") w = potential_wP();
            else if (per_pot == "dp5") w = potential_dp5();
            else if (per_pot == "dp2") w = potential_dp2();
            else if (per_pot == "mm221") w = potential_mm221();
            else if (per_pot == "oct1") w = octagon_potentials()[0];
            else if (per_pot == "oct2") w = octagon_potentials()[1];
            else if (per_pot == "oct3") w = octagon_potentials()[2];
            else if (per_pot.rfind("eps:", 0) == 0)
                w = potential_eps((uint16_t)std::stoi(per_pot.substr(4)));
            else {
                std::cerr << "unknown potential " << per_pot << "\n";
                return EXIT_CONFIG;
            }
            PeriodSeries p = period(w, per_depth, !per_noprune);
            p.source = per_pot;
            if (per_shift != 0) p = shift_series(p, per_shift, per_depth);
            if (per_csv) {
                std::string csv = "n,alpha_n\n";
                for (size_t i = 0; i < p.coeffs.size(); ++i)
                    csv += std::to_string(i) + "," + p.coeffs[i].to_string() + "\n";
                if (per_out.empty()) std::cout << csv;
                else std::ofstream(per_out) << csv;
            } else {
                json j;
                j["potential"] = per_pot;
                j["shift"] = per_shift;
                json cs = json::array();
                for (const auto& c : p.coeffs) cs.push_back(c.to_string());
                j["coeffs"] = cs;
                emit(j, per_out);
            }
            return 0;
        }
        if (*sc_check) {
            ScatteringDiagram D;
            if (sc_diagram == "dp5") {
                D = builtin_dp5();
            } else if (sc_diagram == "v12") {
                if (sc_lambda == "symbolic" || sc_mu == "symbolic") D = builtin_v12();
                else D = builtin_v12_at(std::stoll(sc_lambda), std::stoll(sc_mu));
            } else {
                std::cerr << "unknown diagram " << sc_diagram << "\n";
                return EXIT_CONFIG;
            }
            auto reports = check_consistency(D);
            json rows = json::array();
            bool ok = true;
            for (const auto& r : reports) {
                json row;
                row["joint"] = r.joint;
                row["consistent"] = r.consistent;
                if (!r.consistent) row["witness"] = r.witness;
                rows.push_back(row);
                ok = ok && r.consistent;
            }
            emit(json{{"diagram", sc_diagram}, {"joints", rows}, {"consistent", ok}}, sc_out);
            return ok ? 0 : EXIT_VERIFY_FAILED;
        }
        if (*tr_polar) {
            TropSpace S = tr_space == "dp5" ? builtin_dp5_space() : builtin_v12_space();
            std::vector<Vec> gens;
            for (char& c : tr_points)
                if (c == ':') c = ';';
            std::stringstream ss(tr_points);
            std::string part;
            while (std::getline(ss, part, ';')) {
                Vec v;
                std::stringstream ps(part);
                std::string c;
                while (std::getline(ps, c, ',')) v.push_back(std::stoll(c));
                if ((int)v.size() != S.dim()) {
                    std::cerr << "point dimension mismatch\n";
                    return EXIT_CONFIG;
                }
                gens.push_back(v);
            }
            auto L = polar_lattice(S, gens);
            if (!L) {
                std::cerr << "polar region is unbounded\n";
                return EXIT_VERIFY_FAILED;
            }
            emit(json{{"space", tr_space}, {"lattice_points", *L}}, tr_out);
            return 0;
        }
        if (*tr_scan) {
            ReflexiveScan scan = classify_reflexive_dp5();
            json rows = json::array();
            for (const auto& cls : scan.classes) {
                json row;
                row["lattice_points"] = cls.rep.lattice;
                row["boundary_points"] = cls.boundary_points;
                row["dual_class"] = cls.dual_class;
                row["self_dual"] = cls.self_dual;
                rows.push_back(row);
            }
            emit(json{{"classes", rows},
                      {"count", scan.classes.size()},
                      {"count_rotation_only", scan.class_count_rotation_only}},
                 tr_scan_out);
            return 0;
        }
        if (*tr_theta) {
            Vec n;
            std::stringstream ps(tr_n);
            std::string c;
            while (std::getline(ps, c, ',')) n.push_back(std::stoll(c));
            LaurentPoly theta;
            if (n.size() == 2) {
                theta = theta_expand(builtin_dp5(), {(int32_t)n[0], (int32_t)n[1]},
                                     {Rat(-7, 8), Rat(9, 8)});
            } else if (n.size() == 3) {
                theta = theta_evaluate_3d(builtin_v12_space(), n);
            } else {
                std::cerr << "--n must have 2 or 3 coordinates\n";
                return EXIT_CONFIG;
            }
            json j;
            j["n"] = n;
            j["theta"] = theta.to_string();
            j["poly"] = laurent_to_json(theta);
            emit(j, tr_theta_out);
            return 0;
        }
        if (*sv) {
            std::vector<FixtureEntry> fixture;
            std::string fixture_bytes;
            if (!sv_fixture.empty()) {
                std::ifstream f(sv_fixture);
                if (!f) {
                    std::cerr << "cannot read fixture " << sv_fixture << "\n";
                    return EXIT_CONFIG;
                }
                std::stringstream buf;
                buf << f.rdbuf();
                fixture_bytes = buf.str();
                fixture = load_fixture(sv_fixture);
            }
            // content-addressed cache keyed by depth and fixture bytes
            uint64_t key = fnv1a(std::to_string(sv_depth) + "\n" + fixture_bytes);
            std::filesystem::path dir = cache_dir();
            std::filesystem::create_directories(dir);
            std::filesystem::path cached =
                dir / ("survey_" + std::to_string(key) + ".json");
            if (std::filesystem::exists(cached)) {
                std::cerr << "cache hit: " << cached.string() << "\n";
                std::ifstream in(cached);
                json j;
                in >> j;
                emit(j, sv_out);
                return 0;
            }
            SurveyReport rep = survey(sv_depth, fixture, thread_count(sv_threads));
            json buckets = json::array();
            for (const auto& b : rep.buckets) {
                json row;
                json headj = json::array();
                for (const auto& cc : b.head) headj.push_back(cc.to_string());
                row["period_head"] = headj;
                row["eps_vectors"] = b.eps;
                if (!b.match.empty()) row["match"] = b.match;
                buckets.push_back(row);
            }
            json j{{"depth", rep.depth},
                   {"fano_count", rep.fano_count},
                   {"distinct_periods", rep.distinct_periods},
                   {"stabilisation_depth", rep.stabilisation_depth},
                   {"matched", rep.matched},
                   {"buckets", buckets}};
            std::ofstream(cached) << j.dump(2) << "\n";
            emit(j, sv_out);
            return 0;
        }
        if (*vf) return cmd_verify(vf_only, vf_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_CONFIG;
    }
    return 0;
}
