#include "lym/periods.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "lym/lyness.hpp"

namespace lym {

namespace {

// packed-exponent sparse polynomial over Z for the period inner loop
using ZTerms = std::map<long long, BigInt>;

long long pack(const Exp& e) {
    long long k = 0;
    for (int v : e) k = (k << 12) | (long long)(v + 2048);
    return k;
}

struct ZPoly {
    int dim = 0;
    ZTerms terms;
    Exp lo, hi;  // componentwise support bounds
};

ZPoly to_zpoly(const LaurentPoly& w) {
    ZPoly z;
    z.dim = w.dim();
    z.lo.assign(w.dim(), 0);
    z.hi.assign(w.dim(), 0);
    bool first = true;
    for (const auto& [e, c] : w.terms()) {
        if (!c.is_constant())
            throw std::invalid_argument("period: potential must have integer coefficients");
        z.terms[pack(e)] = c.constant_term();
        for (int i = 0; i < w.dim(); ++i) {
            z.lo[i] = first ? e[i] : std::min(z.lo[i], e[i]);
            z.hi[i] = first ? e[i] : std::max(z.hi[i], e[i]);
        }
        first = false;
    }
    return z;
}

Exp unpack(long long k, int dim) {
    Exp e(dim);
    for (int i = dim - 1; i >= 0; --i) {
        e[i] = (int32_t)((k & 0xfff) - 2048);
        k >>= 12;
    }
    return e;
}

} // namespace

PeriodSeries period(const LaurentPoly& w, int depth, bool prune) {
    ZPoly zw = to_zpoly(w);
    PeriodSeries out;
    out.coeffs.push_back(BigInt(1));
    ZTerms cur;
    cur[pack(Exp(w.dim(), 0))] = BigInt(1);
    const long long zero_key = pack(Exp(w.dim(), 0));
    for (int n = 1; n <= depth; ++n) {
        ZTerms next;
        for (const auto& [ka, ca] : cur)
            for (const auto& [kb, cb] : zw.terms) {
                // exponent fields are wide enough that packed keys add
                long long k = ka + kb - zero_key;
                auto [it, fresh] = next.try_emplace(k, ca * cb);
                if (!fresh) it->second += ca * cb;
            }
        if (prune) {
            // a monomial can still reach exponent zero only if every
            // coordinate can be cancelled by the remaining multiplications
            int remaining = depth - n;
            for (auto it = next.begin(); it != next.end();) {
                Exp e = unpack(it->first, w.dim());
                bool reachable = true;
                for (int i = 0; i < w.dim() && reachable; ++i)
                    reachable = e[i] + remaining * zw.hi[i] >= 0 &&
                                e[i] + remaining * zw.lo[i] <= 0;
                if (!reachable || it->second.is_zero()) it = next.erase(it);
                else ++it;
            }
        }
        cur = std::move(next);
        auto it = cur.find(zero_key);
        out.coeffs.push_back(it == cur.end() ? BigInt() : it->second);
    }
    return out;
}

PeriodSeries shift_series(const PeriodSeries& p, long long s, int depth) {
    if (depth >= (int)p.coeffs.size())
        throw std::invalid_argument("shift_series: depth exceeds the input series");
    PeriodSeries out;
    out.source = p.source + " shifted by " + std::to_string(s);
    for (int n = 0; n <= depth; ++n) {
        BigInt b;
        for (int k = 0; k <= n; ++k)
            b += BigInt::binomial((unsigned)n, (unsigned)k) *
                 BigInt::pow(BigInt(s), (unsigned)(n - k)) * p.coeffs[(size_t)k];
        out.coeffs.push_back(b);
    }
    return out;
}

BigInt apery(int n) {
    BigInt out;
    for (int k = 0; k <= n; ++k) {
        BigInt b = BigInt::binomial((unsigned)n, (unsigned)k);
        out += b * b * BigInt::binomial((unsigned)(n + k), (unsigned)k);
    }
    return out;
}

BigInt apery2(int n) {
    BigInt out;
    for (int k = 0; k <= n; ++k) {
        BigInt b = BigInt::binomial((unsigned)n, (unsigned)k);
        BigInt c = BigInt::binomial((unsigned)(n + k), (unsigned)k);
        out += b * b * c * c;
    }
    return out;
}

BigInt dp2_coefficient(int n) {
    return BigInt::binomial(2 * (unsigned)n, (unsigned)n) *
           BigInt::binomial(4 * (unsigned)n, 2 * (unsigned)n);
}

// ---- potentials ----

namespace {

const ChartExpansion& plain_chart() {
    static const ChartExpansion chart =
        chart_expansions({ChartKind::Consecutive, 1}, Mode::Plain);
    return chart;
}

} // namespace

LaurentPoly potential_eps(uint16_t eps) {
    const ChartExpansion& e = plain_chart();
    LaurentPoly w(3);
    for (int i = 0; i < 8; ++i)
        if (eps & (1u << i)) w += e.xi(i + 1);
    if (eps & (1u << 8)) w += e.q1;
    if (eps & (1u << 9)) w += e.q2;
    return w;
}

LaurentPoly potential_wQ() { return potential_eps(0x3ff); }
LaurentPoly potential_wP() { return potential_eps(0xff); }
LaurentPoly potential_mm221() { return potential_eps(0x300); }

LaurentPoly potential_dp5() {
    auto t = dp5_chart_terms();
    LaurentPoly w(2);
    for (const auto& x : t) w += x;
    return w;
}

LaurentPoly potential_dp2() {
    auto t = dp5_chart_terms();
    const LaurentPoly &x1 = t[0], &x2 = t[1], &x3 = t[2], &x5 = t[4];
    return x1 * x5 * x5 + (x1 * x5).scaled(ParamPoly(5)) + x1.scaled(ParamPoly(10)) +
           x5.scaled(ParamPoly(3)) + x3.scaled(ParamPoly(3)) + x2.scaled(ParamPoly(10)) +
           (x2 * x3).scaled(ParamPoly(5)) + x2 * x3 * x3;
}

LaurentPoly potential_f1() {
    auto t = dp5_chart_terms();
    return t[0] * t[1] + t[3];
}

std::array<std::array<int, 8>, 3> octagon_coefficient_patterns() {
    // coefficient of x_i at the interior points of the two octagon faces; the
    // vertices x_i x_{i+1} always carry 1. The 2/3-labellings induced by the
    // maximal Minkowski decompositions of the octagon realise exactly three
    // periods up to the dihedral symmetry: all-segments, and the two relative
    // orientations of the triangle decompositions on the two faces.
    return {{{2, 2, 2, 2, 2, 2, 2, 2},
             {3, 2, 2, 3, 2, 3, 3, 2},
             {3, 2, 2, 3, 3, 2, 2, 3}}};
}

std::array<LaurentPoly, 3> octagon_potentials() {
    const ChartExpansion& e = plain_chart();
    LaurentPoly verts(3);
    for (int i = 1; i <= 8; ++i) verts += e.xi(i) * e.xi(i + 1);  // theta of v_i + v_{i+1}
    std::array<LaurentPoly, 3> out;
    auto pats = octagon_coefficient_patterns();
    for (int p = 0; p < 3; ++p) {
        LaurentPoly w = verts;
        for (int i = 0; i < 8; ++i) w += e.xi(i + 1).scaled(ParamPoly(pats[(size_t)p][(size_t)i]));
        out[(size_t)p] = w;
    }
    return out;
}

// ---- Newton polytopes ----

IntPolytope3 newton_polytope(const LaurentPoly& w) {
    if (w.dim() != 3) throw std::invalid_argument("newton_polytope: need 3 variables");
    IntPolytope3 P;
    for (const auto& [e, c] : w.terms()) P.points.push_back(Vec(e.begin(), e.end()));
    const auto& pts = P.points;
    if (pts.size() < 4) return P;  // cannot be full-dimensional

    std::map<std::pair<Vec, long long>, int> facet_set;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            for (size_t k = j + 1; k < pts.size(); ++k) {
                Vec a(3), b(3);
                for (int t = 0; t < 3; ++t) {
                    a[t] = pts[j][t] - pts[i][t];
                    b[t] = pts[k][t] - pts[i][t];
                }
                Vec u = cross3(a, b);
                if (u == Vec{0, 0, 0}) continue;
                u = primitive(u);
                long long c = dotll(u, pts[i]);
                bool below = true, above = true;
                for (const Vec& p : pts) {
                    long long d = dotll(u, p);
                    below = below && d <= c;
                    above = above && d >= c;
                }
                if (below) facet_set[{u, c}] = 1;
                if (above) facet_set[{Vec{-u[0], -u[1], -u[2]}, -c}] = 1;
            }
    // full-dimensional iff some supporting plane has points strictly below it
    for (const auto& [f, tag] : facet_set) {
        for (const Vec& p : pts)
            if (dotll(f.first, p) < f.second) { P.full_dim = true; break; }
        if (P.full_dim) break;
    }
    if (!P.full_dim) return P;
    for (const auto& [f, tag] : facet_set) P.facets.push_back(f);

    // a point is a vertex iff the facets through it span rank 3
    for (const Vec& p : pts) {
        std::vector<Vec> through;
        for (const auto& [u, c] : P.facets)
            if (dotll(u, p) == c) through.push_back(u);
        bool rank3 = false;
        for (size_t i = 0; i < through.size() && !rank3; ++i)
            for (size_t j = i + 1; j < through.size() && !rank3; ++j)
                for (size_t k = j + 1; k < through.size() && !rank3; ++k)
                    rank3 = dotll(cross3(through[i], through[j]), through[k]) != 0;
        if (rank3) P.vertices.push_back(p);
    }
    return P;
}

bool is_fano(const IntPolytope3& P) {
    if (!P.full_dim) return false;
    for (const Vec& v : P.vertices)
        if (primitive(v) != v || v == Vec{0, 0, 0}) return false;
    // 0 strictly interior: every facet offset positive
    for (const auto& [u, c] : P.facets)
        if (c < 1) return false;
    return true;
}

bool newton_polygon_reflexive(const LaurentPoly& w) {
    if (w.dim() != 2) throw std::invalid_argument("newton_polygon_reflexive: need 2 variables");
    std::vector<Vec> pts;
    for (const auto& [e, c] : w.terms()) pts.push_back(Vec(e.begin(), e.end()));
    if (pts.size() < 3) return false;
    bool full_dim = false;
    std::map<std::pair<Vec, long long>, int> edges;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            Vec d = {pts[j][0] - pts[i][0], pts[j][1] - pts[i][1]};
            if (d == Vec{0, 0}) continue;
            Vec u = primitive({d[1], -d[0]});
            for (const Vec& n : {u, Vec{-u[0], -u[1]}}) {
                long long c = dotll(n, pts[i]);
                bool face = true;
                for (const Vec& p : pts) {
                    long long v = dotll(n, p);
                    if (v > c) { face = false; break; }
                    if (v < c) full_dim = true;
                }
                if (face) edges[{n, c}] = 1;
            }
        }
    if (!full_dim) return false;
    for (const auto& [e, tag] : edges)
        if (e.second != 1) return false;
    return true;
}

// ---- survey ----

std::vector<FixtureEntry> load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    nlohmann::json j;
    in >> j;
    std::vector<FixtureEntry> out;
    for (const auto& row : j) {
        FixtureEntry e;
        e.name = row.at("name").get<std::string>();
        for (const auto& c : row.at("coeffs"))
            e.coeffs.push_back(c.is_string() ? BigInt(c.get<std::string>())
                                             : BigInt((long long)c.get<int64_t>()));
        out.push_back(e);
    }
    return out;
}

SurveyReport survey(int depth, const std::vector<FixtureEntry>& fixture, int threads) {
    SurveyReport rep;
    rep.depth = depth;

    std::vector<int> fano(1024, 0);
    std::vector<std::vector<BigInt>> heads(1024);
    auto work = [&](int lo, int hi) {
        for (int eps = lo; eps < hi; ++eps) {
            LaurentPoly w = potential_eps((uint16_t)eps);
            IntPolytope3 newt = newton_polytope(w);
            if (!is_fano(newt)) continue;
            fano[(size_t)eps] = 1;
            heads[(size_t)eps] = period(w, depth).coeffs;
        }
    };
    threads = std::max(1, threads);
    if (threads == 1) {
        work(0, 1024);
    } else {
        std::vector<std::thread> pool;
        int chunk = (1024 + threads - 1) / threads;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(work, t * chunk, std::min(1024, (t + 1) * chunk));
        for (auto& th : pool) th.join();
    }

    // deterministic reduction in epsilon order
    std::map<std::vector<std::string>, int> bucket_of;
    for (int eps = 0; eps < 1024; ++eps) {
        if (!fano[(size_t)eps]) continue;
        ++rep.fano_count;
        std::vector<std::string> key;
        for (const BigInt& c : heads[(size_t)eps]) key.push_back(c.to_string());
        auto it = bucket_of.find(key);
        if (it == bucket_of.end()) {
            bucket_of[key] = (int)rep.buckets.size();
            SurveyBucket b;
            b.head = heads[(size_t)eps];
            b.eps = {(uint16_t)eps};
            rep.buckets.push_back(b);
        } else {
            rep.buckets[(size_t)it->second].eps.push_back((uint16_t)eps);
        }
    }
    rep.distinct_periods = (int)rep.buckets.size();

    // least truncation depth at which the bucket count has already settled
    rep.stabilisation_depth = depth;
    for (int d = 1; d <= depth; ++d) {
        std::map<std::vector<std::string>, int> pref;
        for (const auto& b : rep.buckets) {
            std::vector<std::string> key;
            for (int k = 0; k <= d && k < (int)b.head.size(); ++k)
                key.push_back(b.head[(size_t)k].to_string());
            pref[key] = 1;
        }
        if ((int)pref.size() == rep.distinct_periods) {
            rep.stabilisation_depth = d;
            break;
        }
    }

    for (auto& b : rep.buckets) {
        for (const auto& f : fixture) {
            size_t n = std::min(b.head.size(), f.coeffs.size());
            if (n == 0) continue;
            bool eq = true;
            for (size_t k = 0; k < n && eq; ++k) eq = b.head[k] == f.coeffs[k];
            if (eq) {
                // shallow truncations can agree with several fixture rows
                if (!b.match.empty()) b.match += ", ";
                b.match += f.name;
                ++rep.matched;
            }
        }
    }
    return rep;
}

} // namespace lym
