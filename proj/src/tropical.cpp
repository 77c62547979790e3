#include "lym/tropical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "lym/lyness.hpp"

namespace lym {

std::optional<std::pair<int, QVec>> TropSpace::decompose(const QVec& p) const {
    for (int c = 0; c < (int)fan.cones.size(); ++c) {
        auto coords = fan.cone_coords(c, p);
        if (coords) return std::make_pair(c, *coords);
    }
    return std::nullopt;
}

Mat TropSpace::transition(const Fan::WallAdj& w, int apex_from, int apex_to) const {
    for (const BendSpec& b : bends) {
        std::vector<int> span = b.span;
        std::sort(span.begin(), span.end());
        if (span != w.span) continue;
        if (b.from_apex == apex_from && b.to_apex == apex_to) return b.matrix;
        if (b.from_apex == apex_to && b.to_apex == apex_from)
            return mat_inverse_unimodular(b.matrix);
        throw std::logic_error("bend apexes do not match the wall");
    }
    return mat_identity(dim());
}

Rat pairing_label(const TropSpace& S, const QVec& n, int label) {
    auto dec = S.decompose(n);
    if (!dec) throw std::logic_error("pairing: point not covered by the fan");
    auto& [cone, coords] = *dec;
    Rat out(0);
    for (size_t i = 0; i < coords.size(); ++i)
        out = out + coords[i] * Rat(S.pairing_table[S.fan.cones[cone][i]][label]);
    return out;
}

Rat pairing(const TropSpace& S, const QVec& n, const QVec& m) {
    auto dm = S.decompose(m);
    if (!dm) throw std::logic_error("pairing: point not covered by the fan");
    auto& [conem, bm] = *dm;
    Rat out(0);
    for (size_t j = 0; j < bm.size(); ++j) {
        if (bm[j].is_zero()) continue;
        out = out + bm[j] * pairing_label(S, n, S.fan.cones[conem][j]);
    }
    return out;
}

bool halfspace_contains(const TropSpace& S, const QVec& m, const Rat& c, const QVec& n) {
    return pairing(S, n, m) >= c;
}

// ---- polytopes ----

namespace {

// per-ray weights of a constraint point s: <n, s> = sum_i a_i(n) W[ray_i(n)]
std::vector<Rat> constraint_weights(const TropSpace& S, const Vec& s) {
    auto dec = S.decompose(to_q(s));
    if (!dec) throw std::logic_error("constraint point not covered by the fan");
    auto& [cone, b] = *dec;
    std::vector<Rat> w(S.fan.rays.size(), Rat(0));
    for (size_t r = 0; r < S.fan.rays.size(); ++r)
        for (size_t j = 0; j < b.size(); ++j)
            w[r] = w[r] + b[j] * Rat(S.pairing_table[r][S.fan.cones[cone][j]]);
    return w;
}

// does {a >= 0, rows . a >= 0} contain a nonzero vector? (exact, dim 2 or 3)
bool recession_nontrivial(const std::vector<std::vector<Rat>>& rows, int dim) {
    auto feasible = [&](const std::vector<Rat>& a) {
        bool nonzero = false;
        for (const Rat& x : a) {
            if (x < Rat(0)) return false;
            if (!x.is_zero()) nonzero = true;
        }
        if (!nonzero) return false;
        for (const auto& r : rows) {
            Rat dot(0);
            for (int i = 0; i < dim; ++i) dot = dot + r[i] * a[i];
            if (dot < Rat(0)) return false;
        }
        return true;
    };
    std::vector<std::vector<Rat>> candidates;
    for (int i = 0; i < dim; ++i) {
        std::vector<Rat> e(dim, Rat(0));
        e[i] = Rat(1);
        candidates.push_back(e);
    }
    if (dim == 2) {
        for (const auto& r : rows) {
            candidates.push_back({r[1], -r[0]});
            candidates.push_back({-r[1], r[0]});
        }
    } else {
        // extreme ray candidates: intersections of two active planes drawn
        // from the constraint rows and the coordinate planes
        std::vector<std::vector<Rat>> planes = rows;
        for (int i = 0; i < 3; ++i) {
            std::vector<Rat> e(3, Rat(0));
            e[i] = Rat(1);
            planes.push_back(e);
        }
        for (size_t i = 0; i < planes.size(); ++i)
            for (size_t j = i + 1; j < planes.size(); ++j) {
                const auto& a = planes[i];
                const auto& b = planes[j];
                std::vector<Rat> c = {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                      a[0] * b[1] - a[1] * b[0]};
                candidates.push_back(c);
                candidates.push_back({-c[0], -c[1], -c[2]});
            }
    }
    for (const auto& c : candidates)
        if (feasible(c)) return true;
    return false;
}

} // namespace

std::optional<std::vector<Vec>> polar_lattice(const TropSpace& S,
                                              const std::vector<Vec>& constraints, int cap) {
    const int d = S.dim();
    std::vector<std::vector<Rat>> W;
    for (const Vec& s : constraints) W.push_back(constraint_weights(S, s));

    // region-in-cone data: row_s[i] = W_s[cone ray i]
    long long radius = 1;
    for (int c = 0; c < (int)S.fan.cones.size(); ++c) {
        std::vector<std::vector<Rat>> rows;
        for (const auto& w : W) {
            std::vector<Rat> r;
            for (int i = 0; i < d; ++i) r.push_back(w[S.fan.cones[c][i]]);
            rows.push_back(r);
        }
        if (recession_nontrivial(rows, d)) return std::nullopt;  // unbounded

        // vertex bound: d active constraints among coordinate planes and rows
        std::vector<std::vector<Rat>> planes;
        std::vector<Rat> offs;
        for (int i = 0; i < d; ++i) {
            std::vector<Rat> e(d, Rat(0));
            e[i] = Rat(1);
            planes.push_back(e);
            offs.push_back(Rat(0));
        }
        for (const auto& r : rows) {
            planes.push_back(r);
            offs.push_back(Rat(-1));
        }
        const size_t np = planes.size();
        auto try_vertex = [&](const std::vector<size_t>& pick) {
            std::vector<QVec> cols(d, QVec(d));
            QVec rhs(d);
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) cols[j][i] = planes[pick[i]][j];
                rhs[i] = offs[pick[i]];
            }
            auto sol = solve_linear(cols, rhs);
            if (!sol) return;
            for (const Rat& x : *sol)
                if (x < Rat(0)) return;
            for (size_t s = 0; s < rows.size(); ++s) {
                Rat dot(0);
                for (int i = 0; i < d; ++i) dot = dot + rows[s][i] * (*sol)[i];
                if (dot < Rat(-1)) return;
            }
            // ambient point n = sum a_i ray_i
            for (int k = 0; k < d; ++k) {
                Rat coord(0);
                for (int i = 0; i < d; ++i)
                    coord = coord + (*sol)[i] * Rat(S.fan.rays[S.fan.cones[c][i]][k]);
                long long bound = coord.n / coord.d;
                if (bound < 0) bound = -bound;
                radius = std::max(radius, bound + 1);
            }
        };
        if (d == 2) {
            for (size_t i = 0; i < np; ++i)
                for (size_t j = i + 1; j < np; ++j) try_vertex({i, j});
        } else {
            for (size_t i = 0; i < np; ++i)
                for (size_t j = i + 1; j < np; ++j)
                    for (size_t k = j + 1; k < np; ++k) try_vertex({i, j, k});
        }
    }
    if (radius > cap) return std::nullopt;

    std::vector<Vec> out;
    Vec p(d, -radius);
    while (true) {
        auto dec = S.decompose(to_q(p));
        if (!dec) throw std::logic_error("fan does not cover a lattice point");
        auto& [cone, a] = *dec;
        bool ok = true;
        for (size_t s = 0; s < W.size() && ok; ++s) {
            Rat v(0);
            for (int i = 0; i < d; ++i) v = v + a[i] * W[s][S.fan.cones[cone][i]];
            ok = v >= Rat(-1);
        }
        if (ok) out.push_back(p);
        int k = 0;
        while (k < d && p[k] == radius) p[k++] = -radius;
        if (k == d) break;
        ++p[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<TropPolytope> make_polytope(const TropSpace& S, std::vector<Vec> gens, int cap) {
    auto pol = polar_lattice(S, gens, cap);
    if (!pol) return std::nullopt;
    auto closure = polar_lattice(S, *pol, cap);
    if (!closure) return std::nullopt;
    TropPolytope P;
    P.generators = std::move(gens);
    P.lattice = *closure;
    return P;
}

std::optional<TropPolytope> polar(const TropSpace& S, const TropPolytope& P, int cap) {
    auto L = polar_lattice(S, P.lattice, cap);
    if (!L) return std::nullopt;
    TropPolytope Q;
    Q.generators = *L;
    Q.lattice = *L;
    return Q;
}

std::vector<Vec> vertices(const TropSpace& S, const TropPolytope& P) {
    // p is a vertex iff its set of active facet constraints is maximal: no
    // other lattice point is tight on a strict superset. On polygons this
    // agrees with the removal test (dropping a vertex shrinks the double
    // polar), and unlike that test it also resolves the beachball dual, whose
    // two facets cannot cut off a single corner by halfspaces alone.
    auto L = polar_lattice(S, P.lattice);
    if (!L) throw std::logic_error("vertices: unbounded polar");
    auto active = [&](const Vec& p) {
        std::vector<int> a;
        for (int s = 0; s < (int)L->size(); ++s)
            if (pairing(S, to_q(p), to_q((*L)[s])) == Rat(-1)) a.push_back(s);
        return a;
    };
    std::vector<std::vector<int>> act;
    for (const Vec& p : P.lattice) act.push_back(active(p));
    std::vector<Vec> out;
    for (size_t i = 0; i < P.lattice.size(); ++i) {
        if (act[i].empty()) continue;
        bool maximal = true;
        for (size_t j = 0; j < P.lattice.size() && maximal; ++j) {
            if (j == i || act[j].size() <= act[i].size()) continue;
            maximal = !std::includes(act[j].begin(), act[j].end(), act[i].begin(), act[i].end());
        }
        if (maximal) out.push_back(P.lattice[i]);
    }
    return out;
}

bool is_reflexive(const TropSpace& S, const TropPolytope& P, int cap) {
    if (!std::binary_search(P.lattice.begin(), P.lattice.end(), Vec(S.dim(), 0))) return false;
    auto L = polar_lattice(S, P.lattice, cap);
    if (!L) return false;
    auto LL = polar_lattice(S, *L, cap);
    if (!LL || *LL != P.lattice) return false;  // P not integral
    auto L3 = polar_lattice(S, *LL, cap);
    return L3 && *L3 == *L;  // polar integral
}

int boundary_point_count(const TropSpace& S, const TropPolytope& P) {
    auto L = polar_lattice(S, P.lattice);
    if (!L) throw std::logic_error("boundary_point_count: unbounded polar");
    int count = 0;
    for (const Vec& p : P.lattice) {
        bool boundary = false;
        for (const Vec& s : *L)
            if (pairing(S, to_q(p), to_q(s)) == Rat(-1)) { boundary = true; break; }
        if (boundary) ++count;
    }
    return count;
}

int theta_degree(const TropSpace& S, const Vec& m, const TropPolytope& Q) {
    auto L = polar_lattice(S, Q.lattice);
    if (!L) throw std::logic_error("theta_degree: unbounded polar");
    long long k = 0;
    for (const Vec& s : *L) {
        Rat v = pairing(S, to_q(m), to_q(s));
        if (v < Rat(0)) {
            Rat neg = -v;  // least integer k with v >= -k
            long long c = neg.n / neg.d + (neg.n % neg.d != 0 ? 1 : 0);
            k = std::max(k, c);
        }
    }
    return (int)k;
}

bool pl_linear_across(const TropSpace& S, const std::vector<long long>& phi,
                      const Fan::WallAdj& wall) {
    Mat t = S.transition(wall, wall.apex_b, wall.apex_a);
    Vec cb = mat_apply(t, S.fan.rays[wall.apex_b]);
    // express the transported apex in the basis of cone_a's rays; the
    // coefficients may be negative (linear extension)
    std::vector<QVec> cols;
    for (int r : S.fan.cones[wall.cone_a]) cols.push_back(to_q(S.fan.rays[r]));
    auto sol = solve_linear(cols, to_q(cb));
    if (!sol) throw std::logic_error("pl_linear_across: degenerate cone");
    Rat ext(0);
    for (size_t i = 0; i < sol->size(); ++i)
        ext = ext + (*sol)[i] * Rat(phi[S.fan.cones[wall.cone_a][i]]);
    return ext == Rat(phi[wall.apex_b]);
}

// ---- built-in spaces ----

namespace {

void check_space(const TropSpace& S) {
    const size_t n = S.fan.rays.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (S.pairing_table[i][j] != S.pairing_table[j][i])
                throw std::logic_error("pairing table not symmetric");
    for (const BendSpec& b : S.bends) mat_inverse_unimodular(b.matrix);  // throws if not
}

// the crease locus of <., x_j> must be exactly the ray rho_j; this pins the
// two derived 2D bending matrices
void check_dp5_creases(const TropSpace& S) {
    for (int j = 0; j < 5; ++j) {
        std::vector<long long> phi;
        for (int r = 0; r < 5; ++r) phi.push_back(S.pairing_table[r][j]);
        for (const auto& w : S.walls) {
            bool linear = pl_linear_across(S, phi, w);
            bool expect = w.span[0] != j;
            if (linear != expect) throw std::logic_error("dp5 bending self-test failed");
        }
    }
}

} // namespace

TropSpace builtin_dp5_space() {
    TropSpace S;
    S.fan = dp5_fan();
    S.ray_labels = {"x1", "x2", "x3", "x4", "x5"};
    S.pairing_table = {
        {1, 0, -1, -1, 0},
        {0, 1, 0, -1, -1},
        {-1, 0, 1, 0, -1},
        {-1, -1, 0, 1, 0},
        {0, -1, -1, 0, 1},
    };
    S.bends = dp5_bend_specs();
    S.walls = S.fan.wall_adjacency();
    check_space(S);
    check_dp5_creases(S);
    return S;
}

TropSpace builtin_v12_space() {
    TropSpace S;
    S.fan = v12_fan();
    S.ray_labels = {"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "q1", "q2"};
    S.pairing_table = {
        {1, 0, 0, -1, -1, -1, 0, 0, 0, -1},
        {0, 1, 0, 0, -1, -1, -1, 0, -1, 0},
        {0, 0, 1, 0, 0, -1, -1, -1, 0, -1},
        {-1, 0, 0, 1, 0, 0, -1, -1, -1, 0},
        {-1, -1, 0, 0, 1, 0, 0, -1, 0, -1},
        {-1, -1, -1, 0, 0, 1, 0, 0, -1, 0},
        {0, -1, -1, -1, 0, 0, 1, 0, 0, -1},
        {0, 0, -1, -1, -1, 0, 0, 1, -1, 0},
        {0, -1, 0, -1, 0, -1, 0, -1, 1, -2},
        {-1, 0, -1, 0, -1, 0, -1, 0, -2, 1},
    };
    S.bends = v12_bend_specs();
    S.walls = S.fan.wall_adjacency();
    check_space(S);
    // rays are forced by the (x1, q1, x3) rows of the table
    for (size_t j = 0; j < 10; ++j) {
        Vec expect = {-S.pairing_table[0][j], -S.pairing_table[8][j], -S.pairing_table[2][j]};
        if (S.fan.rays[j] != expect) throw std::logic_error("v12 ray table mismatch");
    }
    // the q-wall transitions are mutually inverse: d5q = d1q^{-1}, d7q = d3q^{-1}
    auto find_bend = [&](std::vector<int> span) -> Mat {
        std::sort(span.begin(), span.end());
        for (const auto& b : S.bends) {
            std::vector<int> s = b.span;
            std::sort(s.begin(), s.end());
            if (s == span) return b.matrix;
        }
        throw std::logic_error("missing bend");
    };
    if (find_bend({4, 8}) != mat_inverse_unimodular(find_bend({0, 8})) ||
        find_bend({6, 8}) != mat_inverse_unimodular(find_bend({2, 8})))
        throw std::logic_error("q-wall bends are not mutually inverse");
    return S;
}

// ---- broken lines ----

namespace {

struct Hit {
    int wall;
    QVec point;
    Rat s;
};

// first wall crossed from p along direction m (2D); nullopt when the ray
// escapes to infinity without further crossings
std::optional<Hit> first_hit(const ScatteringDiagram& D, const QVec& p, const Exp& m) {
    std::optional<Hit> best;
    for (int w = 0; w < (int)D.walls.size(); ++w) {
        const Vec& r = D.fan.rays[D.walls[w].support[0]];
        // p + s m = beta r
        std::vector<QVec> cols = {{Rat(m[0]), Rat(m[1])}, {Rat(-r[0]), Rat(-r[1])}};
        auto sol = solve_linear(cols, {-p[0], -p[1]});
        if (!sol) continue;  // parallel
        Rat s = (*sol)[0], beta = (*sol)[1];
        if (!(Rat(0) < s) || !(Rat(0) < beta)) continue;
        if (best && best->s == s) throw std::logic_error("broken line hits a joint; move q");
        if (!best || s < best->s) best = Hit{w, {p[0] + s * Rat(m[0]), p[1] + s * Rat(m[1])}, s};
    }
    return best;
}

void trace_forward(const ScatteringDiagram& D, const QVec& p, const Exp& m, const BigInt& coeff,
                   std::vector<BrokenLineStep>& steps, int depth,
                   std::map<Exp, std::vector<BrokenLine>>& out, const QVec& q) {
    if (depth > 12) throw std::logic_error("broken line trace too deep");
    auto hit = first_hit(D, p, m);
    if (!hit) {
        BrokenLine line;
        line.start = q;
        line.steps = steps;
        line.steps.push_back({m, -1, 0});
        line.coefficient = coeff;
        out[m].push_back(line);
        return;
    }
    const Wall& w = D.walls[hit->wall];
    if (w.function.term_count() != 2)
        throw std::logic_error("broken lines need binomial wall functions");
    Exp g;
    BigInt c;
    for (const auto& [e, cf] : w.function.terms()) {
        bool zero = true;
        for (int v : e) zero = zero && v == 0;
        if (!zero) {
            g = e;
            c = cf.constant_term();
        }
    }
    long long pw = 0;
    for (size_t i = 0; i < m.size(); ++i) pw += (long long)m[i] * w.normal[i];
    if (pw < 0) pw = -pw;
    if (pw == 0) throw std::logic_error("transversal crossing with zero pairing");
    for (long long k = 0; k <= pw; ++k) {
        Exp m2(m.size());
        for (size_t i = 0; i < m.size(); ++i) m2[i] = m[i] + (int32_t)(k * g[i]);
        BigInt c2 =
            coeff * BigInt::binomial((unsigned)pw, (unsigned)k) * BigInt::pow(c, (unsigned)k);
        steps.push_back({m, hit->wall, (int)k});
        trace_forward(D, hit->point, m2, c2, steps, depth + 1, out, q);
        steps.pop_back();
    }
}

std::map<Exp, std::vector<BrokenLine>> trace_all(const ScatteringDiagram& D, const QVec& q,
                                                 int box) {
    if (D.fan.find_all_cones(q).size() != 1)
        throw std::invalid_argument("broken lines: start point q lies on a wall");
    std::map<Exp, std::vector<BrokenLine>> out;
    for (int a = -box; a <= box; ++a)
        for (int b = -box; b <= box; ++b) {
            if (a == 0 && b == 0) continue;
            Exp m0 = {a, b};
            std::vector<BrokenLineStep> steps;
            trace_forward(D, q, m0, BigInt(1), steps, 0, out, q);
        }
    return out;
}

} // namespace

std::vector<BrokenLine> broken_lines(const ScatteringDiagram& D, const Exp& n, const QVec& q) {
    int bound = 2;
    for (int v : n) bound = std::max(bound, v < 0 ? -v : v);
    auto all = trace_all(D, q, bound + 5);
    auto it = all.find(n);
    return it == all.end() ? std::vector<BrokenLine>{} : it->second;
}

LaurentPoly theta_expand(const ScatteringDiagram& D, const Exp& n, const QVec& q) {
    LaurentPoly out(2);
    for (const BrokenLine& l : broken_lines(D, n, q))
        out += LaurentPoly::monomial(2, l.first_monomial(), ParamPoly(l.coefficient));
    return out;
}

LaurentPoly theta_cluster_2d(const Vec& m) {
    static const std::array<LaurentPoly, 5> terms = dp5_chart_terms();
    static const Fan fan = dp5_fan();
    auto cone = fan.find_cone(to_q(m));
    if (!cone) throw std::logic_error("theta_cluster_2d: point not covered");
    auto coords = *fan.cone_coords(*cone, to_q(m));
    LaurentPoly out(2, 1);
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        if (!coords[i].is_integer() || coords[i].n < 0)
            throw std::invalid_argument("theta_cluster_2d: non-integral cone decomposition");
        out *= LaurentPoly::pow(terms[fan.cones[*cone][i]], (unsigned)coords[i].n);
    }
    return out;
}

LaurentPoly theta_evaluate_3d(const TropSpace& S, const Vec& n) {
    static const ChartExpansion chart =
        chart_expansions({ChartKind::Consecutive, 1}, Mode::Plain);
    auto dec = S.decompose(to_q(n));
    if (!dec) throw std::logic_error("theta_evaluate_3d: point not covered");
    auto& [cone, coords] = *dec;
    LaurentPoly out(3, 1);
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        if (!coords[i].is_integer() || coords[i].n < 0)
            throw std::invalid_argument("theta_evaluate_3d: non-integral cone decomposition");
        int ray = S.fan.cones[cone][i];
        const LaurentPoly& t = ray < 8 ? chart.xi(ray + 1) : (ray == 8 ? chart.q1 : chart.q2);
        out *= LaurentPoly::pow(t, (unsigned)coords[i].n);
    }
    return out;
}

// ---- reflexive polygon scan ----

Vec apply_pl_symmetry(const TropSpace& S, const std::vector<int>& perm, const Vec& p) {
    auto dec = S.decompose(to_q(p));
    if (!dec) throw std::logic_error("apply_pl_symmetry: point not covered");
    auto& [cone, coords] = *dec;
    Vec out(S.dim(), 0);
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        if (!coords[i].is_integer()) throw std::logic_error("apply_pl_symmetry: fractional");
        const Vec& r = S.fan.rays[perm[S.fan.cones[cone][i]]];
        for (int k = 0; k < S.dim(); ++k) out[k] += coords[i].n * r[k];
    }
    return out;
}

namespace {

std::vector<std::vector<int>> dp5_symmetry_group(bool rotations_only) {
    auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(a.size());
        for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
        return c;
    };
    std::vector<int> rho = {1, 2, 3, 4, 0};  // v_i -> v_{i+1}
    std::vector<int> tau = {1, 0, 4, 3, 2};  // the x1 <-> x2 inversion swap
    std::vector<std::vector<int>> group;
    std::vector<int> cur = {0, 1, 2, 3, 4};
    for (int k = 0; k < 5; ++k) {
        group.push_back(cur);
        if (!rotations_only) group.push_back(compose(cur, tau));
        cur = compose(rho, cur);
    }
    return group;
}

std::vector<Vec> canonical_form(const TropSpace& S, const std::vector<Vec>& pts,
                                const std::vector<std::vector<int>>& group) {
    std::vector<Vec> best;
    for (const auto& g : group) {
        std::vector<Vec> img;
        for (const Vec& p : pts) img.push_back(apply_pl_symmetry(S, g, p));
        std::sort(img.begin(), img.end());
        if (best.empty() || img < best) best = img;
    }
    return best;
}

} // namespace

ReflexiveScan classify_reflexive_dp5() {
    TropSpace S = builtin_dp5_space();
    auto group = dp5_symmetry_group(false);
    auto rot = dp5_symmetry_group(true);

    TropPolytope pentagon = *make_polytope(S, {{-1, 0}, {0, -1}, {1, 0}, {1, 1}, {0, 1}});
    if (!is_reflexive(S, pentagon)) throw std::logic_error("pentagon seed not reflexive");

    std::map<std::vector<Vec>, TropPolytope> seen;
    std::vector<std::vector<Vec>> order;
    std::vector<TropPolytope> queue = {pentagon};
    seen[canonical_form(S, pentagon.lattice, group)] = pentagon;
    order.push_back(canonical_form(S, pentagon.lattice, group));

    const long long candidate_radius = 7;
    size_t qi = 0;
    while (qi < queue.size()) {
        if (seen.size() > 200) throw std::logic_error("reflexive scan cap exceeded");
        TropPolytope P = queue[qi++];
        std::vector<std::vector<Vec>> next_gens;
        for (const Vec& v : vertices(S, P)) {
            std::vector<Vec> rest;
            for (const Vec& p : P.lattice)
                if (p != v) rest.push_back(p);
            next_gens.push_back(rest);
        }
        for (long long a = -candidate_radius; a <= candidate_radius; ++a)
            for (long long b = -candidate_radius; b <= candidate_radius; ++b) {
                Vec c = {a, b};
                if (std::binary_search(P.lattice.begin(), P.lattice.end(), c)) continue;
                std::vector<Vec> gens = P.lattice;
                gens.push_back(c);
                next_gens.push_back(gens);
            }
        for (auto& gens : next_gens) {
            auto Q = make_polytope(S, gens, 128);
            if (!Q || Q->lattice.size() < 3) continue;
            if (!is_reflexive(S, *Q, 128)) continue;
            auto canon = canonical_form(S, Q->lattice, group);
            if (seen.count(canon)) continue;
            seen[canon] = *Q;
            order.push_back(canon);
            queue.push_back(*Q);
        }
    }

    ReflexiveScan scan;
    std::map<std::vector<Vec>, int> index;
    for (const auto& canon : order) {
        ReflexiveClass cls;
        cls.rep = seen[canon];
        cls.boundary_points = boundary_point_count(S, cls.rep);
        index[canon] = (int)scan.classes.size();
        scan.classes.push_back(cls);
    }
    for (auto& cls : scan.classes) {
        auto dual = polar(S, cls.rep, 128);
        if (!dual) throw std::logic_error("reflexive class with unbounded dual");
        auto canon = canonical_form(S, dual->lattice, group);
        auto it = index.find(canon);
        if (it == index.end()) throw std::logic_error("dual class not in the scan");
        cls.dual_class = it->second;
        cls.self_dual = canonical_form(S, cls.rep.lattice, group) == canon;
    }
    std::set<std::vector<Vec>> rot_classes;
    for (const auto& cls : scan.classes)
        rot_classes.insert(canonical_form(S, cls.rep.lattice, rot));
    scan.class_count_rotation_only = (int)rot_classes.size();
    return scan;
}

} // namespace lym
