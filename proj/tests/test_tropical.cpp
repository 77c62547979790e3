#include <doctest.h>

#include "lym/lyness.hpp"
#include "lym/tropical.hpp"

using namespace lym;

namespace {

Vec ray(const TropSpace& S, int i) { return S.fan.rays[i]; }

// wall family of the ten-ray fan: 0 = d_{i,i+1}, 1 = d_{i,i+2}, 2 = d_{i,q}
int wall_family(const Fan::WallAdj& w) {
    int a = w.span[0], b = w.span[1];
    if (b >= 8) return 2;
    int diff = (b - a + 8) % 8;
    if (diff == 1 || diff == 7) return 0;
    return 1;
}

} // namespace

TEST_CASE("built-in spaces construct and self-check") {
    TropSpace d2 = builtin_dp5_space();
    CHECK(d2.fan.rays.size() == 5);
    CHECK(d2.fan.cones.size() == 5);
    TropSpace d3 = builtin_v12_space();
    CHECK(d3.fan.rays.size() == 10);
    CHECK(d3.fan.cones.size() == 16);
    CHECK(d3.walls.size() == 24);
    // the transition across <v7,v1> as printed
    Fan::WallAdj w71;
    for (const auto& w : d3.walls)
        if (w.span == std::vector<int>{0, 6}) w71 = w;
    int from = w71.apex_a == 8 ? w71.apex_a : w71.apex_b;
    int to = w71.apex_a == 8 ? w71.apex_b : w71.apex_a;
    REQUIRE(from == 8);  // one side is the w1 cone
    CHECK(d3.transition(w71, from, to) == Mat{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
}

TEST_CASE("pairing values from the intersection tables") {
    TropSpace d2 = builtin_dp5_space();
    CHECK(pairing_label(d2, to_q(ray(d2, 0)), 2) == Rat(-1));  // <v1, x3>
    TropSpace d3 = builtin_v12_space();
    CHECK(pairing_label(d3, to_q(ray(d3, 0)), 0) == Rat(1));  // <D_{456} ray, x1>
    CHECK(pairing_label(d3, {Rat(0), Rat(0), Rat(0)}, 5) == Rat(0));
    // point-point pairing agrees with labels on rays
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j)
            CHECK(pairing(d3, to_q(ray(d3, i)), to_q(ray(d3, j))) ==
                  Rat(d3.pairing_table[i][j]));
}

TEST_CASE("halfspaces of the pentagon space") {
    TropSpace S = builtin_dp5_space();
    // (x3)^{>= -1} contains (1,2), with equality on the boundary at (-1,0)
    CHECK(halfspace_contains(S, to_q(ray(S, 2)), Rat(-1), {Rat(1), Rat(2)}));
    CHECK(pairing(S, {Rat(1), Rat(2)}, to_q(ray(S, 2))) == Rat(-1));
    CHECK(pairing(S, {Rat(-1), Rat(0)}, to_q(ray(S, 2))) == Rat(-1));
    // the (x1)^{>= -1} boundary is the vertical line through (1, .)
    for (long long y : {-2LL, 0LL, 2LL})
        CHECK(pairing(S, {Rat(1), Rat(y)}, to_q(ray(S, 0))) == Rat(-1));
    // the origin lies in every such halfspace
    for (int j = 0; j < 5; ++j)
        CHECK(halfspace_contains(S, to_q(ray(S, j)), Rat(-1), {Rat(0), Rat(0)}));
}

TEST_CASE("fan completeness by random sampling") {
    TropSpace d3 = builtin_v12_space();
    uint64_t s = 12345;
    int interior_hits = 0;
    for (int it = 0; it < 10000; ++it) {
        auto rnd = [&]() {
            s ^= s << 13; s ^= s >> 7; s ^= s << 17;
            return (long long)(s % 401) - 200;
        };
        QVec p = {Rat(rnd(), 101), Rat(rnd(), 103), Rat(rnd(), 107)};
        auto cones = d3.fan.find_all_cones(p);
        REQUIRE(!cones.empty());
        if (cones.size() == 1) {
            ++interior_hits;
        } else {
            // boundary overlap: the shared point must sit on a face of each
            for (int c : cones) {
                auto coords = *d3.fan.cone_coords(c, p);
                bool on_face = false;
                for (const Rat& x : coords) on_face = on_face || x.is_zero();
                CHECK(on_face);
            }
        }
    }
    CHECK(interior_hits > 9900);
}

TEST_CASE("pentagon is self-polar and reflexive") {
    TropSpace S = builtin_dp5_space();
    auto P = make_polytope(S, {{-1, 0}, {0, -1}, {1, 0}, {1, 1}, {0, 1}});
    REQUIRE(P.has_value());
    CHECK(P->lattice.size() == 6);  // five vertices and the origin
    auto Q = polar(S, *P);
    REQUIRE(Q.has_value());
    CHECK(Q->lattice == P->lattice);
    CHECK(is_reflexive(S, *P));
    CHECK(vertices(S, *P).size() == 5);
    CHECK(boundary_point_count(S, *P) == 5);
}

TEST_CASE("polarity involution on assorted polytopes") {
    TropSpace S = builtin_dp5_space();
    std::vector<std::vector<Vec>> gensets = {
        {{-1, 0}, {0, -1}, {1, 0}, {1, 1}, {0, 1}},
        {{-1, 2}, {2, -1}, {-1, 0}, {0, -1}},
        {{-1, -1}, {1, 1}},
        {{1, 0}, {0, 1}, {-1, -1}},
    };
    for (const auto& g : gensets) {
        auto P = make_polytope(S, g);
        REQUIRE(P.has_value());
        auto PP = polar(S, *P);
        REQUIRE(PP.has_value());
        auto PPP = polar(S, *PP);
        REQUIRE(PPP.has_value());
        CHECK(PPP->lattice == P->lattice);
    }
}

TEST_CASE("the degree-2 del Pezzo bigon pair") {
    TropSpace S = builtin_dp5_space();
    auto P = make_polytope(S, {{-1, 2}, {2, -1}, {-1, 0}, {0, -1}});
    REQUIRE(P.has_value());
    CHECK(P->lattice.size() == 9);  // 8 boundary points and the origin
    auto V = vertices(S, *P);
    CHECK(V == std::vector<Vec>{{-1, 2}, {2, -1}});
    CHECK(is_reflexive(S, *P));
    CHECK(boundary_point_count(S, *P) == 8);

    auto Q = polar(S, *P);
    REQUIRE(Q.has_value());
    CHECK(Q->lattice == std::vector<Vec>{{-1, -1}, {0, 0}, {1, 1}});
    CHECK(vertices(S, *Q) == std::vector<Vec>{{-1, -1}, {1, 1}});
    CHECK(boundary_point_count(S, *Q) == 2);

    // theta degrees 1, 1, 2, 2 under the Q-grading
    CHECK(theta_degree(S, {-1, -1}, *Q) == 1);
    CHECK(theta_degree(S, {1, 1}, *Q) == 1);
    CHECK(theta_degree(S, {-1, 0}, *Q) == 2);
    CHECK(theta_degree(S, {0, -1}, *Q) == 2);
    CHECK(theta_degree(S, {0, 0}, *Q) == 0);
}

TEST_CASE("the dual pair P, Q of the ten-ray space") {
    TropSpace S = builtin_v12_space();
    std::vector<Vec> xgens, allgens;
    for (int i = 0; i < 8; ++i) xgens.push_back(ray(S, i));
    allgens = xgens;
    allgens.push_back(ray(S, 8));
    allgens.push_back(ray(S, 9));

    auto P = make_polytope(S, xgens);
    REQUIRE(P.has_value());
    CHECK(P->lattice.size() == 9);
    auto Q = make_polytope(S, allgens);
    REQUIRE(Q.has_value());
    CHECK(Q->lattice.size() == 11);

    auto Ppolar = polar(S, *P);
    REQUIRE(Ppolar.has_value());
    CHECK(Ppolar->lattice == Q->lattice);
    auto Qpolar = polar(S, *Q);
    REQUIRE(Qpolar.has_value());
    CHECK(Qpolar->lattice == P->lattice);
    CHECK(is_reflexive(S, *P));
    CHECK(is_reflexive(S, *Q));
}

TEST_CASE("the beachball pair of the final example") {
    TropSpace S = builtin_v12_space();
    auto P = make_polytope(S, {ray(S, 8), ray(S, 9)});
    REQUIRE(P.has_value());
    CHECK(P->lattice.size() == 3);  // q1, q2 and the origin
    CHECK(vertices(S, *P).size() == 2);

    auto Q = polar(S, *P);
    REQUIRE(Q.has_value());
    CHECK(Q->lattice.size() == 17);  // 8 vertices + 8 face points + origin
    auto V = vertices(S, *Q);
    CHECK(V.size() == 8);
    for (int i = 0; i < 8; ++i) {
        Vec vtx(3);
        for (int k = 0; k < 3; ++k) vtx[k] = ray(S, i)[k] + ray(S, (i + 1) % 8)[k];
        CHECK(std::find(V.begin(), V.end(), vtx) != V.end());
    }
    auto QQ = polar(S, *Q);
    REQUIRE(QQ.has_value());
    CHECK(QQ->lattice == P->lattice);

    // P-grading: deg x_i = 2, deg q_i = 1
    for (int i = 0; i < 8; ++i) CHECK(theta_degree(S, ray(S, i), *P) == 2);
    CHECK(theta_degree(S, ray(S, 8), *P) == 1);
    CHECK(theta_degree(S, ray(S, 9), *P) == 1);
}

TEST_CASE("flat-face linearity pattern of the dual pair") {
    TropSpace S = builtin_v12_space();
    std::vector<long long> phiP = {1, 1, 1, 1, 1, 1, 1, 1, 2, 2};
    std::vector<long long> phiQ = {1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
    std::vector<long long> zero(10, 0);
    for (const auto& w : S.walls) {
        int fam = wall_family(w);
        // the square facets of P are flat exactly across the d_{i,q} walls,
        // the octagon faces of Q across the d_{i,i+2} walls
        CHECK(pl_linear_across(S, phiP, w) == (fam == 2));
        CHECK(pl_linear_across(S, phiQ, w) == (fam == 1));
        CHECK(pl_linear_across(S, zero, w));
    }
}

TEST_CASE("broken lines reproduce the five theta expansions") {
    ScatteringDiagram D = builtin_dp5();
    QVec q = {Rat(-7, 8), Rat(9, 8)};
    auto lp = [](std::vector<Exp> exps) {
        LaurentPoly p(2);
        for (auto& e : exps) p += LaurentPoly::monomial(2, e, ParamPoly(1));
        return p;
    };
    CHECK(theta_expand(D, {-1, 0}, q) == lp({{-1, 0}}));
    CHECK(theta_expand(D, {0, -1}, q) == lp({{0, -1}, {-1, -1}}));
    CHECK(theta_expand(D, {1, 0}, q) == lp({{1, 0}, {1, -1}, {0, -1}}));
    CHECK(theta_expand(D, {1, 1}, q) == lp({{1, 0}, {1, 1}}));
    CHECK(theta_expand(D, {0, 1}, q) == lp({{0, 1}}));
    CHECK(broken_lines(D, {1, 0}, q).size() == 3);
    CHECK(broken_lines(D, {-1, 0}, q).size() == 1);
    CHECK_THROWS(broken_lines(D, {1, 0}, {Rat(-1), Rat(0)}));  // q on a wall
}

TEST_CASE("theta product rule and cluster correspondence") {
    ScatteringDiagram D = builtin_dp5();
    QVec q = {Rat(-7, 8), Rat(9, 8)};
    // shorthand: theta of v4+v5 equals theta_4 * theta_5
    LaurentPoly t45 = theta_expand(D, {1, 2}, q);
    CHECK(t45 == theta_expand(D, {1, 1}, q) * theta_expand(D, {0, 1}, q));

    // broken-line thetas match the cluster chart terms under the torus
    // identification x1 = z1^{-1}, x2 = z2^{-1}(1 + z1^{-1})
    LaurentFraction ix1(LaurentPoly::variable(2, 0, -1));
    LaurentFraction ix2(LaurentPoly(2, 1) + LaurentPoly::variable(2, 0));
    ix2.push_den(LaurentPoly::variable(2, 0) * LaurentPoly::variable(2, 1), 1);
    std::vector<LaurentFraction> images = {ix1, ix2};
    Fan fan = dp5_fan();
    auto terms = dp5_chart_terms();
    for (int i = 0; i < 5; ++i) {
        Exp n = {(int32_t)fan.rays[i][0], (int32_t)fan.rays[i][1]};
        LaurentFraction via_cluster = terms[i].substitute(images);
        CHECK(via_cluster.equals(LaurentFraction(theta_expand(D, n, q))));
    }
}

TEST_CASE("2D cluster-monomial thetas build the bigon potential") {
    // theta of a*v_i + b*v_{i+1} is x_i^a x_{i+1}^b in the (x1, x2) chart
    auto t = dp5_chart_terms();
    CHECK(theta_cluster_2d({-1, 2}) == t[0] * t[4] * t[4]);
    CHECK(theta_cluster_2d({2, -1}) == t[1] * t[2] * t[2]);
    CHECK(theta_cluster_2d({0, 0}) == LaurentPoly(2, 1));
    CHECK(theta_cluster_2d({1, 1}) == t[3]);
    CHECK(theta_cluster_2d({-2, 1}) == t[0] * t[0] * t[4]);
}

TEST_CASE("3D theta evaluation by the cone product rule") {
    TropSpace S = builtin_v12_space();
    ChartExpansion e = chart_expansions({ChartKind::Consecutive, 1}, Mode::Plain);
    Vec v12sum(3);
    for (int k = 0; k < 3; ++k) v12sum[k] = ray(S, 0)[k] + ray(S, 1)[k];
    CHECK(theta_evaluate_3d(S, v12sum) == e.xi(1) * e.xi(2));
    CHECK(theta_evaluate_3d(S, ray(S, 8)) == e.q1);
    CHECK(theta_evaluate_3d(S, {0, 0, 0}) == LaurentPoly(3, 1));
}

TEST_CASE("reflexive polygon classification") {
    ReflexiveScan scan = classify_reflexive_dp5();
    CHECK(scan.classes.size() == 23);
    int self_dual = 0;
    for (const auto& cls : scan.classes) {
        CHECK(cls.boundary_points +
                  scan.classes[(size_t)cls.dual_class].boundary_points == 10);
        if (cls.self_dual) ++self_dual;
        // duality is an involution on classes
        CHECK(scan.classes[(size_t)cls.dual_class].dual_class ==
              (int)(&cls - scan.classes.data()));
    }
    CHECK(self_dual == 3);
    CHECK(scan.class_count_rotation_only >= 23);
}
