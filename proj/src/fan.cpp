#include "lym/fan.hpp"

#include <algorithm>
#include <map>

namespace lym {

std::optional<QVec> solve_linear(const std::vector<QVec>& cols, const QVec& rhs) {
    const size_t n = rhs.size();
    if (n == 2) {
        Rat det = cols[0][0] * cols[1][1] - cols[0][1] * cols[1][0];
        if (det.is_zero()) return std::nullopt;
        Rat a = (rhs[0] * cols[1][1] - rhs[1] * cols[1][0]) / det;
        Rat b = (cols[0][0] * rhs[1] - cols[0][1] * rhs[0]) / det;
        return QVec{a, b};
    }
    if (n == 3) {
        auto det3 = [](const QVec& a, const QVec& b, const QVec& c) {
            return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1]) +
                   c[0] * (a[1] * b[2] - a[2] * b[1]);
        };
        Rat det = det3(cols[0], cols[1], cols[2]);
        if (det.is_zero()) return std::nullopt;
        return QVec{det3(rhs, cols[1], cols[2]) / det, det3(cols[0], rhs, cols[2]) / det,
                    det3(cols[0], cols[1], rhs) / det};
    }
    throw std::invalid_argument("solve_linear: dim must be 2 or 3");
}

std::optional<QVec> Fan::cone_coords(int cone, const QVec& p) const {
    std::vector<QVec> cols;
    for (int r : cones[cone]) cols.push_back(to_q(rays[r]));
    auto sol = solve_linear(cols, p);
    if (!sol) return std::nullopt;
    for (const Rat& c : *sol)
        if (c < Rat(0)) return std::nullopt;
    return sol;
}

std::optional<int> Fan::find_cone(const QVec& p) const {
    for (int c = 0; c < (int)cones.size(); ++c)
        if (cone_coords(c, p)) return c;
    return std::nullopt;
}

std::vector<int> Fan::find_all_cones(const QVec& p) const {
    std::vector<int> out;
    for (int c = 0; c < (int)cones.size(); ++c)
        if (cone_coords(c, p)) out.push_back(c);
    return out;
}

std::vector<Fan::WallAdj> Fan::wall_adjacency() const {
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> facets;  // span -> (cone, apex)
    for (int c = 0; c < (int)cones.size(); ++c) {
        const auto& cone = cones[c];
        for (size_t skip = 0; skip < cone.size(); ++skip) {
            std::vector<int> span;
            for (size_t j = 0; j < cone.size(); ++j)
                if (j != skip) span.push_back(cone[j]);
            std::sort(span.begin(), span.end());
            facets[span].push_back({c, cone[skip]});
        }
    }
    std::vector<WallAdj> out;
    for (const auto& [span, adj] : facets) {
        if (adj.size() != 2) continue;  // boundary facet of a non-complete fan
        WallAdj w;
        w.span = span;
        w.cone_a = adj[0].first;
        w.apex_a = adj[0].second;
        w.cone_b = adj[1].first;
        w.apex_b = adj[1].second;
        out.push_back(w);
    }
    return out;
}

} // namespace lym
