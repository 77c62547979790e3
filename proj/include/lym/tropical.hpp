#ifndef LYM_TROPICAL_HPP
#define LYM_TROPICAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lym/fan.hpp"
#include "lym/laurent.hpp"
#include "lym/scattering.hpp"

namespace lym {

// An integral affine manifold with singularities presented as a complete fan
// with bending data across designated walls, together with the symmetric
// pairing table between ray divisors and theta labels. Self-mirror: the same
// fan and table describe both sides, with roles swapped.
struct TropSpace {
    Fan fan;
    std::vector<std::string> ray_labels;
    std::vector<std::vector<long long>> pairing_table;  // [ray][label]
    std::vector<BendSpec> bends;
    std::vector<Fan::WallAdj> walls;

    int dim() const { return fan.dim; }
    // point decomposition: cone index plus barycentric coordinates
    std::optional<std::pair<int, QVec>> decompose(const QVec& p) const;
    // transition matrix for crossing the given wall from the side of apex_from
    // to the side of apex_to (identity when the wall is flat)
    Mat transition(const Fan::WallAdj& w, int apex_from, int apex_to) const;
};

// built-ins; both run construction self-tests (pairing symmetry, bend
// inverses, and the crease pattern of the tropicalised cluster variables)
TropSpace builtin_dp5_space();
TropSpace builtin_v12_space();

// <n, theta_label>: decompose n, then extend the table R-linearly in the cone
Rat pairing_label(const TropSpace& S, const QVec& n, int label);
// <n, m> for a point m of the mirror side, extended bilinearly per cone pair
Rat pairing(const TropSpace& S, const QVec& n, const QVec& m);
bool halfspace_contains(const TropSpace& S, const QVec& m, const Rat& c, const QVec& n);

// A polytope, stored by generators plus the lattice-point set of the double
// polar closure. Convexity is pairing-defined, never Euclidean.
struct TropPolytope {
    std::vector<Vec> generators;
    std::vector<Vec> lattice;
};

// Lattice points of the intersection of the (s)^{>= -1} halfspaces over the
// listed constraint points. Exact: the recession cone is checked first and a
// vertex bound caps the enumeration; nullopt when unbounded or past `cap`.
std::optional<std::vector<Vec>> polar_lattice(const TropSpace& S,
                                              const std::vector<Vec>& constraints,
                                              int cap = 64);

std::optional<TropPolytope> make_polytope(const TropSpace& S, std::vector<Vec> gens,
                                          int cap = 64);
std::optional<TropPolytope> polar(const TropSpace& S, const TropPolytope& P, int cap = 64);
std::vector<Vec> vertices(const TropSpace& S, const TropPolytope& P);
bool is_reflexive(const TropSpace& S, const TropPolytope& P, int cap = 64);
// lattice points not strictly interior (for reflexive polygons: all but 0)
int boundary_point_count(const TropSpace& S, const TropPolytope& P);
// least k >= 0 with m in k*Q
int theta_degree(const TropSpace& S, const Vec& m, const TropPolytope& Q);

// phi given by its values on the rays, linear on each cone; true iff the
// linear extension from one side, transported by the wall's bending matrix,
// matches the ray value on the other side
bool pl_linear_across(const TropSpace& S, const std::vector<long long>& phi,
                      const Fan::WallAdj& wall);

// ---- broken lines and theta functions (2D) ----

struct BrokenLineStep {
    Exp monomial;   // attached to the segment ending at this crossing
    int wall = -1;  // wall index in the diagram, -1 for the final segment
    int bend = 0;   // term chosen in f^p (0 = straight)
};

struct BrokenLine {
    QVec start;
    std::vector<BrokenLineStep> steps;  // first segment first
    BigInt coefficient;
    Exp first_monomial() const { return steps.front().monomial; }
};

// all broken lines for exit direction n starting at the generic point q
std::vector<BrokenLine> broken_lines(const ScatteringDiagram& D, const Exp& n, const QVec& q);
// sum of first-segment monomials over the broken lines
LaurentPoly theta_expand(const ScatteringDiagram& D, const Exp& n, const QVec& q);

// cluster-monomial form of a 2D theta: decompose m in the pentagon fan and
// take the product of the matching d = 2 cluster variables in the (x1, x2)
// chart
LaurentPoly theta_cluster_2d(const Vec& m);

// 3D theta by the cone product rule, expanded in T_{123} at lambda = mu = 1
LaurentPoly theta_evaluate_3d(const TropSpace& S, const Vec& n);

// ---- the reflexive-polygon scan ----

struct ReflexiveClass {
    TropPolytope rep;
    int boundary_points = 0;
    int dual_class = -1;  // index into the class list
    bool self_dual = false;
};

struct ReflexiveScan {
    std::vector<ReflexiveClass> classes;        // under the order-10 group
    int class_count_rotation_only = 0;          // under the rotation subgroup
};

// BFS over vertex add/remove moves from the pentagon seed, deduplicated under
// the piecewise-linear symmetry group
ReflexiveScan classify_reflexive_dp5();

// the piecewise-linear map induced by a ray relabelling i -> perm[i]
Vec apply_pl_symmetry(const TropSpace& S, const std::vector<int>& perm, const Vec& p);

} // namespace lym

#endif
