#ifndef LYM_SCATTERING_HPP
#define LYM_SCATTERING_HPP

#include <string>
#include <vector>

#include "lym/fan.hpp"
#include "lym/laurent.hpp"

namespace lym {

using Mat = std::vector<Vec>;  // row-major square integer matrix

Vec mat_apply(const Mat& m, const Vec& v);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_identity(int dim);
Mat mat_inverse_unimodular(const Mat& m);  // |det| must be 1
bool mat_is_identity(const Mat& m);
// exponent-lattice remap z^m -> z^{Am}; coefficients unchanged
LaurentPoly monomial_remap(const LaurentPoly& p, const Mat& a);
LaurentFraction monomial_remap(const LaurentFraction& f, const Mat& a);

// A wall: codimension-1 cone of the fan, a primitive covector u with the
// support inside u^perp, and a wall function with constant term 1 whose
// exponents pair to zero with u.
struct Wall {
    std::string name;
    std::vector<int> support;  // ray indices into the diagram's fan
    Vec normal;
    LaurentPoly function;
};

struct ScatteringDiagram {
    Fan fan;
    std::vector<Wall> walls;

    int dim() const { return fan.dim; }
    // checks the wall axioms; throws on violation
    void validate() const;
    int wall_index(const std::string& name) const;
};

// Crossing in the direction of u (sign = +1) applies z^n -> z^n f^{-<n,u>};
// sign = -1 is the inverse automorphism. Negative powers of f accumulate in
// the factored denominator.
LaurentFraction wall_cross(const LaurentFraction& x, const Wall& w, int sign);

// Composite of the listed crossings (wall index, sign) applied to the probe.
LaurentFraction path_ordered_product(const ScatteringDiagram& D,
                                     const std::vector<std::pair<int, int>>& loop,
                                     const LaurentPoly& probe);

// Counterclockwise crossing order around a joint, each wall taken with its
// normal oriented toward the side the loop leaves. joint_ray = -1 denotes the
// origin of a 2D diagram, otherwise a ray index of the 3D fan.
std::vector<std::pair<int, int>> ccw_joint_loop(const ScatteringDiagram& D, int joint_ray);

struct JointReport {
    std::string joint;
    bool consistent = false;
    std::vector<std::pair<int, int>> loop;  // the (wall, sign) crossings used
    std::string witness;                    // offending composite when failed
};

// For every codimension-2 cone (2D: the origin; 3D: each ray) compose the
// incident wall crossings counterclockwise in a transverse plane and check the
// result is the identity on all coordinate probes.
std::vector<JointReport> check_consistency(const ScatteringDiagram& D);
bool all_consistent(const std::vector<JointReport>& reports);

// The pentagon diagram: rays v1..v5 with functions 1+z1, 1+z2, 1+z1, 1+z1z2, 1+z2.
ScatteringDiagram builtin_dp5();

// The 24-wall diagram on the ten-ray fan, with symbolic lambda, mu.
ScatteringDiagram builtin_v12();
// coefficient-wise specialisation of the wall functions
ScatteringDiagram builtin_v12_at(long long lambda, long long mu);

// The mutation-relation recipe for a wall function: substitute each cluster
// variable's leading monomial z^{-ray} into the exchange relation's right-hand
// side and clear denominators. Used to cross-check the built-in table.
LaurentPoly derived_wall_function_v12(const std::string& wall_name);

// ten-ray fan shared with the tropical module
Fan v12_fan();
Fan dp5_fan();

// Bending data of the ambient integral affine structure: crossing the wall
// spanned by `span` from the cone with apex ray `from_apex` into the cone with
// apex ray `to_apex` maps monomials/points m -> matrix * m. Shared between the
// scattering and tropical builtins.
struct BendSpec {
    std::vector<int> span;
    int from_apex, to_apex;
    Mat matrix;
};
std::vector<BendSpec> dp5_bend_specs();
std::vector<BendSpec> v12_bend_specs();

} // namespace lym

#endif
