#pragma once

// The named constructions. Each builds an axiom-pure trace from given points
// and lines, records landmarks and closed-form-checkable measurements, and
// sets `target` to the landmark carrying the result.

#include "origami/trace.hpp"

#include <string>
#include <utility>
#include <vector>

namespace origami {

/// G on AD with AG = side/3. Measurements EC, EM, DG, AG.
ConstructionTrace haga_third(const Scalar& side);
/// G divides AD in the golden ratio. Measurements EH, AG, GD.
ConstructionTrace golden_section(const Scalar& side);
/// Side 3. Landmark Bprime on AD; measurements x = DB', y = AB'.
ConstructionTrace delian_double();
/// Vertex B at the origin, base edge BC along +x, P at angle alpha (degrees).
/// Measurements angle_BI and angle_BBprime in degrees. Throws OutOfRange
/// unless 0 < alpha < 90.
ConstructionTrace trisect_angle_abe(const Scalar& alpha);
/// Measurements angle_PQR, angle_QS, angle_QV in degrees, each from ray QR.
/// Throws DegenerateConfiguration for collinear input and OutOfRange for a
/// non-acute angle.
ConstructionTrace trisect_angle_lemma2(const Point& p, const Point& q, const Point& r);
/// Landmark R = (0, cbrt k). Throws OutOfRange unless k > 0.
ConstructionTrace cube_root(const Scalar& k);
/// Common tangent of y^2 = 2ax and x^2 = 2by. Measurements slope and cbrt
/// (the vertical leg of the unit-run slope triangle).
ConstructionTrace cube_root_ratio(const Scalar& a, const Scalar& b);

struct FoldedRoots {
    ConstructionTrace trace;
    /// Ascending crease slopes.
    std::vector<Scalar> roots;
};

/// Real roots of x^3 + p x^2 + q x + r as common-tangent slopes.
FoldedRoots solve_cubic_by_folding(const Scalar& p, const Scalar& q, const Scalar& r);
/// Real roots of x^2 + p x + q as slopes of the creases through (-p, q) that
/// put (0, 1) on y = -1.
FoldedRoots fold_quadratic_roots(const Scalar& p, const Scalar& q);

/// Side 2 centred on O; vertices V0 = (1, 0) .. V6 counter-clockwise.
/// Measurements x (of Q = V1) and z = GF'.
ConstructionTrace heptagon();
/// Unit circle about O; vertices V0 = (1, 0) .. V16 counter-clockwise.
/// Measurements y1, y2, n1, n2, m1, m2, v1, v2.
ConstructionTrace heptadecagon();

/// Every built-in construction at a representative parameter, by name.
std::vector<std::pair<std::string, ConstructionTrace>> builtin_traces();

/// Direction of the ray from `from` through `to`, in degrees in (-180, 180].
Scalar ray_angle_degrees(const Point& from, const Point& to);

}  // namespace origami
