#pragma once

// Planar primitives and the five Euclidean base constructions (join,
// circle, line/line, line/circle and circle/circle intersection), plus the
// reflection that every fold induces on the plane.

#include "origami/scalar.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace origami {

struct Point {
    Scalar x;
    Scalar y;
};

/// Locus a*x + b*y + c = 0 with a^2 + b^2 = 1 and a canonical sign: the first
/// of (a, b) that is nonzero at eps_cmp is positive. Two Lines for the same
/// locus compare equal field by field.
class Line {
public:
    /// Normalizes and canonicalizes. Throws DegenerateConfiguration if a and
    /// b both vanish.
    static Line from_coefficients(const Scalar& a, const Scalar& b, const Scalar& c);
    static Line horizontal(const Scalar& y);
    static Line vertical(const Scalar& x);

    const Scalar& a() const { return a_; }
    const Scalar& b() const { return b_; }
    const Scalar& c() const { return c_; }

    /// a*x + b*y + c, the signed distance since (a, b) is a unit normal.
    Scalar eval(const Point& p) const;
    /// Unit direction vector (-b, a).
    Point direction() const;
    /// Foot of the perpendicular from the origin.
    Point anchor() const;
    /// Slope dy/dx; undefined for vertical lines.
    Scalar slope() const;
    bool is_vertical() const;

private:
    Line(Scalar a, Scalar b, Scalar c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}
    Scalar a_, b_, c_;
};

struct Circle {
    Point center;
    Scalar radius;
};

struct Parabola {
    Point focus;
    Line directrix;
};

using Object = std::variant<Point, Line>;

Scalar distance(const Point& p, const Point& q);
Scalar distance(const Point& p, const Line& g);
Point midpoint(const Point& p, const Point& q);

bool same_point(const Point& p, const Point& q, const Scalar& tol);
bool same_point(const Point& p, const Point& q);
bool same_line(const Line& g, const Line& h, const Scalar& tol);
bool same_line(const Line& g, const Line& h);
bool on_line(const Point& p, const Line& g, const Scalar& tol);
bool on_line(const Point& p, const Line& g);
bool parallel(const Line& g, const Line& h, const Scalar& tol);
bool parallel(const Line& g, const Line& h);
/// Cross term a_g*b_h - a_h*b_g (sine of the angle between the normals).
Scalar cross(const Line& g, const Line& h);

/// Throws CoincidentPoints when P = Q at eps_cmp.
Line line_through(const Point& p, const Point& q);
/// Empty when the lines are parallel at eps_cmp.
std::optional<Point> intersect_lines(const Line& g, const Line& h);
Point reflect_point(const Point& p, const Line& g);
Line reflect_line(const Line& h, const Line& g);
Line perpendicular_through(const Line& g, const Point& p);
Line parallel_through(const Line& g, const Point& p);
/// Throws CoincidentPoints.
Line midperpendicular(const Point& p, const Point& q);
/// 0..2 points ordered by (x, y); tangency yields one point.
std::vector<Point> intersect_line_circle(const Line& g, const Circle& c);
/// Via the radical line. Throws ConcentricCircles.
std::vector<Point> intersect_circles(const Circle& c1, const Circle& c2);

/// Canonical direction angle of a line in [0, pi).
Scalar direction_angle(const Line& g);
/// Orders points lexicographically by (x, y) at eps_cmp.
bool point_less(const Point& p, const Point& q);

}  // namespace origami
