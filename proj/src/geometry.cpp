#include "origami/geometry.hpp"

#include "origami/error.hpp"

#include <algorithm>

namespace origami {

Line Line::from_coefficients(const Scalar& a, const Scalar& b, const Scalar& c) {
    const Scalar norm = sqrt(a * a + b * b);
    if (norm.is_zero() || !norm.is_finite()) {
        throw Error(ErrorKind::DegenerateConfiguration, "line with zero normal");
    }
    Scalar na = a / norm;
    Scalar nb = b / norm;
    Scalar nc = c / norm;
    const Scalar eps = eps_cmp();
    const bool flip = near_zero(na, eps) ? nb.sign() < 0 : na.sign() < 0;
    if (flip) {
        na = -na;
        nb = -nb;
        nc = -nc;
    }
    return Line(std::move(na), std::move(nb), std::move(nc));
}

Line Line::horizontal(const Scalar& y) { return from_coefficients(Scalar(0), Scalar(1), -y); }

Line Line::vertical(const Scalar& x) { return from_coefficients(Scalar(1), Scalar(0), -x); }

Scalar Line::eval(const Point& p) const { return a_ * p.x + b_ * p.y + c_; }

Point Line::direction() const { return Point{-b_, a_}; }

Point Line::anchor() const { return Point{-c_ * a_, -c_ * b_}; }

Scalar Line::slope() const { return -a_ / b_; }

bool Line::is_vertical() const { return near_zero(b_); }

Scalar distance(const Point& p, const Point& q) {
    const Scalar dx = p.x - q.x;
    const Scalar dy = p.y - q.y;
    return sqrt(dx * dx + dy * dy);
}

Scalar distance(const Point& p, const Line& g) { return abs(g.eval(p)); }

Point midpoint(const Point& p, const Point& q) {
    return Point{ldexp(p.x + q.x, -1), ldexp(p.y + q.y, -1)};
}

bool same_point(const Point& p, const Point& q, const Scalar& tol) {
    return near(p.x, q.x, tol) && near(p.y, q.y, tol);
}

bool same_point(const Point& p, const Point& q) { return same_point(p, q, eps_cmp()); }

bool same_line(const Line& g, const Line& h, const Scalar& tol) {
    return near(g.a(), h.a(), tol) && near(g.b(), h.b(), tol) && near(g.c(), h.c(), tol);
}

bool same_line(const Line& g, const Line& h) { return same_line(g, h, eps_cmp()); }

bool on_line(const Point& p, const Line& g, const Scalar& tol) { return near_zero(g.eval(p), tol); }

bool on_line(const Point& p, const Line& g) { return on_line(p, g, eps_cmp()); }

Scalar cross(const Line& g, const Line& h) { return g.a() * h.b() - h.a() * g.b(); }

bool parallel(const Line& g, const Line& h, const Scalar& tol) { return near_zero(cross(g, h), tol); }

bool parallel(const Line& g, const Line& h) { return parallel(g, h, eps_cmp()); }

Line line_through(const Point& p, const Point& q) {
    if (same_point(p, q)) {
        throw Error(ErrorKind::CoincidentPoints, "line_through needs two distinct points");
    }
    // Normal is the direction (q - p) rotated by 90 degrees.
    const Scalar a = p.y - q.y;
    const Scalar b = q.x - p.x;
    return Line::from_coefficients(a, b, -(a * p.x + b * p.y));
}

std::optional<Point> intersect_lines(const Line& g, const Line& h) {
    const Scalar det = cross(g, h);
    if (near_zero(det)) return std::nullopt;
    // Cramer's rule on a_g x + b_g y = -c_g, a_h x + b_h y = -c_h.
    const Scalar x = (g.b() * h.c() - h.b() * g.c()) / det;
    const Scalar y = (h.a() * g.c() - g.a() * h.c()) / det;
    return Point{x, y};
}

Point reflect_point(const Point& p, const Line& g) {
    const Scalar k = ldexp(g.eval(p), 1);
    return Point{p.x - k * g.a(), p.y - k * g.b()};
}

Line reflect_line(const Line& h, const Line& g) {
    const Point p0 = h.anchor();
    const Point dir = h.direction();
    const Point p1{p0.x + dir.x, p0.y + dir.y};
    return line_through(reflect_point(p0, g), reflect_point(p1, g));
}

Line perpendicular_through(const Line& g, const Point& p) {
    // Normal of the result is g's direction.
    const Point n = g.direction();
    return Line::from_coefficients(n.x, n.y, -(n.x * p.x + n.y * p.y));
}

Line parallel_through(const Line& g, const Point& p) {
    return Line::from_coefficients(g.a(), g.b(), -(g.a() * p.x + g.b() * p.y));
}

Line midperpendicular(const Point& p, const Point& q) {
    if (same_point(p, q)) {
        throw Error(ErrorKind::CoincidentPoints, "midperpendicular needs two distinct points");
    }
    const Scalar a = q.x - p.x;
    const Scalar b = q.y - p.y;
    const Point m = midpoint(p, q);
    return Line::from_coefficients(a, b, -(a * m.x + b * m.y));
}

bool point_less(const Point& p, const Point& q) {
    switch (compare(p.x, q.x)) {
        case Cmp::Less: return true;
        case Cmp::Greater: return false;
        case Cmp::Equal: return compare(p.y, q.y) == Cmp::Less;
    }
    return false;
}

std::vector<Point> intersect_line_circle(const Line& g, const Circle& c) {
    const Scalar d = g.eval(c.center);
    const Point foot{c.center.x - d * g.a(), c.center.y - d * g.b()};
    const Scalar disc = c.radius * c.radius - d * d;
    const Scalar eps = eps_cmp();
    if (near_zero(disc, eps)) return {foot};
    if (disc.sign() < 0) return {};
    const Scalar h = sqrt(disc);
    const Point dir = g.direction();
    std::vector<Point> out{Point{foot.x - h * dir.x, foot.y - h * dir.y},
                           Point{foot.x + h * dir.x, foot.y + h * dir.y}};
    std::sort(out.begin(), out.end(), point_less);
    return out;
}

std::vector<Point> intersect_circles(const Circle& c1, const Circle& c2) {
    if (same_point(c1.center, c2.center)) {
        throw Error(ErrorKind::ConcentricCircles, "circles share a center");
    }
    // Radical line: 2 (C2 - C1) . X + |C1|^2 - |C2|^2 - r1^2 + r2^2 = 0.
    const Scalar a = ldexp(c2.center.x - c1.center.x, 1);
    const Scalar b = ldexp(c2.center.y - c1.center.y, 1);
    const Scalar n1 = c1.center.x * c1.center.x + c1.center.y * c1.center.y;
    const Scalar n2 = c2.center.x * c2.center.x + c2.center.y * c2.center.y;
    const Scalar c = n1 - n2 - c1.radius * c1.radius + c2.radius * c2.radius;
    return intersect_line_circle(Line::from_coefficients(a, b, c), c1);
}

Scalar direction_angle(const Line& g) {
    const Point dir = g.direction();
    const Scalar pi = Scalar::pi(g.a().precision_bits());
    Scalar ang = atan2(dir.y, dir.x);
    if (ang.sign() < 0) ang += pi;
    if (compare(ang, pi) != Cmp::Less) ang -= pi;
    if (ang.sign() < 0) ang = Scalar::zero(ang.precision_bits());
    return ang;
}

}  // namespace origami
