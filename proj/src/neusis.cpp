#include "origami/neusis.hpp"

#include "origami/error.hpp"

namespace origami {

namespace {

struct Ruler {
    Point r;
    Point s;
};

/// S at angle phi on the unit circle; R on the x-axis one unit left of S.
Ruler place(const Scalar& phi) {
    Point s{cos(phi), sin(phi)};
    const Scalar run = sqrt(Scalar(1) - s.y * s.y);
    return Ruler{Point{s.x - run, Scalar(0)}, s};
}

/// Signed area of (R, S, A); zero when the ruler passes through A.
Scalar miss(const Ruler& ruler, const Point& a) {
    return (ruler.s.x - ruler.r.x) * (a.y - ruler.r.y) - (ruler.s.y - ruler.r.y) * (a.x - ruler.r.x);
}

}  // namespace

Scalar archimedes_trisect(const Scalar& alpha) {
    if (alpha.sign() <= 0 || !(alpha < Scalar(90))) {
        throw Error(ErrorKind::OutOfRange, "angle must lie strictly between 0 and 90 degrees");
    }
    const int bits = ambient_precision();
    Scalar beta;
    {
        PrecisionScope wide(2 * bits);
        const Scalar a = degrees_to_radians(alpha.with_precision(2 * bits));
        const Point A{cos(a), sin(a)};
        const Scalar pi = Scalar::pi();
        // S sweeps the arc between the ray to A and the negative x-axis.
        Scalar lo = pi - a, hi = pi;
        const int lo_sign = miss(place(lo), A).sign();
        // Halve until the midpoint no longer separates the bracket.
        for (;;) {
            const Scalar mid = (lo + hi) / Scalar(2);
            if (!(lo < mid && mid < hi)) break;
            const int s = miss(place(mid), A).sign();
            if (s == 0) {
                lo = hi = mid;
                break;
            }
            if (s == lo_sign) lo = mid;
            else hi = mid;
        }
        const Ruler ruler = place((lo + hi) / Scalar(2));
        beta = radians_to_degrees(atan2(ruler.s.y - ruler.r.y, ruler.s.x - ruler.r.x));
    }
    return beta.with_precision(bits);
}

Scalar archimedes_trisect_extended(const Scalar& alpha) {
    if (alpha.sign() <= 0 || !(alpha < Scalar(180))) {
        throw Error(ErrorKind::OutOfRange, "angle must lie strictly between 0 and 180 degrees");
    }
    if (alpha < Scalar(90)) return archimedes_trisect(alpha);
    if (alpha == Scalar(90)) return Scalar(30);
    return Scalar(30) + archimedes_trisect(alpha - Scalar(90));
}

Polynomial nicomedes_quartic(const Scalar& k) {
    return Polynomial::descending({Scalar(4), k, Scalar(0), Scalar(-4) * k, -(k * k)});
}

Scalar nicomedes_cuberoot(const Scalar& k) {
    if (k.sign() <= 0 || !(k < Scalar(8))) throw Error(ErrorKind::OutOfRange, "k must lie strictly between 0 and 8");
    const RootSet rs = solve(nicomedes_quartic(k));
    const Scalar other = -k / Scalar(4);
    for (const Scalar& x : rs.roots) {
        if (x.sign() > 0 && !near(x, other)) return x;
    }
    throw Error(ErrorKind::DegenerateConfiguration, "quartic has no positive root");
}

Scalar nicomedes_cuberoot_extended(const Scalar& x) {
    if (x.sign() <= 0) throw Error(ErrorKind::OutOfRange, "x must be positive");
    Scalar k = x;
    long n = 0;
    while (!(k < Scalar(8))) {
        k = ldexp(k, -3);
        ++n;
    }
    while (k < Scalar(1)) {
        k = ldexp(k, 3);
        --n;
    }
    return ldexp(nicomedes_cuberoot(k), n);
}

}  // namespace origami
