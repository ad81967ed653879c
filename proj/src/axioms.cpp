#include "origami/axioms.hpp"

#include "origami/error.hpp"
#include "origami/polysolve.hpp"

#include <algorithm>

namespace origami {

std::string_view to_string(Axiom axiom) {
    switch (axiom) {
        case Axiom::O1: return "O1";
        case Axiom::O2: return "O2";
        case Axiom::O3: return "O3";
        case Axiom::O4: return "O4";
        case Axiom::O5: return "O5";
        case Axiom::O6: return "O6";
        case Axiom::LOT: return "LOT";
    }
    return "?";
}

std::optional<Axiom> parse_axiom(std::string_view text) {
    for (Axiom a : {Axiom::O1, Axiom::O2, Axiom::O3, Axiom::O4, Axiom::O5, Axiom::O6, Axiom::LOT}) {
        if (to_string(a) == text) return a;
    }
    return std::nullopt;
}

int max_solutions(Axiom axiom) {
    switch (axiom) {
        case Axiom::O4:
        case Axiom::O5: return 2;
        case Axiom::O6: return 3;
        default: return 1;
    }
}

std::string_view signature(Axiom axiom) {
    switch (axiom) {
        case Axiom::O1: return "LL";
        case Axiom::O2:
        case Axiom::O3: return "PP";
        case Axiom::O4: return "LL";
        case Axiom::O5: return "PLP";
        case Axiom::O6: return "PLPL";
        case Axiom::LOT: return "LP";
    }
    return "";
}

namespace {

bool crease_less(const Fold& l, const Fold& r) {
    switch (compare(direction_angle(l.crease), direction_angle(r.crease))) {
        case Cmp::Less: return true;
        case Cmp::Greater: return false;
        case Cmp::Equal: return compare(l.crease.c(), r.crease.c()) == Cmp::Less;
    }
    return false;
}

std::vector<Fold> canonical_order(std::vector<Fold> folds) {
    std::sort(folds.begin(), folds.end(), crease_less);
    // Drop creases that coincide at eps_cmp (repeated roots, tangencies).
    std::vector<Fold> out;
    for (auto& f : folds) {
        const bool dup = std::any_of(out.begin(), out.end(),
                                     [&](const Fold& o) { return same_line(o.crease, f.crease); });
        if (!dup) out.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i].branch_index = static_cast<int>(i);
    return out;
}

Fold make_fold(Line crease, Axiom axiom, std::vector<Object> args) {
    return Fold{std::move(crease), axiom, std::move(args), {}, 0};
}

Scalar dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

}  // namespace

std::optional<Point> fold_O1(const Line& g, const Line& h) { return intersect_lines(g, h); }

Fold fold_O2(const Point& p, const Point& q) {
    return make_fold(line_through(p, q), Axiom::O2, {p, q});
}

Fold fold_O3(const Point& p, const Point& q) {
    return make_fold(midperpendicular(p, q), Axiom::O3, {p, q});
}

std::vector<Fold> fold_O4(const Line& g, const Line& h) {
    if (same_line(g, h)) throw Error(ErrorKind::IdenticalLines, "O4 needs two distinct lines");
    // Align the normals so that the sum/difference forms are meaningful.
    const Scalar orient = g.a() * h.a() + g.b() * h.b();
    const Scalar s = orient.sign() < 0 ? Scalar(-1) : Scalar(1);
    const Scalar ha = s * h.a(), hb = s * h.b(), hc = s * h.c();
    std::vector<Fold> out;
    if (parallel(g, h)) {
        const Line mid = Line::from_coefficients(g.a() + ha, g.b() + hb, g.c() + hc);
        out.push_back(make_fold(mid, Axiom::O4, {g, h}));
    } else {
        out.push_back(make_fold(Line::from_coefficients(g.a() + ha, g.b() + hb, g.c() + hc),
                                Axiom::O4, {g, h}));
        out.push_back(make_fold(Line::from_coefficients(g.a() - ha, g.b() - hb, g.c() - hc),
                                Axiom::O4, {g, h}));
    }
    return canonical_order(std::move(out));
}

std::vector<Fold> fold_O5(const Point& p, const Line& g, const Point& q) {
    if (same_point(p, q) && on_line(p, g)) {
        throw Error(ErrorKind::DegenerateConfiguration, "O5 with P = Q on g has no unique crease");
    }
    const Scalar radius = distance(q, p);
    if (near_zero(radius)) return {};
    std::vector<Fold> out;
    for (const Point& image : intersect_line_circle(g, Circle{q, radius})) {
        // The image coincides with P only when P is on g; the crease is then PQ.
        Line crease = same_point(image, p) ? line_through(p, q) : midperpendicular(p, image);
        out.push_back(make_fold(std::move(crease), Axiom::O5, {p, g, q}));
    }
    return canonical_order(std::move(out));
}

Fold fold_lot(const Line& g, const Point& q) {
    return make_fold(perpendicular_through(g, q), Axiom::LOT, {g, q});
}

std::vector<Scalar> o6_slope_cubic(const Scalar& u, const Scalar& v, const Scalar& alpha,
                                   const Scalar& beta, const Scalar& gamma) {
    // Q reflected across y = m x + m^2 + 1 lies on q iff
    //   L (m^2 + 1) + 2 (beta - alpha m)(m^2 + u m + 1 - v) = 0,  L = alpha u + beta v + gamma.
    const Scalar L = alpha * u + beta * v + gamma;
    const Scalar one_minus_v = Scalar(1) - v;
    return {
        L + ldexp(beta * one_minus_v, 1),
        ldexp(beta * u - alpha * one_minus_v, 1),
        L + ldexp(beta - alpha * u, 1),
        -ldexp(alpha, 1),
    };
}

std::vector<Fold> fold_O6(const Point& p, const Line& pl, const Point& q, const Line& ql) {
    const bool p_on = on_line(p, pl);
    const bool q_on = on_line(q, ql);
    if (p_on && q_on) {
        throw Error(ErrorKind::DegenerateConfiguration,
                    parallel(pl, ql) ? "O6 exclusion: P on p, Q on q and p parallel to q"
                                     : "O6 with P on p and Q on q has no finite slope cubic");
    }
    const std::vector<Object> args{p, pl, q, ql};
    // The frame is anchored at whichever point lies off its line.
    const Point& P = p_on ? q : p;
    const Line& Pl = p_on ? ql : pl;
    const Point& Q = p_on ? p : q;
    const Line& Ql = p_on ? pl : ql;

    // Similarity to P = (0,0), p: y = 2. n points from P towards p, e1 completes
    // a right-handed frame, and lengths are scaled by 2/d.
    const Scalar signed_d = Pl.eval(P);
    const Scalar d = abs(signed_d);
    const Scalar flip = signed_d.sign() > 0 ? Scalar(-1) : Scalar(1);
    const Point n{flip * Pl.a(), flip * Pl.b()};
    const Point e1{n.y, -n.x};
    const Scalar to_local = Scalar(2) / d;
    const Scalar to_world = ldexp(d, -1);
    auto local = [&](const Point& X) {
        const Point w{X.x - P.x, X.y - P.y};
        return Point{to_local * dot(w, e1), to_local * dot(w, n)};
    };
    auto world = [&](const Scalar& xl, const Scalar& yl) {
        return Point{P.x + to_world * (xl * e1.x + yl * n.x), P.y + to_world * (xl * e1.y + yl * n.y)};
    };

    const Point Ql_pt = local(Q);
    const Point a0 = Ql.anchor();
    const Point dir = Ql.direction();
    const Line q_local = line_through(local(a0), local(Point{a0.x + dir.x, a0.y + dir.y}));

    const Polynomial cubic{o6_slope_cubic(Ql_pt.x, Ql_pt.y, q_local.a(), q_local.b(), q_local.c())};
    const Polynomial trimmed = cubic.trimmed();
    if (trimmed.degree() < 0) {
        throw Error(ErrorKind::DegenerateConfiguration, "O6 slope equation vanishes identically");
    }
    std::vector<Fold> out;
    if (trimmed.degree() == 0) return out;
    const RootSet slopes = solve(trimmed);
    for (const Scalar& m : slopes.roots) {
        const Scalar b = m * m + Scalar(1);
        Line crease = line_through(world(Scalar(0), b), world(Scalar(1), m + b));
        out.push_back(make_fold(std::move(crease), Axiom::O6, args));
    }
    return canonical_order(std::move(out));
}

namespace {

template <typename T>
const T& operand(std::span<const Object> args, std::size_t i, Axiom axiom) {
    if (i >= args.size() || !std::holds_alternative<T>(args[i])) {
        throw Error(ErrorKind::TypeMismatch, std::string(to_string(axiom)) + " expects operands " +
                                                 std::string(signature(axiom)));
    }
    return std::get<T>(args[i]);
}

}  // namespace

std::vector<Fold> apply_axiom(Axiom axiom, std::span<const Object> args) {
    if (args.size() != signature(axiom).size()) {
        throw Error(ErrorKind::TypeMismatch, std::string(to_string(axiom)) + " expects " +
                                                 std::to_string(signature(axiom).size()) + " operands");
    }
    switch (axiom) {
        case Axiom::O2: return {fold_O2(operand<Point>(args, 0, axiom), operand<Point>(args, 1, axiom))};
        case Axiom::O3: return {fold_O3(operand<Point>(args, 0, axiom), operand<Point>(args, 1, axiom))};
        case Axiom::O4: return fold_O4(operand<Line>(args, 0, axiom), operand<Line>(args, 1, axiom));
        case Axiom::O5:
            return fold_O5(operand<Point>(args, 0, axiom), operand<Line>(args, 1, axiom),
                           operand<Point>(args, 2, axiom));
        case Axiom::O6:
            return fold_O6(operand<Point>(args, 0, axiom), operand<Line>(args, 1, axiom),
                           operand<Point>(args, 2, axiom), operand<Line>(args, 3, axiom));
        case Axiom::LOT: return {fold_lot(operand<Line>(args, 0, axiom), operand<Point>(args, 1, axiom))};
        case Axiom::O1: break;
    }
    throw Error(ErrorKind::TypeMismatch, "O1 produces a point, not a crease");
}

bool verify_fold(const Fold& f, const Scalar& tol) {
    if (f.branch_index < 0 || f.branch_index >= max_solutions(f.axiom)) return false;
    if (f.args.size() != signature(f.axiom).size()) return false;
    const std::span<const Object> args(f.args);
    const Line& t = f.crease;
    try {
        switch (f.axiom) {
            case Axiom::O2:
                return on_line(operand<Point>(args, 0, f.axiom), t, tol) &&
                       on_line(operand<Point>(args, 1, f.axiom), t, tol);
            case Axiom::O3:
                return same_point(reflect_point(operand<Point>(args, 1, f.axiom), t),
                                  operand<Point>(args, 0, f.axiom), tol);
            case Axiom::O4:
                return same_line(reflect_line(operand<Line>(args, 0, f.axiom), t),
                                 operand<Line>(args, 1, f.axiom), tol);
            case Axiom::O5:
                return on_line(operand<Point>(args, 2, f.axiom), t, tol) &&
                       on_line(reflect_point(operand<Point>(args, 0, f.axiom), t),
                               operand<Line>(args, 1, f.axiom), tol);
            case Axiom::O6:
                return on_line(reflect_point(operand<Point>(args, 0, f.axiom), t),
                               operand<Line>(args, 1, f.axiom), tol) &&
                       on_line(reflect_point(operand<Point>(args, 2, f.axiom), t),
                               operand<Line>(args, 3, f.axiom), tol);
            case Axiom::LOT: {
                const Line& g = operand<Line>(args, 0, f.axiom);
                return on_line(operand<Point>(args, 1, f.axiom), t, tol) &&
                       near_zero(g.a() * t.a() + g.b() * t.b(), tol);
            }
            case Axiom::O1: return false;
        }
    } catch (const Error&) {
        return false;
    }
    return false;
}

bool verify_fold(const Fold& f) { return verify_fold(f, Scalar(8) * eps_cmp()); }

}  // namespace origami
