#include "origami/constructions.hpp"

#include "origami/error.hpp"

#include <algorithm>

namespace origami {

namespace {

Scalar frac(int num, int den) { return Scalar(num) / Scalar(den); }

Point pt(const Scalar& x, const Scalar& y) { return Point{x, y}; }

Point image_of(const Point& p, const Line& crease) { return reflect_point(p, crease); }

bool strictly_between(const Scalar& v, const Scalar& lo, const Scalar& hi) {
    return compare(v, lo) == Cmp::Greater && compare(v, hi) == Cmp::Less;
}

/// The square [corner, corner + side]^2 with A..D counter-clockwise from the
/// lower-left unless the caller renames them.
void given_square(ConstructionTrace& t, const Point& corner, const Scalar& side,
                  const std::vector<std::string>& names) {
    const Scalar x0 = corner.x, y0 = corner.y, x1 = corner.x + side, y1 = corner.y + side;
    t.given(names[0], pt(x0, y0));
    t.given(names[1], pt(x1, y0));
    t.given(names[2], pt(x1, y1));
    t.given(names[3], pt(x0, y1));
    t.given(names[0] + names[1], Line::horizontal(y0));
    t.given(names[1] + names[2], Line::vertical(x1));
    t.given(names[2] + names[3], Line::horizontal(y1));
    t.given(names[3] + names[0], Line::vertical(x0));
    t.sheet = Sheet{corner, side};
}

/// Carries `prev` past `cur` around the circle about `centre`: the mirror of
/// prev in line(centre, cur), located as the image of cur under the fold
/// through the centre that puts cur on the perpendicular from prev.
void next_vertex(ConstructionTrace& t, const std::string& centre, const std::string& prev, const std::string& cur,
                 const std::string& next) {
    const std::string radius = "r" + cur;
    const std::string chord = "l" + next;
    const std::string crease = "c" + next;
    t.fold(radius, Axiom::O2, {centre, cur});
    t.fold(chord, Axiom::LOT, {radius, prev});
    const Point before = t.point(prev);
    const Point here = t.point(cur);
    t.fold_where(
        crease, Axiom::O5, {cur, chord, centre},
        [&](const Line& g) { return !same_point(image_of(here, g), before); }, "image is not " + prev);
    t.image_on(next, cur, crease, chord);
}

}  // namespace

Scalar ray_angle_degrees(const Point& from, const Point& to) {
    return radians_to_degrees(atan2(to.y - from.y, to.x - from.x));
}

ConstructionTrace haga_third(const Scalar& side) {
    if (side.sign() <= 0) throw Error(ErrorKind::OutOfRange, "side must be positive");
    ConstructionTrace t;
    add_start_square(t, StartConfig{side});
    t.fold("mCD", Axiom::O3, {"C", "D"});
    t.intersect("M", "mCD", "CD");
    t.fold("t", Axiom::O3, {"B", "M"});
    t.intersect("E", "t", "BC");
    // The crease fixes its meet with AB, so the image of AB is line XM.
    t.intersect("X", "t", "AB");
    t.fold("XM", Axiom::O2, {"X", "M"});
    t.intersect("G", "XM", "DA");
    for (const char* n : {"M", "E", "G"}) t.landmark(n);
    const Point& E = t.point("E");
    const Point& G = t.point("G");
    t.measure("EC", distance(E, t.point("C")));
    t.measure("EM", distance(E, t.point("M")));
    t.measure("DG", distance(t.point("D"), G));
    t.measure("AG", distance(t.point("A"), G));
    t.target = "G";
    return t;
}

ConstructionTrace golden_section(const Scalar& side) {
    if (side.sign() <= 0) throw Error(ErrorKind::OutOfRange, "side must be positive");
    ConstructionTrace t;
    add_start_square(t, StartConfig{side});
    t.fold("EF", Axiom::O4, {"DA", "BC"}, 0);
    t.intersect("E", "EF", "AB");
    t.intersect("F", "EF", "CD");
    t.fold("BF", Axiom::O2, {"B", "F"});
    // The bisector of the angle FBA meets AD inside the sheet.
    t.fold_where(
        "BG", Axiom::O4, {"BF", "AB"},
        [&](const Line& g) {
            const auto hit = intersect_lines(g, t.line("DA"));
            return hit && strictly_between(hit->y, Scalar(0), side);
        },
        "bisector of angle FBA");
    t.intersect("G", "BG", "DA");
    t.intersect("H", "BG", "EF");
    for (const char* n : {"E", "F", "G", "H"}) t.landmark(n);
    const Point& G = t.point("G");
    t.measure("EH", distance(t.point("E"), t.point("H")));
    t.measure("AG", distance(t.point("A"), G));
    t.measure("GD", distance(G, t.point("D")));
    t.target = "G";
    return t;
}

ConstructionTrace delian_double() {
    const Scalar side(3);
    ConstructionTrace t;
    add_start_square(t, StartConfig{side});
    // Haga: G = (0, 1) on AD.
    t.fold("mCD", Axiom::O3, {"C", "D"});
    t.intersect("M", "mCD", "CD");
    t.fold("haga", Axiom::O3, {"B", "M"});
    t.intersect("X", "haga", "AB");
    t.fold("XM", Axiom::O2, {"X", "M"});
    t.intersect("G", "XM", "DA");
    // Third lines y = 1 and y = 2.
    t.fold("EF", Axiom::LOT, {"DA", "G"});
    t.fold("HG", Axiom::O4, {"EF", "CD"}, 0);
    t.intersect("E", "EF", "BC");
    t.fold_where(
        "t", Axiom::O6, {"B", "DA", "E", "HG"},
        [&](const Line& g) {
            const Point b = image_of(t.point("B"), g);
            const Point e = image_of(t.point("E"), g);
            return strictly_between(b.y, Scalar(0), side) && strictly_between(e.x, Scalar(0), side);
        },
        "B' on edge AD, E' on the sheet");
    t.image_on("Bprime", "B", "t", "DA");
    t.image_on("Eprime", "E", "t", "HG");
    for (const char* n : {"G", "E", "Bprime", "Eprime"}) t.landmark(n);
    const Point& b = t.point("Bprime");
    t.measure("x", distance(t.point("D"), b));
    t.measure("y", distance(t.point("A"), b));
    t.target = "Bprime";
    return t;
}

ConstructionTrace trisect_angle_abe(const Scalar& alpha) {
    if (alpha.sign() <= 0 || !(alpha < Scalar(90))) {
        throw Error(ErrorKind::OutOfRange, "angle must lie strictly between 0 and 90 degrees");
    }
    const Scalar rad = degrees_to_radians(alpha);
    ConstructionTrace t;
    given_square(t, pt(Scalar(0), Scalar(0)), Scalar(1), {"B", "C", "D", "A"});
    t.given("P", pt(cos(rad), sin(rad)));
    t.fold("BP", Axiom::O2, {"B", "P"});
    t.fold("EF", Axiom::O3, {"A", "B"});
    t.intersect("E", "EF", "AB");
    t.fold("GH", Axiom::O4, {"EF", "BC"}, 0);
    t.fold_where(
        "t", Axiom::O6, {"B", "GH", "E", "BP"},
        [&](const Line& g) {
            const Point b = image_of(t.point("B"), g);
            const Point e = image_of(t.point("E"), g);
            const Scalar along = e.x * t.point("P").x + e.y * t.point("P").y;
            return b.x.sign() > 0 && along.sign() > 0;
        },
        "B' right of AB, E' on the ray BP");
    t.image_on("Bprime", "B", "t", "GH");
    t.intersect("I", "t", "GH");
    for (const char* n : {"P", "E", "Bprime", "I"}) t.landmark(n);
    const Point& B = t.point("B");
    t.measure("angle_BI", ray_angle_degrees(B, t.point("I")));
    t.measure("angle_BBprime", ray_angle_degrees(B, t.point("Bprime")));
    t.target = "Bprime";
    return t;
}

ConstructionTrace trisect_angle_lemma2(const Point& p, const Point& q, const Point& r) {
    const Point u{p.x - q.x, p.y - q.y};
    const Point w{r.x - q.x, r.y - q.y};
    const Scalar cross = u.x * w.y - u.y * w.x;
    const Scalar dot = u.x * w.x + u.y * w.y;
    if (near_zero(cross)) throw Error(ErrorKind::DegenerateConfiguration, "P, Q, R are collinear");
    if (dot.sign() <= 0) throw Error(ErrorKind::OutOfRange, "angle PQR must be acute");

    ConstructionTrace t;
    t.given("P", p);
    t.given("Q", q);
    t.given("R", r);
    t.fold("PQ", Axiom::O2, {"P", "Q"});
    t.fold("QR", Axiom::O2, {"Q", "R"});
    t.fold("mPQ", Axiom::O3, {"P", "Q"});
    t.intersect("M", "mPQ", "PQ");
    t.fold("p", Axiom::LOT, {"QR", "M"});
    t.fold("q", Axiom::LOT, {"p", "M"});
    const Point M = t.point("M");
    t.fold_where(
        "t", Axiom::O6, {"P", "p", "Q", "q"},
        [&](const Line& g) {
            // The crease must cross the segment PM.
            return g.eval(p).sign() * g.eval(M).sign() < 0;
        },
        "crease crosses segment PM");
    t.image_on("T", "P", "t", "p");
    t.image_on("S", "Q", "t", "q");
    t.intersect("V", "t", "q");
    for (const char* n : {"M", "T", "S", "V"}) t.landmark(n);
    const Scalar base = ray_angle_degrees(q, r);
    auto from_base = [&](const Point& x) {
        Scalar a = abs(ray_angle_degrees(q, x) - base);
        if (a > Scalar(180)) a = Scalar(360) - a;
        return a;
    };
    t.measure("angle_PQR", from_base(p));
    t.measure("angle_QS", from_base(t.point("S")));
    t.measure("angle_QV", from_base(t.point("V")));
    t.target = "S";
    return t;
}

ConstructionTrace cube_root(const Scalar& k) {
    if (k.sign() <= 0) throw Error(ErrorKind::OutOfRange, "k must be positive");
    ConstructionTrace t;
    t.given("O", pt(Scalar(0), Scalar(0)));
    t.given("S", pt(Scalar(0), k));
    t.given("P", pt(Scalar(-1), Scalar(0)));
    t.given("Q", pt(Scalar(0), -k));
    t.given("p", Line::vertical(Scalar(1)));
    t.given("q", Line::horizontal(k));
    t.given("OS", Line::vertical(Scalar(0)));
    t.fold("t", Axiom::O6, {"P", "p", "Q", "q"}, 0);
    t.intersect("R", "t", "OS");
    t.landmark("R");
    t.measure("cbrt", t.point("R").y);
    t.target = "R";
    return t;
}

ConstructionTrace cube_root_ratio(const Scalar& a, const Scalar& b) {
    if (a.sign() <= 0 || b.sign() <= 0) throw Error(ErrorKind::OutOfRange, "a and b must be positive");
    ConstructionTrace t;
    const Scalar two(2);
    t.given("O", pt(Scalar(0), Scalar(0)));
    t.given("U", pt(Scalar(1), Scalar(0)));
    t.given("xaxis", Line::horizontal(Scalar(0)));
    t.given("yaxis", Line::vertical(Scalar(0)));
    t.given("F1", pt(a / two, Scalar(0)));
    t.given("l1", Line::vertical(-a / two));
    t.given("F2", pt(Scalar(0), b / two));
    t.given("l2", Line::horizontal(-b / two));
    t.fold("t", Axiom::O6, {"F1", "l1", "F2", "l2"}, 0);
    // Unit-run slope triangle between x = 0 and x = 1.
    t.fold("unit", Axiom::LOT, {"xaxis", "U"});
    t.intersect("T0", "t", "yaxis");
    t.intersect("T1", "t", "unit");
    for (const char* n : {"F1", "F2", "T0", "T1"}) t.landmark(n);
    t.measure("slope", t.line("t").slope());
    t.measure("cbrt", t.point("T0").y - t.point("T1").y);
    t.target = "T1";
    return t;
}

namespace {

void sort_scalars(std::vector<Scalar>& v) {
    std::sort(v.begin(), v.end(), [](const Scalar& x, const Scalar& y) { return x < y; });
}

}  // namespace

FoldedRoots solve_cubic_by_folding(const Scalar& p, const Scalar& q, const Scalar& r) {
    FoldedRoots out;
    ConstructionTrace& t = out.trace;
    const Scalar two(2);
    t.given("F1", pt((-p + r) / two, q / two));
    t.given("l1", Line::vertical((-p - r) / two));
    t.given("F2", pt(Scalar(0), frac(1, 2)));
    t.given("l2", Line::horizontal(frac(-1, 2)));
    const auto creases = t.candidates(Axiom::O6, {"F1", "l1", "F2", "l2"});
    for (std::size_t i = 0; i < creases.size(); ++i) {
        const std::string name = "t" + std::to_string(i);
        t.fold(name, Axiom::O6, {"F1", "l1", "F2", "l2"}, static_cast<int>(i));
        out.roots.push_back(t.line(name).slope());
    }
    sort_scalars(out.roots);
    for (std::size_t i = 0; i < out.roots.size(); ++i) t.measure("root" + std::to_string(i), out.roots[i]);
    t.target = creases.empty() ? "" : "t0";
    return out;
}

namespace {

/// The parabola frame shared by all quadratic folds: focus (0,1) and
/// directrix y = -1.
void given_parabola_frame(ConstructionTrace& t) {
    t.given("O", pt(Scalar(0), Scalar(0)));
    t.given("F", pt(Scalar(0), Scalar(1)));
    t.given("l", Line::horizontal(Scalar(-1)));
    t.given("yaxis", Line::vertical(Scalar(0)));
}

/// Folds F onto l through `through`, picking the crease whose slope has the
/// requested sign, and returns the vertical x = slope as `name`.
void quadratic_root_line(ConstructionTrace& t, const std::string& name, const std::string& through, int sign) {
    const std::string crease = "c" + name;
    t.fold_where(
        crease, Axiom::O5, {"F", "l", through}, [&](const Line& g) { return !g.is_vertical() && g.slope().sign() == sign; },
        sign > 0 ? "positive root" : "negative root");
    // The crease touches x^2 = 4y at abscissa 2m, right above F's image.
    t.image_on("F" + name, "F", crease, "l");
    t.fold("w2" + name, Axiom::LOT, {"l", "F" + name});
    t.fold(name, Axiom::O4, {"w2" + name, "yaxis"}, 0);
}

}  // namespace

FoldedRoots fold_quadratic_roots(const Scalar& p, const Scalar& q) {
    FoldedRoots out;
    ConstructionTrace& t = out.trace;
    given_parabola_frame(t);
    t.given("P", pt(-p, q));
    const auto creases = t.candidates(Axiom::O5, {"F", "l", "P"});
    for (std::size_t i = 0; i < creases.size(); ++i) {
        const std::string name = "t" + std::to_string(i);
        t.fold(name, Axiom::O5, {"F", "l", "P"}, static_cast<int>(i));
        if (t.line(name).is_vertical()) {
            throw Error(ErrorKind::DegenerateConfiguration, "vertical crease has no slope");
        }
        out.roots.push_back(t.line(name).slope());
    }
    sort_scalars(out.roots);
    for (std::size_t i = 0; i < out.roots.size(); ++i) t.measure("root" + std::to_string(i), out.roots[i]);
    t.target = creases.empty() ? "" : "t0";
    return out;
}

ConstructionTrace heptagon() {
    ConstructionTrace t;
    given_square(t, pt(Scalar(-1), Scalar(-1)), Scalar(2), {"A", "B", "C", "D"});
    // Mid-lines, quarter lines and the eighth line.
    t.fold("a", Axiom::O4, {"AB", "CD"}, 0);
    t.fold("b", Axiom::O4, {"DA", "BC"}, 0);
    t.intersect("O", "a", "b");
    t.intersect("V0", "a", "BC");
    t.fold("c", Axiom::O4, {"a", "CD"}, 0);
    t.fold("d", Axiom::O4, {"b", "DA"}, 0);
    t.fold("h", Axiom::O4, {"a", "AB"}, 0);
    t.fold("e", Axiom::O4, {"a", "h"}, 0);
    t.intersect("E", "c", "b");
    t.intersect("F", "d", "e");
    t.fold_where(
        "t", Axiom::O6, {"E", "a", "F", "b"},
        [&](const Line& g) {
            const Point e = image_of(t.point("E"), g);
            const Point f = image_of(t.point("F"), g);
            return e.x.sign() > 0 && f.y < frac(-1, 4);
        },
        "E' right of O, F' below G");
    t.image_on("Eprime", "E", "t", "a");
    t.image_on("Fprime", "F", "t", "b");
    t.fold("f", Axiom::LOT, {"a", "Eprime"});
    t.fold_where(
        "cV1", Axiom::O5, {"V0", "f", "O"}, [&](const Line& g) { return image_of(t.point("V0"), g).y.sign() > 0; },
        "Q above a");
    t.image_on("V1", "V0", "cV1", "f");
    for (int k = 1; k <= 5; ++k) {
        next_vertex(t, "O", "V" + std::to_string(k - 1), "V" + std::to_string(k), "V" + std::to_string(k + 1));
    }
    for (const char* n : {"O", "E", "F", "Eprime", "Fprime"}) t.landmark(n);
    for (int k = 0; k < 7; ++k) t.landmark("V" + std::to_string(k));
    t.measure("x", t.point("V1").x);
    t.measure("z", frac(-1, 4) - t.point("Fprime").y);
    t.target = "V1";
    return t;
}

ConstructionTrace heptadecagon() {
    ConstructionTrace t;
    given_parabola_frame(t);
    t.given("xaxis", Line::horizontal(Scalar(0)));
    t.given("V0", pt(Scalar(1), Scalar(0)));
    t.given("P1", pt(Scalar(-1), Scalar(-4)));
    t.frames["y"] = t.point("P1");

    // y^2 + y - 4 = 0
    quadratic_root_line(t, "y1", "P1", +1);
    quadratic_root_line(t, "y2", "P1", -1);
    // n^2 - y1 n - 1 = 0 and m^2 - y2 m - 1 = 0 pass through (y1, -1) and (y2, -1).
    t.intersect("P2", "y1", "l");
    t.intersect("P3", "y2", "l");
    t.frames["n"] = t.point("P2");
    t.frames["m"] = t.point("P3");
    quadratic_root_line(t, "n1", "P2", +1);
    quadratic_root_line(t, "n2", "P2", -1);
    quadratic_root_line(t, "m1", "P3", +1);
    quadratic_root_line(t, "m2", "P3", -1);
    // v^2 - n2 v + m2 = 0 passes through (n2, m2); carry m2 to the y-axis
    // through the diagonal y = x.
    t.fold_where(
        "diag", Axiom::O4, {"xaxis", "yaxis"}, [](const Line& g) { return g.slope().sign() > 0; }, "y = x");
    t.intersect("Dm2", "m2", "diag");
    t.fold("hm2", Axiom::LOT, {"m2", "Dm2"});
    t.intersect("P4", "n2", "hm2");
    t.frames["v"] = t.point("P4");
    quadratic_root_line(t, "v1", "P4", +1);
    quadratic_root_line(t, "v2", "P4", -1);

    // x = cos(4 pi / 17), then vertex 2 by folding V0 onto it through O and
    // vertex 1 by folding V0 onto that crease.
    t.fold("half", Axiom::O4, {"v1", "yaxis"}, 0);
    t.fold_where(
        "c02", Axiom::O5, {"V0", "half", "O"}, [&](const Line& g) { return image_of(t.point("V0"), g).y.sign() > 0; },
        "vertex 2 above the axis");
    t.image_on("W2", "V0", "c02", "half");
    t.fold_where(
        "c01", Axiom::O5, {"V0", "c02", "O"}, [&](const Line& g) { return image_of(t.point("V0"), g).x.sign() > 0; },
        "vertex 1 right of O");
    t.image_on("V1", "V0", "c01", "c02");
    for (int k = 1; k <= 15; ++k) {
        next_vertex(t, "O", "V" + std::to_string(k - 1), "V" + std::to_string(k), "V" + std::to_string(k + 1));
    }

    for (const char* n : {"P1", "P2", "P3", "P4", "W2"}) t.landmark(n);
    for (int k = 0; k < 17; ++k) t.landmark("V" + std::to_string(k));
    auto abscissa = [&](const std::string& n) { return t.line(n).anchor().x; };
    for (const char* n : {"y1", "y2", "n1", "n2", "m1", "m2", "v1", "v2"}) t.measure(n, abscissa(n));
    t.target = "V1";
    return t;
}

std::vector<std::pair<std::string, ConstructionTrace>> builtin_traces() {
    std::vector<std::pair<std::string, ConstructionTrace>> out;
    out.emplace_back("haga", haga_third(Scalar(8)));
    out.emplace_back("golden", golden_section(Scalar(2)));
    out.emplace_back("delian", delian_double());
    out.emplace_back("trisect_abe", trisect_angle_abe(Scalar(60)));
    out.emplace_back("trisect_lemma2",
                     trisect_angle_lemma2(pt(cos(degrees_to_radians(Scalar(60))), sin(degrees_to_radians(Scalar(60)))),
                                          pt(Scalar(0), Scalar(0)), pt(Scalar(1), Scalar(0))));
    out.emplace_back("cube_root", cube_root(Scalar(2)));
    out.emplace_back("cube_root_ratio", cube_root_ratio(Scalar(8), Scalar(1)));
    out.emplace_back("cubic", solve_cubic_by_folding(Scalar(-6), Scalar(11), Scalar(-6)).trace);
    out.emplace_back("quadratic", fold_quadratic_roots(Scalar(1), Scalar(-4)).trace);
    out.emplace_back("heptagon", heptagon());
    out.emplace_back("heptadecagon", heptadecagon());
    return out;
}

}  // namespace origami
