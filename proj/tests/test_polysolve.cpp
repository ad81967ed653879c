#include "doctest.h"

#include "oracles.hpp"
#include "origami/error.hpp"
#include "origami/polysolve.hpp"

using namespace origami;
using oracle::num;

namespace {

bool roots_are(const RootSet& rs, std::vector<Scalar> expected, const Scalar& tol) {
    if (rs.size() != expected.size()) return false;
    std::sort(expected.begin(), expected.end());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (!near(rs.roots[i], expected[i], tol)) return false;
    }
    return true;
}

bool roots_are(const RootSet& rs, std::vector<Scalar> expected) {
    return roots_are(rs, std::move(expected), eps_cmp());
}

Scalar max_coeff(const std::vector<Scalar>& c) {
    Scalar m(0);
    for (const auto& x : c) m = max(m, abs(x));
    return m;
}

}  // namespace

TEST_CASE("solve_quadratic") {
    const Scalar s17 = sqrt(Scalar(17));
    CHECK(roots_are(solve_quadratic(1, 1, -4), {(Scalar(-1) - s17) / Scalar(2), (Scalar(-1) + s17) / Scalar(2)}));
    CHECK(roots_are(solve_quadratic(1, 0, -1), {-1, 1}));
    CHECK(solve_quadratic(1, 0, 1).empty());
    const RootSet dbl = solve_quadratic(1, -2, 1);
    CHECK(roots_are(dbl, {1}));
    CHECK(dbl.multiplicities[0] == 2);
    CHECK_THROWS_AS(solve_quadratic(0, 1, 1), Error);
    // Cancellation-prone: roots 1e-30 and 1e30 scale.
    const RootSet wide = solve_quadratic(1, num("-1e30"), 1);
    REQUIRE(wide.size() == 2);
    CHECK(near(wide.roots[0] * num("1e30"), Scalar(1), num("1e-50")));
}

TEST_CASE("solve_cubic_depressed") {
    const Scalar deg = Scalar::pi() / Scalar(180);
    CHECK(roots_are(solve_cubic_depressed(-3, -1),
                    {Scalar(2) * cos(Scalar(20) * deg), Scalar(2) * cos(Scalar(140) * deg),
                     Scalar(2) * cos(Scalar(260) * deg)}));
    const RootSet trisect = solve_cubic_depressed(-3, -1);
    CHECK(near(trisect.roots[0], num("-1.5320888862379560704"), num("1e-18")));
    CHECK(near(trisect.roots[1], num("-0.3472963553338606977"), num("1e-18")));
    CHECK(near(trisect.roots[2], num("1.8793852415718167681"), num("1e-18")));
    CHECK(roots_are(solve_cubic_depressed(0, -8), {2}));
    CHECK(roots_are(solve_cubic_depressed(1, 0), {0}));
    const RootSet triple = solve_cubic_depressed(0, 0);
    CHECK(roots_are(triple, {0}));
    CHECK(triple.multiplicities[0] == 3);
    // y^3 - 3y + 2 = (y - 1)^2 (y + 2).
    const RootSet dbl = solve_cubic_depressed(-3, 2);
    CHECK(roots_are(dbl, {-2, 1}));
    CHECK(dbl.total_multiplicity() == 3);
}

TEST_CASE("solve_cubic") {
    const RootSet hept = solve_cubic(8, 4, -4, -1);
    REQUIRE(hept.size() == 3);
    CHECK(near(hept.roots[2], cos(ldexp(Scalar::pi(), 1) / Scalar(7))));
    CHECK(near(hept.roots[2], num("0.6234898018587335305"), num("1e-18")));
    CHECK(roots_are(solve_cubic(1, -6, 11, -6), {1, 2, 3}));
    // c^3 - 2m c^2 + 2n c + a with m = -p/2, n = q/2, a = r for p = q = 0, r = -8.
    const Scalar p = 0, q = 0, r = -8;
    const Scalar m = -p / Scalar(2), n = q / Scalar(2), a = r;
    CHECK(roots_are(solve_cubic(1, Scalar(-2) * m, Scalar(2) * n, a), {2}));
    CHECK_THROWS_AS(solve_cubic(0, 1, 1, 1), Error);
}

TEST_CASE("solve_quartic") {
    const Scalar k = 8;
    const RootSet nico = solve_quartic(4, k, 0, Scalar(-4) * k, -k * k);
    CHECK(roots_are(nico, {-2, 2}));
    const RootSet hept = solve_quartic(16, 0, -12, 2, 1);
    bool has_half = false, has_cos = false;
    for (const auto& x : hept.roots) {
        has_half = has_half || near(x, Scalar(1) / Scalar(2));
        has_cos = has_cos || near(x, cos(ldexp(Scalar::pi(), 1) / Scalar(7)));
    }
    CHECK(has_half);
    CHECK(has_cos);
    CHECK(roots_are(solve_quartic(1, 0, -5, 0, 4), {-2, -1, 1, 2}));
    // Non-biquadratic with four real roots: (x-1)(x-2)(x-3)(x+4).
    CHECK(roots_are(solve_quartic(1, -2, -13, 38, -24), {-4, 1, 2, 3}));
    CHECK(solve_quartic(1, 0, 0, 0, 1).empty());
    CHECK_THROWS_AS(solve_quartic(0, 1, 1, 1, 1), Error);
}

TEST_CASE("solve dispatch") {
    CHECK(roots_are(solve(Polynomial::descending({2, -4})), {2}));
    CHECK(roots_are(solve(Polynomial::descending({0, 1, 0, -1})), {-1, 1}));
    CHECK_THROWS_AS(solve(Polynomial::descending({1, 0, 0, 0, 0, 1})), Error);
    CHECK_THROWS_AS(solve(Polynomial::descending({3})), Error);
}

TEST_CASE("property: residuals, root counts and values against the bisection oracle") {
    oracle::Rng rng(21);
    const Scalar eps = eps_cmp();
    const Scalar agree = ldexp(Scalar(1), -100);
    int mismatches = 0;
    for (int deg = 2; deg <= 4; ++deg) {
        for (int i = 0; i < 1000; ++i) {
            std::vector<Scalar> c;
            for (int j = 0; j <= deg; ++j) c.push_back(rng.uniform(-10, 10));
            const Polynomial poly{c};
            const RootSet rs = solve(poly);
            for (const auto& x : rs.roots) {
                CHECK(abs(poly.eval(x)) < Scalar(16) * eps * max_coeff(c));
            }
            const auto ref = oracle::real_roots(c);
            if (ref.size() != rs.size()) {
                ++mismatches;
                continue;
            }
            for (std::size_t k = 0; k < ref.size(); ++k) {
                CHECK(near(rs.roots[k], ref[k], agree * max(Scalar(1), abs(ref[k]))));
            }
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("property: cubic casework varies continuously across D = 0") {
    // y^3 - 3y + q: D = q^2/4 - 1 changes sign at q = 2, where the two larger
    // roots merge into the double root 1 and then leave the real line.
    Scalar prev_low;
    bool first = true;
    for (int i = -40; i <= 40; ++i) {
        const Scalar q = Scalar(2) + Scalar(i) * num("0.0005");
        const RootSet rs = solve_cubic_depressed(-3, q);
        REQUIRE(!rs.empty());
        // The smallest root is simple throughout and moves continuously.
        const Scalar low = rs.roots.front();
        if (!first) CHECK(abs(low - prev_low) < num("0.01"));
        prev_low = low;
        first = false;
        for (const auto& x : rs.roots) CHECK(near_zero(x * x * x - Scalar(3) * x + q, Scalar(16) * eps_cmp() * Scalar(3)));
        if (i < 0) CHECK(rs.size() == 3);
        if (i > 0) CHECK(rs.size() == 1);
    }
    const RootSet at = solve_cubic_depressed(-3, 2);
    CHECK(at.total_multiplicity() == 3);
}

TEST_CASE("property: Vieta relations on random quartics with four real roots") {
    oracle::Rng rng(22);
    const Scalar tol = Scalar(32) * eps_cmp();
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        const Scalar lead = rng.uniform(0.5, 4);
        std::vector<Scalar> r;
        for (int j = 0; j < 4; ++j) r.push_back(rng.uniform(-5, 5));
        // lead * prod (x - r_j), expanded.
        const Scalar e1 = r[0] + r[1] + r[2] + r[3];
        const Scalar e2 = r[0] * r[1] + r[0] * r[2] + r[0] * r[3] + r[1] * r[2] + r[1] * r[3] + r[2] * r[3];
        const Scalar e3 = r[0] * r[1] * r[2] + r[0] * r[1] * r[3] + r[0] * r[2] * r[3] + r[1] * r[2] * r[3];
        const Scalar e4 = r[0] * r[1] * r[2] * r[3];
        const RootSet rs = solve_quartic(lead, -lead * e1, lead * e2, -lead * e3, lead * e4);
        REQUIRE(rs.total_multiplicity() == 4);
        Scalar sum(0), prod(1);
        for (std::size_t k = 0; k < rs.size(); ++k) {
            for (int m = 0; m < rs.multiplicities[k]; ++m) {
                sum += rs.roots[k];
                prod *= rs.roots[k];
            }
        }
        CHECK(near(sum, (lead * e1) / lead, tol));
        CHECK(near(prod, (lead * e4) / lead, tol));
        ++checked;
    }
    CHECK(checked == 1000);
}
