#include "origami/polysolve.hpp"

#include "origami/error.hpp"

#include <algorithm>
#include <numeric>

namespace origami {

Polynomial Polynomial::descending(std::initializer_list<Scalar> c) {
    Polynomial p{std::vector<Scalar>(c)};
    std::reverse(p.coefficients.begin(), p.coefficients.end());
    return p;
}

Scalar Polynomial::eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(x.precision_bits());
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    Polynomial d;
    for (std::size_t i = 1; i < coefficients.size(); ++i) {
        d.coefficients.push_back(coefficients[i] * Scalar(static_cast<int>(i)));
    }
    return d;
}

Scalar Polynomial::scale() const {
    Scalar s = Scalar::zero(ambient_precision());
    for (const auto& c : coefficients) s = max(s, abs(c));
    return s;
}

Polynomial Polynomial::trimmed(const Scalar& tol) const {
    Polynomial p = *this;
    const Scalar limit = tol * scale();
    while (!p.coefficients.empty() && abs(p.coefficients.back()) <= limit) p.coefficients.pop_back();
    return p;
}

Polynomial Polynomial::trimmed() const { return trimmed(eps_cmp()); }

int RootSet::total_multiplicity() const {
    return std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
}

Scalar polish_root(const Polynomial& poly, const Scalar& x0) {
    const Polynomial d = poly.derivative();
    const int bits = std::max(x0.precision_bits(), ambient_precision());
    const Scalar stop = ldexp(Scalar(1).with_precision(bits), -(bits - 4));
    Scalar x = x0;
    Scalar best = x0;
    Scalar best_res = abs(poly.eval(x0));
    for (int iter = 0; iter < 64 && !best_res.is_zero(); ++iter) {
        const Scalar slope = d.eval(x);
        if (slope.is_zero()) break;
        const Scalar step = poly.eval(x) / slope;
        x -= step;
        if (!x.is_finite()) break;
        const Scalar res = abs(poly.eval(x));
        if (res < best_res) {
            best_res = res;
            best = x;
        }
        if (abs(step) <= stop * max(Scalar(1), abs(x))) break;
    }
    return best;
}

namespace {

// Sorts candidate roots and merges those that agree at eps_cmp.
RootSet collect(std::vector<std::pair<Scalar, int>> cands) {
    std::sort(cands.begin(), cands.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    RootSet out;
    const Scalar eps = eps_cmp();
    for (auto& [x, mult] : cands) {
        if (!out.roots.empty() && near(out.roots.back(), x, eps * max(Scalar(1), abs(x)))) {
            out.multiplicities.back() += mult;
            continue;
        }
        out.roots.push_back(std::move(x));
        out.multiplicities.push_back(mult);
    }
    return out;
}

RootSet polished(const Polynomial& poly, std::vector<std::pair<Scalar, int>> cands) {
    for (auto& c : cands) c.first = polish_root(poly, c.first);
    return collect(std::move(cands));
}

}  // namespace

RootSet solve_quadratic(const Scalar& a, const Scalar& b, const Scalar& c) {
    if (near_zero(a)) throw Error(ErrorKind::NotQuadratic, "leading coefficient vanishes");
    const Scalar B = b / a;
    const Scalar C = c / a;
    const Polynomial poly = Polynomial::ascending({C, B, Scalar(1)});
    const Scalar disc = B * B - Scalar(4) * C;
    if (near_zero(disc)) return polished(poly, {{-ldexp(B, -1), 2}});
    if (disc.sign() < 0) return {};
    // q = -(B + sign(B) sqrt(disc)) / 2 avoids cancellation; roots q and C/q.
    const Scalar root = sqrt(disc);
    const Scalar q = -ldexp(B.sign() < 0 ? B - root : B + root, -1);
    return polished(poly, {{q, 1}, {C / q, 1}});
}

RootSet solve_cubic_depressed(const Scalar& p, const Scalar& q) {
    const Polynomial poly = Polynomial::ascending({q, p, Scalar(0), Scalar(1)});
    const Scalar half_q = ldexp(q, -1);
    const Scalar third_p = p / Scalar(3);
    const Scalar D = half_q * half_q + third_p * third_p * third_p;
    const Scalar eps = eps_cmp();

    if (near_zero(D, eps)) {
        if (near_zero(p, eps)) return polished(poly, {{Scalar(0), 3}});
        // Double root -3q/(2p), simple root 3q/p.
        return polished(poly, {{Scalar(3) * q / p, 1}, {-Scalar(3) * q / ldexp(p, 1), 2}});
    }
    if (D.sign() > 0) {
        // Cardano: y = cbrt(z1) + cbrt(z2), z_{1,2} = -q/2 +- sqrt(D).
        const Scalar s = sqrt(D);
        const Scalar y = cbrt(-half_q + s) + cbrt(-half_q - s);
        return polished(poly, {{y, 1}});
    }
    // Three real roots: sqrt(-4p/3) cos(r + k*120deg), cos(3r) = (-q/2) sqrt(-27/p^3).
    Scalar arg = -half_q * sqrt(Scalar(-27) / (p * p * p));
    arg = max(Scalar(-1), min(Scalar(1), arg));
    const Scalar r = acos(arg) / Scalar(3);
    const Scalar amp = sqrt(Scalar(-4) * p / Scalar(3));
    const Scalar third_turn = ldexp(Scalar::pi(r.precision_bits()), 1) / Scalar(3);
    std::vector<std::pair<Scalar, int>> cands;
    for (int k = 0; k < 3; ++k) cands.emplace_back(amp * cos(r + Scalar(k) * third_turn), 1);
    return polished(poly, std::move(cands));
}

RootSet solve_cubic(const Scalar& c3, const Scalar& c2, const Scalar& c1, const Scalar& c0) {
    if (near_zero(c3)) throw Error(ErrorKind::NotCubic, "leading coefficient vanishes");
    const Scalar a2 = c2 / c3;
    const Scalar a1 = c1 / c3;
    const Scalar a0 = c0 / c3;
    const Polynomial monic = Polynomial::ascending({a0, a1, a2, Scalar(1)});
    // Tschirnhaus shift x = y - a2/3.
    const Scalar shift = a2 / Scalar(3);
    const Scalar p = a1 - a2 * shift;
    const Scalar q = ldexp(shift * shift * shift, 1) - shift * a1 + a0;
    const RootSet depressed = solve_cubic_depressed(p, q);
    std::vector<std::pair<Scalar, int>> cands;
    for (std::size_t i = 0; i < depressed.size(); ++i) {
        cands.emplace_back(depressed.roots[i] - shift, depressed.multiplicities[i]);
    }
    return polished(monic, std::move(cands));
}

RootSet solve_quartic(const Scalar& c4, const Scalar& c3, const Scalar& c2, const Scalar& c1,
                      const Scalar& c0) {
    if (near_zero(c4)) throw Error(ErrorKind::NotQuartic, "leading coefficient vanishes");
    const Scalar b = c3 / c4;
    const Scalar c = c2 / c4;
    const Scalar d = c1 / c4;
    const Scalar e = c0 / c4;
    const Polynomial monic = Polynomial::ascending({e, d, c, b, Scalar(1)});

    // x = y - b/4 gives y^4 + p y^2 + q y + r.
    const Scalar s = ldexp(b, -2);
    const Scalar s2 = s * s;
    const Scalar p = c - Scalar(6) * s2;
    const Scalar q = d - ldexp(c * s, 1) + Scalar(8) * s2 * s;
    const Scalar r = e - d * s + c * s2 - Scalar(3) * s2 * s2;
    const Scalar eps = eps_cmp();

    std::vector<std::pair<Scalar, int>> cands;
    auto add_quadratic = [&](const Scalar& B, const Scalar& C) {
        const RootSet rs = solve_quadratic(Scalar(1), B, C);
        for (std::size_t i = 0; i < rs.size(); ++i) cands.emplace_back(rs.roots[i] - s, rs.multiplicities[i]);
    };

    if (near_zero(q, eps)) {
        // Biquadratic: u = y^2 solves u^2 + p u + r.
        const RootSet us = solve_quadratic(Scalar(1), p, r);
        for (std::size_t i = 0; i < us.size(); ++i) {
            const Scalar& u = us.roots[i];
            if (near_zero(u, eps)) {
                cands.emplace_back(-s, 2 * us.multiplicities[i]);
            } else if (u.sign() > 0) {
                const Scalar y = sqrt(u);
                cands.emplace_back(y - s, us.multiplicities[i]);
                cands.emplace_back(-y - s, us.multiplicities[i]);
            }
        }
        return polished(monic, std::move(cands));
    }

    // (y^2 + z/2)^2 = (z - p) y^2 - q y + (z^2/4 - r) is a perfect square when z
    // solves the resolvent z^3 - p z^2 - 4 r z - (q^2 - 4 p r) = 0.
    const RootSet zs = solve_cubic(Scalar(1), -p, Scalar(-4) * r, -(q * q - Scalar(4) * p * r));
    const Scalar floor = p - eps;
    const auto pick = std::find_if(zs.roots.begin(), zs.roots.end(),
                                   [&](const Scalar& z) { return z >= floor; });
    if (pick == zs.roots.end()) {
        throw Error(ErrorKind::DegenerateConfiguration, "quartic resolvent has no root z >= p");
    }
    const Scalar& z = *pick;
    const Scalar g = sqrt(max(z - p, Scalar(0)));
    const Scalar h = -q / ldexp(g, 1);
    const Scalar half_z = ldexp(z, -1);
    // y^2 + z/2 = +-(g y + h).
    add_quadratic(-g, half_z - h);
    add_quadratic(g, half_z + h);
    return polished(monic, std::move(cands));
}

RootSet solve(const Polynomial& poly) {
    const Polynomial p = poly.trimmed();
    const auto& c = p.coefficients;
    switch (p.degree()) {
        case 1: return collect({{-c[0] / c[1], 1}});
        case 2: return solve_quadratic(c[2], c[1], c[0]);
        case 3: return solve_cubic(c[3], c[2], c[1], c[0]);
        case 4: return solve_quartic(c[4], c[3], c[2], c[1], c[0]);
        default:
            throw Error(ErrorKind::UnsupportedDegree,
                        "degree " + std::to_string(p.degree()) + " is outside 1..4");
    }
}

}  // namespace origami
