#pragma once

// Reference computations used by the tests. Nothing here calls the closed-form
// solvers; roots are bracketed from sign changes between critical points.

#include "origami/scalar.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using origami::Scalar;

inline Scalar num(const char* text) { return Scalar::parse(text); }

inline Scalar horner(const std::vector<Scalar>& c, const Scalar& x) {
    Scalar acc = Scalar::zero(x.precision_bits());
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline std::vector<Scalar> derive(const std::vector<Scalar>& c) {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * Scalar(static_cast<int>(i)));
    return d;
}

inline Scalar bisect(const std::vector<Scalar>& c, Scalar lo, Scalar hi, int bits) {
    Scalar flo = horner(c, lo);
    for (int i = 0; i < bits + 64; ++i) {
        Scalar mid = origami::ldexp(lo + hi, -1);
        Scalar fm = horner(c, mid);
        if (fm.is_zero()) return mid;
        if ((fm.sign() > 0) == (flo.sign() > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return origami::ldexp(lo + hi, -1);
}

/// Distinct real roots of the polynomial with ascending coefficients c, whose
/// leading coefficient must be nonzero. Work happens at `bits` precision;
/// roots closer than 2^(-bits/3) relative are merged, and critical points with
/// a near-vanishing value are reported as (even-multiplicity) roots.
inline std::vector<Scalar> real_roots(std::vector<Scalar> c, int bits = 512) {
    origami::PrecisionScope scope(bits);
    for (auto& x : c) x = x.with_precision(bits);
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg <= 0) return {};
    if (deg == 1) return {-c[0] / c[1]};

    const std::vector<Scalar> crit = real_roots(derive(c), bits);
    Scalar bound(1);
    Scalar scale = Scalar::zero(bits);
    for (int i = 0; i < deg; ++i) {
        bound = origami::max(bound, Scalar(1) + origami::abs(c[i] / c[deg]));
    }
    for (const auto& x : c) scale = origami::max(scale, origami::abs(x));

    std::vector<Scalar> pts{-bound};
    for (const auto& x : crit) pts.push_back(x);
    pts.push_back(bound);

    const Scalar flat = origami::ldexp(Scalar(1), -(bits / 2)) * scale;
    std::vector<Scalar> roots;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Scalar fa = horner(c, pts[i]);
        const bool interior = i > 0 && i + 1 < pts.size();
        if (interior && origami::abs(fa) <= flat * origami::max(Scalar(1), origami::abs(pts[i]))) {
            roots.push_back(pts[i]);
            continue;
        }
        if (i + 1 == pts.size()) break;
        const Scalar fb = horner(c, pts[i + 1]);
        if (fa.sign() * fb.sign() < 0) roots.push_back(bisect(c, pts[i], pts[i + 1], bits));
    }
    std::sort(roots.begin(), roots.end());
    std::vector<Scalar> out;
    const Scalar merge = origami::ldexp(Scalar(1), -(bits / 3));
    for (auto& r : roots) {
        if (!out.empty() && origami::abs(out.back() - r) <= merge * origami::max(Scalar(1), origami::abs(r))) {
            continue;
        }
        out.push_back(r);
    }
    return out;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    /// Uniform in [lo, hi), converted exactly from a double.
    Scalar uniform(double lo, double hi) {
        return Scalar(std::uniform_real_distribution<double>(lo, hi)(gen_));
    }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

}  // namespace oracle
