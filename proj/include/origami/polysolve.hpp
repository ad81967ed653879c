#pragma once

// Real roots of polynomials of degree <= 4 in closed form: the quadratic
// formula, Cardano / trigonometric casework for cubics, and the resolvent
// cubic reduction for quartics. Every closed-form root is Newton-polished
// against the input polynomial. Complex roots are never reported.

#include "origami/scalar.hpp"

#include <initializer_list>
#include <vector>

namespace origami {

struct Polynomial {
    /// Ascending degree: coefficients[i] multiplies x^i.
    std::vector<Scalar> coefficients;

    static Polynomial ascending(std::initializer_list<Scalar> c) { return Polynomial{c}; }
    /// Highest degree first, as polynomials are usually written.
    static Polynomial descending(std::initializer_list<Scalar> c);

    /// Index of the highest coefficient; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    const Scalar& leading() const { return coefficients.back(); }
    Scalar eval(const Scalar& x) const;
    Polynomial derivative() const;
    /// Largest coefficient magnitude.
    Scalar scale() const;
    /// Drops leading coefficients with |c| <= tol * scale().
    Polynomial trimmed(const Scalar& tol) const;
    Polynomial trimmed() const;
};

struct RootSet {
    std::vector<Scalar> roots;  // strictly increasing at eps_cmp
    std::vector<int> multiplicities;

    std::size_t size() const { return roots.size(); }
    bool empty() const { return roots.empty(); }
    int total_multiplicity() const;
};

/// a x^2 + b x + c. Throws NotQuadratic when a vanishes.
RootSet solve_quadratic(const Scalar& a, const Scalar& b, const Scalar& c);

/// y^3 + p y + q.
RootSet solve_cubic_depressed(const Scalar& p, const Scalar& q);

/// c3 x^3 + c2 x^2 + c1 x + c0. Throws NotCubic when c3 vanishes.
RootSet solve_cubic(const Scalar& c3, const Scalar& c2, const Scalar& c1, const Scalar& c0);

/// c4 x^4 + ... + c0. Throws NotQuartic when c4 vanishes.
RootSet solve_quartic(const Scalar& c4, const Scalar& c3, const Scalar& c2, const Scalar& c1,
                      const Scalar& c0);

/// Dispatches on the trimmed degree (1..4). Throws UnsupportedDegree otherwise.
RootSet solve(const Polynomial& poly);

/// Newton iteration from x, returning the iterate with the smallest residual.
Scalar polish_root(const Polynomial& poly, const Scalar& x);

}  // namespace origami
