#pragma once

// The single-fold origami operations O1-O6 and the perpendicular ("Lot")
// corollary. Each solver is total: it returns every admissible crease,
// sorted by direction angle in [0, pi) and then signed offset, with
// branch_index recording the position in that order.

#include "origami/geometry.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace origami {

enum class Axiom { O1, O2, O3, O4, O5, O6, LOT };

std::string_view to_string(Axiom axiom);
std::optional<Axiom> parse_axiom(std::string_view text);
/// Upper bound on the number of creases (O1 yields a point, counted as 1).
int max_solutions(Axiom axiom);
/// Number and kinds of operands: 'P' for a point, 'L' for a line.
std::string_view signature(Axiom axiom);

struct Fold {
    Line crease;
    Axiom axiom;
    /// Resolved operands in signature order.
    std::vector<Object> args;
    /// Names of the operands when the fold belongs to a trace.
    std::vector<std::string> inputs;
    int branch_index = 0;
};

std::optional<Point> fold_O1(const Line& g, const Line& h);
Fold fold_O2(const Point& p, const Point& q);
Fold fold_O3(const Point& p, const Point& q);
std::vector<Fold> fold_O4(const Line& g, const Line& h);
std::vector<Fold> fold_O5(const Point& p, const Line& g, const Point& q);
std::vector<Fold> fold_O6(const Point& p, const Line& pl, const Point& q, const Line& ql);
Fold fold_lot(const Line& g, const Point& q);

/// Runs any fold axiom (not O1) on operands matching signature(axiom).
/// Throws TypeMismatch on wrong operand kinds.
std::vector<Fold> apply_axiom(Axiom axiom, std::span<const Object> args);

/// True iff the crease satisfies its axiom's defining predicate.
bool verify_fold(const Fold& fold, const Scalar& tol);
/// verify_fold at 8 * eps_cmp.
bool verify_fold(const Fold& fold);

/// Coefficients (ascending) of the O6 slope cubic in the normalized frame
/// P = (0,0), p: y = 2, Q = (u, v), q: alpha x + beta y + gamma = 0. A crease
/// y = m x + (m^2 + 1) solves the fold iff m is a root.
std::vector<Scalar> o6_slope_cubic(const Scalar& u, const Scalar& v, const Scalar& alpha,
                                   const Scalar& beta, const Scalar& gamma);

}  // namespace origami
