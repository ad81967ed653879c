#pragma once

// The .ori construction language.
//
//   point A = (0, 0)            line l = 0 1 -2
//   fold O6 P p Q q choose 2 as t
//   point t x l as R
//   assert_near R.y 1.2599 1e-30
//
// Start-configuration names (A, B, C, D, AB, BC, CD, DA) are available
// without declaration; a script may instead declare any of them before use.

#include "origami/error.hpp"
#include "origami/trace.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace origami {

class ParseError : public std::runtime_error {
public:
    /// `kind` is set for semantic errors found while parsing (undefined or
    /// duplicate names, operand kinds) and empty for syntax errors.
    ParseError(int line, int column, std::string message, std::string token,
               std::optional<ErrorKind> kind = std::nullopt);

    int line;
    int column;
    std::string message;
    std::string token;
    std::optional<ErrorKind> kind;
};

namespace script {

struct Coord {
    std::string name;
    char axis;  // 'x' or 'y'
    bool operator==(const Coord&) const = default;
};
/// Numeric literals keep their source text and are parsed at interpretation
/// time, at the working precision.
struct Number {
    std::string text;
    bool operator==(const Number&) const = default;
};
struct Dist {
    std::string a, b;
    bool operator==(const Dist&) const = default;
};
using Expr = std::variant<Coord, Number, Dist>;

struct PointDecl {
    std::string name;
    Number x, y;
    bool operator==(const PointDecl&) const = default;
};
struct LineDecl {
    std::string name;
    Number a, b, c;
    bool operator==(const LineDecl&) const = default;
};
struct FoldStmt {
    Axiom axiom;
    std::vector<std::string> args;
    std::optional<int> choose;
    std::string name;
    bool operator==(const FoldStmt&) const = default;
};
struct MeetStmt {
    std::string g, h, name;
    bool operator==(const MeetStmt&) const = default;
};
struct AssertStmt {
    Expr lhs, rhs;
    Number tol;
    bool operator==(const AssertStmt&) const = default;
};

using Node = std::variant<PointDecl, LineDecl, FoldStmt, MeetStmt, AssertStmt>;

struct Statement {
    Node node;
    int line = 0;
    int column = 0;
    /// Structural: positions are ignored.
    bool operator==(const Statement& o) const { return node == o.node; }
};

}  // namespace script

struct ScriptProgram {
    std::vector<script::Statement> statements;

    std::size_t declaration_count() const;
    std::size_t statement_count() const { return statements.size() - declaration_count(); }
    bool operator==(const ScriptProgram&) const = default;
};

/// Throws ParseError on the first violation.
ScriptProgram parse_script(const std::string& source);
/// Canonical source text; parse_script(pretty_print(p)) == p.
std::string pretty_print(const ScriptProgram& program);

/// Runs the program over the start square. Named points become landmarks and
/// the last one the target. Errors carry "line L, column C" of the statement;
/// a failed assert_near raises AssertionFailed.
ConstructionTrace interpret(const ScriptProgram& program, const StartConfig& start);

}  // namespace origami
