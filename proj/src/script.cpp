#include "origami/script.hpp"

#include "origami/error.hpp"

#include <array>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace origami {

ParseError::ParseError(int line_, int column_, std::string message_, std::string token_,
                       std::optional<ErrorKind> kind_)
    : std::runtime_error(std::to_string(line_) + ":" + std::to_string(column_) + ": " + message_ +
                         (token_.empty() ? std::string() : " at '" + token_ + "'")),
      line(line_),
      column(column_),
      message(std::move(message_)),
      token(std::move(token_)),
      kind(kind_) {}

using namespace script;

namespace {

constexpr std::array<const char*, 4> kStartPoints{"A", "B", "C", "D"};
constexpr std::array<const char*, 4> kStartLines{"AB", "BC", "CD", "DA"};
constexpr std::array<const char*, 7> kKeywords{"point", "line", "fold", "choose", "as", "assert_near", "dist"};

bool is_keyword(const std::string& s) {
    for (const char* k : kKeywords) {
        if (s == k) return true;
    }
    return false;
}

// ---- lexer ----

struct Token {
    enum Kind { Ident, Num, Punct, Newline, End } kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (c == '\n') {
                out.push_back({Token::Newline, "\\n", line_, col_});
                advance();
            } else if (c == ' ' || c == '\t' || c == '\r') {
                advance();
            } else if (starts_number()) {
                out.push_back(number());
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                const int l = line_, col = col_;
                std::string s;
                while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                    s += src_[pos_];
                    advance();
                }
                out.push_back({Token::Ident, s, l, col});
            } else if (c == '(' || c == ')' || c == ',' || c == '=' || c == '.') {
                out.push_back({Token::Punct, std::string(1, c), line_, col_});
                advance();
            } else {
                std::string bad(1, c);
                std::size_t p = pos_ + 1;
                while (p < src_.size() && (static_cast<unsigned char>(src_[p]) & 0xC0) == 0x80) bad += src_[p++];
                throw ParseError(line_, col_, "unexpected character", bad);
            }
        }
        out.push_back({Token::End, "", line_, col_});
        return out;
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
            ++col_;
        }
        ++pos_;
    }

    bool digit_at(std::size_t p) const {
        return p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]));
    }

    bool starts_number() const {
        std::size_t p = pos_;
        if (src_[p] == '+' || src_[p] == '-') ++p;
        if (digit_at(p)) return true;
        return p < src_.size() && src_[p] == '.' && digit_at(p + 1);
    }

    Token number() {
        const int l = line_, col = col_;
        const std::size_t start = pos_;
        if (src_[pos_] == '+' || src_[pos_] == '-') advance();
        while (digit_at(pos_)) advance();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            advance();
            while (digit_at(pos_)) advance();
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            advance();
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) advance();
            if (!digit_at(pos_)) throw ParseError(l, col, "malformed number", src_.substr(start, pos_ - start));
            while (digit_at(pos_)) advance();
        }
        if (pos_ < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            throw ParseError(l, col, "malformed number", src_.substr(start, pos_ - start + 1));
        }
        return {Token::Num, src_.substr(start, pos_ - start), l, col};
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// ---- parser ----

enum class Kind { Point, Line };

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    ScriptProgram run() {
        ScriptProgram prog;
        while (peek().kind != Token::End) {
            if (peek().kind == Token::Newline) {
                ++i_;
                continue;
            }
            prog.statements.push_back(statement());
            if (peek().kind != Token::Newline && peek().kind != Token::End) fail("expected end of line", peek());
        }
        return prog;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    const Token& take() { return toks_[i_++]; }

    [[noreturn]] void fail(const std::string& msg, const Token& t, std::optional<ErrorKind> kind = std::nullopt) {
        throw ParseError(t.line, t.column, msg, t.kind == Token::Newline || t.kind == Token::End ? "" : t.text, kind);
    }

    bool at_word(const char* w) const { return peek().kind == Token::Ident && peek().text == w; }

    void expect_word(const char* w) {
        if (!at_word(w)) fail(std::string("expected '") + w + "'", peek());
        ++i_;
    }

    void expect_punct(char c) {
        if (peek().kind != Token::Punct || peek().text[0] != c) fail(std::string("expected '") + c + "'", peek());
        ++i_;
    }

    const Token& ident() {
        const Token& t = peek();
        if (t.kind != Token::Ident || is_keyword(t.text)) fail("expected identifier", t);
        ++i_;
        return t;
    }

    Number number() {
        const Token& t = peek();
        if (t.kind != Token::Num) fail("expected number", t);
        ++i_;
        return Number{t.text};
    }

    static bool is_start_name(const std::string& n, Kind& kind) {
        for (const char* s : kStartPoints) {
            if (n == s) {
                kind = Kind::Point;
                return true;
            }
        }
        for (const char* s : kStartLines) {
            if (n == s) {
                kind = Kind::Line;
                return true;
            }
        }
        return false;
    }

    void define(const Token& t, Kind kind) {
        Kind ignored;
        if (env_.count(t.text) || (is_start_name(t.text, ignored) && implicit_.count(t.text))) {
            fail("'" + t.text + "' is already defined", t, ErrorKind::DuplicateName);
        }
        env_[t.text] = kind;
    }

    void use(const Token& t, Kind expected) {
        Kind kind;
        const auto it = env_.find(t.text);
        if (it != env_.end()) {
            kind = it->second;
        } else if (is_start_name(t.text, kind)) {
            implicit_.insert(t.text);
        } else {
            fail("undefined identifier '" + t.text + "'", t, ErrorKind::UndefinedIdentifier);
        }
        if (kind != expected) {
            fail(std::string("'") + t.text + "' is a " + (kind == Kind::Point ? "point" : "line") + ", expected a " +
                     (expected == Kind::Point ? "point" : "line"),
                 t, ErrorKind::TypeMismatch);
        }
    }

    Statement statement() {
        const Token& head = peek();
        Statement st;
        st.line = head.line;
        st.column = head.column;
        if (at_word("point")) {
            ++i_;
            const Token& first = ident();
            if (peek().kind == Token::Punct && peek().text == "=") {
                ++i_;
                expect_punct('(');
                PointDecl d{first.text, number(), {}};
                expect_punct(',');
                d.y = number();
                expect_punct(')');
                define(first, Kind::Point);
                st.node = d;
            } else {
                use(first, Kind::Line);
                expect_word("x");
                const Token& second = ident();
                use(second, Kind::Line);
                expect_word("as");
                const Token& name = ident();
                define(name, Kind::Point);
                st.node = MeetStmt{first.text, second.text, name.text};
            }
        } else if (at_word("line")) {
            ++i_;
            const Token& name = ident();
            expect_punct('=');
            LineDecl d{name.text, number(), number(), number()};
            define(name, Kind::Line);
            st.node = d;
        } else if (at_word("fold")) {
            ++i_;
            st.node = fold();
        } else if (at_word("assert_near")) {
            ++i_;
            AssertStmt a{expr(), expr(), number()};
            st.node = a;
        } else {
            fail("expected a statement", head);
        }
        return st;
    }

    FoldStmt fold() {
        const Token& ax = peek();
        if (ax.kind != Token::Ident) fail("expected axiom", ax);
        const auto axiom = parse_axiom(ax.text);
        if (!axiom) fail("unknown axiom", ax);
        ++i_;
        FoldStmt f{*axiom, {}, std::nullopt, ""};
        const std::string_view sig = signature(*axiom);
        while (!at_word("choose") && !at_word("as")) {
            const Token& arg = ident();
            if (f.args.size() == sig.size()) fail(std::string(to_string(*axiom)) + " takes " + std::to_string(sig.size()) + " operands", arg);
            use(arg, sig[f.args.size()] == 'P' ? Kind::Point : Kind::Line);
            f.args.push_back(arg.text);
        }
        if (f.args.size() != sig.size()) {
            fail(std::string(to_string(*axiom)) + " takes " + std::to_string(sig.size()) + " operands", peek());
        }
        if (at_word("choose")) {
            ++i_;
            const Token& k = peek();
            if (k.kind != Token::Num || k.text.find_first_not_of("0123456789") != std::string::npos || k.text.size() > 9) {
                fail("expected a non-negative integer", k);
            }
            ++i_;
            f.choose = std::stoi(k.text);
        }
        expect_word("as");
        const Token& name = ident();
        define(name, *axiom == Axiom::O1 ? Kind::Point : Kind::Line);
        f.name = name.text;
        return f;
    }

    Expr expr() {
        const Token& t = peek();
        if (t.kind == Token::Num) return number();
        if (at_word("dist")) {
            ++i_;
            expect_punct('(');
            const Token& a = ident();
            use(a, Kind::Point);
            expect_punct(',');
            const Token& b = ident();
            use(b, Kind::Point);
            expect_punct(')');
            return Dist{a.text, b.text};
        }
        const Token& name = ident();
        expect_punct('.');
        const Token& axis = peek();
        if (axis.kind != Token::Ident || (axis.text != "x" && axis.text != "y")) fail("expected 'x' or 'y'", axis);
        ++i_;
        use(name, Kind::Point);
        return Coord{name.text, axis.text[0]};
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
    std::map<std::string, Kind> env_;
    std::set<std::string> implicit_;
};

// ---- printing ----

std::string print_expr(const Expr& e) {
    if (const auto* c = std::get_if<Coord>(&e)) return c->name + "." + c->axis;
    if (const auto* n = std::get_if<Number>(&e)) return n->text;
    const auto& d = std::get<Dist>(e);
    return "dist(" + d.a + ", " + d.b + ")";
}

std::string print_statement(const Statement& st) {
    std::ostringstream os;
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, PointDecl>) {
                os << "point " << n.name << " = (" << n.x.text << ", " << n.y.text << ")";
            } else if constexpr (std::is_same_v<T, LineDecl>) {
                os << "line " << n.name << " = " << n.a.text << " " << n.b.text << " " << n.c.text;
            } else if constexpr (std::is_same_v<T, FoldStmt>) {
                os << "fold " << to_string(n.axiom);
                for (const auto& a : n.args) os << " " << a;
                if (n.choose) os << " choose " << *n.choose;
                os << " as " << n.name;
            } else if constexpr (std::is_same_v<T, MeetStmt>) {
                os << "point " << n.g << " x " << n.h << " as " << n.name;
            } else {
                os << "assert_near " << print_expr(n.lhs) << " " << print_expr(n.rhs) << " " << n.tol.text;
            }
        },
        st.node);
    return os.str();
}

// ---- interpretation ----

std::string bare_message(const Error& e) {
    const std::string w = e.what();
    const auto colon = w.find(": ");
    return colon == std::string::npos ? w : w.substr(colon + 2);
}

Scalar eval(const ConstructionTrace& t, const Expr& e) {
    if (const auto* c = std::get_if<Coord>(&e)) {
        const Point& p = t.point(c->name);
        return c->axis == 'x' ? p.x : p.y;
    }
    if (const auto* n = std::get_if<Number>(&e)) return Scalar::parse(n->text);
    const auto& d = std::get<Dist>(e);
    return distance(t.point(d.a), t.point(d.b));
}

}  // namespace

std::size_t ScriptProgram::declaration_count() const {
    std::size_t n = 0;
    for (const auto& s : statements) {
        if (std::holds_alternative<PointDecl>(s.node) || std::holds_alternative<LineDecl>(s.node)) ++n;
    }
    return n;
}

ScriptProgram parse_script(const std::string& source) { return Parser(Lexer(source).run()).run(); }

std::string pretty_print(const ScriptProgram& program) {
    std::string out;
    for (const auto& st : program.statements) out += print_statement(st) + "\n";
    return out;
}

ConstructionTrace interpret(const ScriptProgram& program, const StartConfig& start) {
    std::set<std::string> declared;
    for (const auto& st : program.statements) {
        if (const auto* p = std::get_if<PointDecl>(&st.node)) declared.insert(p->name);
        if (const auto* l = std::get_if<LineDecl>(&st.node)) declared.insert(l->name);
    }
    ConstructionTrace square;
    add_start_square(square, start);
    ConstructionTrace t;
    for (const auto& s : square.steps) {
        if (declared.count(s.name)) continue;
        if (s.is_point()) t.given(s.name, std::get<Point>(s.result));
        else t.given(s.name, std::get<Line>(s.result));
    }
    t.sheet = square.sheet;

    for (const auto& st : program.statements) {
        const std::string where = "line " + std::to_string(st.line) + ", column " + std::to_string(st.column);
        try {
            std::visit(
                [&](const auto& n) {
                    using T = std::decay_t<decltype(n)>;
                    if constexpr (std::is_same_v<T, PointDecl>) {
                        t.given(n.name, Point{Scalar::parse(n.x.text), Scalar::parse(n.y.text)});
                    } else if constexpr (std::is_same_v<T, LineDecl>) {
                        t.given(n.name, Line::from_coefficients(Scalar::parse(n.a.text), Scalar::parse(n.b.text),
                                                                Scalar::parse(n.c.text)));
                    } else if constexpr (std::is_same_v<T, FoldStmt>) {
                        if (n.axiom == Axiom::O1) {
                            if (n.choose && *n.choose != 0) {
                                throw Error(ErrorKind::BranchUnavailable, "O1 has a single solution");
                            }
                            t.intersect(n.name, n.args[0], n.args[1]);
                            t.landmark(n.name);
                            t.target = n.name;
                        } else {
                            t.fold(n.name, n.axiom, n.args, n.choose);
                        }
                    } else if constexpr (std::is_same_v<T, MeetStmt>) {
                        t.intersect(n.name, n.g, n.h);
                        t.landmark(n.name);
                        t.target = n.name;
                    } else {
                        const Scalar a = eval(t, n.lhs), b = eval(t, n.rhs);
                        const Scalar tol = Scalar::parse(n.tol.text);
                        if (!(abs(a - b) <= tol)) {
                            throw Error(ErrorKind::AssertionFailed, "'" + print_statement(st) + "' failed: |" +
                                                                        a.to_string(20) + " - " + b.to_string(20) +
                                                                        "| > " + n.tol.text);
                        }
                    }
                },
                st.node);
        } catch (const Error& e) {
            throw Error(e.kind(), where + ": " + bare_message(e));
        }
    }
    return t;
}

}  // namespace origami
