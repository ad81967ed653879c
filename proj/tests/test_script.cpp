#include "doctest.h"
#include "oracles.hpp"

#include "origami/error.hpp"
#include "origami/script.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace origami;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ParseError parse_error(const std::string& src) {
    try {
        parse_script(src);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("no ParseError for: " << src);
    return ParseError(0, 0, "", "");
}

ErrorKind run_error(const std::string& src, std::string* what = nullptr) {
    try {
        interpret(parse_script(src), StartConfig{});
    } catch (const Error& e) {
        if (what) *what = e.what();
        return e.kind();
    }
    FAIL("no error for: " << src);
    return ErrorKind::InvalidNumber;
}

std::size_t pick(oracle::Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng.integer(0, static_cast<int>(n) - 1)); }

// Random valid programs: names are tracked by kind so every operand is legal.
std::string random_program(oracle::Rng& rng) {
    std::vector<std::string> points{"A", "B", "C", "D"}, lines{"AB", "BC", "CD", "DA"};
    const char* numbers[] = {"0", "-1", "2.5", ".75", "+3", "1e-3", "-4.25E+2", "0.3333333333333333333333"};
    auto num = [&] { return std::string(numbers[pick(rng, std::size(numbers))]); };
    auto any = [&](const std::vector<std::string>& v) { return v[pick(rng, v.size())]; };
    std::string src;
    int fresh = 0;
    const int n = 1 + static_cast<int>(pick(rng, 12));
    for (int i = 0; i < n; ++i) {
        const std::string name = (pick(rng, 2) ? "p" : "L_") + std::to_string(fresh++);
        switch (pick(rng, 6)) {
            case 0:
                src += "point " + name + " = (" + num() + "," + num() + ")\n";
                points.push_back(name);
                break;
            case 1:
                src += "line " + name + " = " + num() + " " + num() + " " + num() + "   # note\n";
                lines.push_back(name);
                break;
            case 2: {
                const Axiom ax = static_cast<Axiom>(rng.integer(0, 6));
                src += "fold " + std::string(to_string(ax));
                for (char k : signature(ax)) src += " " + (k == 'P' ? any(points) : any(lines));
                if (pick(rng, 2)) src += " choose " + std::to_string(pick(rng, 3));
                src += " as " + name + "\n";
                (ax == Axiom::O1 ? points : lines).push_back(name);
                break;
            }
            case 3:
                src += "point " + any(lines) + " x " + any(lines) + " as " + name + "\n";
                points.push_back(name);
                break;
            case 4:
                src += "assert_near " + any(points) + ".x dist(" + any(points) + "," + any(points) + ") " + num() + "\n";
                break;
            default:
                src += "\n# comment only\n";
                break;
        }
    }
    return src;
}

}  // namespace

TEST_CASE("parse examples") {
    const auto prog = parse_script("point A = (0,0)\npoint B = (1,0)\nfold O2 A B as l1");
    CHECK(prog.declaration_count() == 2);
    CHECK(prog.statement_count() == 1);

    const auto o6 = parse_script(
        "point P = (0,0)\nline p = 0 1 -2\npoint Q = (1,1)\nline q = 1 0 3\nfold O6 P p Q q choose 2 as t");
    const auto& f = std::get<script::FoldStmt>(o6.statements.back().node);
    CHECK(f.axiom == Axiom::O6);
    CHECK(f.choose == 2);

    const auto e = parse_error("fold O9 A B");
    CHECK(e.message == "unknown axiom");
    CHECK(e.token == "O9");
    CHECK(e.line == 1);
    CHECK(e.column == 6);
}

TEST_CASE("parse rejects semantic errors with a kind") {
    CHECK(parse_error("fold O2 P A as l").kind == ErrorKind::UndefinedIdentifier);
    CHECK(parse_error("fold O3 A B as m\nfold O3 A C as m").kind == ErrorKind::DuplicateName);
    CHECK(parse_error("fold O2 AB A as l").kind == ErrorKind::TypeMismatch);
    CHECK(parse_error("point AB x A as P").kind == ErrorKind::TypeMismatch);
    CHECK_FALSE(parse_error("fold O2 A as l").kind.has_value());
    CHECK_FALSE(parse_error("point fold = (0, 0)").kind.has_value());
    // A declared start name replaces the implicit one.
    CHECK_NOTHROW(parse_script("point A = (5, 5)\nfold O3 A B as m"));
    CHECK(parse_error("fold O3 A B as m\npoint A = (5, 5)").kind == ErrorKind::DuplicateName);
}

TEST_CASE("interpret: Haga on side 8") {
    const auto trace = interpret(parse_script(slurp(std::filesystem::path(SCRIPTS_DIR) / "haga.ori")),
                                 StartConfig{Scalar(8)});
    REQUIRE(trace.landmarks.count("G"));
    CHECK(trace.target == "G");
    const Point& g = trace.point("G");
    CHECK(near(distance(trace.point("A"), g), Scalar(8) / Scalar(3), ldexp(Scalar(1), -128)));
    CHECK(axiom_purity_violation(trace) == std::nullopt);
    CHECK(identical_results(trace, replay(trace)));
}

TEST_CASE("interpret: O3 midline and asserts") {
    CHECK_NOTHROW(interpret(parse_script(slurp(std::filesystem::path(SCRIPTS_DIR) / "midline.ori")), StartConfig{}));
    CHECK_NOTHROW(interpret(parse_script("point P = (0,0)\npoint Q = (2,0)\nline y = 0 1 0\n"
                                         "fold O3 P Q as m\npoint m x y as M\nassert_near M.x 1 1e-30"),
                            StartConfig{}));

    std::string what;
    CHECK(run_error(slurp(std::filesystem::path(SCRIPTS_DIR) / "assert_fail.ori"), &what) == ErrorKind::AssertionFailed);
    CHECK(what.find("line 3, column 1") != std::string::npos);
    CHECK(what.find("assert_near X.x 0.5 1e-20") != std::string::npos);
}

TEST_CASE("interpret: cube root script") {
    const auto trace =
        interpret(parse_script(slurp(std::filesystem::path(SCRIPTS_DIR) / "cube_root_two.ori")), StartConfig{});
    CHECK(near(trace.point("R").y, cbrt(Scalar(2)), ldexp(Scalar(1), -120)));
}

TEST_CASE("interpret: branch and axiom errors carry the statement position") {
    std::string what;
    CHECK(run_error(slurp(std::filesystem::path(SCRIPTS_DIR) / "branch_error.ori"), &what) ==
          ErrorKind::BranchUnavailable);
    CHECK(what.find("line 4, column 1") != std::string::npos);
    // Two solutions exist, so choose is mandatory.
    CHECK(run_error("point P = (0, 2)\npoint O = (0, 0)\nline l = 0 1 0\nfold O5 P l O as c") ==
          ErrorKind::BranchUnavailable);
    CHECK(run_error("line g = 0 1 0\nline h = 0 1 -1\npoint g x h as P", &what) == ErrorKind::DegenerateConfiguration);
    CHECK(what.find("line 3, column 1") != std::string::npos);
    CHECK(run_error("fold O2 A B choose 1 as g") == ErrorKind::BranchUnavailable);
}

TEST_CASE("start names are implicit or declared") {
    const auto t = interpret(parse_script("point A = (0.5, 0.5)\nfold O3 A C as m"), StartConfig{Scalar(2)});
    CHECK(t.point("A").x == Scalar(0.5));
    CHECK(t.point("C").x == Scalar(2));
    CHECK(t.has("AB"));
}

TEST_CASE("property: round trip on random programs") {
    oracle::Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        const std::string src = random_program(rng);
        const auto prog = parse_script(src);
        const std::string printed = pretty_print(prog);
        const auto again = parse_script(printed);
        CHECK_MESSAGE(again == prog, src);
        CHECK(pretty_print(again) == printed);
    }
}

TEST_CASE("pretty print is canonical") {
    const auto prog = parse_script("point   A=(0,0)\n\n# c\nline l=1  0 -2\nfold  O5 A l B choose 1 as t #x\n"
                                   "point t x l as P\nassert_near P.y dist( A ,B ) 1e-30\n");
    CHECK(pretty_print(prog) ==
          "point A = (0, 0)\nline l = 1 0 -2\nfold O5 A l B choose 1 as t\npoint t x l as P\n"
          "assert_near P.y dist(A, B) 1e-30\n");
}

TEST_CASE("property: interpretation is deterministic") {
    const auto prog = parse_script(slurp(std::filesystem::path(SCRIPTS_DIR) / "haga.ori"));
    const auto a = interpret(prog, StartConfig{Scalar(3)});
    const auto b = interpret(prog, StartConfig{Scalar(3)});
    CHECK(identical_results(a, b));
}

TEST_CASE("error corpus positions") {
    int files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(std::filesystem::path(SCRIPTS_DIR) / "errors")) {
        if (entry.path().extension() != ".ori") continue;
        ++files;
        const std::string src = slurp(entry.path());
        int line = 0, column = 0;
        REQUIRE(std::sscanf(src.c_str(), "# expect: %d:%d", &line, &column) == 2);
        const auto e = parse_error(src);
        CHECK_MESSAGE(e.line == line, entry.path().filename());
        CHECK_MESSAGE(e.column == column, entry.path().filename());
    }
    CHECK(files >= 10);
}
