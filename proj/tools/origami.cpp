// origami: run construction scripts, verify the built-in constructions, query
// polygon constructibility, solve cubics by folding and draw trace JSON.
//
// stdout carries JSON, SVG or TSV only; diagnostics go to stderr.

#include "origami/constructibility.hpp"
#include "origami/constructions.hpp"
#include "origami/error.hpp"
#include "origami/neusis.hpp"
#include "origami/polysolve.hpp"
#include "origami/render.hpp"
#include "origami/script.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace origami;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kNumeric = 3, kUsage = 64 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

// ---- verify ----

struct Row {
    std::string check;
    std::string value;
    bool pass;
};

using Suite = std::vector<Row>;

Scalar bits_tol(int k) { return ldexp(Scalar(1), -k); }
std::string show(const Scalar& x) { return x.to_string(25); }

Row rel_check(const std::string& name, const Scalar& got, const Scalar& want, const Scalar& tol) {
    return {name, show(got), abs(got - want) <= tol * max(Scalar(1), abs(want))};
}

Row bound_check(const std::string& name, const Scalar& value, const Scalar& bound) {
    return {name, show(value), value < bound};
}

Scalar angle_spread(const ConstructionTrace& t, int n) {
    const Scalar step = Scalar(2) * Scalar::pi() / Scalar(n);
    Scalar worst(0);
    for (int k = 0; k < n; ++k) {
        const Point& v = t.point("V" + std::to_string(k));
        const Point& w = t.point("V" + std::to_string((k + 1) % n));
        const Scalar angle = atan2(v.x * w.y - v.y * w.x, v.x * w.x + v.y * w.y);
        worst = max(worst, abs(angle - step));
    }
    return worst;
}

Suite verify_haga() {
    const auto t = haga_third(Scalar(8));
    const Scalar tol = bits_tol(128);
    const auto& m = t.measurements;
    return {rel_check("EC = 3", m.at("EC"), Scalar(3), tol), rel_check("EM = 5", m.at("EM"), Scalar(5), tol),
            rel_check("DG = 16/3", m.at("DG"), Scalar(16) / Scalar(3), tol),
            rel_check("AG = 8/3", m.at("AG"), Scalar(8) / Scalar(3), tol)};
}

Suite verify_golden() {
    const auto t = golden_section(Scalar(2));
    const Scalar phi = (Scalar(1) + sqrt(Scalar(5))) / Scalar(2);
    const Scalar ag = t.measurements.at("AG"), gd = t.measurements.at("GD");
    return {rel_check("AD/AG = phi", Scalar(2) / ag, phi, bits_tol(120)),
            rel_check("AG/GD = phi", ag / gd, phi, bits_tol(120))};
}

Suite verify_delian() {
    const auto t = delian_double();
    const Scalar x = t.measurements.at("x"), y = t.measurements.at("y");
    return {rel_check("x + y = 3", x + y, Scalar(3), bits_tol(120)), {"x/y", show(x / y), true},
            bound_check("|x^3 - 2y^3| / y^3", abs(x * x * x - Scalar(2) * y * y * y) / (y * y * y), bits_tol(120))};
}

Suite verify_trisect() {
    Suite s;
    const Scalar tol(1e-10);
    for (int a = 10; a <= 80; a += 10) {
        const auto t = trisect_angle_abe(Scalar(a));
        const Scalar third = t.measurements.at("angle_BBprime");
        s.push_back(bound_check("abe " + std::to_string(a) + " - a/3", abs(third - Scalar(a) / Scalar(3)), tol));
        s.push_back(bound_check("abe " + std::to_string(a) + " - neusis", abs(third - archimedes_trisect(Scalar(a))), tol));
    }
    const auto l2 = trisect_angle_lemma2(Point{Scalar(0), Scalar(2)}, Point{Scalar(0), Scalar(0)},
                                         Point{Scalar(3), Scalar(1)});
    const Scalar pqr = l2.measurements.at("angle_PQR");
    s.push_back(bound_check("lemma2 QS - PQR/3", abs(l2.measurements.at("angle_QS") - pqr / Scalar(3)), tol));
    return s;
}

Suite verify_cuberoot() {
    Suite s;
    for (const char* k : {"2", "3", "5", "7.9"}) {
        const Scalar kk = Scalar::parse(k);
        const Scalar r = cube_root(kk).point("R").y;
        s.push_back(rel_check(std::string("fold ") + k + " vs cbrt", r, cbrt(kk), bits_tol(120)));
        s.push_back(rel_check(std::string("fold ") + k + " vs nicomedes", r, nicomedes_cuberoot(kk), bits_tol(120)));
    }
    const Line crease = cube_root(Scalar(8)).line("t");
    const Line want = Line::from_coefficients(Scalar(1), Scalar(2), Scalar(-4));
    s.push_back({"k=8 crease y = -x/2 + 2", show(crease.slope()), same_line(crease, want, bits_tol(120))});
    return s;
}

Suite verify_cubic() {
    Suite s;
    const std::vector<std::array<int, 3>> cases{{0, 0, -2}, {-6, 11, -6}, {0, -3, -1}, {1, 1, 1}, {0, -7, 6}};
    for (const auto& c : cases) {
        const auto folded = solve_cubic_by_folding(Scalar(c[0]), Scalar(c[1]), Scalar(c[2]));
        const RootSet direct = solve_cubic(Scalar(1), Scalar(c[0]), Scalar(c[1]), Scalar(c[2]));
        Scalar dev(0);
        bool same = folded.roots.size() == direct.size();
        for (std::size_t i = 0; same && i < direct.size(); ++i) dev = max(dev, abs(folded.roots[i] - direct.roots[i]));
        std::ostringstream name;
        name << "x^3 + " << c[0] << "x^2 + " << c[1] << "x + " << c[2] << " (" << direct.size() << " roots)";
        s.push_back({name.str(), show(dev), same && dev < bits_tol(100)});
    }
    return s;
}

Suite verify_heptagon() {
    const auto t = heptagon();
    const RootSet r = solve_cubic(Scalar(8), Scalar(4), Scalar(-4), Scalar(-1));
    const Scalar x = t.measurements.at("x");
    return {rel_check("x = root of 8y^3+4y^2-4y-1", x, r.roots.back(), bits_tol(120)),
            rel_check("z = 1/(4x)", t.measurements.at("z"), Scalar(1) / (Scalar(4) * x), bits_tol(120)),
            bound_check("central angle spread", angle_spread(t, 7), Scalar(1e-12))};
}

Suite verify_heptadecagon() {
    const auto t = heptadecagon();
    const auto& m = t.measurements;
    const Scalar tol = bits_tol(100);
    const Scalar pi = Scalar::pi();
    return {rel_check("y1 = (-1+sqrt17)/2", m.at("y1"), (sqrt(Scalar(17)) - Scalar(1)) / Scalar(2), tol),
            rel_check("y1 + y2", m.at("y1") + m.at("y2"), Scalar(-1), tol),
            rel_check("y1 y2", m.at("y1") * m.at("y2"), Scalar(-4), tol),
            rel_check("n1 n2", m.at("n1") * m.at("n2"), Scalar(-1), tol),
            rel_check("m1 m2", m.at("m1") * m.at("m2"), Scalar(-1), tol),
            rel_check("v1 = 2cos(4pi/17)", m.at("v1"), Scalar(2) * cos(Scalar(4) * pi / Scalar(17)), tol),
            bound_check("central angle spread", angle_spread(t, 17), Scalar(1e-10))};
}

Suite verify_ngon_tables() {
    std::set<int> zul, ori_only;
    for (int n = 3; n <= 20; ++n) {
        if (zul_ngon_constructible(n).zul == Tri::Yes) zul.insert(n);
        else if (origami_ngon_constructible(n).origami == Tri::Yes) ori_only.insert(n);
    }
    auto join = [](const std::set<int>& s) {
        std::string out;
        for (int n : s) out += (out.empty() ? "" : ",") + std::to_string(n);
        return out;
    };
    return {{"zul n <= 20", join(zul), zul == std::set<int>{3, 4, 5, 6, 8, 10, 12, 15, 16, 17, 20}},
            {"origami only n <= 20", join(ori_only), ori_only == std::set<int>{7, 9, 13, 14, 18, 19}}};
}

const std::vector<std::pair<std::string, std::function<Suite()>>>& suites() {
    static const std::vector<std::pair<std::string, std::function<Suite()>>> all{
        {"haga", verify_haga},         {"golden", verify_golden},       {"delian", verify_delian},
        {"trisect", verify_trisect},   {"cuberoot", verify_cuberoot},   {"cubic", verify_cubic},
        {"heptagon", verify_heptagon}, {"heptadecagon", verify_heptadecagon}, {"ngon-tables", verify_ngon_tables}};
    return all;
}

int cmd_verify(const std::string& which) {
    int failed = 0, ran = 0;
    std::cout << "suite\tcheck\tvalue\tstatus\n";
    for (const auto& [name, run] : suites()) {
        if (which != "all" && which != name) continue;
        ++ran;
        bool ok = true;
        try {
            for (const Row& r : run()) {
                std::cout << name << '\t' << r.check << '\t' << r.value << '\t' << (r.pass ? "PASS" : "FAIL") << '\n';
                ok = ok && r.pass;
            }
        } catch (const Error& e) {
            std::cout << name << "\terror\t" << e.what() << "\tFAIL\n";
            ok = false;
        }
        if (!ok) ++failed;
        std::cerr << name << ": " << (ok ? "pass" : "FAIL") << '\n';
    }
    std::cerr << ran - failed << "/" << ran << " suites passed\n";
    return failed == 0 ? kOk : kVerifyFailed;
}

// ---- other commands ----

int cmd_run(const std::string& path, const std::string& out, const std::string& svg, const std::string& side) {
    const std::string source = read_file(path);
    ScriptProgram prog;
    try {
        prog = parse_script(source);
    } catch (const ParseError& e) {
        std::cerr << path << ":" << e.line << ":" << e.column << ": error: " << e.message;
        if (!e.token.empty()) std::cerr << " at '" << e.token << "'";
        std::cerr << '\n';
        return kParse;
    }
    ConstructionTrace trace;
    try {
        trace = interpret(prog, StartConfig{Scalar::parse(side)});
    } catch (const Error& e) {
        std::cerr << path << ": " << e.what() << '\n';
        return e.kind() == ErrorKind::AssertionFailed ? kVerifyFailed : kNumeric;
    }
    write_output(out, emit_json(trace));
    if (!svg.empty()) write_output(svg, emit_svg(trace));
    return kOk;
}

int cmd_ngon(std::uint64_t n, const std::string& system) {
    std::cout << "n\tsystem\tanswer\n";
    if (system != "origami") {
        const auto r = zul_ngon_constructible(n);
        std::cout << n << "\tzul\t" << to_string(r.zul) << (r.zul == Tri::Yes ? " (" + r.witness + ")" : "") << '\n';
        if (r.zul == Tri::No && !r.witness.empty()) std::cerr << "zul: " << r.witness << '\n';
    }
    if (system != "zul") {
        const auto r = origami_ngon_constructible(n);
        std::cout << n << "\torigami\t" << to_string(r.origami) << (r.origami == Tri::Yes ? " (" + r.witness + ")" : "")
                  << '\n';
        if (r.origami == Tri::No && !r.witness.empty()) std::cerr << "origami: " << r.witness << '\n';
    }
    return kOk;
}

int cmd_solve_cubic(const std::string& p, const std::string& q, const std::string& r) {
    const Scalar cp = Scalar::parse(p), cq = Scalar::parse(q), cr = Scalar::parse(r);
    const auto folded = solve_cubic_by_folding(cp, cq, cr);
    const RootSet direct = solve_cubic(Scalar(1), cp, cq, cr);
    std::cout << "folding\tpolysolve\tdeviation\n";
    const std::size_t n = std::max(folded.roots.size(), direct.size());
    Scalar worst(0);
    for (std::size_t i = 0; i < n; ++i) {
        const bool a = i < folded.roots.size(), b = i < direct.size();
        std::cout << (a ? show(folded.roots[i]) : "-") << '\t' << (b ? show(direct.roots[i]) : "-") << '\t';
        if (a && b) {
            const Scalar d = abs(folded.roots[i] - direct.roots[i]);
            worst = max(worst, d);
            std::cout << d.to_string(3);
        } else {
            std::cout << "-";
        }
        std::cout << '\n';
    }
    std::cerr << folded.roots.size() << " folded root(s), " << direct.size() << " from polysolve, max deviation "
              << worst.to_string(3) << '\n';
    return folded.roots.size() == direct.size() && worst < Scalar(1e-12) ? kOk : kVerifyFailed;
}

int cmd_svg(const std::string& path, const std::string& out, const SvgOptions& opts) {
    ConstructionTrace trace;
    try {
        trace = parse_json(read_file(path));
    } catch (const Error& e) {
        std::cerr << path << ": " << e.what() << '\n';
        return kParse;
    }
    write_output(out, emit_svg(trace, opts));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Origami construction engine"};
    app.require_subcommand(1);
    int bits = 256;
    app.add_option("--bits", bits, "Working precision in bits")
        ->envname("ORIGAMI_BITS")
        ->check(CLI::Range(32, 1 << 20));

    std::string script, out, svg_out, side = "1";
    auto* run = app.add_subcommand("run", "Parse and interpret a .ori script; print the trace JSON");
    run->add_option("script", script, "Script path")->required();
    run->add_option("--out", out, "Write trace JSON here instead of stdout");
    run->add_option("--svg", svg_out, "Also write the crease-pattern SVG here");
    run->add_option("--side", side, "Side of the start square");

    std::string which;
    std::vector<std::string> names{"all"};
    for (const auto& s : suites()) names.push_back(s.first);
    auto* verify = app.add_subcommand("verify", "Check built-in constructions against closed forms");
    verify->add_option("name", which, "Suite name or all")->required()->check(CLI::IsMember(names));

    std::uint64_t n = 0;
    std::string system = "both";
    auto* ngon = app.add_subcommand("ngon", "Constructibility of the regular n-gon");
    ngon->add_option("n", n, "Number of sides")->required()->check(CLI::Range(std::uint64_t{3}, ~std::uint64_t{0}));
    ngon->add_option("--system", system, "zul, origami or both")->check(CLI::IsMember({"zul", "origami", "both"}));

    std::string cp, cq, cr;
    auto* cubic = app.add_subcommand("solve-cubic", "Real roots of x^3 + p x^2 + q x + r by folding and in closed form");
    cubic->add_option("p", cp)->required();
    cubic->add_option("q", cq)->required();
    cubic->add_option("r", cr)->required();

    std::string json_path;
    SvgOptions opts;
    bool no_labels = false;
    auto* svg = app.add_subcommand("svg", "Render trace JSON as SVG");
    svg->add_option("trace", json_path, "Trace JSON path")->required();
    svg->add_option("--out", out, "Write SVG here instead of stdout");
    svg->add_option("--width", opts.width)->check(CLI::Range(64, 100000));
    svg->add_option("--margin", opts.margin)->check(CLI::Range(0, 10000));
    svg->add_flag("--no-labels", no_labels);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        PrecisionScope precision(bits);
        if (*run) return cmd_run(script, out, svg_out, side);
        if (*verify) return cmd_verify(which);
        if (*ngon) return cmd_ngon(n, system);
        if (*cubic) return cmd_solve_cubic(cp, cq, cr);
        opts.labels = !no_labels;
        return cmd_svg(json_path, out, opts);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumeric;
    }
}
