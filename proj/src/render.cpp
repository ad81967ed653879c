#include "origami/render.hpp"

#include "origami/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace origami {

namespace {

// ---- SVG ----

struct View {
    double x0, y0, x1, y1;
    double scale;
    int margin;

    double sx(double x) const { return margin + (x - x0) * scale; }
    double sy(double y) const { return margin + (y1 - y) * scale; }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    return s == "-0.000" ? "0.000" : s;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

View make_view(const ConstructionTrace& t, const SvgOptions& opts) {
    double x0 = std::numeric_limits<double>::infinity(), y0 = x0, x1 = -x0, y1 = -x0;
    auto cover = [&](double x, double y) {
        x0 = std::min(x0, x);
        y0 = std::min(y0, y);
        x1 = std::max(x1, x);
        y1 = std::max(y1, y);
    };
    if (t.sheet) {
        const double cx = t.sheet->corner.x.to_double(), cy = t.sheet->corner.y.to_double();
        const double s = t.sheet->side.to_double();
        cover(cx, cy);
        cover(cx + s, cy + s);
    }
    for (const auto& s : t.steps) {
        if (const auto* p = std::get_if<Point>(&s.result)) cover(p->x.to_double(), p->y.to_double());
    }
    if (!std::isfinite(x0)) {
        // Lines only: frame their feet from the origin.
        x0 = y0 = -1;
        x1 = y1 = 1;
        for (const auto& s : t.steps) {
            const Point a = std::get<Line>(s.result).anchor();
            cover(a.x.to_double(), a.y.to_double());
        }
    }
    const double extent = std::max({x1 - x0, y1 - y0, 1e-9});
    const double pad = extent * 0.05;
    View v{x0 - pad, y0 - pad, x1 + pad, y1 + pad, 0, opts.margin};
    v.scale = (opts.width - 2.0 * opts.margin) / std::max(v.x1 - v.x0, v.y1 - v.y0);
    return v;
}

// Clips the infinite line to the view rectangle.
bool clip(const Line& g, const View& v, double& ax, double& ay, double& bx, double& by) {
    const Point p = g.anchor(), d = g.direction();
    const double px = p.x.to_double(), py = p.y.to_double(), dx = d.x.to_double(), dy = d.y.to_double();
    double lo = -std::numeric_limits<double>::infinity(), hi = -lo;
    auto slab = [&](double origin, double dir, double min, double max) {
        if (std::abs(dir) < 1e-15) return origin >= min && origin <= max;
        double t0 = (min - origin) / dir, t1 = (max - origin) / dir;
        if (t0 > t1) std::swap(t0, t1);
        lo = std::max(lo, t0);
        hi = std::min(hi, t1);
        return lo <= hi;
    };
    if (!slab(px, dx, v.x0, v.x1) || !slab(py, dy, v.y0, v.y1)) return false;
    ax = px + lo * dx;
    ay = py + lo * dy;
    bx = px + hi * dx;
    by = py + hi * dy;
    return true;
}

// ---- JSON ----

using json = nlohmann::ordered_json;

std::string dec(const Scalar& x, int bits) { return x.to_string(std::max(bits / 3, 2)); }

json point_json(const Point& p, int bits) { return json::array({dec(p.x, bits), dec(p.y, bits)}); }

json object_json(const Object& o, int bits) {
    json j = json::object();
    if (const auto* p = std::get_if<Point>(&o)) {
        j["point"] = point_json(*p, bits);
    } else {
        const auto& g = std::get<Line>(o);
        j["line"] = json::array({dec(g.a(), bits), dec(g.b(), bits), dec(g.c(), bits)});
    }
    return j;
}

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedTrace, what); }

Scalar num(const json& j) {
    if (!j.is_string()) malformed("expected a decimal string, got " + j.dump());
    try {
        return Scalar::parse(j.get<std::string>());
    } catch (const Error&) {
        malformed("bad decimal " + j.dump());
    }
}

Point point_from(const json& j) {
    if (!j.is_array() || j.size() != 2) malformed("expected [x, y], got " + j.dump());
    return Point{num(j[0]), num(j[1])};
}

Object object_from(const json& j) {
    if (!j.is_object()) malformed("expected a result object");
    if (j.contains("point")) return point_from(j["point"]);
    if (j.contains("line")) {
        const json& l = j["line"];
        if (!l.is_array() || l.size() != 3) malformed("expected [a, b, c], got " + l.dump());
        try {
            return Line::from_coefficients(num(l[0]), num(l[1]), num(l[2]));
        } catch (const Error& e) {
            malformed(std::string("bad line: ") + e.what());
        }
    }
    malformed("result needs \"point\" or \"line\"");
}

}  // namespace

std::string emit_svg(const ConstructionTrace& t, const SvgOptions& opts) {
    if (t.empty()) throw Error(ErrorKind::EmptyTrace, "nothing to draw");
    const View v = make_view(t, opts);
    const int height = static_cast<int>(std::lround(2 * opts.margin + (v.y1 - v.y0) * v.scale));
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opts.width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << opts.width << " " << height << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (t.sheet) {
        const double cx = t.sheet->corner.x.to_double(), cy = t.sheet->corner.y.to_double();
        const double s = t.sheet->side.to_double();
        os << "<rect class=\"sheet\" x=\"" << fmt(v.sx(cx)) << "\" y=\"" << fmt(v.sy(cy + s)) << "\" width=\""
           << fmt(s * v.scale) << "\" height=\"" << fmt(s * v.scale)
           << "\" fill=\"#fdf6e3\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    for (const auto& s : t.steps) {
        const auto* g = std::get_if<Line>(&s.result);
        double ax, ay, bx, by;
        if (!g || !clip(*g, v, ax, ay, bx, by)) continue;
        os << "<path class=\"" << (s.is_given() ? "given" : "crease") << "\" data-name=\"" << escape(s.name)
           << "\" d=\"M " << fmt(v.sx(ax)) << " " << fmt(v.sy(ay)) << " L " << fmt(v.sx(bx)) << " " << fmt(v.sy(by))
           << "\" stroke=\"" << (s.is_given() ? "black" : "#268bd2") << "\" stroke-width=\"1\" fill=\"none\""
           << (s.is_given() ? "" : " stroke-dasharray=\"6 4\"") << "/>\n";
    }
    constexpr double r = 4;
    for (const auto& s : t.steps) {
        const auto* p = std::get_if<Point>(&s.result);
        if (!p) continue;
        const double x = v.sx(p->x.to_double()), y = v.sy(p->y.to_double());
        os << "<path class=\"marker\" data-name=\"" << escape(s.name) << "\" d=\"M " << fmt(x - r) << " "
           << fmt(y - r) << " L " << fmt(x + r) << " " << fmt(y + r) << " M " << fmt(x - r) << " " << fmt(y + r)
           << " L " << fmt(x + r) << " " << fmt(y - r) << "\" stroke=\"#dc322f\" stroke-width=\"1.5\"/>\n";
    }
    if (opts.labels) {
        for (const auto& [name, lm] : t.landmarks) {
            double x, y;
            if (const auto* p = std::get_if<Point>(&lm.value)) {
                x = v.sx(p->x.to_double());
                y = v.sy(p->y.to_double());
            } else {
                double ax, ay, bx, by;
                if (!clip(std::get<Line>(lm.value), v, ax, ay, bx, by)) continue;
                x = v.sx((ax + bx) / 2);
                y = v.sy((ay + by) / 2);
            }
            os << "<text class=\"label\" x=\"" << fmt(x + 6) << "\" y=\"" << fmt(y - 6)
               << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(name) << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string emit_json(const ConstructionTrace& t) {
    const int bits = t.precision_bits;
    json j;
    j["precision_bits"] = bits;
    json steps = json::array();
    for (const auto& s : t.steps) {
        json rec;
        rec["name"] = s.name;
        rec["kind"] = s.is_point() ? "point" : "fold";
        if (s.axiom) rec["axiom"] = std::string(to_string(*s.axiom));
        rec["inputs"] = s.inputs;
        if (s.branch >= 0) rec["branch"] = s.branch;
        rec["result"] = object_json(s.result, bits);
        if (!s.note.empty()) rec["note"] = s.note;
        steps.push_back(std::move(rec));
    }
    j["steps"] = std::move(steps);
    json landmarks = json::object();
    for (const auto& [name, lm] : t.landmarks) {
        json rec = object_json(lm.value, bits);
        rec["step"] = lm.step;
        landmarks[name] = std::move(rec);
    }
    j["landmarks"] = std::move(landmarks);
    j["target"] = t.target;
    json measurements = json::object();
    for (const auto& [name, value] : t.measurements) measurements[name] = dec(value, bits);
    j["measurements"] = std::move(measurements);
    if (t.sheet) j["sheet"] = {{"corner", point_json(t.sheet->corner, bits)}, {"side", dec(t.sheet->side, bits)}};
    json frames = json::object();
    for (const auto& [name, p] : t.frames) frames[name] = point_json(p, bits);
    j["frames"] = std::move(frames);
    return j.dump(2) + "\n";
}

ConstructionTrace parse_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        malformed(e.what());
    }
    if (!j.is_object() || !j.contains("precision_bits") || !j["precision_bits"].is_number_integer() ||
        !j.contains("steps") || !j["steps"].is_array()) {
        malformed("missing precision_bits or steps");
    }
    const int bits = j["precision_bits"].get<int>();
    if (bits < 2) malformed("precision_bits out of range");
    PrecisionScope scope(bits);

    ConstructionTrace t;
    t.precision_bits = bits;
    for (const json& rec : j["steps"]) {
        if (!rec.is_object() || !rec.contains("name") || !rec["name"].is_string() || !rec.contains("result")) {
            malformed("step needs name and result: " + rec.dump());
        }
        TraceStep s;
        s.name = rec["name"].get<std::string>();
        if (rec.contains("axiom")) {
            const auto ax = rec["axiom"].is_string() ? parse_axiom(rec["axiom"].get<std::string>()) : std::nullopt;
            if (!ax) malformed("unknown axiom " + rec["axiom"].dump());
            s.axiom = *ax;
        }
        if (rec.contains("inputs")) {
            for (const json& in : rec["inputs"]) {
                if (!in.is_string()) malformed("inputs must be names");
                s.inputs.push_back(in.get<std::string>());
            }
        }
        if (rec.contains("branch")) {
            if (!rec["branch"].is_number_integer()) malformed("branch must be an integer");
            s.branch = rec["branch"].get<int>();
        }
        s.result = object_from(rec["result"]);
        if (rec.contains("kind") && rec["kind"] != (s.is_point() ? "point" : "fold")) {
            malformed("kind does not match result of " + s.name);
        }
        if (rec.contains("note") && rec["note"].is_string()) s.note = rec["note"].get<std::string>();
        try {
            t.append(std::move(s));
        } catch (const Error& e) {
            malformed(e.what());
        }
    }
    if (j.contains("landmarks")) {
        for (const auto& [name, rec] : j["landmarks"].items()) {
            if (!rec.contains("step") || !rec["step"].is_string()) malformed("landmark needs a step: " + name);
            t.landmarks[name] = Landmark{rec["step"].get<std::string>(), object_from(rec)};
        }
    }
    if (j.contains("target") && j["target"].is_string()) t.target = j["target"].get<std::string>();
    if (j.contains("measurements")) {
        for (const auto& [name, v] : j["measurements"].items()) t.measurements[name] = num(v);
    }
    if (j.contains("sheet")) {
        const json& s = j["sheet"];
        if (!s.contains("corner") || !s.contains("side")) malformed("sheet needs corner and side");
        t.sheet = Sheet{point_from(s["corner"]), num(s["side"])};
    }
    if (j.contains("frames")) {
        for (const auto& [name, p] : j["frames"].items()) t.frames[name] = point_from(p);
    }
    return t;
}

}  // namespace origami
