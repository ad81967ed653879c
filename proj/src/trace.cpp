#include "origami/trace.hpp"

#include "origami/error.hpp"

namespace origami {

ConstructionTrace::ConstructionTrace() : precision_bits(ambient_precision()) {}

bool ConstructionTrace::has(const std::string& name) const { return index_.count(name) != 0; }

const TraceStep& ConstructionTrace::step(const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) throw Error(ErrorKind::UndefinedIdentifier, "no object named '" + name + "'");
    return steps[it->second];
}

const Object& ConstructionTrace::object(const std::string& name) const { return step(name).result; }

const Point& ConstructionTrace::point(const std::string& name) const {
    const Object& o = object(name);
    if (!std::holds_alternative<Point>(o)) throw Error(ErrorKind::TypeMismatch, "'" + name + "' is a line, not a point");
    return std::get<Point>(o);
}

const Line& ConstructionTrace::line(const std::string& name) const {
    const Object& o = object(name);
    if (!std::holds_alternative<Line>(o)) throw Error(ErrorKind::TypeMismatch, "'" + name + "' is a point, not a line");
    return std::get<Line>(o);
}

void ConstructionTrace::add(TraceStep s) {
    if (has(s.name)) throw Error(ErrorKind::DuplicateName, "'" + s.name + "' is already defined");
    index_[s.name] = steps.size();
    steps.push_back(std::move(s));
}

const Point& ConstructionTrace::given(const std::string& name, Point p) {
    add(TraceStep{name, std::nullopt, {}, -1, std::move(p), ""});
    return std::get<Point>(steps.back().result);
}

const Line& ConstructionTrace::given(const std::string& name, Line g) {
    add(TraceStep{name, std::nullopt, {}, -1, std::move(g), ""});
    return std::get<Line>(steps.back().result);
}

std::vector<Fold> ConstructionTrace::candidates(Axiom axiom, const std::vector<std::string>& inputs) const {
    std::vector<Object> args;
    for (const auto& n : inputs) args.push_back(object(n));
    return apply_axiom(axiom, args);
}

namespace {

Line pick_branch(std::vector<Fold> folds, Axiom axiom, std::optional<int> branch) {
    const int count = static_cast<int>(folds.size());
    if (count == 0) {
        throw Error(ErrorKind::BranchUnavailable, std::string(to_string(axiom)) + " has no solution here");
    }
    if (!branch) {
        if (count > 1) {
            throw Error(ErrorKind::BranchUnavailable, std::string(to_string(axiom)) + " has " +
                                                          std::to_string(count) + " solutions; choose one");
        }
        return folds[0].crease;
    }
    if (*branch < 0 || *branch >= count) {
        throw Error(ErrorKind::BranchUnavailable, "choose " + std::to_string(*branch) + " but " +
                                                      std::string(to_string(axiom)) + " has " +
                                                      std::to_string(count) + " solution(s)");
    }
    return folds[*branch].crease;
}

int recorded_branch(Axiom axiom, std::optional<int> branch) {
    if (max_solutions(axiom) == 1) return -1;
    return branch.value_or(0);
}

}  // namespace

const Line& ConstructionTrace::fold(const std::string& name, Axiom axiom, const std::vector<std::string>& inputs,
                                    std::optional<int> branch) {
    if (has(name)) throw Error(ErrorKind::DuplicateName, "'" + name + "' is already defined");
    Line crease = pick_branch(candidates(axiom, inputs), axiom, branch);
    add(TraceStep{name, axiom, inputs, recorded_branch(axiom, branch), std::move(crease), ""});
    return std::get<Line>(steps.back().result);
}

const Line& ConstructionTrace::fold_where(const std::string& name, Axiom axiom,
                                          const std::vector<std::string>& inputs,
                                          const std::function<bool(const Line&)>& pick, const std::string& note) {
    const auto folds = candidates(axiom, inputs);
    std::optional<int> chosen;
    for (std::size_t i = 0; i < folds.size(); ++i) {
        if (!pick(folds[i].crease)) continue;
        if (chosen) {
            throw Error(ErrorKind::BranchUnavailable, "several " + std::string(to_string(axiom)) +
                                                          " creases match the selection for '" + name + "'");
        }
        chosen = static_cast<int>(i);
    }
    if (!chosen) {
        throw Error(ErrorKind::BranchUnavailable,
                    "no " + std::string(to_string(axiom)) + " crease matches the selection for '" + name + "'");
    }
    const Line& out = fold(name, axiom, inputs, folds.size() > 1 ? chosen : std::nullopt);
    steps.back().branch = recorded_branch(axiom, *chosen);
    steps.back().note = note;
    return out;
}

const Point& ConstructionTrace::intersect(const std::string& name, const std::string& g, const std::string& h) {
    if (has(name)) throw Error(ErrorKind::DuplicateName, "'" + name + "' is already defined");
    auto p = fold_O1(line(g), line(h));
    if (!p) throw Error(ErrorKind::DegenerateConfiguration, "'" + g + "' and '" + h + "' are parallel");
    add(TraceStep{name, Axiom::O1, {g, h}, -1, std::move(*p), ""});
    return std::get<Point>(steps.back().result);
}

const Point& ConstructionTrace::image_on(const std::string& name, const std::string& point_name,
                                         const std::string& crease, const std::string& on_line) {
    const std::string lot = name + "_lot";
    fold(lot, Axiom::LOT, {crease, point_name});
    return intersect(name, on_line, lot);
}

void ConstructionTrace::landmark(const std::string& name, const std::string& step_name) {
    landmarks[name] = Landmark{step_name, object(step_name)};
}

void ConstructionTrace::measure(const std::string& name, Scalar value) { measurements[name] = std::move(value); }

void ConstructionTrace::annotate(const std::string& step_name, const std::string& note) {
    const auto it = index_.find(step_name);
    if (it == index_.end()) throw Error(ErrorKind::UndefinedIdentifier, "no object named '" + step_name + "'");
    steps[it->second].note = note;
}

void add_start_square(ConstructionTrace& trace, const StartConfig& start) {
    const Scalar& s = start.side;
    if (s.sign() <= 0) throw Error(ErrorKind::OutOfRange, "square side must be positive");
    trace.given("A", Point{Scalar(0), Scalar(0)});
    trace.given("B", Point{s, Scalar(0)});
    trace.given("C", Point{s, s});
    trace.given("D", Point{Scalar(0), s});
    trace.given("AB", Line::horizontal(Scalar(0)));
    trace.given("BC", Line::vertical(s));
    trace.given("CD", Line::horizontal(s));
    trace.given("DA", Line::vertical(Scalar(0)));
    trace.sheet = Sheet{Point{Scalar(0), Scalar(0)}, s};
}

ConstructionTrace replay(const ConstructionTrace& trace) {
    PrecisionScope scope(trace.precision_bits);
    ConstructionTrace out;
    out.precision_bits = trace.precision_bits;
    for (const TraceStep& s : trace.steps) {
        if (s.is_given()) {
            if (s.is_point()) out.given(s.name, std::get<Point>(s.result));
            else out.given(s.name, std::get<Line>(s.result));
        } else if (*s.axiom == Axiom::O1) {
            if (s.inputs.size() != 2) throw Error(ErrorKind::MalformedTrace, "O1 step '" + s.name + "' needs two inputs");
            out.intersect(s.name, s.inputs[0], s.inputs[1]);
        } else {
            const std::optional<int> branch = s.branch >= 0 ? std::optional<int>(s.branch) : std::nullopt;
            out.fold(s.name, *s.axiom, s.inputs, branch);
        }
        out.annotate(s.name, s.note);
    }
    for (const auto& [name, lm] : trace.landmarks) out.landmark(name, lm.step);
    out.measurements = trace.measurements;
    out.frames = trace.frames;
    out.sheet = trace.sheet;
    out.target = trace.target;
    return out;
}

namespace {

Scalar deviation(const Object& a, const Object& b) {
    if (a.index() != b.index()) throw Error(ErrorKind::MalformedTrace, "object kinds differ");
    if (std::holds_alternative<Point>(a)) {
        const Point& p = std::get<Point>(a);
        const Point& q = std::get<Point>(b);
        return max(abs(p.x - q.x), abs(p.y - q.y));
    }
    const Line& g = std::get<Line>(a);
    const Line& h = std::get<Line>(b);
    return max(abs(g.a() - h.a()), max(abs(g.b() - h.b()), abs(g.c() - h.c())));
}

bool identical(const Object& a, const Object& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<Point>(a)) {
        const Point& p = std::get<Point>(a);
        const Point& q = std::get<Point>(b);
        return p.x.identical(q.x) && p.y.identical(q.y);
    }
    const Line& g = std::get<Line>(a);
    const Line& h = std::get<Line>(b);
    return g.a().identical(h.a()) && g.b().identical(h.b()) && g.c().identical(h.c());
}

void require_same_shape(const ConstructionTrace& a, const ConstructionTrace& b) {
    if (a.steps.size() != b.steps.size() || a.landmarks.size() != b.landmarks.size()) {
        throw Error(ErrorKind::MalformedTrace, "traces differ in length");
    }
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        if (a.steps[i].name != b.steps[i].name) throw Error(ErrorKind::MalformedTrace, "step names differ");
    }
}

}  // namespace

Scalar max_deviation(const ConstructionTrace& a, const ConstructionTrace& b) {
    require_same_shape(a, b);
    Scalar worst = Scalar::zero(a.precision_bits);
    for (std::size_t i = 0; i < a.steps.size(); ++i) worst = max(worst, deviation(a.steps[i].result, b.steps[i].result));
    for (const auto& [name, lm] : a.landmarks) {
        const auto it = b.landmarks.find(name);
        if (it == b.landmarks.end()) throw Error(ErrorKind::MalformedTrace, "landmark '" + name + "' missing");
        worst = max(worst, deviation(lm.value, it->second.value));
    }
    return worst;
}

bool identical_results(const ConstructionTrace& a, const ConstructionTrace& b) {
    require_same_shape(a, b);
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        if (!identical(a.steps[i].result, b.steps[i].result)) return false;
    }
    for (const auto& [name, lm] : a.landmarks) {
        const auto it = b.landmarks.find(name);
        if (it == b.landmarks.end() || !identical(lm.value, it->second.value)) return false;
    }
    return true;
}

std::optional<std::string> axiom_purity_violation(const ConstructionTrace& trace) {
    std::map<std::string, bool> seen_is_point;
    for (const TraceStep& s : trace.steps) {
        if (s.is_given()) {
            if (!s.inputs.empty()) return "given object '" + s.name + "' has inputs";
        } else {
            const std::string_view sig = signature(*s.axiom);
            if (s.inputs.size() != sig.size()) return "step '" + s.name + "' has the wrong operand count";
            for (std::size_t i = 0; i < sig.size(); ++i) {
                const auto it = seen_is_point.find(s.inputs[i]);
                if (it == seen_is_point.end()) return "step '" + s.name + "' uses '" + s.inputs[i] + "' before it exists";
                if (it->second != (sig[i] == 'P')) return "step '" + s.name + "' has an operand of the wrong kind";
            }
            const bool yields_point = *s.axiom == Axiom::O1;
            if (yields_point != s.is_point()) return "step '" + s.name + "' has a result of the wrong kind";
            const int limit = max_solutions(*s.axiom);
            if (limit > 1 && (s.branch < 0 || s.branch >= limit)) return "step '" + s.name + "' has no valid branch";
            if (limit == 1 && s.branch > 0) return "step '" + s.name + "' selects a branch of a single-valued axiom";
        }
        if (seen_is_point.count(s.name)) return "name '" + s.name + "' is defined twice";
        seen_is_point[s.name] = s.is_point();
    }
    for (const auto& [name, lm] : trace.landmarks) {
        if (!seen_is_point.count(lm.step)) return "landmark '" + name + "' refers to unknown step '" + lm.step + "'";
    }
    return std::nullopt;
}

}  // namespace origami
