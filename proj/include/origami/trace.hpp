#pragma once

// A construction as an ordered, replayable list of axiom invocations over
// named objects, plus named landmarks and scalar measurements read off them.

#include "origami/axioms.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace origami {

struct TraceStep {
    std::string name;
    /// Empty for objects given by the start configuration.
    std::optional<Axiom> axiom;
    std::vector<std::string> inputs;
    /// Position among the invocation's solutions; -1 for single-valued ops.
    int branch = -1;
    Object result;
    /// Free-form provenance (frame changes, figure-dependent choices).
    std::string note;

    bool is_given() const { return !axiom.has_value(); }
    bool is_point() const { return std::holds_alternative<Point>(result); }
};

struct Landmark {
    /// Step whose result the landmark names.
    std::string step;
    Object value;
};

/// Square sheet with lower-left corner and side length, for rendering.
struct Sheet {
    Point corner;
    Scalar side;
};

struct StartConfig {
    Scalar side = Scalar(1);
};

class ConstructionTrace {
public:
    ConstructionTrace();

    int precision_bits;
    std::vector<TraceStep> steps;
    std::map<std::string, Landmark> landmarks;
    std::map<std::string, Scalar> measurements;
    std::map<std::string, Point> frames;
    std::optional<Sheet> sheet;
    std::string target;

    bool empty() const { return steps.empty(); }
    bool has(const std::string& name) const;
    const TraceStep& step(const std::string& name) const;
    const Object& object(const std::string& name) const;
    /// Throw TypeMismatch if the name refers to the other kind.
    const Point& point(const std::string& name) const;
    const Line& line(const std::string& name) const;

    const Point& given(const std::string& name, Point p);
    const Line& given(const std::string& name, Line g);

    /// Runs a fold axiom over named inputs. With several solutions, `branch`
    /// is mandatory and must be in range (BranchUnavailable otherwise).
    const Line& fold(const std::string& name, Axiom axiom, const std::vector<std::string>& inputs,
                     std::optional<int> branch = std::nullopt);
    /// As fold(), picking the unique solution that satisfies `pick`. Throws
    /// BranchUnavailable if none or several do.
    const Line& fold_where(const std::string& name, Axiom axiom, const std::vector<std::string>& inputs,
                           const std::function<bool(const Line&)>& pick, const std::string& note = "");
    /// O1. Throws DegenerateConfiguration for parallel lines.
    const Point& intersect(const std::string& name, const std::string& g, const std::string& h);
    /// Image of `point` under `crease`, located on `on_line`: O1(on_line, LOT(crease, point)).
    /// Adds the helper perpendicular as `name + "_lot"`.
    const Point& image_on(const std::string& name, const std::string& point, const std::string& crease,
                          const std::string& on_line);

    void landmark(const std::string& name, const std::string& step_name);
    void landmark(const std::string& name) { landmark(name, name); }
    void measure(const std::string& name, Scalar value);
    void annotate(const std::string& step_name, const std::string& note);

    /// Records a step verbatim, as when loading a serialized trace. Throws
    /// DuplicateName if the name is taken.
    void append(TraceStep s) { add(std::move(s)); }

    /// Solutions an invocation would offer, without recording anything.
    std::vector<Fold> candidates(Axiom axiom, const std::vector<std::string>& inputs) const;

private:
    void add(TraceStep s);
    std::map<std::string, std::size_t> index_;
};

/// A, B, C, D counter-clockwise from the origin, and the edges AB, BC, CD, DA.
void add_start_square(ConstructionTrace& trace, const StartConfig& start);

/// Re-executes every step from its inputs at the trace's precision.
ConstructionTrace replay(const ConstructionTrace& trace);

/// Max deviation between corresponding step results and landmarks of two traces
/// with identical structure. Throws MalformedTrace on structural mismatch.
Scalar max_deviation(const ConstructionTrace& a, const ConstructionTrace& b);
bool identical_results(const ConstructionTrace& a, const ConstructionTrace& b);

/// Every step is given or one of O1-O6/LOT over earlier names with operand kinds
/// matching the axiom and branch in range. Returns a diagnostic on failure.
std::optional<std::string> axiom_purity_violation(const ConstructionTrace& trace);

}  // namespace origami
