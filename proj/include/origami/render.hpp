#pragma once

// Crease-pattern diagrams (SVG 1.1) and the JSON interchange form of traces.

#include "origami/trace.hpp"

#include <string>

namespace origami {

struct SvgOptions {
    int width = 800;
    int margin = 40;
    bool labels = true;
};

/// Given lines solid, creases dashed, points as crosses, landmark labels when
/// enabled. The view covers the sheet and every point; y grows upward.
/// Throws EmptyTrace.
std::string emit_svg(const ConstructionTrace& trace, const SvgOptions& opts = {});

/// Numbers are decimal strings with precision_bits/3 significant digits.
std::string emit_json(const ConstructionTrace& trace);
/// Inverse of emit_json. Throws MalformedTrace.
ConstructionTrace parse_json(const std::string& text);

}  // namespace origami
