#pragma once

#include <optional>
#include <string>

#include "veerkit/report.hpp"

namespace veerkit {

enum class RenderWhat { Layer, Tracks, Crowns, Rectangles };
std::optional<RenderWhat> parse_render_what(const std::string& s);

struct RenderOptions {
    RenderWhat what = RenderWhat::Layer;
    int radius = 2;   // ball grown around the root before layering
    int layer = -1;   // -1: the middle layer
};

struct Rendered {
    std::string svg;
    json summary;
};

// Draws one layer of the master continent with cusps on a parabola in
// coast order, so every face is a straight triangle.
Rendered render_svg(Session& s, const RenderOptions& opt);

} // namespace veerkit
