#pragma once

#include "geomrep/arrangement.hpp"
#include "geomrep/verify.hpp"

#include <string>

namespace geomrep {

struct SvgStyle {
    int width = 800;
    int height = 800;
    int margin = 48;
};

/// Deterministic SVG of a planar line arrangement; cell representatives are
/// drawn as point marks. Rationals are rendered at 6 decimals, display only.
std::string render_arrangement_svg(const HyperplaneArrangement& a, const SvgStyle& style = {});

/// Wiring diagrams render as wire polylines over the swap sequence.
std::string render_wiring_svg(const WiringDiagram& w, const SvgStyle& style = {});

/// Points with labels plus shapes (halfplane boundaries, circles, ellipse
/// outlines, polygons).
std::string render_representation_svg(const Representation& r, const SvgStyle& style = {});

}  // namespace geomrep
