#pragma once

#include <string>

#include "flatspin/surface.hpp"

namespace flatspin {

struct SvgOptions {
    long precision_bits = 53;
    bool labels = false;
};

// Deterministic SVG figure: polygons as paths, glued edge pairs stroked in
// the same color (derived from the gluing index), optional vertex labels.
std::string surface_to_svg(const TranslationSurface& s, const SvgOptions& opts = {});

} // namespace flatspin
