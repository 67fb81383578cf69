#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chroma/geometry.hpp"

namespace chroma {

/// Renders a planar point set with colored segments as SVG. The output is a
/// pure function of the inputs (coordinates are scaled with exact rational
/// arithmetic and printed with fixed precision). Palette: 1 red, 2 blue,
/// 3 green, 4 orange, then an HSL rotation.
std::string render_svg(const PointSet& s,
                       const std::vector<std::pair<std::pair<int, int>, int>>& colored_edges);

std::string svg_color(int color_index);

} // namespace chroma
