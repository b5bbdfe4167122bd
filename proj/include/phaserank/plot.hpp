#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "phaserank/detvec.hpp"

namespace phaserank::plot {

inline constexpr int kViewport = 800;

/// A square raster over [0, 2pi)^2; cell (i, j) is value[j * resolution + i],
/// drawn with i to the right and j upward.
struct RasterPanel {
    std::string title;
    std::size_t resolution = 0;
    std::vector<std::uint8_t> values;
};

struct RasterStyle {
    std::vector<std::string> colors;  // fill per value
    std::vector<std::string> labels;  // legend text per value
    std::string x_label;
    std::string y_label;
};

/// One or more panels tiled in a square grid inside the 800x800 viewport.
/// Horizontal runs of equal cells are merged into single rectangles.
std::string raster_svg(const std::vector<RasterPanel>& panels, const RasterStyle& style);

/// Unit circle, monomial points with multiplicities, hull polygon, origin marker.
std::string hull_svg(const HullPlotData& data, const std::string& title);

}  // namespace phaserank::plot
