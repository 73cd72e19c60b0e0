#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ntopo {

// Minimal deterministic SVG line charts: fixed canvas, %.6g coordinates,
// no timestamps, so identical inputs give identical bytes.
struct SvgSeries {
    std::string name;
    std::string color;
    std::vector<double> x;
    std::vector<double> y;
};

struct SvgPanel {
    std::string title;
    std::vector<SvgSeries> series;
};

struct SvgChart {
    std::string title;
    std::vector<SvgPanel> panels;           // stacked vertically
    std::optional<double> marker_x;          // vertical event marker
    std::string x_label;
};

std::string render_svg(const SvgChart& chart);

}  // namespace ntopo
