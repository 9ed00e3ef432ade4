#pragma once

#include <string>
#include <vector>

namespace murmur::cli {

struct SvgTrace {
    std::string label;
    std::string color;
    const std::vector<double>* y = nullptr;
};

/// Minimal line plot: axes with ticks, a zero line, and one polyline per
/// trace. Written as standalone SVG so diffs stay meaningful.
void write_svg_plot(const std::string& path, const std::vector<double>& x,
                    const std::vector<SvgTrace>& traces, const std::string& x_label);

}  // namespace murmur::cli
