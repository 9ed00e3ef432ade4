#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace murmur::cli {

namespace {
constexpr double kW = 960, kH = 480;
constexpr double kL = 70, kR = 20, kT = 20, kB = 50;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}
}  // namespace

void write_svg_plot(const std::string& path, const std::vector<double>& x,
                    const std::vector<SvgTrace>& traces, const std::string& x_label) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_svg_plot: cannot open " + path);

    double xmin = x.empty() ? 0 : x.front(), xmax = x.empty() ? 1 : x.back();
    double ymin = 0.0, ymax = 0.0;
    for (const auto& t : traces)
        for (double v : *t.y) {
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    if (ymax - ymin < 1e-12) { ymax += 1.0; ymin -= 1.0; }
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;

    auto px = [&](double v) { return kL + (v - xmin) / (xmax - xmin) * (kW - kL - kR); };
    auto py = [&](double v) { return kT + (ymax - v) / (ymax - ymin) * (kH - kT - kB); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
        << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    out << "<line x1=\"" << kL << "\" y1=\"" << kT << "\" x2=\"" << kL << "\" y2=\""
        << kH - kB << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << kL << "\" y1=\"" << kH - kB << "\" x2=\"" << kW - kR
        << "\" y2=\"" << kH - kB << "\" stroke=\"black\"/>\n";
    if (ymin < 0.0 && ymax > 0.0)
        out << "<line x1=\"" << kL << "\" y1=\"" << py(0) << "\" x2=\"" << kW - kR
            << "\" y2=\"" << py(0) << "\" stroke=\"#cccccc\" stroke-dasharray=\"4 3\"/>\n";
    // ticks
    for (int i = 0; i <= 5; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 5.0;
        out << "<line x1=\"" << px(xv) << "\" y1=\"" << kH - kB << "\" x2=\"" << px(xv)
            << "\" y2=\"" << kH - kB + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << px(xv) << "\" y=\"" << kH - kB + 20
            << "\" font-size=\"12\" text-anchor=\"middle\">" << fmt(xv) << "</text>\n";
        const double yv = ymin + (ymax - ymin) * i / 5.0;
        out << "<line x1=\"" << kL - 5 << "\" y1=\"" << py(yv) << "\" x2=\"" << kL
            << "\" y2=\"" << py(yv) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << kL - 8 << "\" y=\"" << py(yv) + 4
            << "\" font-size=\"12\" text-anchor=\"end\">" << fmt(yv) << "</text>\n";
    }
    out << "<text x=\"" << (kL + kW - kR) / 2 << "\" y=\"" << kH - 12
        << "\" font-size=\"13\" text-anchor=\"middle\">" << x_label << "</text>\n";
    // traces
    for (const auto& t : traces) {
        out << "<polyline fill=\"none\" stroke=\"" << t.color
            << "\" stroke-width=\"1.2\" points=\"";
        for (std::size_t i = 0; i < x.size() && i < t.y->size(); ++i)
            out << fmt(px(x[i])) << "," << fmt(py((*t.y)[i])) << " ";
        out << "\"/>\n";
    }
    // legend
    double ly = kT + 14;
    for (const auto& t : traces) {
        out << "<line x1=\"" << kW - kR - 150 << "\" y1=\"" << ly << "\" x2=\""
            << kW - kR - 120 << "\" y2=\"" << ly << "\" stroke=\"" << t.color
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << kW - kR - 112 << "\" y=\"" << ly + 4
            << "\" font-size=\"12\">" << t.label << "</text>\n";
        ly += 18;
    }
    out << "</svg>\n";
}

}  // namespace murmur::cli
