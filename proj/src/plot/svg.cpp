#include "phaserank/plot.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace phaserank::plot {

namespace {

const char* const kTickLabels[5] = {"0", "&#960;/2", "&#960;", "3&#960;/2", "2&#960;"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s(buf);
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s == "-0" ? "0" : s;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

void header(std::ostringstream& o) {
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kViewport << "\" height=\"" << kViewport
      << "\" viewBox=\"0 0 " << kViewport << ' ' << kViewport << "\">\n";
    o << "<rect x=\"0\" y=\"0\" width=\"" << kViewport << "\" height=\"" << kViewport << "\" fill=\"white\"/>\n";
}

void panel(std::ostringstream& o, const RasterPanel& p, const RasterStyle& style, double x0, double y0, double size) {
    const double inset = size * 0.12;
    const double plot = size - 1.5 * inset;
    const double left = x0 + inset, top = y0 + 0.5 * inset;
    const double cell = plot / static_cast<double>(p.resolution);
    o << "<g>\n";
    o << "<text x=\"" << num(left + plot / 2) << "\" y=\"" << num(top - 6) << "\" font-size=\"" << num(size / 30)
      << "\" text-anchor=\"middle\">" << escape(p.title) << "</text>\n";
    for (std::size_t j = 0; j < p.resolution; ++j) {
        const double y = top + static_cast<double>(p.resolution - 1 - j) * cell;
        std::size_t i = 0;
        while (i < p.resolution) {
            const std::uint8_t v = p.values[j * p.resolution + i];
            std::size_t end = i + 1;
            while (end < p.resolution && p.values[j * p.resolution + end] == v) ++end;
            const std::string& color = v < style.colors.size() ? style.colors[v] : style.colors.back();
            o << "<rect x=\"" << num(left + static_cast<double>(i) * cell) << "\" y=\"" << num(y) << "\" width=\""
              << num(static_cast<double>(end - i) * cell) << "\" height=\"" << num(cell) << "\" fill=\"" << color
              << "\" shape-rendering=\"crispEdges\"/>\n";
            i = end;
        }
    }
    o << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(plot) << "\" height=\""
      << num(plot) << "\" fill=\"none\" stroke=\"black\"/>\n";
    const double fs = size / 40;
    for (int k = 0; k <= 4; ++k) {
        const double x = left + plot * k / 4.0;
        const double y = top + plot - plot * k / 4.0;
        o << "<line x1=\"" << num(x) << "\" y1=\"" << num(top + plot) << "\" x2=\"" << num(x) << "\" y2=\""
          << num(top + plot + 5) << "\" stroke=\"black\"/>\n";
        o << "<text x=\"" << num(x) << "\" y=\"" << num(top + plot + 5 + fs) << "\" font-size=\"" << num(fs)
          << "\" text-anchor=\"middle\">" << kTickLabels[k] << "</text>\n";
        o << "<line x1=\"" << num(left - 5) << "\" y1=\"" << num(y) << "\" x2=\"" << num(left) << "\" y2=\"" << num(y)
          << "\" stroke=\"black\"/>\n";
        o << "<text x=\"" << num(left - 8) << "\" y=\"" << num(y + fs / 3) << "\" font-size=\"" << num(fs)
          << "\" text-anchor=\"end\">" << kTickLabels[k] << "</text>\n";
    }
    o << "<text x=\"" << num(left + plot / 2) << "\" y=\"" << num(top + plot + 2.4 * fs + 4) << "\" font-size=\""
      << num(fs) << "\" text-anchor=\"middle\">" << escape(style.x_label) << "</text>\n";
    o << "<text x=\"" << num(x0 + fs) << "\" y=\"" << num(top + plot / 2) << "\" font-size=\"" << num(fs)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 " << num(x0 + fs) << ' ' << num(top + plot / 2) << ")\">"
      << escape(style.y_label) << "</text>\n";
    o << "</g>\n";
}

}  // namespace

std::string raster_svg(const std::vector<RasterPanel>& panels, const RasterStyle& style) {
    std::ostringstream o;
    header(o);
    std::size_t side = 1;
    while (side * side < panels.size()) ++side;
    const double legend_h = 30.0;
    const double size = (kViewport - legend_h) / static_cast<double>(side);
    for (std::size_t k = 0; k < panels.size(); ++k) {
        panel(o, panels[k], style, static_cast<double>(k % side) * size, static_cast<double>(k / side) * size, size);
    }
    double x = 20.0;
    for (std::size_t v = 0; v < style.labels.size() && v < style.colors.size(); ++v) {
        o << "<rect x=\"" << num(x) << "\" y=\"" << kViewport - 22 << "\" width=\"14\" height=\"14\" fill=\""
          << style.colors[v] << "\" stroke=\"black\"/>\n";
        o << "<text x=\"" << num(x + 20) << "\" y=\"" << kViewport - 10 << "\" font-size=\"14\">"
          << escape(style.labels[v]) << "</text>\n";
        x += 40.0 + 8.0 * static_cast<double>(style.labels[v].size());
    }
    o << "</svg>\n";
    return o.str();
}

std::string hull_svg(const HullPlotData& data, const std::string& title) {
    std::ostringstream o;
    header(o);
    const double c = kViewport / 2.0, r = kViewport * 0.38;
    auto px = [&](double x) { return num(c + r * x); };
    auto py = [&](double y) { return num(c - r * y); };
    o << "<text x=\"" << num(c) << "\" y=\"30\" font-size=\"20\" text-anchor=\"middle\">" << escape(title)
      << "</text>\n";
    o << "<line x1=\"" << px(-1.15) << "\" y1=\"" << py(0) << "\" x2=\"" << px(1.15) << "\" y2=\"" << py(0)
      << "\" stroke=\"#bbbbbb\"/>\n";
    o << "<line x1=\"" << px(0) << "\" y1=\"" << py(-1.15) << "\" x2=\"" << px(0) << "\" y2=\"" << py(1.15)
      << "\" stroke=\"#bbbbbb\"/>\n";
    o << "<circle cx=\"" << num(c) << "\" cy=\"" << num(c) << "\" r=\"" << num(r)
      << "\" fill=\"none\" stroke=\"#888888\"/>\n";
    if (data.hull_cycle.size() >= 2) {
        o << "<polygon points=\"";
        for (std::size_t k = 0; k < data.hull_cycle.size(); ++k) {
            const auto& p = data.points[data.hull_cycle[k]].point;
            o << (k ? " " : "") << px(p.real()) << ',' << py(p.imag());
        }
        o << "\" fill=\"#1f2a44\" fill-opacity=\"0.25\" stroke=\"#1f2a44\" stroke-width=\"2\"/>\n";
    }
    for (const auto& p : data.points) {
        o << "<circle cx=\"" << px(p.point.real()) << "\" cy=\"" << py(p.point.imag()) << "\" r=\"7\" fill=\""
          << (p.is_hull_vertex ? "#1f2a44" : "#e8ecf4") << "\" stroke=\"black\"/>\n";
        if (p.multiplicity > 1) {
            o << "<text x=\"" << px(1.1 * p.point.real()) << "\" y=\"" << py(1.1 * p.point.imag())
              << "\" font-size=\"16\" text-anchor=\"middle\">&#215;" << p.multiplicity << "</text>\n";
        }
    }
    o << "<path d=\"M " << num(c - 8) << ' ' << num(c) << " L " << num(c + 8) << ' ' << num(c) << " M " << num(c)
      << ' ' << num(c - 8) << " L " << num(c) << ' ' << num(c + 8) << "\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";
    o << "</svg>\n";
    return o.str();
}

}  // namespace phaserank::plot
