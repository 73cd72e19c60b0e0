#include "ntopo/svg.hpp"

#include <algorithm>
#include <cmath>

#include "ntopo/common.hpp"

namespace ntopo {

namespace {

constexpr double kWidth = 900.0;
constexpr double kPanelHeight = 220.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 36.0;
constexpr double kMarginBottom = 30.0;

std::string num(double v) { return fmt_double_short(v); }

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const SvgChart& chart) {
    const size_t n_panels = chart.panels.size();
    const double height = kMarginTop + n_panels * kPanelHeight + kMarginBottom;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
           num(height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + num(kWidth / 2) + "\" y=\"20\" text-anchor=\"middle\" font-size=\"15\">" +
           escape(chart.title) + "</text>\n";

    for (size_t p = 0; p < n_panels; ++p) {
        const auto& panel = chart.panels[p];
        const double top = kMarginTop + p * kPanelHeight + 24.0;
        const double bottom = kMarginTop + (p + 1) * kPanelHeight - 18.0;
        const double left = kMarginLeft;
        const double right = kWidth - kMarginRight;

        double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
        bool have = false;
        for (const auto& s : panel.series)
            for (size_t i = 0; i < s.x.size(); ++i) {
                if (!have) {
                    xmin = xmax = s.x[i];
                    ymin = ymax = s.y[i];
                    have = true;
                } else {
                    xmin = std::min(xmin, s.x[i]);
                    xmax = std::max(xmax, s.x[i]);
                    ymin = std::min(ymin, s.y[i]);
                    ymax = std::max(ymax, s.y[i]);
                }
            }
        if (xmax == xmin) xmax = xmin + 1;
        if (ymax == ymin) ymax = ymin + 1;

        auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * (right - left); };
        auto sy = [&](double y) { return bottom - (y - ymin) / (ymax - ymin) * (bottom - top); };

        out += "<text x=\"" + num(left) + "\" y=\"" + num(top - 8) + "\">" + escape(panel.title) +
               "</text>\n";
        out += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(right - left) +
               "\" height=\"" + num(bottom - top) + "\" fill=\"none\" stroke=\"#999\"/>\n";
        out += "<text x=\"" + num(left - 6) + "\" y=\"" + num(bottom) +
               "\" text-anchor=\"end\">" + num(ymin) + "</text>\n";
        out += "<text x=\"" + num(left - 6) + "\" y=\"" + num(top + 10) +
               "\" text-anchor=\"end\">" + num(ymax) + "</text>\n";
        out += "<text x=\"" + num(left) + "\" y=\"" + num(bottom + 14) + "\">" + num(xmin) +
               "</text>\n";
        out += "<text x=\"" + num(right) + "\" y=\"" + num(bottom + 14) +
               "\" text-anchor=\"end\">" + num(xmax) + "</text>\n";

        if (ymin < 0 && ymax > 0)
            out += "<line x1=\"" + num(left) + "\" y1=\"" + num(sy(0)) + "\" x2=\"" + num(right) +
                   "\" y2=\"" + num(sy(0)) + "\" stroke=\"#ddd\"/>\n";

        if (chart.marker_x && *chart.marker_x >= xmin && *chart.marker_x <= xmax)
            out += "<line x1=\"" + num(sx(*chart.marker_x)) + "\" y1=\"" + num(top) + "\" x2=\"" +
                   num(sx(*chart.marker_x)) + "\" y2=\"" + num(bottom) +
                   "\" stroke=\"#c33\" stroke-dasharray=\"5,4\" class=\"event-marker\"/>\n";

        double legend_x = left + 8;
        for (const auto& s : panel.series) {
            if (s.x.empty()) continue;
            out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\" points=\"";
            for (size_t i = 0; i < s.x.size(); ++i) {
                if (i) out += ' ';
                out += num(sx(s.x[i])) + "," + num(sy(s.y[i]));
            }
            out += "\"/>\n";
            out += "<text x=\"" + num(legend_x) + "\" y=\"" + num(top + 12) + "\" fill=\"" + s.color +
                   "\">" + escape(s.name) + "</text>\n";
            legend_x += 120;
        }
    }

    out += "<text x=\"" + num(kWidth / 2) + "\" y=\"" + num(height - 8) +
           "\" text-anchor=\"middle\">" + escape(chart.x_label) + "</text>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace ntopo
