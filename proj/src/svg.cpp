#include "qslbath/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qslbath {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string trim_number(double value) {
    std::ostringstream out;
    out.precision(6);
    out << value;
    return out.str();
}

// Round limits outward to one significant tick step.
std::vector<double> tick_positions(double lo, double hi, int count) {
    std::vector<double> ticks;
    if (!(hi > lo)) {
        ticks.push_back(lo);
        return ticks;
    }
    for (int k = 0; k <= count; ++k) {
        ticks.push_back(lo + (hi - lo) * k / count);
    }
    return ticks;
}

}  // namespace

std::string svg_line_plot(const ResultTable& table, const std::string& x_column,
                          std::span<const std::string> y_columns, const PlotOptions& options) {
    table.require_rectangular();
    if (table.rows.empty()) throw std::invalid_argument("svg_line_plot: empty table");
    const std::vector<double> raw_x = table.column(x_column);
    std::vector<double> x = raw_x;
    if (options.log_x) {
        for (double& value : x) {
            if (!(value > 0.0)) {
                throw std::invalid_argument("svg_line_plot: log axis needs positive x values");
            }
            value = std::log10(value);
        }
    }

    std::vector<std::vector<double>> series;
    double y_lo = std::numeric_limits<double>::infinity();
    double y_hi = -y_lo;
    for (const std::string& name : y_columns) {
        series.push_back(table.column(name));
        for (double value : series.back()) {
            y_lo = std::min(y_lo, value);
            y_hi = std::max(y_hi, value);
        }
    }
    if (!(y_hi > y_lo)) {
        y_hi = y_lo + 1.0;
        y_lo -= 1.0;
    }
    const double x_lo = *std::min_element(x.begin(), x.end());
    const double x_hi = *std::max_element(x.begin(), x.end());

    const double margin_left = 64, margin_right = 16, margin_top = 32, margin_bottom = 48;
    const double plot_w = options.width - margin_left - margin_right;
    const double plot_h = options.height - margin_top - margin_bottom;
    const auto map_x = [&](double value) {
        return margin_left + (x_hi > x_lo ? (value - x_lo) / (x_hi - x_lo) : 0.5) * plot_w;
    };
    const auto map_y = [&](double value) {
        return margin_top + (1.0 - (value - y_lo) / (y_hi - y_lo)) * plot_h;
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
        << options.height << "\" viewBox=\"0 0 " << options.width << " " << options.height
        << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!options.title.empty()) {
        svg << "<text x=\"" << options.width / 2 << "\" y=\"20\" text-anchor=\"middle\" "
            << "font-family=\"sans-serif\" font-size=\"14\">" << options.title << "</text>\n";
    }

    svg << "<g stroke=\"#cccccc\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (double tick : tick_positions(x_lo, x_hi, 5)) {
        const double px = map_x(tick);
        svg << "<line x1=\"" << px << "\" y1=\"" << margin_top << "\" x2=\"" << px << "\" y2=\""
            << margin_top + plot_h << "\"/>\n";
        const double label = options.log_x ? std::pow(10.0, tick) : tick;
        svg << "<text x=\"" << px << "\" y=\"" << options.height - margin_bottom + 16
            << "\" text-anchor=\"middle\" stroke=\"none\" fill=\"black\">" << trim_number(label)
            << "</text>\n";
    }
    for (double tick : tick_positions(y_lo, y_hi, 5)) {
        const double py = map_y(tick);
        svg << "<line x1=\"" << margin_left << "\" y1=\"" << py << "\" x2=\""
            << margin_left + plot_w << "\" y2=\"" << py << "\"/>\n";
        svg << "<text x=\"" << margin_left - 6 << "\" y=\"" << py + 4
            << "\" text-anchor=\"end\" stroke=\"none\" fill=\"black\">" << trim_number(tick)
            << "</text>\n";
    }
    svg << "</g>\n";

    svg << "<rect x=\"" << margin_left << "\" y=\"" << margin_top << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        svg << "<polyline fill=\"none\" stroke=\"" << kPalette[s % std::size(kPalette)]
            << "\" stroke-width=\"1.6\" points=\"";
        for (std::size_t k = 0; k < x.size(); ++k) {
            svg << map_x(x[k]) << "," << map_y(series[s][k]) << " ";
        }
        svg << "\"/>\n";
    }

    // Legend in the top-right corner of the plot area.
    svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t s = 0; s < series.size(); ++s) {
        const double ly = margin_top + 16 + 16 * static_cast<double>(s);
        const double lx = margin_left + plot_w - 150;
        svg << "<line x1=\"" << lx << "\" y1=\"" << ly - 4 << "\" x2=\"" << lx + 22 << "\" y2=\""
            << ly - 4 << "\" stroke=\"" << kPalette[s % std::size(kPalette)]
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << lx + 28 << "\" y=\"" << ly << "\">" << y_columns[s] << "</text>\n";
    }
    svg << "</g>\n";

    if (!options.x_label.empty()) {
        svg << "<text x=\"" << margin_left + plot_w / 2 << "\" y=\"" << options.height - 10
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
            << options.x_label << "</text>\n";
    }
    if (!options.y_label.empty()) {
        svg << "<text x=\"14\" y=\"" << margin_top + plot_h / 2
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
            << "transform=\"rotate(-90 14 " << margin_top + plot_h / 2 << ")\">"
            << options.y_label << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace qslbath
