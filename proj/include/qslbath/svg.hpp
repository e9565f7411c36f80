// svg.hpp — minimal line-plot emitter. Output is a pure function of the
// table; CSV stays the authoritative record.

#pragma once

#include "qslbath/table.hpp"

#include <span>
#include <string>

namespace qslbath {

struct PlotOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    int width = 760;
    int height = 500;
};

std::string svg_line_plot(const ResultTable& table, const std::string& x_column,
                          std::span<const std::string> y_columns, const PlotOptions& options);

}  // namespace qslbath
