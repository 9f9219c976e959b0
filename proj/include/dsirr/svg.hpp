#pragma once
// Self-contained line charts as plain SVG, for quick visual inspection of CSV
// output without a plotting stack. Output is deterministic.

#include <string>
#include <vector>

namespace dsirr {

struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct SvgOptions {
    int width = 900;
    int height = 560;
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_y = false;  // decimal log scale; requires strictly positive y
};

std::string render_line_chart(const std::vector<SvgSeries>& series,
                              const SvgOptions& opt);

void write_line_chart(const std::string& path,
                      const std::vector<SvgSeries>& series,
                      const SvgOptions& opt);

}  // namespace dsirr
