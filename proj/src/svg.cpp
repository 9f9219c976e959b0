#include "dsirr/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "dsirr/csv.hpp"

namespace dsirr {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#17becf"};
constexpr int kMarginLeft = 72;
constexpr int kMarginRight = 24;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 52;

std::string fmt_tick(double v) {
    // short tick labels: up to 6 significant digits
    char buf[32];
    const int n = std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::string(buf, buf + n);
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad() {
        if (!(hi > lo)) {
            lo -= 0.5;
            hi += 0.5;
        } else {
            const double m = 0.04 * (hi - lo);
            lo -= m;
            hi += m;
        }
    }
};

std::vector<double> linear_ticks(double lo, double hi, int target) {
    const double span = hi - lo;
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double mult : {1.0, 2.0, 5.0, 10.0}) {
        if (mag * mult >= raw) {
            step = mag * mult;
            break;
        }
    }
    std::vector<double> ticks;
    double v = std::ceil(lo / step) * step;
    for (; v <= hi + 0.5 * step; v += step) {
        double snapped = v;
        if (std::abs(snapped) < 1e-12 * step) snapped = 0.0;
        ticks.push_back(snapped);
    }
    return ticks;
}

}  // namespace

std::string render_line_chart(const std::vector<SvgSeries>& series,
                              const SvgOptions& opt) {
    if (series.empty())
        throw std::invalid_argument("render_line_chart: no series");

    Range rx, ry;
    for (const auto& s : series) {
        if (s.x.size() != s.y.size())
            throw std::invalid_argument(
                "render_line_chart: x/y size mismatch");
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            if (opt.log_y && !(s.y[i] > 0.0)) continue;
            rx.add(s.x[i]);
            ry.add(opt.log_y ? std::log10(s.y[i]) : s.y[i]);
        }
    }
    if (!std::isfinite(rx.lo) || !std::isfinite(ry.lo))
        throw std::invalid_argument("render_line_chart: no plottable points");
    rx.pad();
    ry.pad();

    const double px0 = kMarginLeft, px1 = opt.width - kMarginRight;
    const double py0 = opt.height - kMarginBottom, py1 = kMarginTop;
    auto sx = [&](double x) {
        return px0 + (x - rx.lo) / (rx.hi - rx.lo) * (px1 - px0);
    };
    auto sy = [&](double y) {
        return py0 + (y - ry.lo) / (ry.hi - ry.lo) * (py1 - py0);
    };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           format_int(opt.width) + "\" height=\"" + format_int(opt.height) +
           "\" viewBox=\"0 0 " + format_int(opt.width) + " " +
           format_int(opt.height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // grid and ticks
    out += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333\">\n";
    for (double t : linear_ticks(rx.lo, rx.hi, 8)) {
        const double X = sx(t);
        out += "<line x1=\"" + fmt_tick(X) + "\" y1=\"" + fmt_tick(py0) +
               "\" x2=\"" + fmt_tick(X) + "\" y2=\"" + fmt_tick(py1) +
               "\" stroke=\"#e0e0e0\"/>\n";
        out += "<text x=\"" + fmt_tick(X) + "\" y=\"" + fmt_tick(py0 + 18) +
               "\" text-anchor=\"middle\">" + fmt_tick(t) + "</text>\n";
    }
    for (double t : linear_ticks(ry.lo, ry.hi, 7)) {
        const double Y = sy(t);
        out += "<line x1=\"" + fmt_tick(px0) + "\" y1=\"" + fmt_tick(Y) +
               "\" x2=\"" + fmt_tick(px1) + "\" y2=\"" + fmt_tick(Y) +
               "\" stroke=\"#e0e0e0\"/>\n";
        const std::string label =
            opt.log_y ? ("1e" + fmt_tick(t)) : fmt_tick(t);
        out += "<text x=\"" + fmt_tick(px0 - 8) + "\" y=\"" +
               fmt_tick(Y + 4) + "\" text-anchor=\"end\">" + label +
               "</text>\n";
    }
    out += "</g>\n";

    // frame
    out += "<rect x=\"" + fmt_tick(px0) + "\" y=\"" + fmt_tick(py1) +
           "\" width=\"" + fmt_tick(px1 - px0) + "\" height=\"" +
           fmt_tick(py0 - py1) + "\" fill=\"none\" stroke=\"#333\"/>\n";

    // series
    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        const char* color = kPalette[si % (sizeof(kPalette) / sizeof(char*))];
        std::string pts;
        bool pen_down = false;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            const bool ok = std::isfinite(s.x[i]) && std::isfinite(s.y[i]) &&
                            (!opt.log_y || s.y[i] > 0.0);
            if (!ok) {
                if (pen_down) {
                    out += "<polyline fill=\"none\" stroke=\"" +
                           std::string(color) +
                           "\" stroke-width=\"1.6\" points=\"" + pts +
                           "\"/>\n";
                    pts.clear();
                    pen_down = false;
                }
                continue;
            }
            const double y = opt.log_y ? std::log10(s.y[i]) : s.y[i];
            if (!pts.empty()) pts += ' ';
            pts += fmt_tick(sx(s.x[i])) + "," + fmt_tick(sy(y));
            pen_down = true;
        }
        if (pen_down)
            out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
                   "\" stroke-width=\"1.6\" points=\"" + pts + "\"/>\n";
    }

    // legend
    out += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    double ly = py1 + 14;
    for (std::size_t si = 0; si < series.size(); ++si) {
        if (series[si].label.empty()) continue;
        const char* color = kPalette[si % (sizeof(kPalette) / sizeof(char*))];
        out += "<line x1=\"" + fmt_tick(px0 + 10) + "\" y1=\"" +
               fmt_tick(ly - 4) + "\" x2=\"" + fmt_tick(px0 + 34) +
               "\" y2=\"" + fmt_tick(ly - 4) + "\" stroke=\"" +
               std::string(color) + "\" stroke-width=\"2\"/>\n";
        out += "<text x=\"" + fmt_tick(px0 + 40) + "\" y=\"" + fmt_tick(ly) +
               "\" fill=\"#333\">" + series[si].label + "</text>\n";
        ly += 16;
    }
    out += "</g>\n";

    // title and axis labels
    if (!opt.title.empty())
        out += "<text x=\"" + fmt_tick(0.5 * (px0 + px1)) + "\" y=\"24\" "
               "font-family=\"sans-serif\" font-size=\"15\" "
               "text-anchor=\"middle\" fill=\"#111\">" +
               opt.title + "</text>\n";
    if (!opt.x_label.empty())
        out += "<text x=\"" + fmt_tick(0.5 * (px0 + px1)) + "\" y=\"" +
               fmt_tick(opt.height - 12) +
               "\" font-family=\"sans-serif\" font-size=\"13\" "
               "text-anchor=\"middle\" fill=\"#111\">" +
               opt.x_label + "</text>\n";
    if (!opt.y_label.empty())
        out += "<text x=\"18\" y=\"" + fmt_tick(0.5 * (py0 + py1)) +
               "\" font-family=\"sans-serif\" font-size=\"13\" "
               "text-anchor=\"middle\" fill=\"#111\" transform=\"rotate(-90 "
               "18 " + fmt_tick(0.5 * (py0 + py1)) + ")\">" +
               opt.y_label + "</text>\n";

    out += "</svg>\n";
    return out;
}

void write_line_chart(const std::string& path,
                      const std::vector<SvgSeries>& series,
                      const SvgOptions& opt) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    const std::string text = render_line_chart(series, opt);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace dsirr
