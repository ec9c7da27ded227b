#include "fduffing/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fduffing/verification.hpp"

namespace fduffing {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 160.0;  // legend column
constexpr double kTop = 50.0;
constexpr double kBottom = 70.0;

constexpr std::array<const char*, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c",
                                                 "#ff7f0e", "#9467bd", "#8c564b"};

std::string num(double v, int precision) {
    if (std::abs(v) < 1e-12) v = 0.0;  // no "-0"
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision);
    return std::string(buf, res.ptr);
}

std::string coord(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
    return std::string(buf, res.ptr);
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

double nice_number(double range, bool round) {
    const double exponent = std::floor(std::log10(range));
    const double fraction = range / std::pow(10.0, exponent);
    double nice;
    if (round) {
        nice = fraction < 1.5 ? 1.0 : fraction < 3.0 ? 2.0 : fraction < 7.0 ? 5.0 : 10.0;
    } else {
        nice = fraction <= 1.0 ? 1.0 : fraction <= 2.0 ? 2.0 : fraction <= 5.0 ? 5.0 : 10.0;
    }
    return nice * std::pow(10.0, exponent);
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void include(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void widen_if_flat() {
        if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
            lo -= 1.0;
            hi += 1.0;
        }
    }
};

}  // namespace

std::vector<double> nice_ticks(double lo, double hi, int target) {
    const double range = nice_number(hi - lo, false);
    const double spacing = nice_number(range / std::max(1, target - 1), true);
    const double first = std::ceil(lo / spacing - 1e-9) * spacing;
    std::vector<double> ticks;
    for (int i = 0;; ++i) {
        const double v = first + i * spacing;
        if (v > hi + 1e-9 * spacing) break;
        ticks.push_back(v);
    }
    return ticks;
}

std::string render_svg(const PlotFrame& frame, std::span<const PlotSeries> series) {
    Range xr;
    Range yr;
    std::size_t points = 0;
    for (const auto& s : series) {
        if (s.xs.size() != s.ys.size()) {
            throw std::invalid_argument("plot series '" + s.label + "' has mismatched lengths");
        }
        for (std::size_t i = 0; i < s.xs.size(); ++i) {
            xr.include(s.xs[i]);
            yr.include(s.ys[i]);
        }
        points += s.xs.size();
    }
    if (series.empty() || points == 0 || !std::isfinite(xr.lo) || !std::isfinite(yr.lo)) {
        throw std::invalid_argument("nothing to plot");
    }
    xr.widen_if_flat();
    yr.widen_if_flat();

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
    const auto py = [&](double y) { return kTop + plot_h - (y - yr.lo) / (yr.hi - yr.lo) * plot_h; };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"600\" "
           "viewBox=\"0 0 800 600\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    svg += "<text x=\"" + coord(kLeft + plot_w / 2) + "\" y=\"30\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"18\">" + escape(frame.title) + "</text>\n";

    // Axes box and ticks.
    svg += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
    svg += "<rect x=\"" + coord(kLeft) + "\" y=\"" + coord(kTop) + "\" width=\"" + coord(plot_w) +
           "\" height=\"" + coord(plot_h) + "\"/>\n";
    const auto xticks = nice_ticks(xr.lo, xr.hi);
    const auto yticks = nice_ticks(yr.lo, yr.hi);
    for (double t : xticks) {
        const std::string x = coord(px(t));
        svg += "<line x1=\"" + x + "\" y1=\"" + coord(kTop + plot_h) + "\" x2=\"" + x +
               "\" y2=\"" + coord(kTop + plot_h + 6) + "\"/>\n";
    }
    for (double t : yticks) {
        const std::string y = coord(py(t));
        svg += "<line x1=\"" + coord(kLeft - 6) + "\" y1=\"" + y + "\" x2=\"" + coord(kLeft) +
               "\" y2=\"" + y + "\"/>\n";
    }
    svg += "</g>\n";

    svg += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
    for (double t : xticks) {
        svg += "<text x=\"" + coord(px(t)) + "\" y=\"" + coord(kTop + plot_h + 20) +
               "\" text-anchor=\"middle\">" + num(t, 6) + "</text>\n";
    }
    for (double t : yticks) {
        svg += "<text x=\"" + coord(kLeft - 10) + "\" y=\"" + coord(py(t) + 4) +
               "\" text-anchor=\"end\">" + num(t, 6) + "</text>\n";
    }
    svg += "<text x=\"" + coord(kLeft + plot_w / 2) + "\" y=\"" + coord(kHeight - 25) +
           "\" text-anchor=\"middle\" font-size=\"14\">" + escape(frame.x_label) + "</text>\n";
    svg += "<text x=\"20\" y=\"" + coord(kTop + plot_h / 2) +
           "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 " +
           coord(kTop + plot_h / 2) + ")\">" + escape(frame.y_label) + "</text>\n";
    svg += "</g>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const auto& ser = series[s];
        const char* color = kPalette[s % kPalette.size()];
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (std::size_t i = 0; i < ser.xs.size(); ++i) {
            if (!std::isfinite(ser.xs[i]) || !std::isfinite(ser.ys[i])) continue;
            if (!first) svg += ' ';
            svg += coord(px(ser.xs[i])) + "," + coord(py(ser.ys[i]));
            first = false;
        }
        svg += "\"/>\n";

        const double ly = kTop + 20.0 + 22.0 * static_cast<double>(s);
        const double lx = kWidth - kRight + 15.0;
        svg += "<line x1=\"" + coord(lx) + "\" y1=\"" + coord(ly) + "\" x2=\"" + coord(lx + 25) +
               "\" y2=\"" + coord(ly) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + coord(lx + 32) + "\" y=\"" + coord(ly + 4) +
               "\" font-family=\"sans-serif\" font-size=\"13\">" + escape(ser.label) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::string plot_trajectories(PlotKind kind,
                              std::span<const std::pair<std::string, Trajectory>> trajectories,
                              bool with_exact_cubic) {
    std::vector<PlotSeries> series;
    PlotFrame frame;
    for (const auto& [label, tr] : trajectories) {
        if (tr.size() == 0) throw std::invalid_argument("trajectory '" + label + "' is empty");
        if (kind == PlotKind::Phase) {
            series.push_back({label, tr.x, tr.y});
        } else {
            series.push_back({label, tr.t, tr.x});
        }
    }
    switch (kind) {
        case PlotKind::Oscillogram: frame = {"Oscillogram", "t", "x(t)"}; break;
        case PlotKind::Phase: frame = {"Phase trajectory", "x(t)", "y(t)"}; break;
        case PlotKind::Overlay: frame = {"Solutions", "t", "x(t)"}; break;
    }
    if (kind == PlotKind::Overlay && with_exact_cubic && !trajectories.empty()) {
        const auto& ts = trajectories.front().second.t;
        PlotSeries exact{"exact t^3", ts, {}};
        for (double t : ts) exact.ys.push_back(exact_cubic(t));
        series.push_back(std::move(exact));
    }
    return render_svg(frame, series);
}

}  // namespace fduffing
