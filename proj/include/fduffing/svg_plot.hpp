#pragma once

// Deterministic SVG line plots (fixed 800x600 viewBox).

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fduffing/model.hpp"

namespace fduffing {

struct PlotSeries {
    std::string label;
    std::vector<double> xs;
    std::vector<double> ys;
};

struct PlotFrame {
    std::string title;
    std::string x_label;
    std::string y_label;
};

/// Throws std::invalid_argument if there is no series or no point.
std::string render_svg(const PlotFrame& frame, std::span<const PlotSeries> series);

enum class PlotKind { Oscillogram, Phase, Overlay };

/// Oscillogram: x over t. Phase: y over x. Overlay: x over t for every
/// trajectory, plus t^3 when `with_exact_cubic` is set.
std::string plot_trajectories(PlotKind kind,
                              std::span<const std::pair<std::string, Trajectory>> trajectories,
                              bool with_exact_cubic);

/// "Nice" tick positions covering [lo, hi], roughly `target` of them.
std::vector<double> nice_ticks(double lo, double hi, int target = 6);

}  // namespace fduffing
