#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "lipscope/network.hpp"

namespace lipscope {

// Piecewise-linear path in R^dim.  `closed` adds the segment from the last
// point back to the first when measuring length.
struct Trajectory {
    std::vector<std::vector<double>> points;
    bool closed = false;

    std::size_t dim() const { return points.empty() ? 0 : points.front().size(); }
    void validate() const;
};

// Closed circle of `num_points` equally spaced samples with the given
// radius, embedded in the first two coordinates of R^dim (remaining
// coordinates zero).  Requires dim >= 2 and num_points >= 3.
Trajectory circle_trajectory(std::size_t dim, double radius, std::size_t num_points);

double polyline_length(const std::vector<std::vector<double>>& points, bool closed);

inline double trajectory_length(const Trajectory& t) {
    return polyline_length(t.points, t.closed);
}

// Length of the polyline obtained by mapping every vertex through the
// network (the image of `input` under the network, vertex by vertex).
double output_trajectory_length(const Network& net, const Trajectory& input);

// Architecture-level lower estimate of the trajectory stretch for constant
// hidden width n and depth_l hidden layers: (sigma_w * n / sqrt(n + 1))^(L+1).
double rmt_trajectory_lower(std::size_t n, std::size_t depth_l, double sigma_w);

// One grid cell of the expressiveness study: a network of `width` x `depth`
// hidden layers sampled at sigma_w, its measured input-to-output stretch
// ratio, and the two architecture-level predictions for the cell.
struct ExpressivenessRow {
    std::size_t width = 0;
    std::size_t depth = 0;
    double stretch_ratio = 0.0;
    double rmt_lower = 0.0;
    double exact_upper = 0.0;
};

// Samples one network per (width, depth) cell — substream index is the
// cell's row-major position — pushes `input` through it and records the
// stretch ratio next to the cell's predictions.  Deterministic for a given
// master_seed regardless of `threads`.
std::vector<ExpressivenessRow> expressiveness_correlation(
    const std::vector<std::size_t>& widths, const std::vector<std::size_t>& depths,
    double sigma_w, const Trajectory& input, std::uint64_t master_seed, unsigned threads = 1);

}  // namespace lipscope
