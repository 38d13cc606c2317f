#include "lipscope/trajectory.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lipscope/bounds.hpp"
#include "lipscope/parallel.hpp"

namespace lipscope {

namespace {

double segment_length(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = b[i] - a[i];
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace

void Trajectory::validate() const {
    if (points.size() < 3)
        throw std::invalid_argument("trajectory needs at least 3 points, got " +
                                    std::to_string(points.size()));
    const std::size_t d = points.front().size();
    if (d == 0) throw std::invalid_argument("trajectory points must have positive dimension");
    for (const auto& p : points)
        if (p.size() != d)
            throw std::invalid_argument("trajectory points must share one dimension");
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        if (segment_length(points[i], points[i + 1]) == 0.0)
            throw std::invalid_argument("trajectory has coincident consecutive points at index " +
                                        std::to_string(i));
}

Trajectory circle_trajectory(std::size_t dim, double radius, std::size_t num_points) {
    if (dim < 2)
        throw std::invalid_argument("circle_trajectory requires dim >= 2, got " +
                                    std::to_string(dim));
    if (num_points < 3)
        throw std::invalid_argument("circle_trajectory requires at least 3 points, got " +
                                    std::to_string(num_points));
    if (!(radius > 0.0))
        throw std::invalid_argument("circle_trajectory requires a positive radius, got " +
                                    std::to_string(radius));
    Trajectory t;
    t.closed = true;
    t.points.reserve(num_points);
    for (std::size_t k = 0; k < num_points; ++k) {
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(num_points);
        std::vector<double> p(dim, 0.0);
        p[0] = radius * std::cos(angle);
        p[1] = radius * std::sin(angle);
        t.points.push_back(std::move(p));
    }
    return t;
}

double polyline_length(const std::vector<std::vector<double>>& points, bool closed) {
    if (points.size() < 2)
        throw std::invalid_argument("polyline_length needs at least 2 points, got " +
                                    std::to_string(points.size()));
    const std::size_t d = points.front().size();
    for (const auto& p : points)
        if (p.size() != d)
            throw std::invalid_argument("polyline_length: points must share one dimension");
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        len += segment_length(points[i], points[i + 1]);
    if (closed) len += segment_length(points.back(), points.front());
    return len;
}

double output_trajectory_length(const Network& net, const Trajectory& input) {
    input.validate();
    if (input.dim() != net.arch.widths.front())
        throw std::invalid_argument("trajectory dimension " + std::to_string(input.dim()) +
                                    " does not match network input width " +
                                    std::to_string(net.arch.widths.front()));
    std::vector<std::vector<double>> mapped;
    mapped.reserve(input.points.size());
    for (const auto& p : input.points) mapped.push_back(forward(net, p));
    return polyline_length(mapped, input.closed);
}

double rmt_trajectory_lower(std::size_t n, std::size_t depth_l, double sigma_w) {
    if (n == 0) throw std::invalid_argument("rmt_trajectory_lower: width must be positive");
    if (!(sigma_w > 0.0))
        throw std::invalid_argument("rmt_trajectory_lower: sigma_w must be positive, got " +
                                    std::to_string(sigma_w));
    const double base = sigma_w * static_cast<double>(n) /
                        std::sqrt(static_cast<double>(n) + 1.0);
    return std::pow(base, static_cast<double>(depth_l) + 1.0);
}

std::vector<ExpressivenessRow> expressiveness_correlation(
    const std::vector<std::size_t>& widths, const std::vector<std::size_t>& depths,
    double sigma_w, const Trajectory& input, std::uint64_t master_seed, unsigned threads) {
    if (widths.empty() || depths.empty())
        throw std::invalid_argument("expressiveness_correlation needs nonempty width and depth "
                                    "lists");
    input.validate();
    const double input_length = trajectory_length(input);
    const std::size_t io = input.dim();

    std::vector<ExpressivenessRow> rows(widths.size() * depths.size());
    parallel_for(rows.size(), threads, [&](std::size_t cell) {
        const std::size_t width = widths[cell / depths.size()];
        const std::size_t depth = depths[cell % depths.size()];

        Architecture arch;
        arch.widths.assign(depth + 2, width);
        arch.widths.front() = io;
        arch.widths.back() = io;
        arch.activation = Activation::relu;

        RngStream stream = derive_substream(master_seed, cell);
        const Network net = sample_network(arch, sigma_w, 0.0, stream);

        ExpressivenessRow& row = rows[cell];
        row.width = width;
        row.depth = depth;
        row.stretch_ratio = output_trajectory_length(net, input) / input_length;
        row.rmt_lower = rmt_trajectory_lower(width, depth, sigma_w);
        row.exact_upper = exact_upper_bound(net);
    });
    return rows;
}

}  // namespace lipscope
