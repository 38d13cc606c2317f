#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <vector>

#include "lipscope/network.hpp"

namespace lipscope {

// Configuration for the small regression study: one hidden layer between
// two inputs and one output.
struct TrainConfig {
    Architecture arch;  // must be [2, n, 1]
    std::size_t epochs = 100;
    double learning_rate = 0.01;
    std::size_t batch_size = 32;
    std::size_t dataset_size = 15625;
    std::uint64_t seed = 0;

    void validate() const;
};

struct Sample {
    std::array<double, 2> input;
    double target;
};

// The fixed regression target: smooth, non-separable, exactly zero at the
// origin.
double regression_target(double x1, double x2);

// `size` samples with inputs uniform on [-2, 2]^2 and targets from
// regression_target, drawn from stream_new(seed).
std::vector<Sample> generate_dataset(std::size_t size, std::uint64_t seed);

double mse_loss(const Network& net, const std::vector<Sample>& data);

struct Gradients {
    std::vector<Matrix> d_weights;
    std::vector<std::vector<double>> d_biases;
};

// Mean-squared-error gradient over the batch via backpropagation.  The
// network must have output width 1.
Gradients loss_gradients(const Network& net, const std::vector<Sample>& batch);

struct TrainResult {
    Network network;
    double final_mse = 0.0;
};

// Mini-batch SGD.  Weights initialize as N(0, 1/fan_in), biases as zero;
// each epoch reshuffles the data (init and shuffle use separate substreams
// of cfg.seed).  Throws NumericError when the loss stops being finite.
TrainResult train_sgd(const TrainConfig& cfg, const std::vector<Sample>& data);

struct GaussianFit {
    double mean = 0.0;
    double std_dev = 0.0;
    std::size_t sample_count = 0;
};

// Maximum-likelihood normal fit over all entries of m.
GaussianFit fit_gaussian(const Matrix& m);

// Spectral-norm estimate from entry statistics alone: the fitted std (after
// centering by the fitted mean) times sqrt(max(rows, cols)) + sqrt(min(rows,
// cols)).
double estimated_norm(const Matrix& m);

struct NormComparisonRow {
    std::size_t network = 0;  // index into the input list
    std::size_t layer = 0;
    double true_norm = 0.0;
    double estimated_norm = 0.0;
    double relative_error = 0.0;
};

// One row per weight matrix per network: true spectral norm next to the
// statistics-only estimate and their relative gap.
std::vector<NormComparisonRow> norm_comparison_report(const std::vector<Network>& nets);

struct HistogramBin {
    double center = 0.0;
    std::size_t count = 0;
};

// Equal-width histogram of the matrix entries spanning [min, max]; counts
// sum to rows * cols.  A constant matrix puts all mass in the first bin.
std::vector<HistogramBin> weight_histogram(const Matrix& m, std::size_t bins);

}  // namespace lipscope
