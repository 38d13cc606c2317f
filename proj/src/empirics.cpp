#include "lipscope/empirics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "lipscope/bounds.hpp"
#include "lipscope/rng.hpp"

namespace lipscope {

void TrainConfig::validate() const {
    arch.validate();
    if (arch.widths.size() != 3 || arch.widths.front() != 2 || arch.widths.back() != 1)
        throw std::invalid_argument("training architecture must be [2, n, 1]");
    if (!(learning_rate >= 0.0) || !std::isfinite(learning_rate))
        throw std::invalid_argument("learning_rate must be finite and nonnegative");
    if (batch_size == 0) throw std::invalid_argument("batch_size must be positive");
    if (dataset_size == 0) throw std::invalid_argument("dataset_size must be positive");
}

double regression_target(double x1, double x2) {
    return std::sin(3.0 * x1) * std::cos(2.0 * x2) + 0.5 * x1 * x2;
}

std::vector<Sample> generate_dataset(std::size_t size, std::uint64_t seed) {
    if (size == 0) throw std::invalid_argument("generate_dataset: size must be positive");
    RngStream stream = stream_new(seed);
    std::vector<Sample> data;
    data.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        const double x1 = -2.0 + 4.0 * stream.next_uniform();
        const double x2 = -2.0 + 4.0 * stream.next_uniform();
        data.push_back({{x1, x2}, regression_target(x1, x2)});
    }
    return data;
}

namespace {

void check_regression_net(const Network& net) {
    if (net.arch.widths.back() != 1)
        throw std::invalid_argument("regression loss requires output width 1, got " +
                                    std::to_string(net.arch.widths.back()));
    if (net.arch.widths.front() != 2)
        throw std::invalid_argument("regression loss requires input width 2, got " +
                                    std::to_string(net.arch.widths.front()));
}

}  // namespace

double mse_loss(const Network& net, const std::vector<Sample>& data) {
    check_regression_net(net);
    if (data.empty()) throw std::invalid_argument("mse_loss: data must be nonempty");
    double s = 0.0;
    for (const Sample& sample : data) {
        const double pred = forward(net, {sample.input[0], sample.input[1]})[0];
        const double d = pred - sample.target;
        s += d * d;
    }
    return s / static_cast<double>(data.size());
}

Gradients loss_gradients(const Network& net, const std::vector<Sample>& batch) {
    check_regression_net(net);
    if (batch.empty()) throw std::invalid_argument("loss_gradients: batch must be nonempty");

    const std::size_t layers = net.weights.size();
    Gradients g;
    for (std::size_t l = 0; l < layers; ++l) {
        g.d_weights.emplace_back(net.weights[l].rows(), net.weights[l].cols());
        g.d_biases.emplace_back(net.weights[l].rows(), 0.0);
    }

    std::vector<std::vector<double>> acts(layers + 1);   // acts[0] = input
    std::vector<std::vector<double>> preacts(layers);
    for (const Sample& sample : batch) {
        acts[0] = {sample.input[0], sample.input[1]};
        for (std::size_t l = 0; l < layers; ++l) {
            std::vector<double> z = mat_vec(net.weights[l], acts[l]);
            for (std::size_t i = 0; i < z.size(); ++i) z[i] += net.biases[l][i];
            preacts[l] = z;
            acts[l + 1] = (l + 1 < layers) ? activation_apply(net.arch.activation, z)
                                           : std::move(z);
        }

        // d(loss)/d(preactivation), propagated backwards; the squared-error
        // derivative is averaged over the batch at accumulation time.
        std::vector<double> delta{2.0 * (acts[layers][0] - sample.target) /
                                  static_cast<double>(batch.size())};
        for (std::size_t l = layers; l-- > 0;) {
            Matrix& dw = g.d_weights[l];
            std::vector<double>& db = g.d_biases[l];
            for (std::size_t i = 0; i < dw.rows(); ++i) {
                db[i] += delta[i];
                for (std::size_t j = 0; j < dw.cols(); ++j) dw(i, j) += delta[i] * acts[l][j];
            }
            if (l == 0) break;
            std::vector<double> prev(net.weights[l].cols(), 0.0);
            for (std::size_t i = 0; i < net.weights[l].rows(); ++i)
                for (std::size_t j = 0; j < net.weights[l].cols(); ++j)
                    prev[j] += net.weights[l](i, j) * delta[i];
            for (std::size_t j = 0; j < prev.size(); ++j)
                prev[j] *= activation_derivative(net.arch.activation, preacts[l - 1][j]);
            delta = std::move(prev);
        }
    }
    return g;
}

TrainResult train_sgd(const TrainConfig& cfg, const std::vector<Sample>& data) {
    cfg.validate();
    if (data.empty()) throw std::invalid_argument("train_sgd: data must be nonempty");

    RngStream init_stream = derive_substream(cfg.seed, 0);
    RngStream shuffle_stream = derive_substream(cfg.seed, 1);

    Network net;
    net.arch = cfg.arch;
    net.sigma_w = 1.0;  // records the fan-in base scale: layer l uses 1/sqrt(n_{l-1})
    net.sigma_b = 0.0;
    for (std::size_t l = 0; l + 1 < cfg.arch.widths.size(); ++l) {
        const double sigma = 1.0 / std::sqrt(static_cast<double>(cfg.arch.widths[l]));
        net.weights.push_back(gaussian_matrix(init_stream, cfg.arch.widths[l + 1],
                                              cfg.arch.widths[l], sigma));
        net.biases.emplace_back(cfg.arch.widths[l + 1], 0.0);
    }

    const std::size_t n = data.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::vector<Sample> batch;
    batch.reserve(std::min(cfg.batch_size, n));

    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        for (std::size_t i = n - 1; i > 0; --i) {
            const std::size_t j =
                static_cast<std::size_t>(shuffle_stream.next_uniform() * (i + 1));
            std::swap(order[i], order[std::min(j, i)]);
        }
        for (std::size_t start = 0; start < n; start += cfg.batch_size) {
            batch.clear();
            for (std::size_t k = start; k < std::min(start + cfg.batch_size, n); ++k)
                batch.push_back(data[order[k]]);
            const Gradients g = loss_gradients(net, batch);
            for (std::size_t l = 0; l < net.weights.size(); ++l) {
                Matrix& w = net.weights[l];
                for (std::size_t e = 0; e < w.data().size(); ++e)
                    w.data()[e] -= cfg.learning_rate * g.d_weights[l].data()[e];
                for (std::size_t i = 0; i < net.biases[l].size(); ++i)
                    net.biases[l][i] -= cfg.learning_rate * g.d_biases[l][i];
            }
            for (const Matrix& w : net.weights)
                for (double v : w.data())
                    if (!std::isfinite(v))
                        throw NumericError("train_sgd: weights diverged (non-finite); try a "
                                           "smaller learning rate");
        }
    }
    const double final_mse = mse_loss(net, data);
    return {std::move(net), final_mse};
}

GaussianFit fit_gaussian(const Matrix& m) {
    const std::vector<double>& xs = m.data();
    const double n = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= n;
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    var /= n;
    return {mean, std::sqrt(var), xs.size()};
}

double estimated_norm(const Matrix& m) {
    const GaussianFit fit = fit_gaussian(m);
    const double big = static_cast<double>(std::max(m.rows(), m.cols()));
    const double small = static_cast<double>(std::min(m.rows(), m.cols()));
    return fit.std_dev * (std::sqrt(big) + std::sqrt(small));
}

std::vector<NormComparisonRow> norm_comparison_report(const std::vector<Network>& nets) {
    if (nets.empty())
        throw std::invalid_argument("norm_comparison_report: need at least one network");
    std::vector<NormComparisonRow> rows;
    for (std::size_t n = 0; n < nets.size(); ++n) {
        nets[n].validate();
        for (std::size_t l = 0; l < nets[n].weights.size(); ++l) {
            NormComparisonRow row;
            row.network = n;
            row.layer = l;
            row.true_norm = spectral_norm(nets[n].weights[l]);
            row.estimated_norm = lipscope::estimated_norm(nets[n].weights[l]);
            row.relative_error = std::fabs(row.estimated_norm - row.true_norm) / row.true_norm;
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<HistogramBin> weight_histogram(const Matrix& m, std::size_t bins) {
    if (bins < 2)
        throw std::invalid_argument("weight_histogram: need at least 2 bins, got " +
                                    std::to_string(bins));
    const std::vector<double>& xs = m.data();
    const auto [lo_it, hi_it] = std::minmax_element(xs.begin(), xs.end());
    const double lo = *lo_it, hi = *hi_it;
    const double width = (hi - lo) / static_cast<double>(bins);

    std::vector<HistogramBin> hist(bins);
    for (std::size_t i = 0; i < bins; ++i)
        hist[i].center = lo + (static_cast<double>(i) + 0.5) * width;
    for (double x : xs) {
        std::size_t idx = width > 0.0 ? static_cast<std::size_t>((x - lo) / width) : 0;
        hist[std::min(idx, bins - 1)].count += 1;
    }
    return hist;
}

}  // namespace lipscope
