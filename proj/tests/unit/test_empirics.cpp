#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lipscope/empirics.hpp"
#include "lipscope/error.hpp"
#include "lipscope/matrix.hpp"
#include "lipscope/network.hpp"
#include "lipscope/rng.hpp"
#include "oracles.hpp"

using namespace lipscope;

namespace {

Network linear_probe_net() {
    // [2, 1] net computing exactly x1 (single layer, so no activation).
    Network net;
    net.arch = Architecture{{2, 1}, Activation::relu};
    net.weights = {Matrix(1, 2, {1.0, 0.0})};
    net.biases = {{0.0}};
    net.validate();
    return net;
}

TrainConfig study_config(std::size_t hidden, std::uint64_t seed) {
    TrainConfig cfg;
    cfg.arch = Architecture{{2, hidden, 1}, Activation::tanh_sat};
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST_SUITE("empirics") {

TEST_CASE("regression target values") {
    CHECK(regression_target(0.0, 0.0) == 0.0);
    CHECK(regression_target(1.0, 1.0) ==
          doctest::Approx(std::sin(3.0) * std::cos(2.0) + 0.5).epsilon(1e-13));
}

TEST_CASE("dataset is deterministic, in range, and roughly centered") {
    const auto a = generate_dataset(10000, 13);
    const auto b = generate_dataset(10000, 13);
    const auto c = generate_dataset(100, 14);
    CHECK(a[0].input == b[0].input);
    CHECK(a[9999].input == b[9999].input);
    CHECK(a[0].input != c[0].input);

    double m1 = 0.0, m2 = 0.0;
    for (const Sample& s : a) {
        CHECK(s.input[0] >= -2.0);
        CHECK(s.input[0] < 2.0);
        CHECK(s.input[1] >= -2.0);
        CHECK(s.input[1] < 2.0);
        CHECK(s.target == regression_target(s.input[0], s.input[1]));
        m1 += s.input[0];
        m2 += s.input[1];
    }
    CHECK(std::fabs(m1 / 10000.0) < 0.05);
    CHECK(std::fabs(m2 / 10000.0) < 0.05);
}

TEST_CASE("mse_loss hand check") {
    const Network net = linear_probe_net();  // predicts x1
    const std::vector<Sample> data = {
        {{1.0, 0.0}, 2.0},   // error -1
        {{-3.0, 5.0}, -1.0}, // error -2
    };
    CHECK(mse_loss(net, data) == doctest::Approx((1.0 + 4.0) / 2.0).epsilon(1e-13));
}

TEST_CASE("zero epochs returns the fan-in initialization untouched") {
    TrainConfig cfg = study_config(16, 77);
    cfg.epochs = 0;
    const auto data = generate_dataset(256, 5);
    const TrainResult r = train_sgd(cfg, data);

    RngStream init = derive_substream(77, 0);
    const Matrix w0 = gaussian_matrix(init, 16, 2, 1.0 / std::sqrt(2.0));
    const Matrix w1 = gaussian_matrix(init, 1, 16, 1.0 / std::sqrt(16.0));
    CHECK(r.network.weights[0] == w0);
    CHECK(r.network.weights[1] == w1);
    for (const auto& layer : r.network.biases)
        for (double b : layer) CHECK(b == 0.0);
    CHECK(r.network.sigma_w == 1.0);
    CHECK(r.final_mse == mse_loss(r.network, data));
}

TEST_CASE("zero learning rate keeps the weights bit-identical") {
    const auto data = generate_dataset(256, 5);
    TrainConfig frozen = study_config(8, 3);
    frozen.epochs = 4;
    frozen.learning_rate = 0.0;
    TrainConfig untouched = study_config(8, 3);
    untouched.epochs = 0;
    const TrainResult a = train_sgd(frozen, data);
    const TrainResult b = train_sgd(untouched, data);
    CHECK(a.network.weights[0] == b.network.weights[0]);
    CHECK(a.network.weights[1] == b.network.weights[1]);
}

TEST_CASE("training is deterministic per seed") {
    const auto data = generate_dataset(512, 9);
    TrainConfig cfg = study_config(8, 21);
    cfg.epochs = 3;
    const TrainResult a = train_sgd(cfg, data);
    const TrainResult b = train_sgd(cfg, data);
    CHECK(a.network.weights[1] == b.network.weights[1]);
    CHECK(a.final_mse == b.final_mse);
}

TEST_CASE("sgd drives a realizable linear target to near-zero loss") {
    // Identity activation makes the model exactly linear; target y = x1 is
    // representable, so the loss must collapse.
    TrainConfig cfg;
    cfg.arch = Architecture{{2, 5, 1}, Activation::identity};
    cfg.epochs = 40;
    cfg.learning_rate = 0.02;
    cfg.seed = 11;
    RngStream s(42);
    std::vector<Sample> data;
    for (int i = 0; i < 1000; ++i) {
        const double x1 = -2.0 + 4.0 * s.next_uniform();
        const double x2 = -2.0 + 4.0 * s.next_uniform();
        data.push_back({{x1, x2}, x1});
    }
    const TrainResult r = train_sgd(cfg, data);
    CHECK(r.final_mse < 1e-3);
}

TEST_CASE("training reduces the study loss") {
    const auto data = generate_dataset(2048, 0);
    TrainConfig cfg = study_config(32, 1);
    cfg.epochs = 10;
    TrainConfig init_only = cfg;
    init_only.epochs = 0;
    const double before = train_sgd(init_only, data).final_mse;
    const double after = train_sgd(cfg, data).final_mse;
    CHECK(after < 0.5 * before);
}

TEST_CASE("backprop matches central finite differences") {
    const auto data = generate_dataset(32, 2);
    for (Activation act : {Activation::tanh_sat, Activation::sigmoid, Activation::identity}) {
        Network net;
        net.arch = Architecture{{2, 5, 1}, act};
        RngStream s(33);
        net = sample_network(net.arch, 0.8, 0.0, s);
        for (auto& layer : net.biases)
            for (double& b : layer) b = 0.3 * (s.next_uniform() - 0.5);

        const Gradients g = loss_gradients(net, data);
        const double h = 1e-5;
        for (std::size_t l = 0; l < net.weights.size(); ++l) {
            for (std::size_t e = 0; e < net.weights[l].data().size(); ++e) {
                const double saved = net.weights[l].data()[e];
                net.weights[l].data()[e] = saved + h;
                const double up = mse_loss(net, data);
                net.weights[l].data()[e] = saved - h;
                const double dn = mse_loss(net, data);
                net.weights[l].data()[e] = saved;
                const double fd = (up - dn) / (2.0 * h);
                const double an = g.d_weights[l].data()[e];
                CHECK(std::fabs(fd - an) <= 1e-6 * std::max(1.0, std::fabs(an)));
            }
            for (std::size_t i = 0; i < net.biases[l].size(); ++i) {
                const double saved = net.biases[l][i];
                net.biases[l][i] = saved + h;
                const double up = mse_loss(net, data);
                net.biases[l][i] = saved - h;
                const double dn = mse_loss(net, data);
                net.biases[l][i] = saved;
                const double fd = (up - dn) / (2.0 * h);
                const double an = g.d_biases[l][i];
                CHECK(std::fabs(fd - an) <= 1e-6 * std::max(1.0, std::fabs(an)));
            }
        }
    }
}

TEST_CASE("diverging runs raise a numeric error") {
    const auto data = generate_dataset(64, 4);
    TrainConfig cfg;
    cfg.arch = Architecture{{2, 8, 1}, Activation::identity};
    cfg.epochs = 50;
    cfg.learning_rate = 1e8;
    CHECK_THROWS_WITH_AS(train_sgd(cfg, data), doctest::Contains("learning rate"),
                         NumericError);
}

TEST_CASE("config validation") {
    TrainConfig bad = study_config(8, 0);
    bad.arch.widths = {3, 8, 1};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = study_config(8, 0);
    bad.batch_size = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = study_config(8, 0);
    bad.learning_rate = -0.1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("gaussian fit on a constant matrix") {
    const Matrix m(3, 4, std::vector<double>(12, 2.5));
    const GaussianFit f = fit_gaussian(m);
    CHECK(f.mean == doctest::Approx(2.5).epsilon(1e-13));
    CHECK(f.std_dev == 0.0);
    CHECK(f.sample_count == 12);
    CHECK(estimated_norm(m) == 0.0);
}

TEST_CASE("gaussian fit recovers the sampling scale") {
    RngStream s(19);
    const Matrix m = gaussian_matrix(s, 100, 100, 2.0);
    const GaussianFit f = fit_gaussian(m);
    CHECK(std::fabs(f.mean) < 0.1);
    CHECK(std::fabs(f.std_dev - 2.0) / 2.0 < 0.05);
}

TEST_CASE("gaussian fit centers before measuring spread") {
    RngStream s(23);
    Matrix m = gaussian_matrix(s, 40, 40, 1.0);
    const double spread = fit_gaussian(m).std_dev;
    for (double& v : m.data()) v += 5.0;  // shift every entry
    const GaussianFit shifted = fit_gaussian(m);
    CHECK(shifted.mean == doctest::Approx(5.0).epsilon(1e-2));
    CHECK(shifted.std_dev == doctest::Approx(spread).epsilon(1e-12));
}

TEST_CASE("estimated norm is absolutely homogeneous") {
    RngStream s(29);
    const Matrix m = gaussian_matrix(s, 16, 9, 1.0);
    const double base = estimated_norm(m);
    CHECK(estimated_norm(mat_scale(m, -3.0)) == doctest::Approx(3.0 * base).epsilon(1e-12));
}

TEST_CASE("estimated norm tracks the true norm of a tall gaussian matrix") {
    double mean_true = 0.0, mean_est = 0.0;
    const int seeds = 10;
    for (int t = 0; t < seeds; ++t) {
        RngStream s = derive_substream(5150, std::uint64_t(t));
        const Matrix m = gaussian_matrix(s, 64, 2, 0.7);
        mean_true += spectral_norm(m);
        mean_est += estimated_norm(m);
    }
    mean_true /= seeds;
    mean_est /= seeds;
    CHECK(std::fabs(mean_est - mean_true) / mean_true < 0.20);
}

TEST_CASE("estimate sharpens as the matrix grows at fixed aspect") {
    // The extreme-value prediction concentrates with size, so the relative
    // error of the statistics-only estimate should shrink.
    auto mean_rel_err = [](std::size_t rows, std::size_t cols, std::uint64_t tag) {
        double acc = 0.0;
        const int seeds = 10;
        for (int t = 0; t < seeds; ++t) {
            RngStream s = derive_substream(tag, std::uint64_t(t));
            const Matrix m = gaussian_matrix(s, rows, cols, 1.0);
            const double truth = spectral_norm(m);
            acc += std::fabs(estimated_norm(m) - truth) / truth;
        }
        return acc / seeds;
    };
    const double small = mean_rel_err(32, 8, 61);
    const double large = mean_rel_err(512, 128, 63);
    CHECK(large < small);
    CHECK(large < 0.08);
}

TEST_CASE("norm comparison report covers every layer of every network") {
    std::vector<Network> nets;
    const int seeds = 20;
    for (int t = 0; t < seeds; ++t) {
        TrainConfig cfg = study_config(64, 7000 + std::uint64_t(t));
        cfg.epochs = 0;  // initialization is exactly gaussian
        nets.push_back(train_sgd(cfg, generate_dataset(64, 1)).network);
    }
    const auto rows = norm_comparison_report(nets);
    REQUIRE(rows.size() == std::size_t(seeds) * 2);
    CHECK(rows[0].network == 0);
    CHECK(rows[0].layer == 0);
    CHECK(rows[1].layer == 1);
    CHECK(rows[2].network == 1);

    double first_layer_err = 0.0;
    for (int t = 0; t < seeds; ++t) {
        const NormComparisonRow& r = rows[std::size_t(t) * 2];
        CHECK(r.relative_error ==
              doctest::Approx(std::fabs(r.estimated_norm - r.true_norm) / r.true_norm)
                  .epsilon(1e-12));
        first_layer_err += r.relative_error;
    }
    CHECK(first_layer_err / seeds < 0.20);
}

TEST_CASE("histogram counts and span") {
    const Matrix m(1, 5, {0.0, 1.0, 2.0, 3.0, 4.0});
    const auto hist = weight_histogram(m, 4);
    REQUIRE(hist.size() == 4);
    std::size_t total = 0;
    for (const auto& b : hist) total += b.count;
    CHECK(total == 5);
    CHECK(hist[0].center == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(hist[3].center == doctest::Approx(3.5).epsilon(1e-13));
    CHECK(hist[3].count == 2);  // 3.0 and the max 4.0 clamp into the last bin

    const Matrix constant(2, 2, std::vector<double>(4, 1.0));
    const auto degenerate = weight_histogram(constant, 3);
    CHECK(degenerate[0].count == 4);
    CHECK(degenerate[1].count == 0);
    CHECK(degenerate[2].count == 0);

    CHECK_THROWS_AS(weight_histogram(m, 1), std::invalid_argument);
}

TEST_CASE("histogram of gaussian draws passes a chi-squared shape test") {
    RngStream s(404);
    const Matrix m = gaussian_matrix(s, 100, 100, 1.0);
    const std::size_t bins = 50;
    const auto hist = weight_histogram(m, bins);
    const GaussianFit fit = fit_gaussian(m);

    const double lo = *std::min_element(m.data().begin(), m.data().end());
    const double hi = *std::max_element(m.data().begin(), m.data().end());
    const double width = (hi - lo) / double(bins);
    const double n = double(m.data().size());

    // Group adjacent bins until each group expects at least 5 counts; the
    // first and last groups absorb the tails so expectations sum to n.
    std::vector<double> obs_groups, exp_groups;
    double obs = 0.0, expd = 0.0;
    for (std::size_t i = 0; i < bins; ++i) {
        const double a = (i == 0) ? -1e308 : lo + double(i) * width;
        const double b = (i + 1 == bins) ? 1e308 : lo + double(i + 1) * width;
        obs += double(hist[i].count);
        expd += n * (oracle::normal_cdf(b, fit.mean, fit.std_dev) -
                     oracle::normal_cdf(a, fit.mean, fit.std_dev));
        if (expd >= 5.0) {
            obs_groups.push_back(obs);
            exp_groups.push_back(expd);
            obs = expd = 0.0;
        }
    }
    if (expd > 0.0 && !exp_groups.empty()) {  // fold the remainder into the last group
        obs_groups.back() += obs;
        exp_groups.back() += expd;
    }

    REQUIRE(obs_groups.size() >= 10);
    double chi2 = 0.0;
    for (std::size_t g = 0; g < obs_groups.size(); ++g) {
        const double d = obs_groups[g] - exp_groups[g];
        chi2 += d * d / exp_groups[g];
    }
    // Two parameters were fitted from the same sample.
    const double dof = double(obs_groups.size()) - 3.0;
    CHECK(chi2 < oracle::chi2_quantile(dof, 0.999));
}

}  // TEST_SUITE
