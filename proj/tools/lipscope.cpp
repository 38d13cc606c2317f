// Command-line front end: bounds, sweep, stability, trajectory, train-study.
// Every run writes a metadata record (tool, version, resolved config, master
// seed) ahead of its data so results stay attributable and reproducible.

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_io.hpp"
#include "lipscope/bounds.hpp"
#include "lipscope/empirics.hpp"
#include "lipscope/network.hpp"
#include "lipscope/parallel.hpp"
#include "lipscope/rng.hpp"
#include "lipscope/stability.hpp"
#include "lipscope/trajectory.hpp"
#include "lipscope/version.hpp"

namespace fs = std::filesystem;
using namespace lipscope;
using cli::format_double;
using cli::UsageError;

namespace {

std::string join_widths(const std::vector<std::size_t>& widths) {
    std::string s;
    for (std::size_t i = 0; i < widths.size(); ++i) {
        if (i) s += 'x';
        s += std::to_string(widths[i]);
    }
    return s;
}

// ---------------------------------------------------------------------------
// bounds

struct BoundsOpts {
    std::string net_file;
    std::string arch;
    double sigma_w = 1.0;
    double sigma_b = 0.0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::size_t io_dim = 2;
    std::string activation = "relu";
    std::string out = "-";
    std::string format = "json";
    bool reproducible = false;
};

void run_bounds(const BoundsOpts& opt) {
    if (opt.net_file.empty() == opt.arch.empty())
        throw UsageError("bounds needs exactly one of --net-file and --arch");
    const std::uint64_t seed = opt.seed_given ? opt.seed : cli::default_master_seed();

    Network net = [&] {
        if (!opt.net_file.empty()) return cli::read_network_file(opt.net_file);
        Architecture arch{cli::parse_widths(opt.arch, opt.io_dim),
                          activation_from_name(opt.activation)};
        RngStream stream = stream_new(seed);
        return sample_network(arch, opt.sigma_w, opt.sigma_b, stream);
    }();
    const BoundReport report = bound_report(net);

    nlohmann::ordered_json config;
    if (!opt.net_file.empty()) config["net_file"] = opt.net_file;
    if (!opt.arch.empty()) {
        config["arch"] = opt.arch;
        config["io_dim"] = opt.io_dim;
        config["sigma_w"] = opt.sigma_w;
        config["sigma_b"] = opt.sigma_b;
        config["activation"] = opt.activation;
    }
    config["format"] = opt.format;
    const auto meta = cli::make_metadata("bounds", config, seed, opt.reproducible);

    if (opt.format == "json") {
        nlohmann::ordered_json doc;
        doc["meta"] = meta;
        doc["widths"] = report.widths;
        doc["sigma_w"] = report.sigma_w;
        doc["exact_upper"] = report.exact_upper;
        doc["exact_lower"] = report.exact_lower;
        doc["rmt_upper"] = report.rmt_upper;
        doc["rmt_lower"] = report.rmt_lower;
        cli::write_json(opt.out, doc);
    } else if (opt.format == "csv") {
        cli::write_csv(opt.out, meta,
                       {"widths", "sigma_w", "exact_upper", "exact_lower", "rmt_upper",
                        "rmt_lower"},
                       {{join_widths(report.widths), format_double(report.sigma_w),
                         format_double(report.exact_upper), format_double(report.exact_lower),
                         format_double(report.rmt_upper), format_double(report.rmt_lower)}});
    } else {
        throw UsageError("unknown format \"" + opt.format + "\" (expected json or csv)");
    }
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOpts {
    std::string widths;
    std::string depths;
    double sigma_w = 1.0;
    std::size_t seeds = 20;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::size_t io_dim = 2;
    std::string activation = "relu";
    unsigned threads = 1;
    std::string out;
    bool reproducible = false;
};

void run_sweep(const SweepOpts& opt) {
    if (opt.out == "-") throw UsageError("sweep writes two files; --out must be a path");
    if (opt.seeds == 0) throw UsageError("--seeds must be positive");
    const std::uint64_t master = opt.seed_given ? opt.seed : cli::default_master_seed();
    const std::vector<std::size_t> widths = cli::parse_size_list(opt.widths);
    const std::vector<std::size_t> depths = cli::parse_size_list(opt.depths);
    const Activation act = activation_from_name(opt.activation);

    const std::size_t cells = widths.size() * depths.size();
    std::vector<std::array<double, 2>> exact(cells * opt.seeds);
    parallel_for(exact.size(), opt.threads, [&](std::size_t k) {
        const std::size_t cell = k / opt.seeds;
        const std::size_t width = widths[cell / depths.size()];
        const std::size_t depth = depths[cell % depths.size()];
        Architecture arch;
        arch.widths.assign(depth + 2, width);
        arch.widths.front() = opt.io_dim;
        arch.widths.back() = opt.io_dim;
        arch.activation = act;
        RngStream stream = derive_substream(master, k);
        const Network net = sample_network(arch, opt.sigma_w, 0.0, stream);
        exact[k] = {exact_upper_bound(net), exact_lower_bound(net)};
    });

    nlohmann::ordered_json config{{"widths", opt.widths},
                                  {"depths", opt.depths},
                                  {"sigma_w", opt.sigma_w},
                                  {"seeds", opt.seeds},
                                  {"io_dim", opt.io_dim},
                                  {"activation", opt.activation}};
    const auto meta = cli::make_metadata("sweep", config, master, opt.reproducible);

    std::vector<std::vector<std::string>> rows;
    std::vector<std::vector<std::string>> mean_rows;
    for (std::size_t cell = 0; cell < cells; ++cell) {
        const std::size_t width = widths[cell / depths.size()];
        const std::size_t depth = depths[cell % depths.size()];
        Architecture arch;
        arch.widths.assign(depth + 2, width);
        arch.widths.front() = opt.io_dim;
        arch.widths.back() = opt.io_dim;
        const double rmt_up = rmt_upper_bound(arch, opt.sigma_w);
        const double rmt_low = rmt_lower_bound(arch, opt.sigma_w);

        double up_sum = 0.0, low_sum = 0.0;
        for (std::size_t s = 0; s < opt.seeds; ++s) {
            const auto& [up, low] = exact[cell * opt.seeds + s];
            up_sum += up;
            low_sum += low;
            rows.push_back({std::to_string(width), std::to_string(depth), std::to_string(s),
                            format_double(up), format_double(low), format_double(rmt_up),
                            format_double(rmt_low)});
        }
        const double n = static_cast<double>(opt.seeds);
        mean_rows.push_back({std::to_string(width), std::to_string(depth),
                             format_double(up_sum / n), format_double(low_sum / n),
                             format_double(rmt_up), format_double(rmt_low)});
    }

    cli::write_csv(opt.out, meta,
                   {"width", "depth", "seed", "exact_upper", "exact_lower", "rmt_upper",
                    "rmt_lower"},
                   rows);
    const fs::path out_path(opt.out);
    const fs::path mean_path = out_path.parent_path() /
                               (out_path.stem().string() + "_mean" +
                                out_path.extension().string());
    cli::write_csv(mean_path.string(), meta,
                   {"width", "depth", "exact_upper_mean", "exact_lower_mean", "rmt_upper",
                    "rmt_lower"},
                   mean_rows);
}

// ---------------------------------------------------------------------------
// stability

struct StabilityOpts {
    std::string a_file;
    std::string q_file;
    std::string archs = "300x1,100x3,50x6,20x15,10x30";
    double sigma_w = 1.0;
    std::size_t trials = 50;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string mode = "exact";
    unsigned threads = 1;
    std::string out = "-";
    bool reproducible = false;
};

void run_stability(const StabilityOpts& opt) {
    if (opt.trials == 0) throw UsageError("--trials must be positive");
    if (opt.mode != "exact" && opt.mode != "rmt")
        throw UsageError("unknown mode \"" + opt.mode + "\" (expected exact or rmt)");
    const std::uint64_t master = opt.seed_given ? opt.seed : cli::default_master_seed();

    // Demo system used throughout: strongly damped, threshold ~919.
    const Matrix a = opt.a_file.empty()
                         ? Matrix(2, 2, {0.0, 2700.0, -3600.0, -5400.0})
                         : cli::read_matrix_file(opt.a_file);
    const Matrix q = opt.q_file.empty() ? Matrix::identity(a.rows())
                                        : cli::read_matrix_file(opt.q_file);
    const StabilitySystem sys = system_new(a, q);
    const std::size_t io = a.rows();

    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> rows;
    std::stringstream archs(opt.archs);
    std::string tok;
    while (std::getline(archs, tok, ',')) labels.push_back(tok);
    if (labels.empty()) throw UsageError("empty --archs list");

    for (const std::string& label : labels) {
        Architecture arch{cli::parse_widths(label, io), Activation::relu};
        if (arch.widths.front() != io || arch.widths.back() != io)
            throw UsageError("architecture \"" + label + "\" does not map the state space (" +
                             std::to_string(io) + " dims) to itself");
        std::size_t certified = 0;
        if (opt.mode == "exact") {
            const double pct =
                stability_likelihood(sys, arch, opt.sigma_w, opt.trials, master, opt.threads);
            certified = static_cast<std::size_t>(
                std::llround(pct * static_cast<double>(opt.trials) / 100.0));
        } else {
            certified = rmt_upper_bound(arch, opt.sigma_w) <= sys.threshold ? opt.trials : 0;
        }
        const double pct = 100.0 * static_cast<double>(certified) /
                           static_cast<double>(opt.trials);
        rows.push_back({label, std::to_string(opt.trials), std::to_string(certified),
                        format_double(pct), format_double(sys.threshold)});
    }

    nlohmann::ordered_json config{{"a_file", opt.a_file.empty() ? "(built-in)" : opt.a_file},
                                  {"q_file", opt.q_file.empty() ? "(identity)" : opt.q_file},
                                  {"archs", opt.archs},
                                  {"sigma_w", opt.sigma_w},
                                  {"trials", opt.trials},
                                  {"mode", opt.mode}};
    const auto meta = cli::make_metadata("stability", config, master, opt.reproducible);
    cli::write_csv(opt.out, meta,
                   {"architecture", "trials", "certified_count", "likelihood_percent",
                    "threshold"},
                   rows);
}

// ---------------------------------------------------------------------------
// trajectory

struct TrajectoryOpts {
    std::string widths;
    std::string depths;
    double sigma_w = 1.0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::size_t points = 8192;
    double radius = 1.0;
    std::size_t io_dim = 2;
    unsigned threads = 1;
    std::string out = "-";
    bool reproducible = false;
};

void run_trajectory(const TrajectoryOpts& opt) {
    const std::uint64_t master = opt.seed_given ? opt.seed : cli::default_master_seed();
    const std::vector<std::size_t> widths = cli::parse_size_list(opt.widths);
    const std::vector<std::size_t> depths = cli::parse_size_list(opt.depths);
    const Trajectory circle = circle_trajectory(opt.io_dim, opt.radius, opt.points);
    const auto cells =
        expressiveness_correlation(widths, depths, opt.sigma_w, circle, master, opt.threads);

    std::vector<std::vector<std::string>> rows;
    for (const ExpressivenessRow& c : cells)
        rows.push_back({std::to_string(c.width), std::to_string(c.depth),
                        format_double(c.stretch_ratio), format_double(c.rmt_lower),
                        format_double(c.exact_upper)});

    nlohmann::ordered_json config{{"widths", opt.widths},   {"depths", opt.depths},
                                  {"sigma_w", opt.sigma_w}, {"points", opt.points},
                                  {"radius", opt.radius},   {"io_dim", opt.io_dim}};
    const auto meta = cli::make_metadata("trajectory", config, master, opt.reproducible);
    cli::write_csv(opt.out, meta,
                   {"width", "depth", "stretch_ratio", "rmt_lower", "exact_upper"}, rows);
}

// ---------------------------------------------------------------------------
// train-study

struct TrainStudyOpts {
    std::string config_file;
    std::string out_dir;
    std::string hidden;
    std::uint64_t seed = 0;
    std::size_t epochs = 0;
    double learning_rate = 0.0;
    std::size_t batch_size = 0;
    std::size_t dataset_size = 0;
    std::string activation;
    std::size_t bins = 0;
    bool reproducible = false;
    // which flags the user actually passed (merge precedence)
    bool hidden_given = false, seed_given = false, epochs_given = false, lr_given = false;
    bool batch_given = false, dataset_given = false, activation_given = false, bins_given = false;
};

void run_train_study(const TrainStudyOpts& opt) {
    // Precedence: command-line flags > config file > defaults.
    std::vector<std::size_t> hidden{64, 256};
    std::size_t epochs = 40;
    double learning_rate = 0.01;  // stable for the widest default network
    std::size_t batch_size = 32;
    std::size_t dataset_size = 15625;
    std::string activation = "tanh";
    std::size_t bins = 50;
    std::uint64_t master = cli::default_master_seed();

    if (!opt.config_file.empty()) {
        const nlohmann::json cfg = cli::read_json_file(opt.config_file);
        if (!cfg.is_object()) throw UsageError("config file must hold a JSON object");
        try {
            if (cfg.contains("hidden_sizes"))
                hidden = cfg["hidden_sizes"].get<std::vector<std::size_t>>();
            if (cfg.contains("epochs")) epochs = cfg["epochs"].get<std::size_t>();
            if (cfg.contains("learning_rate")) learning_rate = cfg["learning_rate"].get<double>();
            if (cfg.contains("batch_size")) batch_size = cfg["batch_size"].get<std::size_t>();
            if (cfg.contains("dataset_size"))
                dataset_size = cfg["dataset_size"].get<std::size_t>();
            if (cfg.contains("activation")) activation = cfg["activation"].get<std::string>();
            if (cfg.contains("bins")) bins = cfg["bins"].get<std::size_t>();
            if (cfg.contains("seed")) master = cfg["seed"].get<std::uint64_t>();
        } catch (const nlohmann::json::exception& e) {
            throw UsageError("config file \"" + opt.config_file + "\": " + e.what());
        }
    }
    if (opt.hidden_given) hidden = cli::parse_size_list(opt.hidden);
    if (opt.seed_given) master = opt.seed;
    if (opt.epochs_given) epochs = opt.epochs;
    if (opt.lr_given) learning_rate = opt.learning_rate;
    if (opt.batch_given) batch_size = opt.batch_size;
    if (opt.dataset_given) dataset_size = opt.dataset_size;
    if (opt.activation_given) activation = opt.activation;
    if (opt.bins_given) bins = opt.bins;
    if (hidden.empty()) throw UsageError("hidden size list must be nonempty");

    std::error_code ec;
    fs::create_directories(opt.out_dir, ec);
    if (ec) throw UsageError("cannot create output directory \"" + opt.out_dir + "\"");
    const fs::path dir(opt.out_dir);

    nlohmann::ordered_json config{{"hidden_sizes", hidden},
                                  {"epochs", epochs},
                                  {"learning_rate", learning_rate},
                                  {"batch_size", batch_size},
                                  {"dataset_size", dataset_size},
                                  {"activation", activation},
                                  {"bins", bins}};
    const auto meta = cli::make_metadata("train-study", config, master, opt.reproducible);

    const std::vector<Sample> data = generate_dataset(dataset_size, master);
    std::vector<Network> nets;
    nlohmann::ordered_json summary_runs = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < hidden.size(); ++k) {
        TrainConfig cfg;
        cfg.arch = Architecture{{2, hidden[k], 1}, activation_from_name(activation)};
        cfg.epochs = epochs;
        cfg.learning_rate = learning_rate;
        cfg.batch_size = batch_size;
        cfg.dataset_size = dataset_size;
        cfg.seed = derive_substream(master, k).origin_seed();

        TrainResult result = train_sgd(cfg, data);
        std::cerr << "trained net " << hidden[k] << ": final mse "
                  << format_double(result.final_mse) << "\n";

        const std::string net_name = "net_" + std::to_string(hidden[k]) + ".json";
        nlohmann::ordered_json net_doc;
        net_doc["meta"] = meta;
        net_doc["final_mse"] = result.final_mse;
        net_doc["network"] = network_to_json(result.network);
        cli::write_json((dir / net_name).string(), net_doc);

        for (std::size_t l = 0; l < result.network.weights.size(); ++l) {
            const auto hist = weight_histogram(result.network.weights[l], bins);
            std::vector<std::vector<std::string>> hist_rows;
            for (const HistogramBin& b : hist)
                hist_rows.push_back({format_double(b.center), std::to_string(b.count)});
            const std::string hist_name = "hist_net" + std::to_string(hidden[k]) + "_w" +
                                          std::to_string(l + 1) + ".csv";
            cli::write_csv((dir / hist_name).string(), meta, {"bin_center", "count"}, hist_rows);
        }

        summary_runs.push_back({{"hidden", hidden[k]},
                                {"final_mse", result.final_mse},
                                {"network_file", net_name}});
        nets.push_back(std::move(result.network));
    }

    const auto comparison = norm_comparison_report(nets);
    std::vector<std::vector<std::string>> rows;
    for (const NormComparisonRow& r : comparison)
        rows.push_back({std::to_string(hidden[r.network]), std::to_string(r.layer + 1),
                        format_double(r.true_norm), format_double(r.estimated_norm),
                        format_double(r.relative_error)});
    cli::write_csv((dir / "norm_comparison.csv").string(), meta,
                   {"network", "layer", "true_norm", "estimated_norm", "relative_error"}, rows);

    nlohmann::ordered_json summary;
    summary["meta"] = meta;
    summary["runs"] = summary_runs;
    cli::write_json((dir / "summary.json").string(), summary);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lipschitz bound explorer for fully connected networks"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    BoundsOpts bounds_opt;
    auto* bounds = app.add_subcommand(
        "bounds", "Exact and architecture-level Lipschitz bounds of one network");
    bounds->add_option("--net-file", bounds_opt.net_file, "network JSON file");
    bounds->add_option("--arch", bounds_opt.arch,
                       "architecture: explicit widths \"2,300,2\" or shorthand \"300x1\"");
    bounds->add_option("--sigma-w", bounds_opt.sigma_w, "weight sampling std");
    bounds->add_option("--sigma-b", bounds_opt.sigma_b, "bias sampling std");
    auto* bounds_seed = bounds->add_option("--seed", bounds_opt.seed, "sampling seed");
    bounds->add_option("--io-dim", bounds_opt.io_dim, "input/output width for shorthand archs");
    bounds->add_option("--activation", bounds_opt.activation,
                       "relu, tanh, sigmoid, hard_tanh or identity");
    bounds->add_option("--out", bounds_opt.out, "output path, - for stdout");
    bounds->add_option("--format", bounds_opt.format, "json or csv");
    bounds->add_flag("--reproducible", bounds_opt.reproducible, "omit timestamp from metadata");
    bounds->callback([&] {
        bounds_opt.seed_given = bounds_seed->count() > 0;
        run_bounds(bounds_opt);
    });

    SweepOpts sweep_opt;
    auto* sweep = app.add_subcommand(
        "sweep", "Bounds across a width x depth grid of sampled networks");
    sweep->add_option("--widths", sweep_opt.widths, "hidden widths, e.g. \"10:100:10\"")
        ->required();
    sweep->add_option("--depths", sweep_opt.depths, "hidden depths, e.g. \"1:8:1\"")->required();
    sweep->add_option("--sigma-w", sweep_opt.sigma_w, "weight sampling std");
    sweep->add_option("--seeds", sweep_opt.seeds, "sampled networks per grid cell");
    auto* sweep_seed = sweep->add_option("--seed", sweep_opt.seed, "master seed");
    sweep->add_option("--io-dim", sweep_opt.io_dim, "input/output width");
    sweep->add_option("--activation", sweep_opt.activation, "activation recorded for sampling");
    sweep->add_option("--threads", sweep_opt.threads, "worker threads (never changes results)");
    sweep->add_option("--out", sweep_opt.out, "per-seed CSV path; cell means go to *_mean.csv")
        ->required();
    sweep->add_flag("--reproducible", sweep_opt.reproducible, "omit timestamp from metadata");
    sweep->callback([&] {
        sweep_opt.seed_given = sweep_seed->count() > 0;
        run_sweep(sweep_opt);
    });

    StabilityOpts stability_opt;
    auto* stability = app.add_subcommand(
        "stability", "Certification likelihood of sampled networks in a linear system loop");
    stability->add_option("--a-file", stability_opt.a_file,
                          "system matrix JSON (2D array); default: built-in demo system");
    stability->add_option("--q-file", stability_opt.q_file,
                          "Lyapunov Q JSON (2D array); default: identity");
    stability->add_option("--archs", stability_opt.archs,
                          "comma list of architectures (widthxdepth shorthand)");
    stability->add_option("--sigma-w", stability_opt.sigma_w, "weight sampling std");
    stability->add_option("--trials", stability_opt.trials, "sampled networks per architecture");
    auto* stability_seed = stability->add_option("--seed", stability_opt.seed, "master seed");
    stability->add_option("--mode", stability_opt.mode,
                          "exact (per-sample weights) or rmt (architecture only)");
    stability->add_option("--threads", stability_opt.threads,
                          "worker threads (never changes results)");
    stability->add_option("--out", stability_opt.out, "output CSV path, - for stdout");
    stability->add_flag("--reproducible", stability_opt.reproducible,
                        "omit timestamp from metadata");
    stability->callback([&] {
        stability_opt.seed_given = stability_seed->count() > 0;
        run_stability(stability_opt);
    });

    TrajectoryOpts trajectory_opt;
    auto* trajectory = app.add_subcommand(
        "trajectory", "Circle-stretch expressiveness across a width x depth grid");
    trajectory->add_option("--widths", trajectory_opt.widths, "hidden widths")->required();
    trajectory->add_option("--depths", trajectory_opt.depths, "hidden depths")->required();
    trajectory->add_option("--sigma-w", trajectory_opt.sigma_w, "weight sampling std");
    auto* trajectory_seed = trajectory->add_option("--seed", trajectory_opt.seed, "master seed");
    trajectory->add_option("--points", trajectory_opt.points, "circle sample count");
    trajectory->add_option("--radius", trajectory_opt.radius, "circle radius");
    trajectory->add_option("--io-dim", trajectory_opt.io_dim, "input/output width");
    trajectory->add_option("--threads", trajectory_opt.threads,
                           "worker threads (never changes results)");
    trajectory->add_option("--out", trajectory_opt.out, "output CSV path, - for stdout");
    trajectory->add_flag("--reproducible", trajectory_opt.reproducible,
                         "omit timestamp from metadata");
    trajectory->callback([&] {
        trajectory_opt.seed_given = trajectory_seed->count() > 0;
        run_trajectory(trajectory_opt);
    });

    TrainStudyOpts train_opt;
    auto* train = app.add_subcommand(
        "train-study", "Train small regression networks and compare weight-norm estimates");
    train->add_option("--config", train_opt.config_file, "JSON config file");
    train->add_option("--out-dir", train_opt.out_dir, "output directory")->required();
    auto* t_hidden = train->add_option("--hidden", train_opt.hidden,
                                       "hidden sizes, e.g. \"64,256\"");
    auto* t_seed = train->add_option("--seed", train_opt.seed, "master seed");
    auto* t_epochs = train->add_option("--epochs", train_opt.epochs, "training epochs");
    auto* t_lr = train->add_option("--learning-rate", train_opt.learning_rate, "SGD step size");
    auto* t_batch = train->add_option("--batch-size", train_opt.batch_size, "mini-batch size");
    auto* t_dataset = train->add_option("--dataset-size", train_opt.dataset_size,
                                        "training set size");
    auto* t_act = train->add_option("--activation", train_opt.activation, "hidden activation");
    auto* t_bins = train->add_option("--bins", train_opt.bins, "histogram bins");
    train->add_flag("--reproducible", train_opt.reproducible, "omit timestamp from metadata");
    train->callback([&] {
        train_opt.hidden_given = t_hidden->count() > 0;
        train_opt.seed_given = t_seed->count() > 0;
        train_opt.epochs_given = t_epochs->count() > 0;
        train_opt.lr_given = t_lr->count() > 0;
        train_opt.batch_given = t_batch->count() > 0;
        train_opt.dataset_given = t_dataset->count() > 0;
        train_opt.activation_given = t_act->count() > 0;
        train_opt.bins_given = t_bins->count() > 0;
        run_train_study(train_opt);
    });

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 2;
    }
}
