// Python bindings for the lipscope core: matrices, sampling, bounds,
// stability certification, trajectory stretch, and the training study.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lipscope/bounds.hpp"
#include "lipscope/empirics.hpp"
#include "lipscope/matrix.hpp"
#include "lipscope/network.hpp"
#include "lipscope/rng.hpp"
#include "lipscope/stability.hpp"
#include "lipscope/trajectory.hpp"
#include "lipscope/version.hpp"

namespace py = pybind11;
using namespace lipscope;

namespace {

Matrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw std::invalid_argument("matrix rows must be nonempty");
    const std::size_t r = rows.size(), c = rows.front().size();
    std::vector<double> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c)
            throw std::invalid_argument("matrix rows must all have the same length");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(entries));
}

std::vector<std::vector<double>> matrix_to_rows(const Matrix& m) {
    std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rows;
}

Architecture make_arch(const std::vector<std::size_t>& widths, const std::string& activation) {
    Architecture arch{widths, activation_from_name(activation)};
    arch.validate();
    return arch;
}

}  // namespace

PYBIND11_MODULE(_lipscope, m) {
    m.doc() = "Lipschitz bound exploration for fully connected networks (C++ core)";
    m.attr("__version__") = kVersion;

    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

    py::class_<Matrix>(m, "Matrix", "Dense row-major matrix of doubles")
        .def(py::init(&matrix_from_rows), py::arg("rows"),
             "Build from a list of equal-length rows")
        .def_static("identity", &Matrix::identity, py::arg("n"))
        .def_property_readonly("rows", &Matrix::rows)
        .def_property_readonly("cols", &Matrix::cols)
        .def("to_rows", &matrix_to_rows, "Entries as a list of row lists")
        .def("__getitem__",
             [](const Matrix& m_, std::pair<std::size_t, std::size_t> ij) {
                 if (ij.first >= m_.rows() || ij.second >= m_.cols())
                     throw py::index_error("matrix index out of range");
                 return m_(ij.first, ij.second);
             })
        .def("__repr__", [](const Matrix& m_) { return "Matrix(" + shape_string(m_) + ")"; });

    m.def("mat_mul", &mat_mul, py::arg("a"), py::arg("b"));
    m.def("spectral_norm", &spectral_norm, py::arg("m"),
          "Largest singular value (power iteration)");
    m.def("sym_eigs", &sym_eigs, py::arg("m"),
          "Eigenvalues of a symmetric matrix, ascending (cyclic Jacobi)");
    m.def("solve_linear", &solve_linear, py::arg("a"), py::arg("b"));
    m.def("lyapunov_solve", &lyapunov_solve, py::arg("a"), py::arg("q"),
          "Solve p a + a^T p = -q for symmetric p");
    m.def("is_spd", &is_spd, py::arg("m"));
    m.def("is_hurwitz", &is_hurwitz, py::arg("a"));

    py::class_<RngStream>(m, "RngStream", "Counter-based deterministic generator")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def_property_readonly("origin_seed", &RngStream::origin_seed)
        .def("next_u64", &RngStream::next_u64)
        .def("next_uniform", &RngStream::next_uniform)
        .def("next_standard_normal", &RngStream::next_standard_normal);
    m.def("derive_substream", &derive_substream, py::arg("master_seed"), py::arg("index"));
    m.def("gaussian_matrix", &gaussian_matrix, py::arg("stream"), py::arg("rows"),
          py::arg("cols"), py::arg("sigma"));

    py::class_<Network>(m, "Network", "Fully connected network")
        .def_property_readonly("widths", [](const Network& n) { return n.arch.widths; })
        .def_property_readonly("activation",
                               [](const Network& n) { return activation_name(n.arch.activation); })
        .def_readonly("weights", &Network::weights)
        .def_readonly("biases", &Network::biases)
        .def_readonly("sigma_w", &Network::sigma_w)
        .def_readonly("sigma_b", &Network::sigma_b)
        .def("to_json", [](const Network& n) { return network_to_json(n).dump(2); },
             "Serialize to the canonical JSON text")
        .def_static("from_json",
                    [](const std::string& text) {
                        return network_from_json(nlohmann::json::parse(text));
                    },
                    py::arg("text"))
        .def("__repr__", [](const Network& n) {
            std::string s = "Network([";
            for (std::size_t i = 0; i < n.arch.widths.size(); ++i) {
                if (i) s += ", ";
                s += std::to_string(n.arch.widths[i]);
            }
            return s + "], " + activation_name(n.arch.activation) + ")";
        });

    m.def(
        "sample_network",
        [](const std::vector<std::size_t>& widths, double sigma_w, double sigma_b,
           std::uint64_t seed, const std::string& activation) {
            RngStream stream = stream_new(seed);
            return sample_network(make_arch(widths, activation), sigma_w, sigma_b, stream);
        },
        py::arg("widths"), py::arg("sigma_w"), py::arg("sigma_b"), py::arg("seed"),
        py::arg("activation") = "relu",
        "Sample a network with i.i.d. N(0, sigma_w^2) weights");
    m.def("forward", &forward, py::arg("net"), py::arg("input"));

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("exact_upper", &BoundReport::exact_upper)
        .def_readonly("exact_lower", &BoundReport::exact_lower)
        .def_readonly("rmt_upper", &BoundReport::rmt_upper)
        .def_readonly("rmt_lower", &BoundReport::rmt_lower)
        .def_readonly("sigma_w", &BoundReport::sigma_w)
        .def_readonly("widths", &BoundReport::widths);
    m.def("exact_upper_bound", &exact_upper_bound, py::arg("net"));
    m.def("exact_lower_bound", &exact_lower_bound, py::arg("net"));
    m.def(
        "rmt_upper_bound",
        [](const std::vector<std::size_t>& widths, double sigma_w) {
            return rmt_upper_bound(make_arch(widths, "relu"), sigma_w);
        },
        py::arg("widths"), py::arg("sigma_w"));
    m.def(
        "rmt_lower_bound",
        [](const std::vector<std::size_t>& widths, double sigma_w, double correction) {
            return rmt_lower_bound(make_arch(widths, "relu"), sigma_w, correction);
        },
        py::arg("widths"), py::arg("sigma_w"), py::arg("correction") = 0.0);
    m.def("product_matrix_sigma", &product_matrix_sigma, py::arg("widths"), py::arg("sigma_w"));
    m.def(
        "gaussian_extreme_estimates",
        [](std::size_t rows, std::size_t cols, double sigma) {
            const ExtremeEstimate e = gaussian_extreme_estimates(rows, cols, sigma);
            return py::make_tuple(e.low, e.high);
        },
        py::arg("rows"), py::arg("cols"), py::arg("sigma"),
        "Expected (smallest, largest) singular values of a Gaussian matrix");
    m.def("bound_report", &bound_report, py::arg("net"));

    py::class_<StabilitySystem>(m, "StabilitySystem")
        .def_readonly("a", &StabilitySystem::a)
        .def_readonly("q", &StabilitySystem::q)
        .def_readonly("p", &StabilitySystem::p)
        .def_readonly("threshold", &StabilitySystem::threshold);
    m.def("system_new", &system_new, py::arg("a"), py::arg("q"),
          "Lyapunov certificate and safe Lipschitz threshold for x' = a x + f(x)");
    m.def(
        "certify_network",
        [](const StabilitySystem& sys, const Network& net, const std::string& mode) {
            if (mode != "exact" && mode != "rmt")
                throw std::invalid_argument("mode must be \"exact\" or \"rmt\"");
            return certify_network(sys, net,
                                   mode == "exact" ? CertifyMode::exact : CertifyMode::rmt);
        },
        py::arg("sys"), py::arg("net"), py::arg("mode") = "exact");
    m.def(
        "stability_likelihood",
        [](const StabilitySystem& sys, const std::vector<std::size_t>& widths, double sigma_w,
           std::size_t trials, std::uint64_t master_seed, unsigned threads,
           const std::string& activation) {
            return stability_likelihood(sys, make_arch(widths, activation), sigma_w, trials,
                                        master_seed, threads);
        },
        py::arg("sys"), py::arg("widths"), py::arg("sigma_w"), py::arg("trials"),
        py::arg("master_seed"), py::arg("threads") = 1, py::arg("activation") = "relu",
        "Percent of sampled networks whose exact upper bound certifies");

    py::class_<Trajectory>(m, "Trajectory")
        .def(py::init([](std::vector<std::vector<double>> points, bool closed) {
                 Trajectory t{std::move(points), closed};
                 t.validate();
                 return t;
             }),
             py::arg("points"), py::arg("closed") = false)
        .def_readonly("points", &Trajectory::points)
        .def_readonly("closed", &Trajectory::closed)
        .def_property_readonly("dim", &Trajectory::dim)
        .def("length", &trajectory_length);
    m.def("circle_trajectory", &circle_trajectory, py::arg("dim"), py::arg("radius"),
          py::arg("num_points"));
    m.def("polyline_length", &polyline_length, py::arg("points"), py::arg("closed") = false);
    m.def("trajectory_length", &trajectory_length, py::arg("trajectory"));
    m.def("output_trajectory_length", &output_trajectory_length, py::arg("net"),
          py::arg("trajectory"));
    m.def("rmt_trajectory_lower", &rmt_trajectory_lower, py::arg("width"), py::arg("depth"),
          py::arg("sigma_w"));

    py::class_<ExpressivenessRow>(m, "ExpressivenessRow")
        .def_readonly("width", &ExpressivenessRow::width)
        .def_readonly("depth", &ExpressivenessRow::depth)
        .def_readonly("stretch_ratio", &ExpressivenessRow::stretch_ratio)
        .def_readonly("rmt_lower", &ExpressivenessRow::rmt_lower)
        .def_readonly("exact_upper", &ExpressivenessRow::exact_upper);
    m.def("expressiveness_correlation", &expressiveness_correlation, py::arg("widths"),
          py::arg("depths"), py::arg("sigma_w"), py::arg("input"), py::arg("master_seed"),
          py::arg("threads") = 1);

    py::class_<Sample>(m, "Sample")
        .def(py::init([](double x1, double x2, double target) {
                 return Sample{{x1, x2}, target};
             }),
             py::arg("x1"), py::arg("x2"), py::arg("target"))
        .def_property_readonly(
            "input", [](const Sample& s) { return py::make_tuple(s.input[0], s.input[1]); })
        .def_readonly("target", &Sample::target);
    m.def("regression_target", &regression_target, py::arg("x1"), py::arg("x2"));
    m.def("generate_dataset", &generate_dataset, py::arg("size"), py::arg("seed"));

    py::class_<TrainConfig>(m, "TrainConfig")
        .def(py::init([](std::size_t hidden, std::size_t epochs, double learning_rate,
                         std::size_t batch_size, std::size_t dataset_size, std::uint64_t seed,
                         const std::string& activation) {
                 TrainConfig cfg;
                 cfg.arch = make_arch({2, hidden, 1}, activation);
                 cfg.epochs = epochs;
                 cfg.learning_rate = learning_rate;
                 cfg.batch_size = batch_size;
                 cfg.dataset_size = dataset_size;
                 cfg.seed = seed;
                 cfg.validate();
                 return cfg;
             }),
             py::arg("hidden"), py::arg("epochs") = 40, py::arg("learning_rate") = 0.01,
             py::arg("batch_size") = 32, py::arg("dataset_size") = 15625, py::arg("seed") = 0,
             py::arg("activation") = "tanh")
        .def_readonly("epochs", &TrainConfig::epochs)
        .def_readonly("learning_rate", &TrainConfig::learning_rate)
        .def_readonly("batch_size", &TrainConfig::batch_size)
        .def_readonly("dataset_size", &TrainConfig::dataset_size)
        .def_readonly("seed", &TrainConfig::seed);

    py::class_<TrainResult>(m, "TrainResult")
        .def_readonly("network", &TrainResult::network)
        .def_readonly("final_mse", &TrainResult::final_mse);
    m.def("train_sgd", &train_sgd, py::arg("cfg"), py::arg("data"),
          "Mini-batch SGD on mean squared error");
    m.def("mse_loss", &mse_loss, py::arg("net"), py::arg("data"));

    py::class_<GaussianFit>(m, "GaussianFit")
        .def_readonly("mean", &GaussianFit::mean)
        .def_readonly("std_dev", &GaussianFit::std_dev)
        .def_readonly("sample_count", &GaussianFit::sample_count);
    m.def("fit_gaussian", &fit_gaussian, py::arg("m"));
    m.def("estimated_norm", &estimated_norm, py::arg("m"),
          "Spectral-norm estimate from fitted entry statistics");

    py::class_<NormComparisonRow>(m, "NormComparisonRow")
        .def_readonly("network", &NormComparisonRow::network)
        .def_readonly("layer", &NormComparisonRow::layer)
        .def_readonly("true_norm", &NormComparisonRow::true_norm)
        .def_readonly("estimated_norm", &NormComparisonRow::estimated_norm)
        .def_readonly("relative_error", &NormComparisonRow::relative_error);
    m.def("norm_comparison_report", &norm_comparison_report, py::arg("nets"));

    m.def(
        "weight_histogram",
        [](const Matrix& mat, std::size_t bins) {
            std::vector<std::pair<double, std::size_t>> out;
            for (const HistogramBin& b : weight_histogram(mat, bins))
                out.emplace_back(b.center, b.count);
            return out;
        },
        py::arg("m"), py::arg("bins"), "List of (bin_center, count) pairs");
}
