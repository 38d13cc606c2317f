#include "lipscope/network.hpp"

#include <algorithm>
#include <cmath>

namespace lipscope {

Activation activation_from_name(const std::string& name) {
    if (name == "relu") return Activation::relu;
    if (name == "tanh") return Activation::tanh_sat;
    if (name == "sigmoid") return Activation::sigmoid;
    if (name == "hard_tanh") return Activation::hard_tanh;
    if (name == "identity") return Activation::identity;
    throw std::invalid_argument("unknown activation \"" + name +
                                "\" (expected relu, tanh, sigmoid, hard_tanh or identity)");
}

std::string activation_name(Activation a) {
    switch (a) {
        case Activation::relu: return "relu";
        case Activation::tanh_sat: return "tanh";
        case Activation::sigmoid: return "sigmoid";
        case Activation::hard_tanh: return "hard_tanh";
        case Activation::identity: return "identity";
    }
    throw std::invalid_argument("invalid activation enum value");
}

double activation_value(Activation a, double x) {
    switch (a) {
        case Activation::relu: return x > 0.0 ? x : 0.0;
        case Activation::tanh_sat: return std::tanh(x);
        case Activation::sigmoid: return 1.0 / (1.0 + std::exp(-x));
        case Activation::hard_tanh: return std::clamp(x, -1.0, 1.0);
        case Activation::identity: return x;
    }
    throw std::invalid_argument("invalid activation enum value");
}

double activation_derivative(Activation a, double x) {
    switch (a) {
        case Activation::relu: return x > 0.0 ? 1.0 : 0.0;
        case Activation::tanh_sat: {
            const double t = std::tanh(x);
            return 1.0 - t * t;
        }
        case Activation::sigmoid: {
            const double s = 1.0 / (1.0 + std::exp(-x));
            return s * (1.0 - s);
        }
        case Activation::hard_tanh: return std::fabs(x) < 1.0 ? 1.0 : 0.0;
        case Activation::identity: return 1.0;
    }
    throw std::invalid_argument("invalid activation enum value");
}

std::vector<double> activation_apply(Activation a, const std::vector<double>& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = activation_value(a, v[i]);
    return out;
}

void Architecture::validate() const {
    if (widths.size() < 2)
        throw std::invalid_argument("architecture needs at least input and output widths, got " +
                                    std::to_string(widths.size()) + " entries");
    for (std::size_t w : widths)
        if (w == 0) throw std::invalid_argument("architecture widths must be positive");
}

void Network::validate() const {
    arch.validate();
    if (!(sigma_w > 0.0))
        throw std::invalid_argument("network sigma_w must be positive");
    if (!(sigma_b >= 0.0))
        throw std::invalid_argument("network sigma_b must be nonnegative");
    if (weights.size() != arch.weight_count())
        throw std::invalid_argument("network has " + std::to_string(weights.size()) +
                                    " weight matrices, architecture expects " +
                                    std::to_string(arch.weight_count()));
    if (biases.size() != weights.size())
        throw std::invalid_argument("network has " + std::to_string(biases.size()) +
                                    " bias vectors, expected " + std::to_string(weights.size()));
    for (std::size_t l = 0; l < weights.size(); ++l) {
        if (weights[l].rows() != arch.widths[l + 1] || weights[l].cols() != arch.widths[l])
            throw std::invalid_argument("weight matrix " + std::to_string(l) + " is " +
                                        shape_string(weights[l]) + ", expected " +
                                        std::to_string(arch.widths[l + 1]) + "x" +
                                        std::to_string(arch.widths[l]));
        if (biases[l].size() != arch.widths[l + 1])
            throw std::invalid_argument("bias vector " + std::to_string(l) + " has length " +
                                        std::to_string(biases[l].size()) + ", expected " +
                                        std::to_string(arch.widths[l + 1]));
        for (double b : biases[l])
            if (!std::isfinite(b)) throw std::invalid_argument("bias entries must be finite");
    }
}

Network sample_network(const Architecture& arch, double sigma_w, double sigma_b,
                       RngStream& stream) {
    arch.validate();
    if (!(sigma_w > 0.0))
        throw std::invalid_argument("sample_network: sigma_w must be positive, got " +
                                    std::to_string(sigma_w));
    if (!(sigma_b >= 0.0))
        throw std::invalid_argument("sample_network: sigma_b must be nonnegative, got " +
                                    std::to_string(sigma_b));

    Network net;
    net.arch = arch;
    net.sigma_w = sigma_w;
    net.sigma_b = sigma_b;
    for (std::size_t l = 0; l + 1 < arch.widths.size(); ++l) {
        net.weights.push_back(gaussian_matrix(stream, arch.widths[l + 1], arch.widths[l],
                                              sigma_w));
        std::vector<double> b(arch.widths[l + 1]);
        // Draw even when sigma_b is zero so the weight stream does not depend
        // on the bias scale; 0 * z is exactly zero.
        for (double& v : b) v = sigma_b * stream.next_standard_normal();
        net.biases.push_back(std::move(b));
    }
    return net;
}

std::vector<double> forward(const Network& net, const std::vector<double>& input) {
    if (input.size() != net.arch.widths.front())
        throw std::invalid_argument("forward: input has length " +
                                    std::to_string(input.size()) + ", network expects " +
                                    std::to_string(net.arch.widths.front()));
    std::vector<double> h = input;
    for (std::size_t l = 0; l < net.weights.size(); ++l) {
        std::vector<double> z = mat_vec(net.weights[l], h);
        for (std::size_t i = 0; i < z.size(); ++i) z[i] += net.biases[l][i];
        h = (l + 1 < net.weights.size()) ? activation_apply(net.arch.activation, z)
                                         : std::move(z);
    }
    return h;
}

nlohmann::ordered_json network_to_json(const Network& net) {
    nlohmann::ordered_json j;
    j["widths"] = net.arch.widths;
    j["activation"] = activation_name(net.arch.activation);
    j["sigma_w"] = net.sigma_w;
    j["sigma_b"] = net.sigma_b;
    auto& weights = j["weights"] = nlohmann::ordered_json::array();
    for (const Matrix& w : net.weights) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < w.rows(); ++i) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (std::size_t jcol = 0; jcol < w.cols(); ++jcol) row.push_back(w(i, jcol));
            rows.push_back(std::move(row));
        }
        weights.push_back(std::move(rows));
    }
    j["biases"] = net.biases;
    return j;
}

namespace {

const nlohmann::json& require_field(const nlohmann::json& j, const char* field) {
    auto it = j.find(field);
    if (it == j.end())
        throw std::invalid_argument(std::string("network json is missing field \"") + field +
                                    "\"");
    return *it;
}

}  // namespace

Network network_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("network json must be an object");

    Network net;
    try {
        net.arch.widths = require_field(j, "widths").get<std::vector<std::size_t>>();
    } catch (const nlohmann::json::exception&) {
        throw std::invalid_argument("field \"widths\" must be an array of positive integers");
    }
    net.arch.activation = activation_from_name(require_field(j, "activation").get<std::string>());
    try {
        net.sigma_w = require_field(j, "sigma_w").get<double>();
        net.sigma_b = require_field(j, "sigma_b").get<double>();
    } catch (const nlohmann::json::exception&) {
        throw std::invalid_argument("fields \"sigma_w\" and \"sigma_b\" must be numbers");
    }

    const auto& weights = require_field(j, "weights");
    const auto& biases = require_field(j, "biases");
    if (!weights.is_array() || !biases.is_array())
        throw std::invalid_argument("fields \"weights\" and \"biases\" must be arrays");

    net.arch.validate();
    if (weights.size() != net.arch.weight_count())
        throw std::invalid_argument("field \"weights\" has " + std::to_string(weights.size()) +
                                    " matrices, widths imply " +
                                    std::to_string(net.arch.weight_count()));
    if (biases.size() != weights.size())
        throw std::invalid_argument("field \"biases\" has " + std::to_string(biases.size()) +
                                    " vectors, expected " + std::to_string(weights.size()));

    for (std::size_t l = 0; l < weights.size(); ++l) {
        const auto& wj = weights[l];
        const std::size_t rows = net.arch.widths[l + 1];
        const std::size_t cols = net.arch.widths[l];
        if (!wj.is_array() || wj.size() != rows)
            throw std::invalid_argument("weights[" + std::to_string(l) + "] must have " +
                                        std::to_string(rows) + " rows");
        std::vector<double> entries;
        entries.reserve(rows * cols);
        for (std::size_t i = 0; i < rows; ++i) {
            const auto& rowj = wj[i];
            if (!rowj.is_array() || rowj.size() != cols)
                throw std::invalid_argument("weights[" + std::to_string(l) + "] row " +
                                            std::to_string(i) + " must have " +
                                            std::to_string(cols) + " entries");
            for (const auto& e : rowj) {
                if (!e.is_number())
                    throw std::invalid_argument("weights[" + std::to_string(l) +
                                                "] entries must be numbers");
                entries.push_back(e.get<double>());
            }
        }
        try {
            net.weights.emplace_back(rows, cols, std::move(entries));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("weights[" + std::to_string(l) +
                                        "] entries must be finite numbers");
        }

        const auto& bj = biases[l];
        if (!bj.is_array() || bj.size() != rows)
            throw std::invalid_argument("biases[" + std::to_string(l) + "] must have " +
                                        std::to_string(rows) + " entries");
        std::vector<double> b;
        b.reserve(rows);
        for (const auto& e : bj) {
            if (!e.is_number())
                throw std::invalid_argument("biases[" + std::to_string(l) +
                                            "] entries must be numbers");
            b.push_back(e.get<double>());
        }
        net.biases.push_back(std::move(b));
    }

    net.validate();
    return net;
}

}  // namespace lipscope
