#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "lipscope/matrix.hpp"
#include "lipscope/rng.hpp"

namespace lipscope {

enum class Activation { relu, tanh_sat, sigmoid, hard_tanh, identity };

// Names used in JSON files and on the command line:
// relu, tanh, sigmoid, hard_tanh, identity.
Activation activation_from_name(const std::string& name);
std::string activation_name(Activation a);

double activation_value(Activation a, double x);
double activation_derivative(Activation a, double x);
std::vector<double> activation_apply(Activation a, const std::vector<double>& v);

// Layer widths n_0 .. n_{L+1} (input, L hidden layers, output) plus the
// activation used after every layer except the last.
struct Architecture {
    std::vector<std::size_t> widths;
    Activation activation = Activation::relu;

    std::size_t hidden_layers() const { return widths.size() - 2; }
    std::size_t weight_count() const { return widths.size() - 1; }
    void validate() const;
};

// Fully connected network.  weights[l] maps layer l to layer l+1 and has
// shape widths[l+1] x widths[l]; biases[l] has length widths[l+1].
// sigma_w / sigma_b record the scale the parameters were sampled with.
struct Network {
    Architecture arch;
    std::vector<Matrix> weights;
    std::vector<std::vector<double>> biases;
    double sigma_w = 1.0;
    double sigma_b = 0.0;

    void validate() const;
};

// Draws every weight entry i.i.d. N(0, sigma_w^2) and every bias entry
// N(0, sigma_b^2), layer by layer (weights row-major, then the layer's
// biases).  sigma_b may be zero, which yields exactly zero biases.
Network sample_network(const Architecture& arch, double sigma_w, double sigma_b,
                       RngStream& stream);

std::vector<double> forward(const Network& net, const std::vector<double>& input);

nlohmann::ordered_json network_to_json(const Network& net);
Network network_from_json(const nlohmann::json& j);

}  // namespace lipscope
