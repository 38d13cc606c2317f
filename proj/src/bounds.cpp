#include "lipscope/bounds.hpp"

#include <cmath>
#include <string>

namespace lipscope {

double exact_upper_bound(const Network& net) {
    net.validate();
    double prod = 1.0;
    for (const Matrix& w : net.weights) prod *= spectral_norm(w);
    return prod;
}

double exact_lower_bound(const Network& net) {
    net.validate();
    Matrix prod = net.weights.front();
    for (std::size_t l = 1; l < net.weights.size(); ++l) prod = mat_mul(net.weights[l], prod);
    return spectral_norm(prod);
}

namespace {

void check_sigma(double sigma_w) {
    if (!(sigma_w > 0.0))
        throw std::invalid_argument("sigma_w must be positive, got " + std::to_string(sigma_w));
}

}  // namespace

double rmt_upper_bound(const Architecture& arch, double sigma_w) {
    arch.validate();
    check_sigma(sigma_w);
    double prod = 1.0;
    for (std::size_t l = 1; l < arch.widths.size(); ++l)
        prod *= sigma_w * (std::sqrt(static_cast<double>(arch.widths[l])) +
                           std::sqrt(static_cast<double>(arch.widths[l - 1])));
    return prod;
}

double rmt_lower_bound(const Architecture& arch, double sigma_w, double correction) {
    arch.validate();
    check_sigma(sigma_w);
    if (correction < 0.0)
        throw std::invalid_argument("correction must be nonnegative, got " +
                                    std::to_string(correction));
    const std::size_t last = arch.widths.size() - 1;
    double scale = sigma_w;  // sigma_w^{L+1} prod_{l=1..L} sqrt(n_l)
    for (std::size_t l = 1; l < last; ++l)
        scale *= sigma_w * std::sqrt(static_cast<double>(arch.widths[l]));
    const double edge = std::sqrt(static_cast<double>(arch.widths[last])) +
                        (1.0 + correction) * std::sqrt(static_cast<double>(arch.widths[0]));
    return scale * edge;
}

double product_matrix_sigma(const std::vector<std::size_t>& widths, double sigma_w) {
    Architecture arch{widths, Activation::identity};
    arch.validate();
    check_sigma(sigma_w);
    double s = sigma_w;
    for (std::size_t l = 2; l < widths.size(); ++l)
        s = std::sqrt(static_cast<double>(widths[l - 1])) * s * sigma_w;
    return s;
}

ExtremeEstimate gaussian_extreme_estimates(std::size_t rows, std::size_t cols, double sigma) {
    if (rows < cols)
        throw std::invalid_argument("gaussian_extreme_estimates requires rows >= cols, got " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
    if (cols == 0) throw std::invalid_argument("gaussian_extreme_estimates: cols must be positive");
    check_sigma(sigma);
    const double sr = std::sqrt(static_cast<double>(rows));
    const double sc = std::sqrt(static_cast<double>(cols));
    return {sigma * (sr - sc), sigma * (sr + sc)};
}

BoundReport bound_report(const Network& net) {
    BoundReport r;
    r.exact_upper = exact_upper_bound(net);
    r.exact_lower = exact_lower_bound(net);
    r.rmt_upper = rmt_upper_bound(net.arch, net.sigma_w);
    r.rmt_lower = rmt_lower_bound(net.arch, net.sigma_w);
    r.sigma_w = net.sigma_w;
    r.widths = net.arch.widths;
    return r;
}

}  // namespace lipscope
