#pragma once

#include <cstddef>
#include <vector>

#include "lipscope/network.hpp"

namespace lipscope {

// Lipschitz bounds of one network: the exact pair computed from its weight
// matrices and the architecture-only pair predicted from random matrix
// theory at the network's sampling scale.
struct BoundReport {
    double exact_upper = 0.0;
    double exact_lower = 0.0;
    double rmt_upper = 0.0;
    double rmt_lower = 0.0;
    double sigma_w = 0.0;
    std::vector<std::size_t> widths;
};

// Product of the spectral norms of all weight matrices.  An upper bound on
// the Lipschitz constant for any 1-Lipschitz activation.
double exact_upper_bound(const Network& net);

// Spectral norm of the full product W_{L+1} ... W_1, accumulated one
// mat_mul at a time starting from the first layer.  A lower bound on the
// Lipschitz constant (the network's best linear stretch).
double exact_lower_bound(const Network& net);

// Architecture-only estimate of the upper bound for i.i.d. N(0, sigma_w^2)
// weights: prod_l sigma_w (sqrt(n_l) + sqrt(n_{l-1})).
double rmt_upper_bound(const Architecture& arch, double sigma_w);

// Architecture-only estimate of the lower bound:
//   sigma_w^{L+1} (prod_{l=1..L} sqrt(n_l)) (sqrt(n_{L+1}) + sqrt(n_0) + c sqrt(n_0))
// where c is the `correction` knob for the unresolved constant in the
// trailing term; 0 keeps the bare two-term form.
double rmt_lower_bound(const Architecture& arch, double sigma_w, double correction = 0.0);

// Entry standard deviation of the product matrix W_{L+1} ... W_1 with
// i.i.d. N(0, sigma_w^2) factors, computed by the recursion
// s_1 = sigma_w, s_l = sqrt(n_{l-1}) * s_{l-1} * sigma_w.
double product_matrix_sigma(const std::vector<std::size_t>& widths, double sigma_w);

struct ExtremeEstimate {
    double low = 0.0;
    double high = 0.0;
};

// Expected extreme singular values of a rows x cols Gaussian matrix with
// entry scale sigma: sigma (sqrt(rows) -+ sqrt(cols)).  Requires
// rows >= cols so the bracket is meaningful.
ExtremeEstimate gaussian_extreme_estimates(std::size_t rows, std::size_t cols, double sigma);

BoundReport bound_report(const Network& net);

}  // namespace lipscope
