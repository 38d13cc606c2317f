#include "lipscope/stability.hpp"

#include <string>
#include <vector>

#include "lipscope/parallel.hpp"
#include "lipscope/rng.hpp"

namespace lipscope {

StabilitySystem system_new(const Matrix& a, const Matrix& q) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("system matrix a must be square, got " + shape_string(a));
    if (q.rows() != a.rows() || q.cols() != a.cols())
        throw std::invalid_argument("q " + shape_string(q) + " does not match a " +
                                    shape_string(a));
    if (!is_spd(q)) throw NumericError("q must be symmetric positive definite");

    StabilitySystem sys{a, q, Matrix(a.rows(), a.rows()), 0.0};
    try {
        sys.p = lyapunov_solve(a, q);
    } catch (const NumericError&) {
        throw NumericError("a is not Hurwitz: the Lyapunov equation has no unique solution");
    }
    if (!is_spd(sys.p))
        throw NumericError("a is not Hurwitz: the Lyapunov solution is not positive definite");

    const std::vector<double> q_eigs = sym_eigs(q);
    const std::vector<double> p_eigs = sym_eigs(sys.p);
    sys.threshold = q_eigs.front() / (2.0 * p_eigs.back());
    return sys;
}

bool certify_network(const StabilitySystem& sys, const Network& net, CertifyMode mode) {
    const std::size_t dim = sys.a.rows();
    if (net.arch.widths.front() != dim || net.arch.widths.back() != dim)
        throw std::invalid_argument(
            "network must map the state space to itself: expected input and output width " +
            std::to_string(dim) + ", got " + std::to_string(net.arch.widths.front()) + " and " +
            std::to_string(net.arch.widths.back()));
    const double bound = mode == CertifyMode::exact ? exact_upper_bound(net)
                                                    : rmt_upper_bound(net.arch, net.sigma_w);
    return bound <= sys.threshold;
}

double stability_likelihood(const StabilitySystem& sys, const Architecture& arch,
                            double sigma_w, std::size_t trials, std::uint64_t master_seed,
                            unsigned threads) {
    arch.validate();
    if (trials == 0) throw std::invalid_argument("stability_likelihood: trials must be positive");
    std::vector<char> certified(trials, 0);
    parallel_for(trials, threads, [&](std::size_t i) {
        RngStream stream = derive_substream(master_seed, i);
        const Network net = sample_network(arch, sigma_w, 0.0, stream);
        certified[i] = certify_network(sys, net, CertifyMode::exact) ? 1 : 0;
    });
    std::size_t count = 0;
    for (char c : certified) count += c;
    return 100.0 * static_cast<double>(count) / static_cast<double>(trials);
}

}  // namespace lipscope
