#pragma once

#include <cstdint>

#include "lipscope/bounds.hpp"
#include "lipscope/matrix.hpp"
#include "lipscope/network.hpp"

namespace lipscope {

// Linear system x' = A x + f(x) together with the Lyapunov certificate
// P A + A^T P = -Q.  A feedback term f is provably safe when its Lipschitz
// constant stays below threshold = lambda_min(Q) / (2 lambda_max(P)).
struct StabilitySystem {
    Matrix a;
    Matrix q;
    Matrix p;
    double threshold = 0.0;
};

// Solves the Lyapunov equation for (a, q) and derives the Lipschitz
// threshold.  Throws NumericError when q is not symmetric positive definite
// or when a is not Hurwitz (no positive definite solution exists).
StabilitySystem system_new(const Matrix& a, const Matrix& q);

enum class CertifyMode { exact, rmt };

// True when the chosen Lipschitz upper bound of the network (exact: from
// its weights; rmt: from its architecture and sigma_w) is at most the
// system threshold.  The network must map the state space to itself.
bool certify_network(const StabilitySystem& sys, const Network& net, CertifyMode mode);

// Fraction (in percent) of networks sampled from `arch` at scale sigma_w
// (zero biases) whose exact upper bound certifies against the system.
// Trial i uses derive_substream(master_seed, i), so the result does not
// depend on `threads`.
double stability_likelihood(const StabilitySystem& sys, const Architecture& arch,
                            double sigma_w, std::size_t trials, std::uint64_t master_seed,
                            unsigned threads = 1);

}  // namespace lipscope
