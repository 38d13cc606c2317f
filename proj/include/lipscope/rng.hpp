#pragma once

#include <cstdint>

#include "lipscope/matrix.hpp"

namespace lipscope {

// Deterministic 64-bit generator (SplitMix64).  The state advances by a
// fixed odd increment and each output is an avalanche mix of the new state:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
//   z ^= z >> 27;  z *= 0x94D049BB133111EB
//   z ^= z >> 31
//
// Uniform doubles keep the top 53 bits: (z >> 11) * 2^-53, giving values in
// [0, 1).  The generator is counter-based, so identically seeded streams
// produce identical sequences on every platform.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(seed), origin_seed_(seed) {}

    std::uint64_t origin_seed() const { return origin_seed_; }

    std::uint64_t next_u64();
    double next_uniform();

    // Standard normal via the polar (rejection) Box-Muller transform; the
    // second variate of each accepted pair is cached and returned on the
    // following call.
    double next_standard_normal();

private:
    std::uint64_t state_;
    std::uint64_t origin_seed_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

RngStream stream_new(std::uint64_t seed);

// Independent stream for (master, index), derived by avalanche-mixing
// master XOR index * 0x9E3779B97F4A7C15.  Used to give every Monte Carlo
// trial its own stream so that parallel runs stay reproducible.
RngStream derive_substream(std::uint64_t master_seed, std::uint64_t index);

// rows x cols matrix of independent N(0, sigma^2) entries, drawn row-major.
Matrix gaussian_matrix(RngStream& stream, std::size_t rows, std::size_t cols, double sigma);

}  // namespace lipscope
