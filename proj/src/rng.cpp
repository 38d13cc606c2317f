#include "lipscope/rng.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lipscope {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

}  // namespace

std::uint64_t RngStream::next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
}

double RngStream::next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_standard_normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    double u, v, s;
    do {
        u = 2.0 * next_uniform() - 1.0;
        v = 2.0 * next_uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    cached_normal_ = v * f;
    has_cached_normal_ = true;
    return u * f;
}

RngStream stream_new(std::uint64_t seed) {
    return RngStream(seed);
}

RngStream derive_substream(std::uint64_t master_seed, std::uint64_t index) {
    return RngStream(mix64(master_seed ^ (index * 0x9E3779B97F4A7C15ULL)));
}

Matrix gaussian_matrix(RngStream& stream, std::size_t rows, std::size_t cols, double sigma) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("gaussian_matrix: sigma must be positive, got " +
                                    std::to_string(sigma));
    Matrix m(rows, cols);
    for (double& v : m.data()) v = sigma * stream.next_standard_normal();
    return m;
}

}  // namespace lipscope
