#pragma once

#include "g2/linear7.hpp"
#include "g2/rational.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace g2 {

/// Mixes a base seed with a stream label so that independent suites draw
/// from independent, reproducible streams.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream);

/// Seeded generator of small exact rationals and the vectors and matrices
/// built from them. Only the raw mt19937_64 output is used, so sequences are
/// identical across standard library implementations.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    long integer(long lo, long hi);
    /// num/den with |num| <= max_num and 1 <= den <= max_den.
    Rational rational(long max_num = 9, long max_den = 6);
    Rational nonzero_rational(long max_num = 9, long max_den = 6);
    Vec7 vec();
    Vec7 nonzero_vec();
    Mat7 matrix();
    Mat7 symmetric();
    Mat7 skew();
    /// Sparse-ish matrix: each entry zero with probability 1/2.
    Mat7 sparse_matrix();
    bool coin() { return (engine_() & 1U) != 0; }

private:
    std::mt19937_64 engine_;
};

}  // namespace g2
