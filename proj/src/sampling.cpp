#include "g2/sampling.hpp"

namespace g2 {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31U);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream) {
    // FNV-1a over the label, then mixed with the seed.
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : stream) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return splitmix64(seed ^ splitmix64(h));
}

long Sampler::integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1U;
    return lo + static_cast<long>(engine_() % span);
}

Rational Sampler::rational(long max_num, long max_den) {
    const long num = integer(-max_num, max_num);
    const long den = integer(1, max_den);
    return Rational(num, den);
}

Rational Sampler::nonzero_rational(long max_num, long max_den) {
    Rational r;
    do {
        r = rational(max_num, max_den);
    } while (r.is_zero());
    return r;
}

Vec7 Sampler::vec() {
    Vec7 v;
    for (int i = 0; i < kDim; ++i) v[i] = rational();
    return v;
}

Vec7 Sampler::nonzero_vec() {
    Vec7 v;
    do {
        v = vec();
    } while (v.is_zero());
    return v;
}

Mat7 Sampler::matrix() {
    Mat7 m;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) m(i, j) = rational();
    }
    return m;
}

Mat7 Sampler::symmetric() {
    Mat7 m;
    for (int i = 0; i < kDim; ++i) {
        for (int j = i; j < kDim; ++j) {
            m(i, j) = rational();
            m(j, i) = m(i, j);
        }
    }
    return m;
}

Mat7 Sampler::skew() {
    Mat7 m;
    for (int i = 0; i < kDim; ++i) {
        for (int j = i + 1; j < kDim; ++j) {
            m(i, j) = rational();
            m(j, i) = -m(i, j);
        }
    }
    return m;
}

Mat7 Sampler::sparse_matrix() {
    Mat7 m;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            if (coin()) m(i, j) = rational();
        }
    }
    return m;
}

}  // namespace g2
