#include "hougaard/random.hpp"

#include <cmath>
#include <stdexcept>

namespace hougaard {

namespace {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Avalanche-mixes two words into a stream key. Not formally injective but
// 64-bit collisions are immaterial for statistical independence claims.
inline std::uint64_t mix_key(std::uint64_t a, std::uint64_t b) {
    std::uint64_t state = a ^ (0xD1B54A32D192ED03ULL * (b + 1));
    std::uint64_t k = splitmix64(state);
    return splitmix64(state) ^ (k << 1);
}

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RandomStream::RandomStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : RandomStream(master_seed, stream_index, mix_key(master_seed, stream_index)) {}

RandomStream::RandomStream(std::uint64_t master, std::uint64_t index, std::uint64_t key)
    : master_(master), index_(index), key_(key) {
    std::uint64_t st = key_;
    for (auto& s : s_) s = splitmix64(st);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

RandomStream RandomStream::substream(std::uint64_t index) const {
    return RandomStream(master_, index, mix_key(key_, index));
}

std::uint64_t RandomStream::next_u64() {
    std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RandomStream::uniform() {
    // 53 random bits, offset by half an ulp so 0 and 1 are excluded.
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
}

double RandomStream::exponential() { return -std::log(uniform()); }

double RandomStream::gamma(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0))
        throw std::invalid_argument("gamma: shape and scale must be positive");
    if (shape < 1.0) {
        // Boost: Gamma(a) = Gamma(a+1) * U^{1/a}.
        double g = gamma(shape + 1.0, 1.0);
        return scale * g * std::pow(uniform(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return scale * d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return scale * d * v;
    }
}

std::uint64_t RandomStream::poisson(double rate) {
    if (rate < 0.0 || !std::isfinite(rate))
        throw std::invalid_argument("poisson: rate must be finite and nonnegative");
    std::uint64_t total = 0;
    // Chunk large rates so exp(-rate) stays well above the underflow floor;
    // Poisson(a + b) = Poisson(a) + Poisson(b) keeps this exact.
    while (rate > 400.0) {
        total += poisson(400.0);
        rate -= 400.0;
    }
    const double limit = std::exp(-rate);
    double prod = 1.0;
    std::uint64_t k = 0;
    do {
        ++k;
        prod *= uniform();
    } while (prod > limit);
    return total + k - 1;
}

double RandomStream::inverse_gaussian(double mean, double shape) {
    if (!(mean > 0.0) || !(shape > 0.0))
        throw std::invalid_argument("inverse_gaussian: mean and shape must be positive");
    const double n = normal();
    const double y = n * n;
    const double x = mean + mean * mean * y / (2.0 * shape) -
                     mean / (2.0 * shape) * std::sqrt(4.0 * mean * shape * y + mean * mean * y * y);
    if (uniform() <= mean / (mean + x)) return x;
    return mean * mean / x;
}

}  // namespace hougaard
