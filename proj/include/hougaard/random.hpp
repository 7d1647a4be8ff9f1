#pragma once

#include <cstdint>
#include <vector>

namespace hougaard {

/// Generator identifier recorded in output metadata for reproducibility.
inline constexpr const char* kRngName = "xoshiro256++ keyed by splitmix64";

/// Deterministic random stream.
///
/// The variate sequence is a pure function of (master_seed, stream_index):
/// the pair is hashed into a 64-bit key, the key seeds a xoshiro256++
/// engine via the splitmix64 sequence. Child streams are derived with
/// substream(i), which rehashes (key, i); levy_paths assigns stream_index =
/// path index and one substream per grid increment, so a path is identical
/// whether simulated alone or inside an ensemble, under any thread count.
class RandomStream {
  public:
    RandomStream(std::uint64_t master_seed, std::uint64_t stream_index);

    RandomStream substream(std::uint64_t index) const;

    std::uint64_t master_seed() const { return master_; }
    std::uint64_t stream_index() const { return index_; }

    std::uint64_t next_u64();

    /// Uniform on the open interval (0, 1).
    double uniform();
    /// Standard normal (Marsaglia polar, one spare cached).
    double normal();
    /// Exponential(1).
    double exponential();
    /// Gamma(shape, scale), Marsaglia–Tsang with the shape<1 boost.
    double gamma(double shape, double scale);
    /// Poisson(rate), exact for any finite rate (chunked Knuth product).
    std::uint64_t poisson(double rate);
    /// Inverse Gaussian(mean, shape), Michael–Schucany–Haas transformation.
    double inverse_gaussian(double mean, double shape);

  private:
    RandomStream(std::uint64_t master, std::uint64_t index, std::uint64_t key);

    std::uint64_t master_;
    std::uint64_t index_;
    std::uint64_t key_;
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace hougaard
