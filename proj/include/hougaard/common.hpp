#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hougaard {

inline constexpr const char* kVersion = "0.1.0";

/// Thrown when a rejection sampler's cost/acceptance guard trips.
/// Converts pathological parameter choices into errors instead of hangs.
class GuardError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A real interval with per-endpoint closure flags. Infinite endpoints are
/// allowed; a closed infinite endpoint marks an attainable boundary member
/// (e.g. the mu = +inf member of the p > 2 families).
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool lo_closed = false;
    bool hi_closed = false;

    bool contains(double x) const {
        if (std::isnan(x)) return false;
        if (x < lo || (x == lo && !lo_closed)) return false;
        if (x > hi || (x == hi && !hi_closed)) return false;
        return true;
    }

    bool contains_interior(double x) const { return x > lo && x < hi && std::isfinite(x); }

    std::string str() const;
};

/// Runs fn(begin, end) over [0, n) split across up to `threads` workers.
/// Results must be written to disjoint, preallocated slots so the merge
/// order is fixed by index regardless of scheduling.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    if (threads <= 1 || n < 2) {
        fn(std::size_t{0}, n);
        return;
    }
    unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t b = static_cast<std::size_t>(w) * chunk;
        std::size_t e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, b, e] { fn(b, e); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace hougaard
