#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hougaard/family_params.hpp"
#include "hougaard/random.hpp"
#include "hougaard/samplers.hpp"
#include "hougaard/stats.hpp"

namespace hougaard {

/// Strictly increasing sampling times. One-sided grids start at 0;
/// two-sided grids cover a symmetric window [-T, T] through 0.
struct TimeGrid {
    std::vector<double> times;
    bool two_sided = false;

    static TimeGrid one_sided(std::vector<double> times);
    static TimeGrid symmetric(double window, double step);
    std::size_t index_of(double t) const;  // exact match or throws
};

/// A simulated ensemble: n_paths x n_times values (path-major) plus the
/// spec and seed provenance needed to reproduce it.
struct PathEnsemble {
    TimeGrid grid;
    std::size_t n_paths = 0;
    std::vector<double> values;
    PowerFamilySpec spec;
    std::uint64_t master_seed = 0;
    std::uint64_t base_stream = 0;
    std::string rng = kRngName;
    std::map<std::string, std::string> metadata;

    double value(std::size_t path, std::size_t time_idx) const {
        return values[path * grid.times.size() + time_idx];
    }
    std::vector<double> column(std::size_t time_idx) const;
};

namespace paths {

/// Hougaard Levy paths on a one-sided grid: independent stationary
/// increments, each distributed as S_p(mu; dt), accumulated from X(0) = 0.
/// Exact in distribution at the grid points. Path i draws from
/// stream.substream(i) with one substream per increment, so it is the same
/// whether simulated alone or in an ensemble, under any thread count.
PathEnsemble simulate_hougaard(const PowerFamilySpec& spec, const TimeGrid& grid,
                               std::size_t n_paths, RandomStream stream, unsigned threads = 1,
                               samplers::GuardPolicy guard = {});

/// Two-sided extension on [-T, T]: for t < 0, X(t) = -X~(-t) with X~ an
/// independent copy; realized as one i.i.d. increment array accumulated
/// from 0 in both directions.
PathEnsemble extend_two_sided(const PowerFamilySpec& spec, double window, double step,
                              std::size_t n_paths, RandomStream stream, unsigned threads = 1,
                              samplers::GuardPolicy guard = {});

/// Exact fractional-Brownian-motion-with-drift ensemble (the p = 0 family
/// with general H): values are mu t + sigma B_H(t), jointly Gaussian across
/// the grid via a Cholesky factor of the SSSI covariance. Grid times must
/// be positive.  Used where the moving-average construction cannot reach
/// (H > 1/2) and as an independent route where it can.
PathEnsemble simulate_fbm_drift(double hurst, double sigma2, double mu,
                                const std::vector<double>& times, std::size_t n_paths,
                                RandomStream stream);

/// Two-sample check of the self-similarity identity at the marginal level:
/// draws of c^{-H} S_p(mu c^{H-1}; c t) against draws of S_p(mu; t).
StatReport marginal_ss_check(const PowerFamilySpec& spec, double hurst, double c, double t,
                             std::size_t n, RandomStream stream);

}  // namespace paths
}  // namespace hougaard
