#pragma once

#include <complex>
#include <vector>

#include "hougaard/levy_paths.hpp"
#include "hougaard/random.hpp"
#include "hougaard/stats.hpp"

namespace hougaard {

/// The moving-average kernel exponent card: h = H - 1/alpha must be
/// negative (the construction only reaches H < 1/alpha).
struct WeightKernel {
    double h;
    double hurst;
    double alpha;

    WeightKernel(double hurst_, double alpha_);
};

/// Everything one fractional-motion run needs. The truncation window T and
/// step must satisfy the declared budgets: the kernel L2 mass beyond -T is
/// at most tail_epsilon of the total, and the discretized variance deficit
/// at every eval time is at most variance_deficit.
struct FHMConfig {
    PowerFamilySpec spec;  // p not in {1, 2}
    double hurst;          // H < 1/alpha
    double truncation;     // T > 0
    double step;           // grid step, divides every eval time
    double tail_epsilon = 1e-3;
    double variance_deficit = 1e-2;
    std::size_t n_paths = 1000;
    RandomStream stream;

    FHMConfig(PowerFamilySpec s, double hurst_, double truncation_, double step_,
              std::size_t n_paths_, RandomStream stream_);

    double h() const;
    double alpha() const;
};

namespace fhm {

/// w_h(t, u): 0 for u >= t, (t-u)^h on [0, t), (t-u)^h - (-u)^h for u < 0.
double weight(double t, double u, double h);

/// Integral of w_h^2(1, v) over the real line; finite for -1/2 < h < 0.
/// Adaptive quadrature split at the endpoint singularities, relative
/// target 1e-8.
double kernel_l2(double h);

/// Fraction of the kernel L2 mass beyond -T: used to choose T.
double kernel_tail_variance(double h, double truncation);

/// Smallest window T with kernel_tail_variance(h, T/t_max) <= epsilon.
double choose_truncation(double h, double t_max, double epsilon);

/// Riemann-sum moving average of two-sided Hougaard increments:
/// midpoint kernel weights except on the two steps abutting the
/// singularities u = 0 and u = t, which carry the step's exact L2 mass.
/// Eval times must be step-aligned. Throws when the tail or variance
/// deficit budgets are not met.
PathEnsemble simulate_fhm(const FHMConfig& cfg, const std::vector<double>& eval_times,
                          unsigned threads = 1);

/// Closed-form variance sigma2 mu^p t^{1 + 2(H - 1/alpha)} * kernel_l2(h).
double fhm_variance(double t, const FHMConfig& cfg);

/// Cumulant transform of S_{p,H}(mu; t) by quadrature of the moving-average
/// integrand, split at the kernel singularities; absolute target 1e-6.
std::complex<double> fhm_cumulant_transform(double z, double t, const FHMConfig& cfg);

/// Which rate map the self-similarity check scales mu by. `definition`
/// uses mu c^{H-1}; `driver_matched` uses mu c^{h}, the exponent under
/// which the scaled moving average matches in law exactly.
enum class RateMap { definition, driver_matched };

/// Compares c^{-H} S_{p,H}(mu_scaled; c t) against S_{p,H}(mu; t): max CF
/// residual over a z grid (quadrature) plus a two-sample KS on simulated
/// marginals. estimates[0] carries the CF residual.
StatReport fhm_ss_check(const FHMConfig& cfg, double c, double t, std::size_t n,
                        RateMap rate_map = RateMap::definition, double cf_tol = 1e-4);

}  // namespace fhm
}  // namespace hougaard
