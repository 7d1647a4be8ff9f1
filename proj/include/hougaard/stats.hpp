#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace hougaard {

/// One verification verdict. The verdict is a pure function of statistic vs
/// critical value; metadata carries everything needed to reproduce the run
/// bit-for-bit (seeds, n, parameters).
struct StatReport {
    std::string label;
    std::vector<double> estimates;
    std::vector<double> standard_errors;
    double statistic = 0.0;
    double critical_value = 0.0;
    bool passed = false;
    std::map<std::string, std::string> metadata;

    /// JSON with the documented stable field names: label, estimates,
    /// standard_errors, statistic, critical_value, passed, metadata.
    std::string to_json(int indent = -1) const;
};

namespace stats {

/// Global test tolerances; the acceptance semantics of "equality in law"
/// are fixed-seed KS at ks_level plus these SE bands.
struct Tolerances {
    double moment_se_band = 4.0;
    double ecf_se_band = 3.0;
    double corr_se_band = 3.0;
    double ks_level = 0.01;
};
const Tolerances& tolerances();

struct Moments {
    double mean;
    double variance;  // unbiased
    double se_mean;
    double se_variance;  // via the fourth central moment
    std::size_t n;
};
Moments empirical_moments(std::span<const double> sample);

struct EcfPoint {
    double z;
    std::complex<double> value;
    double se;  // combined SE of the complex estimate, <= 1/sqrt(n)
};
std::vector<EcfPoint> ecf(std::span<const double> sample, std::span<const double> z_grid);

/// Two-sample Kolmogorov-Smirnov with the asymptotic critical value
/// c(level) sqrt((n+m)/(nm)), c = sqrt(-log(level/2)/2).
StatReport ks_two_sample(std::span<const double> a, std::span<const double> b,
                         double level = tolerances().ks_level);

struct SlopeFit {
    double slope;
    double se_slope;
    double intercept;
};
/// Weighted least squares of log(variance) on log(t); ses are the variance
/// standard errors, mapped to the log scale by the delta method.
SlopeFit loglog_slope(std::span<const double> t_grid, std::span<const double> variances,
                      std::span<const double> ses);

/// Ordinary weighted linear fit (used by the Levy variance-linearity check).
SlopeFit linear_fit(std::span<const double> x, std::span<const double> y,
                    std::span<const double> ses);

/// Correlation between X(s) and X(s+t) - X(s) across ensemble paths, with
/// the Fisher-z standard error; `xs` holds X(s), `xst` holds X(s+t).
StatReport increment_corr_estimate(std::span<const double> xs, std::span<const double> xst,
                                   double rho0 = 0.0);

double ks_critical_value(std::size_t n, std::size_t m, double level);

}  // namespace stats
}  // namespace hougaard
