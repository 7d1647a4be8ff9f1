#pragma once

#include <cstddef>
#include <vector>

#include "hougaard/family_params.hpp"
#include "hougaard/random.hpp"

namespace hougaard::samplers {

/// Cost/acceptance guards for the rejection-based cases. A draw whose
/// expected acceptance falls below min_acceptance, or whose convolution
/// split exceeds max_parts, raises GuardError instead of running long.
struct GuardPolicy {
    double min_acceptance = 1e-6;
    std::size_t max_parts = 100000;
};

/// Positive strictly alpha-stable, alpha in (0,1), with Laplace transform
/// E exp(-s X) = exp(-s^alpha). This is the one internal stable scale
/// convention; every Tweedie scaling routes through it.
std::vector<double> sample_positive_stable(double alpha, std::size_t n, RandomStream stream);
double positive_stable_draw(double alpha, RandomStream& stream);

/// Exponentially tilted positive stable: density proportional to
/// exp(theta x) f_std(x) with theta < 0 and f_std as above. Rejection from
/// the untilted law; when the plain acceptance exp(-|theta|^alpha) is poor
/// the draw is split into m convolution parts with per-part acceptance
/// >= exp(-1), which keeps the cost linear in |theta|^alpha.
std::vector<double> sample_tilted_stable(double alpha, double theta, std::size_t n,
                                         RandomStream stream, GuardPolicy guard = {});

/// Extreme 1-stable draws; b_sign = +1 gives the heavy upper tail
/// (skewness +1), b_sign = -1 the mirror. CF of the +1 variant:
/// exp(-|z| (1 + i (2/pi) sgn z log|z|)).
std::vector<double> sample_extreme_one_stable(int b_sign, std::size_t n, RandomStream stream);

/// i.i.d. draws from Tw_p(mu, t): mean mu, variance sigma2 mu^p / t.
/// Dispatch: p=0 normal; p=1 scaled Poisson; 1<p<2 compound Poisson-gamma;
/// p=2 gamma; p=3 inverse Gaussian; other p>2 tilted positive stable
/// (mu = +inf gives the untilted stable); p<0 tilted spectrally negative
/// extreme stable.
std::vector<double> sample_tweedie(const PowerFamilySpec& spec, double t, std::size_t n,
                                   RandomStream stream, GuardPolicy guard = {});

/// i.i.d. draws of the process marginal S_p(mu; t) = t Tw_p(mu, t).
std::vector<double> sample_hougaard_marginal(const PowerFamilySpec& spec, double t, std::size_t n,
                                             RandomStream stream, GuardPolicy guard = {});
double hougaard_marginal_draw(const PowerFamilySpec& spec, double t, RandomStream& stream,
                              const GuardPolicy& guard = {});

/// Compound Poisson-gamma parameters for 1 < p < 2, derived by matching the
/// compound CGF to kappa_alpha (validated against cumulant_transform in the
/// test suite): S_p(mu;t) = sum of N Gamma(shape, scale) jumps, N ~ Poisson(rate).
struct CompoundPoissonGamma {
    double rate;
    double shape;
    double scale;
};
CompoundPoissonGamma compound_poisson_gamma_params(const PowerFamilySpec& spec, double t);

}  // namespace hougaard::samplers
