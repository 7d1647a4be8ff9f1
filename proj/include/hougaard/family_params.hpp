#pragma once

#include <limits>

#include "hougaard/common.hpp"

namespace hougaard {

/// Identity card of one Tweedie/Hougaard family member: the power parameter
/// p (p not in the open gap (0,1)), the dispersion sigma2 > 0 and the rate
/// mu, which must lie in the extended domain for that p. mu = +infinity is
/// the attainable boundary member of the p > 2 families (untilted stable);
/// it is a tag only and never enters arithmetic.
struct PowerFamilySpec {
    double p;
    double sigma2;
    double mu;

    PowerFamilySpec(double p_, double sigma2_, double mu_);

    bool mu_is_infinite() const { return std::isinf(mu) && mu > 0; }
};

/// Derived scaling quantities for a given p.
struct HurstProfile {
    double p;
    double alpha;
    double hurst;
    double fractal_dim;  // D of the Levy member, always 1
};

enum class CorrelationSign { negative, zero, positive };

namespace params {

/// Validates p against the excluded Tweedie gap (0,1); throws std::invalid_argument.
void require_valid_p(double p);

/// alpha = 1 + 1/(1-p); alpha(1) = -infinity by convention. The p = infinity
/// family (alpha = 1) lives in the exponential-variance machinery and is not
/// reachable through a finite p here.
double alpha_of_p(double p);

/// H = 1/alpha with H(p=1) = 0; rejects p = 2 (alpha = 0).
double hurst_of_p(double p);

/// D = (H - 1)(p - 2). Range validation is correlation_sign's job.
double fractal_dimension(double hurst, double p);

/// Extended rate domain for given p.
Interval mu_domain(double p);

/// Admissible H interval: endpoints 1 and (2 - alpha)/alpha, ordered by sign.
/// The boundary values are admitted (D = 0 or D = 2, degenerate variance).
Interval hurst_domain(double p);

/// Sign of the correlation between non-overlapping increments: zero iff
/// D = 1 (the Levy case H = 1/alpha), positive for D < 1, negative for D > 1.
CorrelationSign correlation_sign(double hurst, double p);

HurstProfile profile(double p);

}  // namespace params
}  // namespace hougaard
