#include "hougaard/family_params.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hougaard {

std::string Interval::str() const {
    std::ostringstream os;
    os << (lo_closed ? '[' : '(') << lo << ", " << hi << (hi_closed ? ']' : ')');
    return os.str();
}

PowerFamilySpec::PowerFamilySpec(double p_, double sigma2_, double mu_)
    : p(p_), sigma2(sigma2_), mu(mu_) {
    params::require_valid_p(p);
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
        throw std::invalid_argument("PowerFamilySpec: sigma2 must be positive and finite");
    if (std::isnan(mu)) throw std::invalid_argument("PowerFamilySpec: mu is NaN");
    if (!params::mu_domain(p).contains(mu))
        throw std::invalid_argument("PowerFamilySpec: mu outside the domain for this p");
}

namespace params {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void require_valid_p(double p) {
    if (std::isnan(p) || std::isinf(p))
        throw std::invalid_argument("power parameter must be finite");
    if (p > 0.0 && p < 1.0)
        throw std::invalid_argument("power parameter lies in the excluded gap (0,1)");
}

double alpha_of_p(double p) {
    require_valid_p(p);
    if (p == 1.0) return -kInf;
    return 1.0 + 1.0 / (1.0 - p);
}

double hurst_of_p(double p) {
    require_valid_p(p);
    if (p == 2.0) throw std::invalid_argument("hurst_of_p: p = 2 has alpha = 0");
    if (p == 1.0) return 0.0;  // alpha = -infinity convention
    return 1.0 / alpha_of_p(p);
}

double fractal_dimension(double hurst, double p) {
    require_valid_p(p);
    return (hurst - 1.0) * (p - 2.0);
}

Interval mu_domain(double p) {
    require_valid_p(p);
    if (p < 0.0) return Interval{0.0, kInf, true, false};
    if (p == 0.0) return Interval{-kInf, kInf, false, false};
    if (p <= 2.0) return Interval{0.0, kInf, false, false};
    return Interval{0.0, kInf, false, true};  // (0, inf]: the stable boundary member
}

Interval hurst_domain(double p) {
    double alpha = alpha_of_p(p);
    if (p == 2.0) throw std::invalid_argument("hurst_domain: p = 2 has alpha = 0");
    double other = (p == 1.0) ? -1.0 : (2.0 - alpha) / alpha;  // alpha=-inf limit
    double lo = std::min(1.0, other);
    double hi = std::max(1.0, other);
    return Interval{lo, hi, true, true};
}

CorrelationSign correlation_sign(double hurst, double p) {
    if (!hurst_domain(p).contains(hurst))
        throw std::invalid_argument("correlation_sign: (H, p) outside the admissible domain");
    double d = fractal_dimension(hurst, p);
    if (d == 1.0) return CorrelationSign::zero;
    return d < 1.0 ? CorrelationSign::positive : CorrelationSign::negative;
}

HurstProfile profile(double p) {
    double h = hurst_of_p(p);
    return HurstProfile{p, alpha_of_p(p), h, fractal_dimension(h, p)};
}

}  // namespace params
}  // namespace hougaard
