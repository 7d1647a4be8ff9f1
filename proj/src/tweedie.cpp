#include "hougaard/tweedie.hpp"

#include <cmath>
#include <stdexcept>

namespace hougaard {

namespace {

using cplx = std::complex<double>;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_interior_mu(const PowerFamilySpec& spec) {
    if (!params::mu_domain(spec.p).contains_interior(spec.mu))
        throw std::invalid_argument("operation requires mu in the domain interior");
}

}  // namespace

CumulantFunction::CumulantFunction(double alpha, double sigma2, double offset)
    : alpha_(alpha), sigma2_(sigma2), offset_(offset) {}

CumulantFunction CumulantFunction::power(double alpha, double sigma2) {
    if (std::isnan(alpha) || alpha > 2.0)
        throw std::invalid_argument("CumulantFunction: alpha must lie in [-inf, 2]");
    if (!(sigma2 > 0.0)) throw std::invalid_argument("CumulantFunction: sigma2 must be positive");
    return CumulantFunction(alpha, sigma2, 0.0);
}

Interval CumulantFunction::effective_domain() const {
    Interval base;
    if (alpha_ == 2.0) base = Interval{-kInf, kInf, false, false};
    else if (alpha_ > 1.0) base = Interval{0.0, kInf, true, false};
    else base = Interval{-kInf, 0.0, false, alpha_ > 0.0};
    // Translated domain Theta - theta0.
    base.lo -= offset_;
    base.hi -= offset_;
    return base;
}

CumulantFunction CumulantFunction::tilt(double theta0) const {
    if (!effective_domain().contains_interior(theta0) && theta0 != 0.0)
        throw std::invalid_argument("tilt: theta0 outside the effective domain interior");
    return CumulantFunction(alpha_, sigma2_, offset_ + theta0);
}

std::complex<double> CumulantFunction::value(std::complex<double> u) const {
    cplx shifted = u + offset_;
    if (offset_ == 0.0) return tweedie::kappa_alpha(u, alpha_);
    return tweedie::kappa_alpha(shifted, alpha_) - tweedie::kappa_alpha(cplx(offset_), alpha_);
}

double CumulantFunction::mean_at(double u) const {
    return tweedie::kappa_alpha_dot(u + offset_, alpha_);
}

double CumulantFunction::variance_at(double u) const {
    return tweedie::kappa_alpha_ddot(u + offset_, alpha_);
}

TweedieDistribution::TweedieDistribution(PowerFamilySpec s, double t) : spec(s), weight(t) {
    if (!(t > 0.0)) throw std::invalid_argument("TweedieDistribution: weight must be positive");
}

double TweedieDistribution::variance() const {
    return spec.sigma2 * std::pow(spec.mu, spec.p) / weight;
}

ExpVarianceFamily::ExpVarianceFamily(double b_, double sigma2_, double mu_, double t_)
    : b(b_), sigma2(sigma2_), mu(mu_), weight(t_) {
    if (b == 0.0 || !std::isfinite(b))
        throw std::invalid_argument("ExpVarianceFamily: b must be finite and nonzero");
    if (!(sigma2 > 0.0)) throw std::invalid_argument("ExpVarianceFamily: sigma2 must be positive");
    if (!std::isfinite(mu)) throw std::invalid_argument("ExpVarianceFamily: mu must be finite");
    if (!(weight > 0.0)) throw std::invalid_argument("ExpVarianceFamily: t must be positive");
}

Interval ExpVarianceFamily::mu_domain() const {
    if (b > 0.0) return Interval{-kInf, kInf, false, true};
    return Interval{-kInf, kInf, true, false};
}

namespace tweedie {

std::complex<double> kappa_alpha(std::complex<double> x, double alpha) {
    if (alpha == 0.0) {
        // Removable limit of the power form (the gamma generator).
        if (x.real() >= 0.0 && x.imag() == 0.0)
            throw std::domain_error("kappa_alpha: gamma generator needs Re x < 0");
        return -std::log(-x);
    }
    if (std::isinf(alpha))
        throw std::domain_error("kappa_alpha: the Poisson limit is handled at the "
                                "distribution level, not through kappa_alpha");
    if (alpha == 2.0) return 0.5 * x * x;  // entire
    const double am1 = alpha - 1.0;
    cplx base = x / am1;
    if (base.real() < 0.0)
        throw std::domain_error("kappa_alpha: argument outside the analyticity region");
    if (base.real() == 0.0 && !(alpha > 0.0) && base.imag() != 0.0)
        throw std::domain_error("kappa_alpha: imaginary-axis extension needs alpha > 0");
    return am1 / alpha * std::pow(base, alpha);
}

double kappa_alpha_dot(double x, double alpha) {
    if (alpha == 0.0) {
        if (x >= 0.0) throw std::domain_error("kappa_alpha_dot: need x < 0 at alpha = 0");
        return -1.0 / x;
    }
    return std::pow(x / (alpha - 1.0), alpha - 1.0);
}

double kappa_alpha_ddot(double x, double alpha) {
    if (alpha == 0.0) {
        if (x >= 0.0) throw std::domain_error("kappa_alpha_ddot: need x < 0 at alpha = 0");
        return 1.0 / (x * x);
    }
    return std::pow(x / (alpha - 1.0), alpha - 2.0);
}

double theta_of_mu(double mu, double alpha) {
    if (alpha == 1.0 || std::isinf(alpha))
        throw std::invalid_argument("theta_of_mu: alpha must be finite and != 1");
    if (!(mu > 0.0) && alpha != 2.0)
        throw std::invalid_argument("theta_of_mu: mu must be interior (positive)");
    if (alpha == 2.0) return mu;  // (alpha-1) mu^{1/(alpha-1)} with both factors trivial
    return (alpha - 1.0) * std::pow(mu, 1.0 / (alpha - 1.0));
}

std::complex<double> tweedie_cumulant(double z, const PowerFamilySpec& spec, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("tweedie_cumulant: t must be positive");
    const double lambda = t / spec.sigma2;
    const cplx iz(0.0, z);
    if (spec.p == 1.0) {
        // (sigma2/t)-scaled Poisson with rate lambda mu.
        require_interior_mu(spec);
        return lambda * spec.mu * (std::exp(iz / lambda) - 1.0);
    }
    const double alpha = params::alpha_of_p(spec.p);
    if (spec.mu_is_infinite()) {
        // Untilted boundary member (p > 2): theta = 0.
        return lambda * kappa_alpha(iz / lambda, alpha);
    }
    require_interior_mu(spec);
    if (spec.p == 2.0) {
        // Gamma: -lambda log(1 - iz mu / lambda).
        return -lambda * std::log(1.0 - iz * spec.mu / lambda);
    }
    const double theta = theta_of_mu(spec.mu, alpha);
    return lambda * (kappa_alpha(theta + iz / lambda, alpha) - kappa_alpha(cplx(theta), alpha));
}

std::complex<double> cumulant_transform(double z, const PowerFamilySpec& spec, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("cumulant_transform: t must be positive");
    // S_p(mu; t) = t Tw_p(mu, t), so C_S(z) = C_Tw(t z).
    return tweedie_cumulant(t * z, spec, t);
}

std::pair<double, double> mean_var(const PowerFamilySpec& spec, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("mean_var: t must be positive");
    require_interior_mu(spec);
    return {spec.mu * t, spec.sigma2 * std::pow(spec.mu, spec.p) * t};
}

double scaling_identity_residual(const PowerFamilySpec& spec, double t, double c,
                                 const std::vector<double>& z_grid) {
    if (!(c > 0.0)) throw std::invalid_argument("scaling_identity_residual: c must be positive");
    PowerFamilySpec scaled(spec.p, spec.sigma2, c * spec.mu);
    const double t_scaled = std::pow(c, spec.p - 2.0) * t;
    double worst = 0.0;
    for (double z : z_grid) {
        cplx lhs = tweedie_cumulant(c * z, spec, t);
        cplx rhs = tweedie_cumulant(z, scaled, t_scaled);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

std::complex<double> kappa_expvar(std::complex<double> theta, double b) {
    cplx w = 1.0 - b * theta;
    if (w.real() <= 0.0)
        throw std::domain_error("kappa_expvar: argument beyond the branch point 1 - b theta = 0");
    return ((w * (std::log(w) - 1.0)) + 1.0) / (b * b);
}

namespace {

cplx expvar_cumulant_weighted(double z, const ExpVarianceFamily& fam, double lambda) {
    const double theta_mu = (1.0 - std::exp(-fam.b * fam.mu)) / fam.b;
    const cplx iz(0.0, z);
    return lambda * (kappa_expvar(theta_mu + iz / lambda, fam.b) -
                     kappa_expvar(cplx(theta_mu), fam.b));
}

}  // namespace

std::complex<double> expvar_tweedie_cumulant(double z, const ExpVarianceFamily& fam) {
    return expvar_cumulant_weighted(z, fam, fam.weight / fam.sigma2);
}

std::complex<double> expvar_cumulant(double z, const ExpVarianceFamily& fam) {
    // S_infinity(mu, b; t) = t Tw_infinity(mu, b, t).
    return expvar_tweedie_cumulant(fam.weight * z, fam);
}

double expvar_translation_residual(const ExpVarianceFamily& fam, double c,
                                   const std::vector<double>& z_grid) {
    ExpVarianceFamily translated(fam.b, fam.sigma2, fam.mu + c,
                                 fam.weight * std::exp(fam.b * c));
    double worst = 0.0;
    for (double z : z_grid) {
        cplx lhs = cplx(0.0, z * c) + expvar_tweedie_cumulant(z, fam);
        cplx rhs = expvar_tweedie_cumulant(z, translated);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double expvar_scaling_residual(const ExpVarianceFamily& fam, double c,
                               const std::vector<double>& z_grid) {
    if (!(c > 0.0)) throw std::invalid_argument("expvar_scaling_residual: c must be positive");
    ExpVarianceFamily scaled(fam.b / c, fam.sigma2, c * fam.mu, fam.weight / (c * c));
    double worst = 0.0;
    for (double z : z_grid) {
        cplx lhs = expvar_tweedie_cumulant(c * z, fam);
        cplx rhs = expvar_tweedie_cumulant(z, scaled);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

}  // namespace tweedie
}  // namespace hougaard
