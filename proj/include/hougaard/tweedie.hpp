#pragma once

#include <complex>
#include <vector>

#include "hougaard/family_params.hpp"

namespace hougaard {

/// The unit cumulant generator kappa_alpha together with an accumulated
/// exponential tilt. value(u) evaluates kappa(u + theta0) - kappa(theta0)
/// on the translated effective domain; tilts compose additively.
class CumulantFunction {
  public:
    static CumulantFunction power(double alpha, double sigma2 = 1.0);

    CumulantFunction tilt(double theta0) const;

    std::complex<double> value(std::complex<double> u) const;
    /// kappa-dot at real u (the mean map).
    double mean_at(double u) const;
    /// kappa-double-dot at real u.
    double variance_at(double u) const;

    Interval effective_domain() const;
    double alpha() const { return alpha_; }
    double sigma2() const { return sigma2_; }
    double tilt_offset() const { return offset_; }

  private:
    CumulantFunction(double alpha, double sigma2, double offset);
    double alpha_;
    double sigma2_;
    double offset_;
};

/// One Tweedie marginal Tw_p(mu, t): mean mu, variance sigma2 mu^p / t.
struct TweedieDistribution {
    PowerFamilySpec spec;
    double weight;  // the index parameter t > 0

    TweedieDistribution(PowerFamilySpec s, double t);
    double mean() const { return spec.mu; }
    double variance() const;
};

/// The H = 1 family: variance function sigma2 exp(b mu) on all of R.
/// The extended rate domain closes at +infinity for b > 0 and at -infinity
/// for b < 0 (the extreme 1-stable boundary members).
struct ExpVarianceFamily {
    double b;
    double sigma2;
    double mu;
    double weight;  // t > 0

    ExpVarianceFamily(double b_, double sigma2_, double mu_, double t_);
    Interval mu_domain() const;
};

namespace tweedie {

/// kappa_alpha(x) = ((alpha-1)/alpha) (x/(alpha-1))^alpha via the principal
/// branch, with the removable alpha = 0 limit -log(-x). Requires
/// Re(x/(alpha-1)) > 0, extended to Re = 0 for alpha in (0, 2].
std::complex<double> kappa_alpha(std::complex<double> x, double alpha);

/// First and second derivatives of kappa_alpha at a real point.
double kappa_alpha_dot(double x, double alpha);
double kappa_alpha_ddot(double x, double alpha);

/// Canonical parameter theta = (alpha-1) mu^{1/(alpha-1)}, the inverse of
/// the mean map kappa-dot.
double theta_of_mu(double mu, double alpha);

/// Log characteristic function of Tw_p(mu, t):
///   C(z) = lambda [kappa_alpha(theta + iz/lambda) - kappa_alpha(theta)],
/// lambda = t/sigma2. Dedicated branches for p = 1 (Poisson) and p = 2.
std::complex<double> tweedie_cumulant(double z, const PowerFamilySpec& spec, double t);

/// Log characteristic function of the process marginal S_p(mu; t) = t Tw_p(mu, t):
///   C(z) = (t/sigma2) [kappa_alpha(theta + iz sigma2) - kappa_alpha(theta)],
/// so that -i C'(0) = mu t and -C''(0) = sigma2 mu^p t.
std::complex<double> cumulant_transform(double z, const PowerFamilySpec& spec, double t);

/// (mu t, sigma2 mu^p t): mean and variance of S_p(mu; t).
std::pair<double, double> mean_var(const PowerFamilySpec& spec, double t);

/// Max over z_grid of |C(z; c Tw_p(mu,t)) - C(z; Tw_p(c mu, c^{p-2} t))|.
/// The identity is exact, so the residual sits at rounding level.
double scaling_identity_residual(const PowerFamilySpec& spec, double t, double c,
                                 const std::vector<double>& z_grid);

/// Unit cumulant generator of the exponential-variance family,
///   kappa_b(theta) = [(1 - b theta)(log(1 - b theta) - 1) + 1] / b^2,
/// obtained by solving kappa-ddot = exp(b kappa-dot), kappa(0) = kappa-dot(0) = 0.
std::complex<double> kappa_expvar(std::complex<double> theta, double b);

/// Log CF of the Tw_infinity marginal (mean mu, variance sigma2 e^{b mu}/t).
std::complex<double> expvar_tweedie_cumulant(double z, const ExpVarianceFamily& fam);

/// Log CF of the process marginal S_infinity(mu, b; t) = t Tw_infinity(mu, b, t).
std::complex<double> expvar_cumulant(double z, const ExpVarianceFamily& fam);

/// Max CF residual of the translation identity
///   c + Tw_inf(mu, b, t) = Tw_inf(c + mu, b, t e^{b c}).
double expvar_translation_residual(const ExpVarianceFamily& fam, double c,
                                   const std::vector<double>& z_grid);

/// Max CF residual of the scaling identity
///   c Tw_inf(mu, b, t) = Tw_inf(c mu, b/c, t/c^2), c > 0.
double expvar_scaling_residual(const ExpVarianceFamily& fam, double c,
                               const std::vector<double>& z_grid);

}  // namespace tweedie
}  // namespace hougaard
