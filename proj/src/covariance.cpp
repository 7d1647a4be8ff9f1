#include "hougaard/covariance.hpp"

#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace hougaard {

VarianceFunction::VarianceFunction(std::function<double(double)> fn, Interval domain)
    : fn_(std::move(fn)), domain_(domain) {}

VarianceFunction VarianceFunction::power(double sigma2, double p) {
    if (!(sigma2 > 0.0)) throw std::invalid_argument("VarianceFunction: sigma2 must be positive");
    Interval dom = p == 0.0 ? Interval{} : Interval{0.0, std::numeric_limits<double>::infinity(),
                                                    false, false};
    return VarianceFunction([sigma2, p](double mu) { return sigma2 * std::pow(mu, p); }, dom);
}

VarianceFunction VarianceFunction::exponential(double sigma2, double b) {
    if (!(sigma2 > 0.0)) throw std::invalid_argument("VarianceFunction: sigma2 must be positive");
    return VarianceFunction([sigma2, b](double mu) { return sigma2 * std::exp(b * mu); },
                            Interval{});
}

VarianceFunction VarianceFunction::custom(std::function<double(double)> fn, Interval domain) {
    return VarianceFunction(std::move(fn), domain);
}

double VarianceFunction::operator()(double mu) const {
    if (!domain_.contains_interior(mu))
        throw std::domain_error("VarianceFunction: mu outside the domain interior");
    return fn_(mu);
}

H1FamilySpec::H1FamilySpec(double a_, double b_, double sigma2_, double mu_)
    : a(a_), b(b_), sigma2(sigma2_), mu(mu_) {
    if (b == 0.0 || !std::isfinite(b))
        throw std::invalid_argument("H1FamilySpec: b must be finite and nonzero");
    if (!(sigma2 > 0.0)) throw std::invalid_argument("H1FamilySpec: sigma2 must be positive");
}

namespace covariance {

double variance_profile(const VarianceFunction& v, double hurst, double mu, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("variance_profile: t must be positive");
    return std::pow(t, 2.0 * hurst) * v(mu * std::pow(t, 1.0 - hurst));
}

double cov(const VarianceFunction& v, double hurst, double mu, double s, double t) {
    if (!(s > 0.0) || !(t > 0.0)) throw std::invalid_argument("cov: s and t must be positive");
    const double gap = std::fabs(t - s);
    const double vh_gap = gap == 0.0 ? 0.0 : variance_profile(v, hurst, mu, gap);
    return 0.5 * (variance_profile(v, hurst, mu, s) + variance_profile(v, hurst, mu, t) - vh_gap);
}

double r_d(double s, double t, double d) {
    if (!(s > 0.0) || !(t > 0.0)) throw std::invalid_argument("r_d: s and t must be positive");
    if (std::isnan(d)) throw std::invalid_argument("r_d: D is NaN");
    const double e = 2.0 - d;
    const double gap = std::fabs(t - s);
    const double gap_term = (s == t) ? 0.0 : std::pow(gap, e);
    return 0.5 * (std::pow(s, e) + std::pow(t, e) - gap_term);
}

double increment_correlation(double r, double d) {
    if (!(r > 0.0)) throw std::invalid_argument("increment_correlation: r must be positive");
    if (d < 0.0 || d > 2.0)
        throw std::invalid_argument("increment_correlation: D outside [0, 2]");
    const double e = 2.0 - d;
    return 0.5 * (std::pow(1.0 / r + r, e) - std::pow(r, e) - std::pow(r, -e));
}

double psd_check(double d, const std::vector<double>& grid) {
    const auto n = static_cast<Eigen::Index>(grid.size());
    if (n == 0) throw std::invalid_argument("psd_check: empty grid");
    Eigen::MatrixXd gram(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            gram(i, j) = r_d(grid[static_cast<std::size_t>(i)], grid[static_cast<std::size_t>(j)],
                             d);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double h1_variance_profile(const H1FamilySpec& fam, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("h1_variance_profile: t must be positive");
    // t^2 V(mu + f(1/t)) with f(s) = log(s)/b, computed the long way.
    const double shifted = fam.mu + std::log(1.0 / t) / fam.b;
    return t * t * fam.sigma2 * std::exp(fam.b * shifted);
}

double h1_cov(const H1FamilySpec& fam, double s, double t) {
    if (!(s > 0.0) || !(t > 0.0)) throw std::invalid_argument("h1_cov: s and t must be positive");
    const double gap = std::fabs(t - s);
    const double v_gap = gap == 0.0 ? 0.0 : h1_variance_profile(fam, gap);
    return 0.5 * (h1_variance_profile(fam, s) + h1_variance_profile(fam, t) - v_gap);
}

double mean_structure(double hurst, double mu, double t, SignPair a, SignPair b) {
    if (hurst == 1.0) throw std::invalid_argument("mean_structure: H = 1 is the exponential case");
    const double expnt = hurst / (hurst - 1.0);
    const double mag = std::fabs(mu);
    double constant;
    if (mu == 0.0) {
        if (a.pos == 0.0 && a.neg == 0.0) constant = 0.0;
        else if (expnt > 0.0) constant = 0.0;
        else
            throw std::domain_error("mean_structure: |mu|^{H/(H-1)} undefined at mu = 0 "
                                    "for this H with a != 0");
    } else {
        constant = a.at(mu) * std::pow(mag, expnt);
    }
    return constant + b.at(mu) * mag * t;
}

}  // namespace covariance
}  // namespace hougaard
