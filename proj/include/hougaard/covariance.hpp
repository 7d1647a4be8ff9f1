#pragma once

#include <functional>
#include <vector>

#include "hougaard/common.hpp"

namespace hougaard {

/// A variance function mu -> V(mu), tagged power (sigma2 mu^p), exponential
/// (sigma2 exp(b mu)) or custom, with its domain. Strictly positive on the
/// domain interior.
class VarianceFunction {
  public:
    static VarianceFunction power(double sigma2, double p);
    static VarianceFunction exponential(double sigma2, double b);
    static VarianceFunction custom(std::function<double(double)> fn, Interval domain);

    double operator()(double mu) const;
    const Interval& domain() const { return domain_; }

  private:
    VarianceFunction(std::function<double(double)> fn, Interval domain);
    std::function<double(double)> fn_;
    Interval domain_;
};

/// The H = 1 family card: mean a e^{b mu} + mu t with shift f(c) = log(c)/b.
struct H1FamilySpec {
    double a;
    double b;  // != 0
    double sigma2;
    double mu;

    H1FamilySpec(double a_, double b_, double sigma2_, double mu_);
};

namespace covariance {

/// Marginal variance of an H-SSSI family: V_H(mu; t) = t^{2H} V(mu t^{1-H}).
double variance_profile(const VarianceFunction& v, double hurst, double mu, double t);

/// Cov[X(mu;s), X(mu;t)] = (V_H(s) + V_H(t) - V_H(|t-s|)) / 2, V_H(mu;0) = 0.
double cov(const VarianceFunction& v, double hurst, double mu, double s, double t);

/// R_D(s,t) = (s^{2-D} + t^{2-D} - |t-s|^{2-D}) / 2 with the diagonal
/// convention |0|^{2-D} := 0, which keeps cov(s,s) = V_H(s) at D = 2.
double r_d(double s, double t, double d);

/// Correlation of two non-overlapping increments as a function of
/// r = sqrt(s/t): ((1/r + r)^{2-D} - r^{2-D} - r^{-(2-D)}) / 2.
double increment_correlation(double r, double d);

/// Minimum eigenvalue of the Gram matrix [R_D(t_i, t_j)] over the grid.
double psd_check(double d, const std::vector<double>& grid);

/// V_1(mu; t) = t^2 V(mu + f(1/t)) with V = sigma2 e^{b mu}; reduces to
/// sigma2 e^{b mu} t, exactly linear in t.
double h1_variance_profile(const H1FamilySpec& fam, double t);

/// (V_1(s) + V_1(t) - V_1(|t-s|)) / 2 = sigma2 e^{b mu} min(s, t).
double h1_cov(const H1FamilySpec& fam, double s, double t);

/// The uncentered two-term mean a(sgn mu)|mu|^{H/(H-1)} + b(sgn mu)|mu| t.
struct SignPair {
    double pos = 0.0;
    double neg = 0.0;
    double at(double sign_of_mu) const { return sign_of_mu >= 0.0 ? pos : neg; }
};
double mean_structure(double hurst, double mu, double t, SignPair a, SignPair b);

}  // namespace covariance
}  // namespace hougaard
