#pragma once

#include <complex>
#include <functional>

namespace hougaard::quad {

/// Adaptive Simpson on [a, b] to absolute tolerance tol.
double integrate(const std::function<double(double)>& f, double a, double b, double tol);

/// Complex-valued variant; tolerance applies to |error|.
std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b, double tol);

/// Integrates f over [a, b) where f ~ C (x-a)^beta near a with beta > -1,
/// via the substitution x = a + (b-a) s^q, q = 1/(1+beta) (CLAMPED to [1,64]).
double integrate_left_singular(const std::function<double(double)>& f, double a, double b,
                               double beta, double tol);

std::complex<double> integrate_left_singular_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b, double beta,
    double tol);

/// Integrates f over [a, infinity) where f(x) ~ C x^{gamma} with gamma < -1,
/// via x = a v^{1/ (gamma+1)}; the transformed integrand is bounded at v = 0.
double integrate_power_tail(const std::function<double(double)>& f, double a, double gamma,
                            double tol);

std::complex<double> integrate_power_tail_complex(
    const std::function<std::complex<double>(double)>& f, double a, double gamma, double tol);

}  // namespace hougaard::quad
