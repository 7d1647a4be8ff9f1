#include "hougaard/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hougaard::quad {

namespace {

using cplx = std::complex<double>;

// Transformed integrands are bounded but may be indeterminate exactly at the
// mapped endpoint; integrating from kEdge instead drops a negligible sliver.
constexpr double kEdge = 1e-14;
constexpr int kMaxDepth = 48;

template <class T>
double magnitude(T v) {
    if constexpr (std::is_same_v<T, double>) return std::fabs(v);
    else return std::abs(v);
}

template <class F, class T>
T simpson_step(const F& f, double a, double m, double b, T fa, T fm, T fb) {
    (void)m;
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F, class T>
T adaptive(const F& f, double a, double b, T fa, T fm, T fb, T whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    T flm = f(lm);
    T frm = f(rm);
    T left = simpson_step(f, a, lm, m, fa, flm, fm);
    T right = simpson_step(f, m, rm, b, fm, frm, fb);
    T sum = left + right;
    if (depth >= kMaxDepth || magnitude<T>(sum - whole) <= 15.0 * tol)
        return sum + (sum - whole) / 15.0;
    return adaptive(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adaptive(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

template <class T, class F>
T integrate_impl(const F& f, double a, double b, double tol) {
    if (!(b > a)) return T{};
    double m = 0.5 * (a + b);
    T fa = f(a), fm = f(m), fb = f(b);
    T whole = simpson_step(f, a, m, b, fa, fm, fb);
    return adaptive(f, a, b, fa, fm, fb, whole, tol, 0);
}

double clamp_q(double q) { return std::clamp(q, 1.0, 64.0); }

template <class T, class F>
T left_singular_impl(const F& f, double a, double b, double beta, double tol) {
    if (!(beta > -1.0)) throw std::invalid_argument("singular exponent must exceed -1");
    const double q = clamp_q(1.0 / (1.0 + beta));
    const double len = b - a;
    auto g = [&](double s) -> T {
        double x = a + len * std::pow(s, q);
        return f(x) * (len * q * std::pow(s, q - 1.0));
    };
    return integrate_impl<T>(g, kEdge, 1.0, tol);
}

template <class T, class F>
T power_tail_impl(const F& f, double a, double gamma, double tol) {
    if (!(gamma < -1.0)) throw std::invalid_argument("tail exponent must be < -1");
    if (!(a > 0.0)) throw std::invalid_argument("tail start must be positive");
    const double r = 1.0 / (gamma + 1.0);  // negative
    auto g = [&](double v) -> T {
        double x = a * std::pow(v, r);
        return f(x) * (a * (-r) * std::pow(v, r - 1.0));
    };
    return integrate_impl<T>(g, kEdge, 1.0, tol);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    return integrate_impl<double>(f, a, b, tol);
}

cplx integrate_complex(const std::function<cplx(double)>& f, double a, double b, double tol) {
    return integrate_impl<cplx>(f, a, b, tol);
}

double integrate_left_singular(const std::function<double(double)>& f, double a, double b,
                               double beta, double tol) {
    return left_singular_impl<double>(f, a, b, beta, tol);
}

cplx integrate_left_singular_complex(const std::function<cplx(double)>& f, double a, double b,
                                     double beta, double tol) {
    return left_singular_impl<cplx>(f, a, b, beta, tol);
}

double integrate_power_tail(const std::function<double(double)>& f, double a, double gamma,
                            double tol) {
    return power_tail_impl<double>(f, a, gamma, tol);
}

cplx integrate_power_tail_complex(const std::function<cplx(double)>& f, double a, double gamma,
                                  double tol) {
    return power_tail_impl<cplx>(f, a, gamma, tol);
}

}  // namespace hougaard::quad
