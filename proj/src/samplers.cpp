#include "hougaard/samplers.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hougaard/tweedie.hpp"

namespace hougaard::samplers {

namespace {

constexpr double kPi = std::numbers::pi;
// Truncation budget for the tilted two-sided case: total-variation error
// bounded by 2^-70 per draw, below double-precision rounding of the
// acceptance ratio itself.
const double kLogTailBudget = 70.0 * std::numbers::ln2;

[[noreturn]] void guard_fail(const char* what, double acceptance) {
    std::ostringstream os;
    os << what << " (expected acceptance " << acceptance << ")";
    throw GuardError(os.str());
}

// Proposal cap making a guard-passing draw's failure probability ~exp(-200).
std::size_t proposal_cap(double acceptance) {
    return static_cast<std::size_t>(200.0 / acceptance) + 200;
}

double kanter_draw(double alpha, RandomStream& stream) {
    const double u = kPi * stream.uniform();
    const double e = stream.exponential();
    // Zolotarev's function in logs; all three sines are positive on (0, pi).
    const double log_a = (alpha * std::log(std::sin(alpha * u)) +
                          (1.0 - alpha) * std::log(std::sin((1.0 - alpha) * u)) -
                          std::log(std::sin(u))) /
                         (1.0 - alpha);
    return std::exp((1.0 - alpha) / alpha * (log_a - std::log(e)));
}

// CMS draw of S(alpha, beta, 1, 0; 1), CF exp(-|z|^a (1 - i beta tan(pi a/2) sgn z)).
double cms_draw(double alpha, double beta, RandomStream& stream) {
    const double v = kPi * (stream.uniform() - 0.5);
    const double e = stream.exponential();
    if (alpha == 1.0) {
        const double half_pi = 0.5 * kPi;
        return (2.0 / kPi) * ((half_pi + beta * v) * std::tan(v) -
                              beta * std::log((half_pi * e * std::cos(v)) / (half_pi + beta * v)));
    }
    const double ta = beta * std::tan(0.5 * kPi * alpha);
    const double b = std::atan(ta) / alpha;
    const double s = std::pow(1.0 + ta * ta, 0.5 / alpha);
    const double cos_v = std::max(std::cos(v), 1e-300);
    const double cos_shift = std::max(std::cos(v - alpha * (v + b)), 1e-300);
    return s * std::sin(alpha * (v + b)) / std::pow(cos_v, 1.0 / alpha) *
           std::pow(cos_shift / e, (1.0 - alpha) / alpha);
}

double tilted_stable_draw(double alpha, double theta, RandomStream& stream,
                          const GuardPolicy& guard) {
    if (theta == 0.0) return positive_stable_draw(alpha, stream);
    // Split into m convolution parts so each part accepts with prob >= 1/e.
    const double cost = std::pow(-theta, alpha);
    const auto parts = static_cast<std::size_t>(std::ceil(std::max(1.0, cost)));
    if (parts > guard.max_parts)
        guard_fail("tilted stable: convolution split exceeds the parts budget",
                   std::exp(-cost));
    const double part_scale = std::pow(static_cast<double>(parts), -1.0 / alpha);
    const std::size_t cap = proposal_cap(std::exp(-1.0));
    double total = 0.0;
    for (std::size_t i = 0; i < parts; ++i) {
        std::size_t tries = 0;
        for (;;) {
            if (++tries > cap)
                guard_fail("tilted stable: proposal cap exceeded", std::exp(-cost));
            const double x = part_scale * positive_stable_draw(alpha, stream);
            if (std::log(stream.uniform()) <= theta * x) {
                total += x;
                break;
            }
        }
    }
    return total;
}

// Spectrally negative extreme stable matching CGF w kappa_alpha(s), s >= 0,
// for alpha in (1,2): scale * S(alpha, -1, 1, 0; 1).
double extreme_stable_scale(double alpha, double w) {
    const double c = w * std::pow(alpha - 1.0, 1.0 - alpha) *
                     std::fabs(std::cos(0.5 * kPi * alpha)) / alpha;
    return std::pow(c, 1.0 / alpha);
}

// Tilted spectrally negative stable: density prop. to exp(theta z) f0(z) on
// all of R with theta > 0. The tilt is unbounded on the light right tail, so
// plain rejection is impossible; we reject from f0 restricted to z <= x0
// with x0 chosen by a Chernoff bound so the discarded tilted mass is below
// 2^-70. Acceptance exp(w kappa(theta) - theta x0) is guard-checked.
double tilted_extreme_stable_draw(double alpha, double w, double theta, RandomStream& stream,
                                  const GuardPolicy& guard) {
    const double scale = extreme_stable_scale(alpha, w);
    if (theta == 0.0) return scale * cms_draw(alpha, -1.0, stream);
    auto kap = [&](double s) { return tweedie::kappa_alpha(std::complex<double>(s), alpha).real(); };
    const double k_theta = w * kap(theta);
    double x0 = std::numeric_limits<double>::infinity();
    for (double step = 0.25; step <= 1048576.0; step *= 2.0) {
        const double s = theta + step;
        x0 = std::min(x0, (w * kap(s) - k_theta + kLogTailBudget) / (s - theta));
    }
    const double acceptance = std::exp(k_theta - theta * x0);
    if (acceptance < guard.min_acceptance)
        guard_fail("tilted extreme stable: tilt too strong for rejection", acceptance);
    const std::size_t cap = proposal_cap(acceptance);
    std::size_t tries = 0;
    for (;;) {
        if (++tries > cap)
            guard_fail("tilted extreme stable: proposal cap exceeded", acceptance);
        const double z = scale * cms_draw(alpha, -1.0, stream);
        if (z > x0) continue;
        if (std::log(stream.uniform()) <= theta * (z - x0)) return z;
    }
}

}  // namespace

double positive_stable_draw(double alpha, RandomStream& stream) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("positive stable requires alpha in (0,1)");
    return kanter_draw(alpha, stream);
}

std::vector<double> sample_positive_stable(double alpha, std::size_t n, RandomStream stream) {
    std::vector<double> out(n);
    for (auto& x : out) x = positive_stable_draw(alpha, stream);
    return out;
}

std::vector<double> sample_tilted_stable(double alpha, double theta, std::size_t n,
                                         RandomStream stream, GuardPolicy guard) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("tilted stable requires alpha in (0,1)");
    if (!(theta <= 0.0) || !std::isfinite(theta))
        throw std::invalid_argument("tilt strength must be finite and <= 0");
    std::vector<double> out(n);
    for (auto& x : out) x = tilted_stable_draw(alpha, theta, stream, guard);
    return out;
}

std::vector<double> sample_extreme_one_stable(int b_sign, std::size_t n, RandomStream stream) {
    if (b_sign != 1 && b_sign != -1)
        throw std::invalid_argument("b_sign must be +1 or -1");
    std::vector<double> out(n);
    for (auto& x : out) x = cms_draw(1.0, static_cast<double>(b_sign), stream);
    return out;
}

CompoundPoissonGamma compound_poisson_gamma_params(const PowerFamilySpec& spec, double t) {
    if (!(spec.p > 1.0 && spec.p < 2.0))
        throw std::invalid_argument("compound Poisson-gamma requires 1 < p < 2");
    const double p = spec.p;
    return CompoundPoissonGamma{
        t * std::pow(spec.mu, 2.0 - p) / (spec.sigma2 * (2.0 - p)),
        (2.0 - p) / (p - 1.0),
        spec.sigma2 * (p - 1.0) * std::pow(spec.mu, p - 1.0),
    };
}

double hougaard_marginal_draw(const PowerFamilySpec& spec, double t, RandomStream& stream,
                              const GuardPolicy& guard) {
    if (!(t > 0.0)) throw std::invalid_argument("sampling requires t > 0");
    const double p = spec.p;
    const double s2 = spec.sigma2;
    const double mu = spec.mu;
    if (p == 0.0) return mu * t + std::sqrt(s2 * t) * stream.normal();
    if (p == 1.0) {
        if (!(mu > 0.0)) throw std::invalid_argument("p = 1 requires mu > 0");
        return s2 * static_cast<double>(stream.poisson(mu * t / s2));
    }
    if (p > 1.0 && p < 2.0) {
        if (!(mu > 0.0)) throw std::invalid_argument("1 < p < 2 requires mu > 0");
        const auto cp = compound_poisson_gamma_params(spec, t);
        const auto jumps = stream.poisson(cp.rate);
        if (jumps == 0) return 0.0;
        return stream.gamma(cp.shape * static_cast<double>(jumps), cp.scale);
    }
    if (p == 2.0) {
        if (!(mu > 0.0)) throw std::invalid_argument("p = 2 requires mu > 0");
        return stream.gamma(t / s2, s2 * mu);
    }
    if (p == 3.0 && !spec.mu_is_infinite()) {
        return stream.inverse_gaussian(mu * t, t * t / s2);
    }
    const double alpha = params::alpha_of_p(p);
    const double w = t / s2;
    if (p > 2.0) {
        // S = sigma2 Z with Z an exponentially tilted positive stable.
        const double cw = std::pow(w * std::pow(1.0 - alpha, 1.0 - alpha) / alpha, 1.0 / alpha);
        const double theta = spec.mu_is_infinite() ? 0.0 : tweedie::theta_of_mu(mu, alpha);
        if (theta == 0.0) return s2 * cw * positive_stable_draw(alpha, stream);
        return s2 * cw * tilted_stable_draw(alpha, theta * cw, stream, guard);
    }
    // p < 0: tilted spectrally negative extreme stable, alpha in (1,2).
    const double theta = (mu == 0.0) ? 0.0 : tweedie::theta_of_mu(mu, alpha);
    return s2 * tilted_extreme_stable_draw(alpha, w, theta, stream, guard);
}

std::vector<double> sample_hougaard_marginal(const PowerFamilySpec& spec, double t, std::size_t n,
                                             RandomStream stream, GuardPolicy guard) {
    std::vector<double> out(n);
    for (auto& x : out) x = hougaard_marginal_draw(spec, t, stream, guard);
    return out;
}

std::vector<double> sample_tweedie(const PowerFamilySpec& spec, double t, std::size_t n,
                                   RandomStream stream, GuardPolicy guard) {
    auto out = sample_hougaard_marginal(spec, t, n, std::move(stream), guard);
    for (auto& x : out) x /= t;
    return out;
}

}  // namespace hougaard::samplers
