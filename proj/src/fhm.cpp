#include "hougaard/fhm.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hougaard/quadrature.hpp"
#include "hougaard/tweedie.hpp"

namespace hougaard {

namespace {

using cplx = std::complex<double>;

void require_variance_band(double h) {
    if (!(h < 0.0)) throw std::invalid_argument("kernel exponent h = H - 1/alpha must be < 0");
    if (!(h > -0.5))
        throw std::invalid_argument("finite-variance band requires H > 1/alpha - 1/2 (h > -1/2)");
}

}  // namespace

WeightKernel::WeightKernel(double hurst_, double alpha_)
    : h(hurst_ - 1.0 / alpha_), hurst(hurst_), alpha(alpha_) {
    if (!(h < 0.0))
        throw std::invalid_argument("WeightKernel: the construction requires H < 1/alpha");
}

FHMConfig::FHMConfig(PowerFamilySpec s, double hurst_, double truncation_, double step_,
                     std::size_t n_paths_, RandomStream stream_)
    : spec(s), hurst(hurst_), truncation(truncation_), step(step_), n_paths(n_paths_),
      stream(stream_) {
    if (spec.p == 1.0 || spec.p == 2.0)
        throw std::invalid_argument("FHMConfig: p = 1 and p = 2 are excluded");
    if (spec.p > 2.0 && spec.mu_is_infinite())
        throw std::invalid_argument("FHMConfig: the mu = infinity boundary has no finite mean");
    const double a = alpha();
    if (!(hurst < 1.0 / a))
        throw std::invalid_argument("FHMConfig: requires H < 1/alpha");
    if (a > 0.0 && !(hurst > 0.0))
        throw std::invalid_argument("FHMConfig: requires H > 0 when alpha > 0");
    if (!(truncation > 0.0) || !(step > 0.0) || step >= truncation)
        throw std::invalid_argument("FHMConfig: need 0 < step < truncation");
}

double FHMConfig::alpha() const { return params::alpha_of_p(spec.p); }
double FHMConfig::h() const { return hurst - 1.0 / alpha(); }

namespace fhm {

double weight(double t, double u, double h) {
    if (!(t >= 0.0)) throw std::invalid_argument("weight: t must be >= 0");
    if (!(h < 0.0)) throw std::invalid_argument("weight: h must be negative");
    if (u >= t) return 0.0;
    if (u >= 0.0) return std::pow(t - u, h);
    return std::pow(t - u, h) - std::pow(-u, h);
}

namespace {

// Integral of ((1+x)^h - x^h)^2 over (lo, infinity), lo >= 0; this is the
// negative-axis part of the kernel L2 mass after u -> -x.
double negative_side_l2(double h, double lo, double tol) {
    auto f = [h](double x) {
        const double d = std::pow(1.0 + x, h) - std::pow(x, h);
        return d * d;
    };
    const double far = std::max(10.0, 2.0 * lo);
    double total = 0.0;
    if (lo < 1.0) {
        total += quad::integrate_left_singular(f, lo, 1.0, lo == 0.0 ? 2.0 * h : 0.0, tol);
        total += quad::integrate(f, 1.0, far, tol);
    } else if (lo < far) {
        total += quad::integrate(f, lo, far, tol);
    }
    total += quad::integrate_power_tail(f, far, 2.0 * h - 2.0, tol);
    return total;
}

}  // namespace

double kernel_l2(double h) {
    require_variance_band(h);
    const double tol = 1e-10;
    return 1.0 / (2.0 * h + 1.0) + negative_side_l2(h, 0.0, tol);
}

double kernel_tail_variance(double h, double truncation) {
    require_variance_band(h);
    if (!(truncation > 0.0)) throw std::invalid_argument("kernel_tail_variance: T must be > 0");
    const double tol = 1e-10;
    return negative_side_l2(h, truncation, tol) / kernel_l2(h);
}

double choose_truncation(double h, double t_max, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("choose_truncation: epsilon in (0,1)");
    double t1 = 1.0;
    while (kernel_tail_variance(h, t1) > epsilon) {
        t1 *= 2.0;
        if (t1 > 1e12) throw std::runtime_error("choose_truncation: window exploded");
    }
    return t1 * t_max;
}

namespace {

// Cumulant transform of S_p(mu; 1) evaluated at a real argument y, i.e.
// (1/sigma2) [kappa_alpha(theta + i y sigma2) - kappa_alpha(theta)].
struct UnitCumulant {
    double alpha;
    double sigma2;
    double theta;  // 0 at the p < 0 boundary mu = 0
    cplx k_theta;

    explicit UnitCumulant(const PowerFamilySpec& spec)
        : alpha(params::alpha_of_p(spec.p)), sigma2(spec.sigma2) {
        if (spec.p > 2.0 && spec.mu_is_infinite())
            throw std::invalid_argument("fhm cumulant: mu must be finite");
        theta = (spec.mu == 0.0) ? 0.0 : tweedie::theta_of_mu(spec.mu, alpha);
        k_theta = (theta == 0.0) ? cplx(0.0) : tweedie::kappa_alpha(cplx(theta), alpha);
    }

    cplx operator()(double y) const {
        if (y == 0.0) return 0.0;
        return (tweedie::kappa_alpha(cplx(theta, y * sigma2), alpha) - k_theta) / sigma2;
    }
};

// Exponent of the integrand blowup where |w| -> infinity (the u = 0 and
// u = t edges): |C| ~ |w|^alpha for alpha > 0, bounded for alpha < 0.
double edge_exponent(double alpha, double h) { return alpha > 0.0 ? alpha * h : 0.0; }

}  // namespace

std::complex<double> fhm_cumulant_transform(double z, double t, const FHMConfig& cfg) {
    if (!(t > 0.0)) throw std::invalid_argument("fhm_cumulant_transform: t must be positive");
    if (z == 0.0) return 0.0;
    const double h = cfg.h();
    const double alpha = cfg.alpha();
    const UnitCumulant unit(cfg.spec);
    const double tol = 2e-7;

    auto over_negative = [&](double x) { return unit(z * (std::pow(t + x, h) - std::pow(x, h))); };
    auto over_positive_gap = [&](double y) { return unit(z * std::pow(y, h)); };

    const double beta = edge_exponent(alpha, h);
    const double far = std::max(10.0 * t, 10.0);
    // Tail exponent of |C(z w(t,u))| as u -> -infinity: linear term when the
    // mean is finite and nonzero, |w|^alpha at the mu = 0 boundary.
    const double gamma = (unit.theta == 0.0 && alpha > 1.0) ? alpha * (h - 1.0) : (h - 1.0);

    cplx total = quad::integrate_left_singular_complex(over_negative, 0.0, 1.0, beta, tol);
    total += quad::integrate_complex(over_negative, 1.0, far, tol);
    total += quad::integrate_power_tail_complex(over_negative, far, gamma, tol);
    total += quad::integrate_left_singular_complex(over_positive_gap, 0.0, 0.5 * t, beta, tol);
    total += quad::integrate_complex(over_positive_gap, 0.5 * t, t, tol);
    return total;
}

double fhm_variance(double t, const FHMConfig& cfg) {
    if (!(t > 0.0)) throw std::invalid_argument("fhm_variance: t must be positive");
    require_variance_band(cfg.h());
    const double h = cfg.h();
    return cfg.spec.sigma2 * std::pow(cfg.spec.mu, cfg.spec.p) * std::pow(t, 1.0 + 2.0 * h) *
           kernel_l2(h);
}

namespace {

struct DiscreteKernel {
    std::vector<double> weights;  // one per step, aligned with the step grid
    double variance_mass;         // step * sum of squared weights
};

// Step weights for one eval time over the grid -T, -T+step, ..., t.
// Midpoint values except the steps ending at u = 0 and u = t, which carry
// the root-mean-square kernel mass of the step (signed).
DiscreteKernel discrete_kernel(const FHMConfig& cfg, double t, std::size_t steps_total,
                               std::size_t zero_idx, std::size_t t_idx) {
    const double h = cfg.h();
    const double dt = cfg.step;
    DiscreteKernel out;
    out.weights.assign(steps_total, 0.0);
    for (std::size_t k = 0; k < t_idx; ++k) {
        const double a = (static_cast<double>(k) - static_cast<double>(zero_idx)) * dt;
        if (k + 1 == t_idx) {
            // Step [t - dt, t): exact L2 mass of (t-u)^h.
            out.weights[k] = std::pow(dt, h) / std::sqrt(2.0 * h + 1.0);
        } else if (k + 1 == zero_idx) {
            // Step [-dt, 0): exact L2 mass of (t-u)^h - (-u)^h, negative side.
            const double direct = (std::pow(t + dt, 2.0 * h + 1.0) - std::pow(t, 2.0 * h + 1.0) +
                                   std::pow(dt, 2.0 * h + 1.0)) /
                                  (2.0 * h + 1.0);
            auto cross_fn = [&](double x) { return std::pow(t + x, h) * std::pow(x, h); };
            const double cross =
                quad::integrate_left_singular(cross_fn, 0.0, dt, h, 1e-12);
            out.weights[k] = -std::sqrt(std::max(0.0, direct - 2.0 * cross) / dt);
        } else {
            const double mid = a + 0.5 * dt;
            out.weights[k] = weight(t, mid, h);
        }
    }
    double mass = 0.0;
    for (double w : out.weights) mass += w * w;
    out.variance_mass = mass * dt;
    return out;
}

}  // namespace

PathEnsemble simulate_fhm(const FHMConfig& cfg, const std::vector<double>& eval_times,
                          unsigned threads) {
    if (eval_times.empty()) throw std::invalid_argument("simulate_fhm: no eval times");
    const double h = cfg.h();
    require_variance_band(h);
    const double dt = cfg.step;
    double t_max = 0.0;
    for (double t : eval_times) {
        if (!(t > 0.0)) throw std::invalid_argument("simulate_fhm: eval times must be positive");
        const double ratio = t / dt;
        if (std::fabs(ratio - std::llround(ratio)) > 1e-9)
            throw std::invalid_argument("simulate_fhm: eval times must be step-aligned");
        t_max = std::max(t_max, t);
    }
    const double tail = kernel_tail_variance(h, cfg.truncation / t_max);
    if (tail > cfg.tail_epsilon) {
        std::ostringstream os;
        os << "simulate_fhm: tail variance ratio " << tail << " exceeds budget "
           << cfg.tail_epsilon << "; enlarge the truncation window";
        throw std::invalid_argument(os.str());
    }

    const auto zero_idx = static_cast<std::size_t>(std::llround(cfg.truncation / dt));
    const auto steps_total = zero_idx + static_cast<std::size_t>(std::llround(t_max / dt));
    const double l2 = kernel_l2(h);

    std::vector<DiscreteKernel> kernels;
    kernels.reserve(eval_times.size());
    for (double t : eval_times) {
        const auto t_idx = zero_idx + static_cast<std::size_t>(std::llround(t / dt));
        kernels.push_back(discrete_kernel(cfg, t, steps_total, zero_idx, t_idx));
        // Window L2 mass the discretization should reproduce.
        const double window =
            std::pow(t, 1.0 + 2.0 * h) * l2 * (1.0 - kernel_tail_variance(h, cfg.truncation / t));
        const double deficit = 1.0 - kernels.back().variance_mass / window;
        if (std::fabs(deficit) > cfg.variance_deficit) {
            std::ostringstream os;
            os << "simulate_fhm: discretization variance deficit " << deficit
               << " at t = " << t << " exceeds budget " << cfg.variance_deficit
               << "; reduce the step";
            throw std::invalid_argument(os.str());
        }
    }

    TimeGrid grid{eval_times, false};
    PathEnsemble ens{grid, cfg.n_paths, {}, cfg.spec, cfg.stream.master_seed(),
                     cfg.stream.stream_index(), kRngName, {}};
    ens.values.assign(cfg.n_paths * eval_times.size(), 0.0);
    ens.metadata["truncation"] = std::to_string(cfg.truncation);
    ens.metadata["step"] = std::to_string(dt);
    ens.metadata["tail_epsilon"] = std::to_string(cfg.tail_epsilon);
    ens.metadata["hurst"] = std::to_string(cfg.hurst);

    const std::size_t nt = eval_times.size();
    parallel_for(cfg.n_paths, threads, [&](std::size_t begin, std::size_t end) {
        std::vector<double> inc(steps_total);
        for (std::size_t i = begin; i < end; ++i) {
            RandomStream path_stream = cfg.stream.substream(i);
            for (std::size_t k = 0; k < steps_total; ++k) {
                RandomStream s = path_stream.substream(k);
                inc[k] = samplers::hougaard_marginal_draw(cfg.spec, dt, s);
            }
            for (std::size_t j = 0; j < nt; ++j) {
                const auto& w = kernels[j].weights;
                double acc = 0.0;
                for (std::size_t k = 0; k < w.size(); ++k) acc += w[k] * inc[k];
                ens.values[i * nt + j] = acc;
            }
        }
    });
    return ens;
}

StatReport fhm_ss_check(const FHMConfig& cfg, double c, double t, std::size_t n, RateMap rate_map,
                        double cf_tol) {
    if (!(c > 0.0) || !(t > 0.0))
        throw std::invalid_argument("fhm_ss_check: c and t must be positive");
    const double h = cfg.h();
    const double exponent = rate_map == RateMap::definition ? cfg.hurst - 1.0 : h;
    PowerFamilySpec scaled_spec(cfg.spec.p, cfg.spec.sigma2,
                                cfg.spec.mu * std::pow(c, exponent));
    FHMConfig scaled(scaled_spec, cfg.hurst, cfg.truncation * c, cfg.step * c, cfg.n_paths,
                     cfg.stream.substream(1));
    scaled.tail_epsilon = cfg.tail_epsilon;
    scaled.variance_deficit = cfg.variance_deficit;

    const double shrink = std::pow(c, -cfg.hurst);
    double residual = 0.0;
    for (double z : {0.25, 0.5, 0.75, 1.0, 1.5}) {
        cplx lhs = fhm_cumulant_transform(shrink * z, c * t, scaled);
        cplx rhs = fhm_cumulant_transform(z, t, cfg);
        residual = std::max(residual, std::abs(lhs - rhs));
    }

    FHMConfig base = cfg;
    base.n_paths = n;
    base.stream = cfg.stream.substream(2);
    scaled.n_paths = n;
    scaled.stream = cfg.stream.substream(3);
    auto scaled_vals = simulate_fhm(scaled, {c * t}).column(0);
    for (auto& x : scaled_vals) x *= shrink;
    auto base_vals = simulate_fhm(base, {t}).column(0);

    auto rep = stats::ks_two_sample(scaled_vals, base_vals);
    rep.label = "fhm_ss_check";
    rep.estimates = {residual};
    rep.passed = rep.passed && residual <= cf_tol;
    rep.metadata["rate_map"] = rate_map == RateMap::definition ? "definition" : "driver_matched";
    rep.metadata["cf_tol"] = std::to_string(cf_tol);
    rep.metadata["c"] = std::to_string(c);
    rep.metadata["t"] = std::to_string(t);
    return rep;
}

}  // namespace fhm
}  // namespace hougaard
