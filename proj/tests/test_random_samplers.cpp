#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>

#include "hougaard/samplers.hpp"
#include "hougaard/stats.hpp"
#include "hougaard/tweedie.hpp"

using namespace hougaard;
using cplx = std::complex<double>;

namespace {

double quantile(std::vector<double> v, double q) {
    std::sort(v.begin(), v.end());
    return v[static_cast<std::size_t>(q * (v.size() - 1))];
}

void check_moments(const std::vector<double>& draws, double mean, double var) {
    auto m = stats::empirical_moments(draws);
    CHECK(std::fabs(m.mean - mean) < 4.0 * m.se_mean);
    CHECK(std::fabs(m.variance - var) < 4.0 * m.se_variance);
}

// ECF at a few frequencies against the analytic transform.
void check_ecf(const std::vector<double>& draws, const PowerFamilySpec& spec, double t) {
    const std::vector<double> zs{0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0};
    auto points = stats::ecf(draws, zs);
    for (const auto& pt : points) {
        const auto cf = std::exp(tweedie::cumulant_transform(pt.z, spec, t));
        CHECK(std::abs(pt.value - cf) < 3.0 * pt.se);
    }
}

}  // namespace

TEST_CASE("streams are deterministic and order-independent") {
    RandomStream a(42, 7), b(42, 7), c(42, 8);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
    bool identical = true;
    RandomStream a2(42, 7);
    for (int i = 0; i < 100; ++i) identical = identical && (a2.next_u64() == c.next_u64());
    CHECK_FALSE(identical);

    // A substream's output does not depend on sibling usage.
    RandomStream parent1(9, 0), parent2(9, 0);
    auto sibling = parent1.substream(3);
    for (int i = 0; i < 10; ++i) sibling.normal();
    auto s1 = parent1.substream(5);
    auto s2 = parent2.substream(5);
    for (int i = 0; i < 50; ++i) CHECK(s1.next_u64() == s2.next_u64());
}

TEST_CASE("base variate generators match their moments") {
    RandomStream stream(101, 0);
    const std::size_t n = 200000;
    std::vector<double> draws(n);

    for (auto& x : draws) x = stream.uniform();
    CHECK(*std::min_element(draws.begin(), draws.end()) > 0.0);
    CHECK(*std::max_element(draws.begin(), draws.end()) < 1.0);
    check_moments(draws, 0.5, 1.0 / 12.0);

    for (auto& x : draws) x = stream.normal();
    check_moments(draws, 0.0, 1.0);

    for (auto& x : draws) x = stream.exponential();
    check_moments(draws, 1.0, 1.0);

    for (auto& x : draws) x = stream.gamma(0.4, 2.0);
    check_moments(draws, 0.8, 1.6);
    for (auto& x : draws) x = stream.gamma(3.0, 0.5);
    check_moments(draws, 1.5, 0.75);

    for (auto& x : draws) x = static_cast<double>(stream.poisson(3.0));
    check_moments(draws, 3.0, 3.0);
    std::vector<double> big(20000);
    for (auto& x : big) x = static_cast<double>(stream.poisson(700.0));  // exercises chunking
    check_moments(big, 700.0, 700.0);

    for (auto& x : draws) x = stream.inverse_gaussian(2.0, 3.0);
    check_moments(draws, 2.0, 8.0 / 3.0);
}

TEST_CASE("positive stable: alpha = 1/2 equals the half-normal reciprocal law") {
    const std::size_t n = 20000;
    auto stable = samplers::sample_positive_stable(0.5, n, RandomStream(202, 0));
    RandomStream stream(202, 1);
    std::vector<double> levy(n);
    for (auto& x : levy) {
        const double g = stream.normal();
        x = 1.0 / (2.0 * g * g);
    }
    auto rep = stats::ks_two_sample(stable, levy);
    CHECK(rep.passed);
}

TEST_CASE("positive stable Laplace transform oracle") {
    const std::size_t n = 100000;
    for (double alpha : {0.3, 0.7}) {
        auto draws = samplers::sample_positive_stable(alpha, n, RandomStream(203, 0));
        for (double s : {0.5, 1.0, 2.0}) {
            std::vector<double> lt(n);
            for (std::size_t i = 0; i < n; ++i) lt[i] = std::exp(-s * draws[i]);
            auto m = stats::empirical_moments(lt);
            CHECK(std::fabs(m.mean - std::exp(-std::pow(s, alpha))) < 4.0 * m.se_mean);
        }
    }
}

TEST_CASE("tilted stable: zero tilt recovers the untilted law") {
    const std::size_t n = 20000;
    auto tilted = samplers::sample_tilted_stable(0.5, -1e-12, n, RandomStream(204, 0));
    auto plain = samplers::sample_positive_stable(0.5, n, RandomStream(204, 1));
    CHECK(stats::ks_two_sample(tilted, plain).passed);
}

TEST_CASE("tilted stable mean and variance match the tilted generator derivatives") {
    // The standard scale has log-Laplace -(-theta)^alpha, so the tilted law
    // has mean alpha (-theta)^{alpha-1} and variance alpha(1-alpha)(-theta)^{alpha-2}.
    const std::size_t n = 100000;
    for (double theta : {-1.0, -3.0, -30.0}) {  // the last splits into parts
        const double alpha = 0.6;
        auto draws = samplers::sample_tilted_stable(alpha, theta, n, RandomStream(205, 0));
        auto m = stats::empirical_moments(draws);
        const double mean = alpha * std::pow(-theta, alpha - 1.0);
        const double var = alpha * (1.0 - alpha) * std::pow(-theta, alpha - 2.0);
        CHECK(std::fabs(m.mean - mean) < 4.0 * m.se_mean);
        CHECK(std::fabs(m.variance - var) < 4.0 * m.se_variance);
    }
}

TEST_CASE("extreme 1-stable draws") {
    const std::size_t n = 100000;
    auto plus = samplers::sample_extreme_one_stable(1, n, RandomStream(206, 0));
    const double upper = quantile(plus, 0.995);
    const double lower = quantile(plus, 0.005);
    CHECK(upper / std::fabs(lower) > 1.0);  // heavy upper tail for b > 0

    auto minus = samplers::sample_extreme_one_stable(-1, n, RandomStream(206, 1));
    CHECK(std::fabs(quantile(minus, 0.005)) / quantile(minus, 0.995) > 1.0);

    // Closed-form CF of S(1, +1; 1).
    const std::vector<double> zs{0.5, 1.0};
    auto points = stats::ecf(plus, zs);
    for (const auto& pt : points) {
        const double lz = std::log(std::fabs(pt.z));
        const cplx expected =
            std::exp(cplx(-std::fabs(pt.z), -std::fabs(pt.z) * (2.0 / std::acos(-1.0)) * lz));
        CHECK(std::abs(pt.value - expected) < 3.0 * pt.se);
    }

    // Location-shift equivariance on the same draws.
    auto shifted = plus;
    for (auto& x : shifted) x += 2.5;
    CHECK(quantile(shifted, 0.5) == doctest::Approx(quantile(plus, 0.5) + 2.5));
}

TEST_CASE("compound Poisson-gamma parameters reproduce the analytic transform") {
    for (double p : {1.3, 1.5, 1.8}) {
        PowerFamilySpec spec(p, 0.7, 1.4);
        const double t = 2.0;
        const auto cp = samplers::compound_poisson_gamma_params(spec, t);
        for (double z : {-2.0, -0.5, 0.3, 1.0, 2.5}) {
            const cplx jump_cf = std::pow(1.0 - cplx(0.0, z) * cp.scale, -cp.shape);
            const cplx analytic = cp.rate * (jump_cf - 1.0);
            const cplx reference = tweedie::cumulant_transform(z, spec, t);
            CHECK(std::abs(analytic - reference) < 1e-9);
        }
    }
}

TEST_CASE("Tweedie sampling: closed-form cases") {
    const std::size_t n = 100000;

    // p = 1: support on (sigma2/t) Z, Tweedie-level mean mu.
    auto scaled_poisson =
        samplers::sample_tweedie(PowerFamilySpec(1.0, 1.0, 2.0), 3.0, n, RandomStream(300, 0));
    for (std::size_t i = 0; i < 200; ++i) {
        const double k = scaled_poisson[i] * 3.0;
        CHECK(k == doctest::Approx(std::round(k)));
    }
    auto m = stats::empirical_moments(scaled_poisson);
    CHECK(std::fabs(m.mean - 2.0) < 4.0 * m.se_mean);

    // p = 0 standard normal.
    auto gauss =
        samplers::sample_tweedie(PowerFamilySpec(0.0, 1.0, 0.0), 1.0, n, RandomStream(301, 0));
    check_moments(gauss, 0.0, 1.0);

    // p = 2: mean 3, variance sigma2 mu^2 / t = 2.25.
    auto gamma_draws =
        samplers::sample_tweedie(PowerFamilySpec(2.0, 0.5, 3.0), 2.0, n, RandomStream(302, 0));
    check_moments(gamma_draws, 3.0, 2.25);

    // 1 < p < 2: atom at zero plus a continuous part.
    auto cp_draws =
        samplers::sample_tweedie(PowerFamilySpec(1.5, 1.0, 1.0), 1.0, n, RandomStream(303, 0));
    const auto zeros = static_cast<double>(std::count(cp_draws.begin(), cp_draws.end(), 0.0));
    const double p0 = std::exp(-2.0);  // rate mu^{2-p}/(sigma2 (2-p)) = 2
    const double se = std::sqrt(p0 * (1.0 - p0) / static_cast<double>(n));
    CHECK(std::fabs(zeros / static_cast<double>(n) - p0) < 4.0 * se);
    CHECK(*std::max_element(cp_draws.begin(), cp_draws.end()) > 0.0);
}

TEST_CASE("Hougaard marginal moment and ECF law across the p cases") {
    struct Cell {
        double p, sigma2, mu, t;
        std::size_t n;
    };
    for (const Cell& cell : {Cell{0.0, 1.0, 0.5, 2.0, 100000}, Cell{1.0, 1.0, 1.0, 4.0, 100000},
                             Cell{1.5, 1.0, 1.0, 1.0, 100000}, Cell{2.0, 0.5, 3.0, 2.0, 100000},
                             Cell{3.0, 1.0, 2.0, 1.0, 100000}, Cell{2.5, 1.0, 1.2, 1.0, 30000},
                             Cell{-1.0, 1.0, 0.8, 1.0, 30000}}) {
        PowerFamilySpec spec(cell.p, cell.sigma2, cell.mu);
        auto draws =
            samplers::sample_hougaard_marginal(spec, cell.t, cell.n, RandomStream(304, 0));
        auto [mean, var] = tweedie::mean_var(spec, cell.t);
        check_moments(draws, mean, var);
        check_ecf(draws, spec, cell.t);
    }
}

TEST_CASE("p > 2 boundary member is the untilted positive stable") {
    PowerFamilySpec spec(3.0, 1.0, std::numeric_limits<double>::infinity());
    const std::size_t n = 50000;
    auto draws = samplers::sample_hougaard_marginal(spec, 1.0, n, RandomStream(305, 0));
    CHECK(*std::min_element(draws.begin(), draws.end()) > 0.0);
    const double alpha = 0.5;
    for (double s : {0.5, 1.0}) {
        std::vector<double> lt(n);
        for (std::size_t i = 0; i < n; ++i) lt[i] = std::exp(-s * draws[i]);
        auto m = stats::empirical_moments(lt);
        const double expected =
            std::exp(tweedie::kappa_alpha(cplx(-s), alpha).real());  // weight t/sigma2 = 1
        CHECK(std::fabs(m.mean - expected) < 4.0 * m.se_mean);
    }
}

TEST_CASE("nonnegative support for the subordinator cases") {
    for (double p : {1.0, 1.5, 2.0, 2.5, 3.0}) {
        PowerFamilySpec spec(p, 1.0, 1.0);
        auto draws = samplers::sample_hougaard_marginal(spec, 1.0, 2000, RandomStream(306, 0));
        CHECK(*std::min_element(draws.begin(), draws.end()) >= 0.0);
    }
}

TEST_CASE("acceptance-rate guard raises instead of hanging") {
    PowerFamilySpec spec(-1.0, 1.0, 60.0);  // theta = mu^2 / 2: hopeless tilt
    CHECK_THROWS_AS(
        samplers::sample_hougaard_marginal(spec, 1.0, 10, RandomStream(307, 0)),
        GuardError);
    samplers::GuardPolicy tight;
    tight.max_parts = 4;
    CHECK_THROWS_AS(samplers::sample_tilted_stable(0.6, -50.0, 10, RandomStream(308, 0), tight),
                    GuardError);
}

TEST_CASE("sampling is a pure function of the stream") {
    PowerFamilySpec spec(2.5, 1.0, 1.2);
    auto a = samplers::sample_hougaard_marginal(spec, 1.0, 500, RandomStream(309, 5));
    auto b = samplers::sample_hougaard_marginal(spec, 1.0, 500, RandomStream(309, 5));
    CHECK(a == b);
}
