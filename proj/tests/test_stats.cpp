#include "doctest.h"

#include <cmath>
#include <complex>

#include "json.hpp"

#include "hougaard/random.hpp"
#include "hougaard/stats.hpp"

using namespace hougaard;

TEST_CASE("empirical moments") {
    std::vector<double> tiny{1.0, 2.0, 3.0};
    auto m = stats::empirical_moments(tiny);
    CHECK(m.mean == doctest::Approx(2.0));
    CHECK(m.variance == doctest::Approx(1.0));

    std::vector<double> flat(10, 4.2);
    CHECK(stats::empirical_moments(flat).variance == doctest::Approx(0.0));

    RandomStream stream(21, 0);
    std::vector<double> normals(100000);
    for (auto& x : normals) x = stream.normal();
    m = stats::empirical_moments(normals);
    CHECK(std::fabs(m.mean) < 4.0 / std::sqrt(100000.0));
    CHECK(m.se_mean == doctest::Approx(std::sqrt(m.variance / 100000.0)));

    CHECK_THROWS_AS(stats::empirical_moments(std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("empirical characteristic function") {
    std::vector<double> degenerate(100, 0.7);
    auto pts = stats::ecf(degenerate, std::vector<double>{0.0, 1.3});
    CHECK(pts[0].value.real() == doctest::Approx(1.0));
    CHECK(pts[0].value.imag() == doctest::Approx(0.0));
    CHECK(std::abs(pts[1].value - std::exp(std::complex<double>(0.0, 1.3 * 0.7))) < 1e-12);

    RandomStream stream(22, 0);
    std::vector<double> poisson(50000);
    for (auto& x : poisson) x = static_cast<double>(stream.poisson(3.0));
    auto point = stats::ecf(poisson, std::vector<double>{1.0}).front();
    const auto cf = std::exp(3.0 * (std::exp(std::complex<double>(0.0, 1.0)) - 1.0));
    CHECK(std::abs(point.value - cf) < 3.0 * point.se);
    CHECK(std::abs(point.value) <= 1.0);
}

TEST_CASE("two-sample KS behaviour") {
    std::vector<double> same{0.1, 0.5, 0.9, 1.4};
    CHECK(stats::ks_two_sample(same, same).statistic == doctest::Approx(0.0));

    RandomStream stream(23, 0);
    std::vector<double> a(10000), b(10000), shifted(10000);
    for (auto& x : a) x = stream.normal();
    for (auto& x : b) x = stream.normal();
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] = b[i] + 0.5;
    auto null_rep = stats::ks_two_sample(a, b);
    CHECK(null_rep.passed);
    CHECK(null_rep.statistic >= 0.0);
    CHECK(null_rep.statistic <= 1.0);
    auto alt_rep = stats::ks_two_sample(a, shifted);
    CHECK_FALSE(alt_rep.passed);
}

TEST_CASE("KS null calibration at reduced scale") {
    // Under the null the 1% test should reject at no more than twice the
    // nominal level across 200 replicates.
    RandomStream stream(24, 0);
    int rejections = 0;
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<double> a(500), b(500);
        for (auto& x : a) x = stream.normal();
        for (auto& x : b) x = stream.normal();
        if (!stats::ks_two_sample(a, b).passed) ++rejections;
    }
    CHECK(rejections <= 4);
}

TEST_CASE("log-log slope fits") {
    std::vector<double> ts{1.0, 2.0, 4.0, 8.0};
    std::vector<double> vs(4), ses(4, 1.0);
    for (std::size_t i = 0; i < 4; ++i) vs[i] = std::pow(ts[i], 1.4);
    auto fit = stats::loglog_slope(ts, vs, ses);
    CHECK(fit.slope == doctest::Approx(1.4).epsilon(1e-12));
    CHECK(fit.se_slope > 0.0);

    for (std::size_t i = 0; i < 4; ++i) vs[i] = 7.3 * std::pow(ts[i], 0.6);
    CHECK(stats::loglog_slope(ts, vs, ses).slope == doctest::Approx(0.6).epsilon(1e-12));

    vs[1] = -1.0;
    CHECK_THROWS_AS(stats::loglog_slope(ts, vs, ses), std::invalid_argument);
}

TEST_CASE("increment correlation estimate on synthetic Gaussian pairs") {
    RandomStream stream(25, 0);
    const std::size_t n = 20000;
    const double rho = -0.242;  // increment correlation, so Corr(X1, X2-X1) = rho
    std::vector<double> x1(n), x2(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double g1 = stream.normal();
        const double g2 = stream.normal();
        const double inc = rho * g1 + std::sqrt(1.0 - rho * rho) * g2;
        x1[i] = g1;
        x2[i] = g1 + inc;
    }
    auto rep = stats::increment_corr_estimate(x1, x2, rho);
    CHECK(rep.passed);
    CHECK(std::fabs(rep.estimates[0] - rho) < 4.0 * rep.standard_errors[0]);

    auto null_rep = stats::increment_corr_estimate(x1, x2, 0.0);
    CHECK_FALSE(null_rep.passed);
}

TEST_CASE("StatReport serializes to the documented schema") {
    StatReport rep;
    rep.label = "demo";
    rep.estimates = {1.5};
    rep.standard_errors = {0.1};
    rep.statistic = 0.7;
    rep.critical_value = 1.0;
    rep.passed = true;
    rep.metadata["seed"] = "42";
    auto j = nlohmann::json::parse(rep.to_json());
    CHECK(j["label"] == "demo");
    CHECK(j["estimates"][0] == doctest::Approx(1.5));
    CHECK(j["standard_errors"][0] == doctest::Approx(0.1));
    CHECK(j["statistic"] == doctest::Approx(0.7));
    CHECK(j["critical_value"] == doctest::Approx(1.0));
    CHECK(j["passed"] == true);
    CHECK(j["metadata"]["seed"] == "42");
}
