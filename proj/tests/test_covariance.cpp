#include "doctest.h"

#include <cmath>

#include "hougaard/covariance.hpp"
#include "hougaard/family_params.hpp"
#include "hougaard/random.hpp"

using namespace hougaard;

TEST_CASE("R_D closed values and the D = 2 diagonal convention") {
    CHECK(covariance::r_d(1.0, 2.0, 1.0) == doctest::Approx(1.0));
    CHECK(covariance::r_d(2.0, 3.0, 0.0) == doctest::Approx(6.0));
    CHECK(covariance::r_d(1.0, 2.0, 2.0) == doctest::Approx(0.5));
    CHECK(covariance::r_d(2.0, 2.0, 2.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(covariance::r_d(0.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("R_D symmetry, diagonal, and homogeneity") {
    RandomStream stream(11, 0);
    for (int i = 0; i < 200; ++i) {
        const double s = 0.1 + 5.0 * stream.uniform();
        const double t = 0.1 + 5.0 * stream.uniform();
        const double d = 2.0 * stream.uniform();
        const double c = 0.2 + 3.0 * stream.uniform();
        CHECK(covariance::r_d(s, t, d) == covariance::r_d(t, s, d));
        CHECK(covariance::r_d(s, s, d) == doctest::Approx(std::pow(s, 2.0 - d)));
        CHECK(covariance::r_d(c * s, c * t, d) ==
              doctest::Approx(std::pow(c, 2.0 - d) * covariance::r_d(s, t, d)).epsilon(1e-12));
    }
}

TEST_CASE("variance profile") {
    auto v = VarianceFunction::power(1.5, 3.0);
    CHECK(covariance::variance_profile(v, 2.0, 0.7, 1.0) == doctest::Approx(v(0.7)));
    // Power case: t^{2H} sigma2 (mu t^{1-H})^p = sigma2 mu^p t^{2-D}.
    for (double h : {0.4, 1.3, 2.0}) {
        for (double t : {0.5, 1.0, 2.0, 7.0}) {
            const double d = (h - 1.0) * (3.0 - 2.0);
            CHECK(covariance::variance_profile(v, h, 0.7, t) ==
                  doctest::Approx(1.5 * std::pow(0.7, 3.0) * std::pow(t, 2.0 - d))
                      .epsilon(1e-12));
        }
    }
    // Levy case H = 1/alpha: linear in t.
    const double h_levy = params::hurst_of_p(3.0);
    const double unit = covariance::variance_profile(v, h_levy, 0.7, 1.0);
    for (double t : {2.0, 5.0})
        CHECK(covariance::variance_profile(v, h_levy, 0.7, t) ==
              doctest::Approx(unit * t).epsilon(1e-12));
}

TEST_CASE("covariance reduces to the separable power form") {
    auto v = VarianceFunction::power(0.8, 2.5);
    const double hurst = 1.6, mu = 1.3;
    const double d = (hurst - 1.0) * (2.5 - 2.0);
    for (double s : {0.5, 1.0, 3.0}) {
        CHECK(covariance::cov(v, hurst, mu, s, s) ==
              doctest::Approx(covariance::variance_profile(v, hurst, mu, s)));
        for (double t : {0.5, 2.0, 4.5}) {
            CHECK(covariance::cov(v, hurst, mu, s, t) ==
                  doctest::Approx(0.8 * std::pow(mu, 2.5) * covariance::r_d(s, t, d))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("increment correlation closed values, bounds, and symmetry") {
    for (double r : {0.3, 1.0, 2.5}) CHECK(covariance::increment_correlation(r, 1.0) == 0.0);
    CHECK(covariance::increment_correlation(1.0, 0.0) == doctest::Approx(1.0));
    CHECK(covariance::increment_correlation(1.0, 2.0) == doctest::Approx(-0.5));
    RandomStream stream(12, 0);
    for (int i = 0; i < 400; ++i) {
        const double r = 0.05 + 4.0 * stream.uniform();
        const double d = 2.0 * stream.uniform();
        const double rho = covariance::increment_correlation(r, d);
        CHECK(rho <= 1.0 + 1e-12);
        CHECK(rho >= -1.0 - 1e-12);
        CHECK(rho == doctest::Approx(covariance::increment_correlation(1.0 / r, d))
                         .epsilon(1e-10));
        if (d < 1.0) CHECK(rho > 0.0);
        if (d > 1.0) CHECK(rho < 0.0);
    }
    CHECK_THROWS_AS(covariance::increment_correlation(1.0, 2.3), std::invalid_argument);
}

TEST_CASE("Gram positive semidefiniteness inside [0,2], counterexample outside") {
    std::vector<double> grid;
    for (int i = 1; i <= 20; ++i) grid.push_back(i / 20.0);
    for (double d : {0.0, 0.5, 1.0, 1.5, 2.0}) CHECK(covariance::psd_check(d, grid) >= -1e-10);
    // D = 0 is the rank-one outer product s t.
    CHECK(std::fabs(covariance::psd_check(0.0, grid)) < 1e-10);
    CHECK(covariance::psd_check(2.5, {1.0, 100.0}) < -1e-6);
}

TEST_CASE("H = 1 profiles") {
    H1FamilySpec fam(0.0, 1.3, 0.7, 0.4);
    const double unit = 0.7 * std::exp(1.3 * 0.4);
    CHECK(covariance::h1_variance_profile(fam, 1.0) == doctest::Approx(unit).epsilon(1e-12));
    CHECK(covariance::h1_variance_profile(fam, 2.0) / covariance::h1_variance_profile(fam, 1.0) ==
          doctest::Approx(2.0).epsilon(1e-12));
    for (double t : {0.3, 1.7, 6.0})
        CHECK(covariance::h1_variance_profile(fam, t) == doctest::Approx(unit * t).epsilon(1e-12));

    CHECK(covariance::h1_cov(fam, 1.0, 3.0) == doctest::Approx(unit).epsilon(1e-12));
    CHECK(covariance::h1_cov(fam, 3.0, 1.0) == doctest::Approx(covariance::h1_cov(fam, 1.0, 3.0)));
    CHECK(covariance::h1_cov(fam, 2.0, 2.0) ==
          doctest::Approx(covariance::h1_variance_profile(fam, 2.0)));
    for (double s : {0.5, 2.0})
        for (double t : {1.0, 4.0})
            CHECK(covariance::h1_cov(fam, s, t) ==
                  doctest::Approx(unit * std::min(s, t)).epsilon(1e-12));
    CHECK_THROWS_AS(H1FamilySpec(0.0, 0.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("uncentered mean structure") {
    covariance::SignPair zero{};
    covariance::SignPair identity{1.0, -1.0};
    // a = 0, b(sgn mu)|mu| = mu: plain drift.
    CHECK(covariance::mean_structure(0.5, 2.0, 3.0, zero, identity) == doctest::Approx(6.0));
    CHECK(covariance::mean_structure(0.5, -2.0, 3.0, zero, identity) == doctest::Approx(-6.0));
    // H = 2: |mu|^{H/(H-1)} = mu^2.
    CHECK(covariance::mean_structure(2.0, 4.0, 0.0, covariance::SignPair{1.0, 0.0}, zero) ==
          doctest::Approx(16.0));
    // t = 0 keeps only the constant term.
    CHECK(covariance::mean_structure(2.0, 4.0, 0.0, covariance::SignPair{1.0, 0.0}, identity) ==
          doctest::Approx(16.0));
    CHECK_THROWS_AS(
        covariance::mean_structure(0.5, 0.0, 1.0, covariance::SignPair{1.0, 1.0}, identity),
        std::domain_error);
    CHECK(covariance::mean_structure(2.0, 0.0, 1.0, covariance::SignPair{1.0, 1.0}, identity) ==
          doctest::Approx(0.0));
}
