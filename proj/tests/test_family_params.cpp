#include "doctest.h"

#include <cmath>
#include <limits>

#include "hougaard/family_params.hpp"

using namespace hougaard;

TEST_CASE("alpha map hits the named values and conventions") {
    CHECK(std::isinf(params::alpha_of_p(1.0)));
    CHECK(params::alpha_of_p(1.0) < 0);
    CHECK(params::alpha_of_p(0.0) == doctest::Approx(2.0));
    CHECK(params::alpha_of_p(3.0) == doctest::Approx(0.5));
    CHECK(params::alpha_of_p(1.5) == doctest::Approx(-1.0));
    CHECK_THROWS_AS(params::alpha_of_p(0.5), std::invalid_argument);
    CHECK_THROWS_AS(params::alpha_of_p(0.999), std::invalid_argument);
    CHECK_THROWS_AS(params::alpha_of_p(std::numeric_limits<double>::quiet_NaN()),
                    std::invalid_argument);
}

TEST_CASE("alpha map is monotone on each branch with range in [-inf,1) U (1,2]") {
    double prev = -std::numeric_limits<double>::infinity();
    for (double p = 1.0; p <= 60.0; p += 0.25) {
        const double a = params::alpha_of_p(p);
        CHECK(a >= prev);
        CHECK(a < 1.0);
        prev = a;
    }
    prev = 1.0;
    for (double p = -60.0; p <= 0.0; p += 0.25) {
        const double a = params::alpha_of_p(p);
        CHECK(a > prev);
        CHECK(a <= 2.0);
        prev = a;
    }
}

TEST_CASE("hurst map: named family values") {
    CHECK(params::hurst_of_p(1.0) == 0.0);
    CHECK(params::hurst_of_p(3.0) == doctest::Approx(2.0));
    CHECK(params::hurst_of_p(1.5) == doctest::Approx(-1.0));
    CHECK(params::hurst_of_p(1.5) < 0.0);
    CHECK(params::hurst_of_p(0.0) == doctest::Approx(0.5));
    CHECK_THROWS_AS(params::hurst_of_p(2.0), std::invalid_argument);
}

TEST_CASE("fractal dimension and the Levy round trip") {
    CHECK(params::fractal_dimension(0.5, 0.0) == doctest::Approx(1.0));
    CHECK(params::fractal_dimension(0.7, 0.0) == doctest::Approx(0.6));
    for (double p : {-1.0, 0.0, 1.5, 3.0, 5.0}) {
        const double h = params::hurst_of_p(p);
        CHECK(params::fractal_dimension(h, p) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("mu domains follow the case table") {
    auto d = params::mu_domain(-1.0);
    CHECK(d.contains(0.0));
    CHECK(d.contains(5.0));
    CHECK_FALSE(d.contains(-0.1));
    CHECK_FALSE(d.contains(std::numeric_limits<double>::infinity()));

    d = params::mu_domain(0.0);
    CHECK(d.contains(-3.0));
    CHECK(d.contains(3.0));

    d = params::mu_domain(1.5);
    CHECK_FALSE(d.contains(0.0));
    CHECK(d.contains(1e-10));

    d = params::mu_domain(3.0);
    CHECK_FALSE(d.contains(0.0));
    CHECK(d.contains(2.0));
    CHECK(d.contains(std::numeric_limits<double>::infinity()));
}

TEST_CASE("hurst domains have endpoints 1 and (2-alpha)/alpha") {
    auto d = params::hurst_domain(0.0);
    CHECK(d.lo == doctest::Approx(0.0));
    CHECK(d.hi == doctest::Approx(1.0));

    d = params::hurst_domain(3.0);
    CHECK(d.lo == doctest::Approx(1.0));
    CHECK(d.hi == doctest::Approx(3.0));

    d = params::hurst_domain(1.5);
    CHECK(d.lo == doctest::Approx(-3.0));
    CHECK(d.hi == doctest::Approx(1.0));

    CHECK_THROWS_AS(params::hurst_domain(2.0), std::invalid_argument);

    for (double p : {-2.0, -1.0, 0.0, 1.0, 1.5, 3.0, 7.0}) {
        auto dom = params::hurst_domain(p);
        CHECK(dom.contains(1.0));
        if (p != 2.0) CHECK(dom.contains(params::hurst_of_p(p)));
    }
}

TEST_CASE("correlation sign classification") {
    CHECK(params::correlation_sign(0.7, 0.0) == CorrelationSign::positive);
    CHECK(params::correlation_sign(0.3, 0.0) == CorrelationSign::negative);
    CHECK(params::correlation_sign(2.0, 3.0) == CorrelationSign::zero);
    CHECK_THROWS_AS(params::correlation_sign(5.0, 3.0), std::invalid_argument);

    // sign(rho) = sign(1 - D) across the admissible band.
    for (double p : {-1.0, 0.0, 1.5, 3.0}) {
        auto dom = params::hurst_domain(p);
        for (int i = 1; i < 10; ++i) {
            const double h = dom.lo + (dom.hi - dom.lo) * i / 10.0;
            const double d = params::fractal_dimension(h, p);
            auto sign = params::correlation_sign(h, p);
            if (d < 1.0) CHECK(sign == CorrelationSign::positive);
            else if (d > 1.0) CHECK(sign == CorrelationSign::negative);
            else CHECK(sign == CorrelationSign::zero);
        }
    }
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(PowerFamilySpec(0.5, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(PowerFamilySpec(2.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(PowerFamilySpec(2.0, 1.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(PowerFamilySpec(1.5, 1.0, 0.0), std::invalid_argument);
    CHECK_NOTHROW(PowerFamilySpec(-1.0, 1.0, 0.0));
    PowerFamilySpec boundary(3.0, 1.0, std::numeric_limits<double>::infinity());
    CHECK(boundary.mu_is_infinite());
}
