#include "doctest.h"

#include <cmath>
#include <complex>

#include "hougaard/quadrature.hpp"

using namespace hougaard;

TEST_CASE("plain adaptive integration") {
    CHECK(quad::integrate([](double x) { return x * x; }, 0.0, 1.0, 1e-12) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    CHECK(quad::integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0, 1e-12) ==
          doctest::Approx(std::sqrt(std::acos(-1.0))).epsilon(1e-9));
}

TEST_CASE("complex integrand") {
    const double pi = std::acos(-1.0);
    auto val = quad::integrate_complex(
        [](double x) { return std::exp(std::complex<double>(0.0, x)); }, 0.0, pi, 1e-12);
    CHECK(val.real() == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(val.imag() == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("left-endpoint singularities") {
    CHECK(quad::integrate_left_singular([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                                        -0.5, 1e-12) == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(quad::integrate_left_singular([](double x) { return std::pow(x, -0.8); }, 0.0, 2.0,
                                        -0.8, 1e-12) ==
          doctest::Approx(std::pow(2.0, 0.2) / 0.2).epsilon(1e-8));
}

TEST_CASE("power-law tails") {
    CHECK(quad::integrate_power_tail([](double x) { return 1.0 / (x * x); }, 1.0, -2.0, 1e-12) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(quad::integrate_power_tail([](double x) { return std::pow(x, -3.0); }, 2.0, -3.0,
                                     1e-12) == doctest::Approx(0.125).epsilon(1e-9));
}
