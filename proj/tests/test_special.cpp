#include <doctest.h>

#include <cmath>
#include <numbers>

#include "weissler/error.hpp"
#include "weissler/special.hpp"

using namespace weissler;

TEST_SUITE("special") {

TEST_CASE("gamma at integers and half-integers") {
    CHECK(gamma_function(5.0) == 24.0);
    CHECK(gamma_function(1.0) == 1.0);
    CHECK(gamma_function(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-15));
    CHECK(gamma_function(3.5) == doctest::Approx(15.0 * std::sqrt(std::numbers::pi) / 8.0).epsilon(1e-15));
    CHECK(gamma_function(3.5) == doctest::Approx(3.3233509).epsilon(1e-7));
}

TEST_CASE("gamma Lanczos branch agrees with std::tgamma") {
    for (double x : {0.1, 0.3, 1.7, 2.25, 7.77, 33.3, 150.2}) {
        CAPTURE(x);
        CHECK(gamma_function(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-13));
    }
}

TEST_CASE("gamma rejects bad arguments") {
    CHECK_THROWS_AS(gamma_function(0.0), InputError);
    CHECK_THROWS_AS(gamma_function(-1.5), InputError);
    CHECK_THROWS_AS(gamma_function(NAN), InputError);
    CHECK_THROWS_AS(gamma_function(200.0), NumericalError);
}

TEST_CASE("bessel I values") {
    CHECK(bessel_I(0, 0.0) == 1.0);
    CHECK(bessel_I(1, 0.0) == 0.0);
    CHECK(bessel_I(0, 2.0) == doctest::Approx(2.2795853023360673).epsilon(1e-15));
    CHECK(bessel_I(1, 1.0) == doctest::Approx(0.5651591039924850).epsilon(1e-14));
    CHECK(bessel_I(2, 10.0) == doctest::Approx(2281.518967726004).epsilon(1e-13));
}

TEST_CASE("extended bessel helpers") {
    CHECK(static_cast<double>(bessel_I0_minus_one_ext(1e-5L)) == doctest::Approx(2.5e-11).epsilon(1e-9));
    const long double x = 2.0L;
    const long double lhs = 2.0L * bessel_I_prime_ext(1, x);
    const long double rhs = bessel_I_ext(0, x) + bessel_I_ext(2, x);
    CHECK(std::fabs(static_cast<double>(lhs - rhs)) < 1e-15);
}

}
