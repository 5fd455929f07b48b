#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "weissler/analytic.hpp"
#include "weissler/bernoulli.hpp"
#include "weissler/error.hpp"
#include "../src/oracles.hpp"

using namespace weissler;

namespace {

PowerSeries real_series(std::vector<double> c) { return PowerSeries::from_real(c); }

}  // namespace

TEST_SUITE("analytic") {

TEST_CASE("parsing") {
    const auto f = PowerSeries::parse("coeffs=1,0.5,0.25");
    REQUIRE(f.truncation() == 2);
    CHECK(f[1].real() == 0.5);
    CHECK(PowerSeries::parse("3").truncation() == 0);
    CHECK(f.is_nonnegative_real());
    CHECK_THROWS_AS(PowerSeries::parse("1,,2"), InputError);
    CHECK_THROWS_AS(PowerSeries::parse("1,abc"), InputError);
    CHECK_THROWS_AS(PowerSeries::parse(""), InputError);
    CHECK_THROWS_AS(PowerSeries::parse("1,-2").nonnegative_coefficients(), InputError);
}

TEST_CASE("dilation") {
    CHECK(dilate(real_series({1, 1}), 1.0)[1].real() == 1.0);
    CHECK(dilate(real_series({1, 1}), 1.0 / std::sqrt(2.0))[1].real() == doctest::Approx(0.7071068));
    CHECK(dilate(real_series({0, 0, 0, 1}), 0.5)[3].real() == 0.125);
    CHECK_THROWS_AS(dilate(real_series({1}), 0.0), InputError);
    CHECK_THROWS_AS(dilate(real_series({1}), 1.5), InputError);
}

TEST_CASE("series powers") {
    const auto sq = series_power(real_series({1, 1}), 2, 2);
    CHECK(sq[0].real() == 1.0);
    CHECK(sq[1].real() == 2.0);
    CHECK(sq[2].real() == 1.0);
    const auto s2 = series_power(real_series({1, 1 / std::sqrt(2.0)}), 2, 2);
    CHECK(s2[1].real() == doctest::Approx(std::sqrt(2.0)));
    CHECK(s2[2].real() == doctest::Approx(0.5));
    const auto id = series_power(real_series({1, 2, 3, 4}), 1, 2);
    CHECK(id.truncation() == 2);
    CHECK(id[2].real() == 3.0);
}

TEST_CASE("complex series power matches std::complex arithmetic") {
    const std::vector<std::complex<double>> c{{1, 2}, {0.5, -1}, {0, 0.25}};
    const PowerSeries f(c);
    const auto cube = series_power(f, 3, 6);
    std::vector<std::complex<double>> ref(7);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) ref[i + j + k] += c[i] * c[j] * c[k];
    for (std::size_t n = 0; n <= 6; ++n) CHECK(std::abs(cube[n] - ref[n]) <= 1e-14);
}

TEST_CASE("property: series_power against the nested-loop oracle") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> small(0, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> a(1 + trial % 5);
        for (auto& x : a) x = small(rng);
        const unsigned n = 1 + trial % 5;
        const auto ref = oracle::nested_power(a, n);
        const auto got = series_power(PowerSeries::from_real(a), n, ref.size() - 1);
        for (std::size_t k = 0; k < ref.size(); ++k) CHECK(got[k].real() == ref[k]);
    }
}

TEST_CASE("bergman norms") {
    const auto h = moment_sequence(RadialWeight::classical(2.0), 10);
    CHECK(bergman_norm_sq(real_series({1, 1}), h).value == doctest::Approx(1.5));
    CHECK(bergman_norm_sq(real_series({1}), h).value == 1.0);
    CHECK(bergman_norm_sq(real_series({0, 0, 0, 1}), h).value == doctest::Approx(0.25));
    CHECK_THROWS_AS(bergman_norm_sq(real_series(std::vector<double>(20, 1.0)), h), InputError);
}

TEST_CASE("even Weissler check examples") {
    const auto h = moment_sequence(RadialWeight::classical(2.0), 20);
    const auto v = weissler_even_check(real_series({1, 1}), h, 2, 1.0 / std::sqrt(2.0));
    CHECK(v.lhs == doctest::Approx(25.0 / 12.0).epsilon(1e-14));
    CHECK(v.rhs == doctest::Approx(2.25).epsilon(1e-15));
    CHECK(v.holds);
    const auto id = weissler_even_check(real_series({1, 1}), h, 1, 1.0);
    CHECK(std::fabs(id.gap) <= 1e-15);
    CHECK(id.holds);
    CHECK_FALSE(weissler_even_check(real_series({1, 0.01}), h, 2, 0.8).holds);
}

TEST_CASE("property: inequality holds at the sharp radius") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const RadialWeight weights[] = {RadialWeight::classical(1.5), RadialWeight::power(2.0)};
    for (const auto& w : weights) {
        const auto h = moment_sequence(w, 40);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<double> c(1 + trial % 7);
            for (auto& x : c) x = u(rng);
            for (unsigned n : {2u, 3u, 5u}) CHECK(weissler_even_check(real_series(c), h, n, 1 / std::sqrt(n * 1.0)).holds);
        }
    }
}

TEST_CASE("sharpness probe") {
    const auto w = RadialWeight::classical(2.0);
    const double eps1[] = {0.01};
    const auto at_boundary = sharpness_probe(w, 2, 1.0 / std::sqrt(2.0), eps1);
    CHECK(std::fabs(at_boundary[0].analytic_gap) <= 1e-18);
    const auto beyond = sharpness_probe(w, 2, 0.72, eps1);
    CHECK(beyond[0].gap < 0.0);
    CHECK(beyond[0].analytic_gap < 0.0);
    const double eps2[] = {0.05};
    CHECK(sharpness_probe(w, 3, 0.5, eps2)[0].gap > 0.0);
    const double bad[] = {0.3};
    CHECK_THROWS_AS(sharpness_probe(w, 2, 0.5, bad), InputError);
}

TEST_CASE("exp composition coefficients") {
    const auto t = exp_composition_coeffs(real_series({0, 1}), 6, 6);
    for (std::size_t n = 0; n <= 6; ++n)
        for (std::size_t k = 0; k <= 6; ++k) {
            double expected = 0.0;
            if (n == k) expected = 1.0 / std::tgamma(k + 1.0);
            CHECK(t(n, k) == doctest::Approx(expected).epsilon(1e-15));
        }
    const auto zero = exp_composition_coeffs(real_series({0}), 4, 4);
    CHECK(zero(0, 0) == 1.0);
    CHECK(zero(2, 0) == 0.0);
    CHECK(zero(0, 1) == 0.0);
    const auto zz = exp_composition_coeffs(real_series({0, 1, 1}), 2, 2);
    CHECK(zz(2, 1) == 1.0);
    CHECK(zz(2, 2) == 0.5);
    CHECK_THROWS_AS(exp_composition_coeffs(real_series({0, -1}), 2, 2), InputError);
}

TEST_CASE("zero-free check") {
    const auto hc = moment_sequence(RadialWeight::counterexample(), 40);
    const auto v1 = zero_free_weissler_check(real_series({0}), hc, 2.5, 10, 10);
    CHECK(v1.lhs == 1.0);
    CHECK(v1.rhs == 1.0);
    CHECK(v1.holds);

    // phi = z reproduces the Bernoulli series; at q = 2 the inequality fails.
    const auto v2 = zero_free_weissler_check(real_series({0, 1}), hc, 2.0, 30, 30);
    CHECK(v2.lhs == doctest::Approx(series_S(2.0, hc).value).epsilon(1e-12));
    CHECK(v2.rhs == doctest::Approx(std::pow(series_S(1.0, hc).value, 2.0)).epsilon(1e-12));
    CHECK_FALSE(v2.holds);

    const auto h2 = moment_sequence(RadialWeight::classical(2.0), 40);
    CHECK(zero_free_weissler_check(real_series({0.3, 0.5, 0.2}), h2, 1.7, 35, 35).holds);
    CHECK_THROWS_AS(zero_free_weissler_check(real_series({0, 1}), h2, 0.5, 10, 10), InputError);
}

}
