#include <doctest.h>

#include <cmath>

#include "weissler/conditions.hpp"
#include "weissler/error.hpp"

using namespace weissler;

TEST_SUITE("conditions") {

TEST_CASE("weak condition examples") {
    const auto c2 = check_weak_condition(moment_sequence(RadialWeight::classical(2.0), 10));
    // 1/2 - (1/2)(h_4/h_2) = 1/2 - 1/3
    CHECK(c2.margin_at(1) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK_FALSE(c2.violated());

    const auto ce = check_weak_condition(moment_sequence(RadialWeight::counterexample(), 10));
    CHECK(ce.margin_at(1) == doctest::Approx(-0.0466666666666667).epsilon(1e-12));
    REQUIRE(ce.violated());
    CHECK(*ce.first_violation == 1);
    CHECK(ce.holds_up_to == 9);
}

TEST_CASE("geometric sequences satisfy the weak condition") {
    std::vector<double> g{1.0};
    for (int i = 0; i < 8; ++i) g.push_back(g.back() * 0.3);
    const auto r = check_weak_condition(MomentSequence::from_values(g));
    for (std::size_t m = 1; m <= 7; ++m)
        CHECK(r.margin_at(m) == doctest::Approx(0.3 / (m + 1.0)).epsilon(1e-12));
}

TEST_CASE("strong condition") {
    for (double a : {1.2, 2.0, 3.0, 7.5}) {
        const auto r = check_strong_condition(moment_sequence(RadialWeight::classical(a), 30));
        for (double m : r.margins) CHECK(std::fabs(m) <= 1e-12);
        CHECK_FALSE(r.violated());
    }
    const double p = 3.0;
    const auto r = check_strong_condition(moment_sequence(RadialWeight::power(p), 20));
    for (std::size_t n = 1; n <= 19; ++n)
        CHECK(r.margin_at(n) ==
              doctest::Approx(2 * p / ((1.0 + n) * (2 + p + 2.0 * n) * (4 + p + 2.0 * n))).epsilon(1e-10));
    CHECK(check_strong_condition(moment_sequence(RadialWeight::counterexample(), 5)).margin_at(1) < 0.0);
}

TEST_CASE("h4 bound") {
    const auto c2 = check_h4_bound(moment_sequence(RadialWeight::classical(2.0), 2));
    CHECK(c2.holds);
    CHECK(std::fabs(c2.gap) <= 1e-15);
    const auto ce = check_h4_bound(moment_sequence(RadialWeight::counterexample(), 2));
    CHECK_FALSE(ce.holds);
    CHECK(ce.lhs == doctest::Approx(0.10625));
    CHECK(ce.rhs == doctest::Approx(0.0718390804597701).epsilon(1e-12));
    const auto degenerate = check_h4_bound(MomentSequence({1.0, 0.0, 0.0}, std::vector<Provenance>(3)));
    CHECK(degenerate.holds);
    CHECK(degenerate.gap == 0.0);
}

TEST_CASE("lemma 2 inequality") {
    const auto c2 = check_lemma2_inequality(moment_sequence(RadialWeight::classical(2.0), 30));
    CHECK(c2.margin_at(1) == doctest::Approx(0.5 * std::log(1.5906368546373291) - 1.0 / 6.0).epsilon(1e-12));
    CHECK_FALSE(c2.violated());
    CHECK(check_lemma2_inequality(moment_sequence(RadialWeight::classical(3.0), 30)).margin_at(1) > 0.0);
    const auto zero = check_lemma2_inequality(MomentSequence({1.0, 0.0, 0.0}, std::vector<Provenance>(3)));
    CHECK(zero.margin_at(1) == 0.0);
    CHECK_THROWS_AS(check_lemma2_inequality(moment_sequence(RadialWeight::power(0.0), 3)), InsufficientMoments);
}

TEST_CASE("cauchy lower bound holds for every weight") {
    for (const auto& w : {RadialWeight::classical(1.5), RadialWeight::power(2.0), RadialWeight::counterexample()})
        CHECK_FALSE(check_cauchy_lower(moment_sequence(w, 30)).violated());
}

TEST_CASE("short sequences are rejected") {
    const auto h = moment_sequence(RadialWeight::classical(2.0), 1);
    CHECK_THROWS_AS(check_weak_condition(h), InputError);
    CHECK_THROWS_AS(check_strong_condition(h), InputError);
}

}
