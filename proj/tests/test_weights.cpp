#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "weissler/error.hpp"
#include "weissler/weights.hpp"

using namespace weissler;

TEST_SUITE("weights") {

TEST_CASE("counterexample moments") {
    const auto w = RadialWeight::counterexample();
    CHECK(moment(w, 0).value == 1.0);
    CHECK(moment(w, 2).value == doctest::Approx(5.0 / 24.0).epsilon(1e-15));
    const auto q = moment(w, 2, 1e-13, MomentMethod::Quadrature);
    CHECK(q.provenance.source == Provenance::Source::Quadrature);
    CHECK(std::fabs(q.value - 5.0 / 24.0) <= 1e-12);
}

TEST_CASE("classical and power closed forms agree where they should") {
    CHECK(moment(RadialWeight::classical(2.0), 2).value == doctest::Approx(0.5).epsilon(1e-15));
    for (unsigned n = 0; n <= 10; ++n) {
        const double p = moment(RadialWeight::power(0.0), 2 * n).value;
        const double c = moment(RadialWeight::classical(2.0), 2 * n).value;
        CHECK(p == doctest::Approx(1.0 / (n + 1)).epsilon(1e-15));
        CHECK(c == doctest::Approx(p).epsilon(1e-15));
    }
}

TEST_CASE("closed form against quadrature across families") {
    for (const auto& w : {RadialWeight::classical(1.3), RadialWeight::classical(1.5), RadialWeight::classical(4.0),
                          RadialWeight::power(0.5), RadialWeight::power(7.0), RadialWeight::counterexample()}) {
        CAPTURE(w.label());
        for (unsigned m : {0u, 1u, 4u, 17u, 40u}) {
            const double c = moment(w, m).value;
            const auto q = moment(w, m, 1e-12, MomentMethod::Quadrature);
            CHECK(std::fabs(c - q.value) <= 1e-11);
            CHECK(q.provenance.error_bound <= 1e-12);
        }
    }
}

TEST_CASE("moment sequences") {
    const auto h = moment_sequence(RadialWeight::classical(2.0), 3);
    REQUIRE(h.max_index() == 3);
    CHECK(h[0] == 1.0);
    CHECK(h[1] == doctest::Approx(0.5));
    CHECK(h[2] == doctest::Approx(1.0 / 3.0));
    CHECK(h[3] == doctest::Approx(0.25));
    const auto c = moment_sequence(RadialWeight::counterexample(), 2);
    CHECK(c[2] == doctest::Approx(17.0 / 160.0).epsilon(1e-15));
    CHECK(h.max_error_bound() == 0.0);
    CHECK(h.prefix(1).max_index() == 1);
}

TEST_CASE("custom weights are normalized") {
    const auto w = RadialWeight::custom([](double r) { return 4.0 * r; });
    CHECK(w.normalization() == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
    const auto h = moment_sequence(w, 0);
    CHECK(h.size() == 1);
    CHECK(h[0] == 1.0);
    // normalized 3 rho: h_2 = 3/5
    CHECK(moment(w, 2).value == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("custom weight with an integrable singularity at zero") {
    const auto w = RadialWeight::custom([](double r) { return 1.0 / std::pow(r, 1.5); }, true);
    // raw h_m = int rho^(m - 1/2) = 1/(m + 1/2)
    CHECK(w.normalization() == doctest::Approx(2.0).epsilon(1e-11));
    CHECK(moment(w, 2).value == doctest::Approx(0.2).epsilon(1e-10));
}

TEST_CASE("custom evaluator misbehaving") {
    CHECK_THROWS_AS(RadialWeight::custom([](double) { return -1.0; }), InputError);
    CHECK_THROWS_AS(RadialWeight::custom([](double) { return NAN; }), InputError);
}

TEST_CASE("MomentSequence invariants") {
    CHECK_THROWS_AS(MomentSequence::from_values({1.0, 2.0}), InputError);
    CHECK_THROWS_AS(MomentSequence::from_values({1.0, -0.1}), InputError);
    CHECK_THROWS_AS(MomentSequence::from_values({}), InputError);
    const auto h = MomentSequence::from_values({2.0, 1.0, 0.5});
    CHECK(h[0] == 1.0);
    CHECK(h[2] == 0.25);
}

TEST_CASE("weight spec grammar") {
    CHECK(parse_weight_spec("classical:alpha=2.5").parameter() == 2.5);
    CHECK(parse_weight_spec("classical:alpha=2.5").label() == "classical:alpha=2.5");
    CHECK(parse_weight_spec("power:m=7").kind() == RadialWeight::Kind::Power);
    CHECK(parse_weight_spec("counterexample").kind() == RadialWeight::Kind::Counterexample);
    for (const char* bad : {"", "classical", "classical:alpha=1", "classical:alpha=x", "power:m=-1",
                            "power:n=2", "counter", "table:/nonexistent/file.csv"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_weight_spec(bad), InputError);
    }
}

TEST_CASE("tabulated weights") {
    const auto path = std::filesystem::temp_directory_path() / "weissler_table_test.csv";
    {
        std::ofstream f(path);
        f << "rho,w\n# constant weight\n";
        for (int i = 1; i < 20; ++i) f << i / 20.0 << ",1\n";
    }
    const auto w = parse_weight_spec("table:" + path.string());
    // w = 2 after normalization, same as power m = 0
    CHECK(moment(w, 2).value == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(moment(w, 4).value == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    std::filesystem::remove(path);
}

}
