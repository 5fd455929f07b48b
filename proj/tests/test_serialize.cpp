#include <doctest.h>

#include "weissler/serialize.hpp"

using namespace weissler;

namespace {

void check_round_trip(const nlohmann::json& j) {
    const std::string once = dump_canonical(j);
    CHECK(dump_canonical(nlohmann::json::parse(once)) == once);
}

}  // namespace

TEST_SUITE("serialize") {

TEST_CASE("round trips are byte-identical") {
    check_round_trip(to_json(check_weak_condition(moment_sequence(RadialWeight::counterexample(), 30))));
    check_round_trip(to_json(check_h4_bound(moment_sequence(RadialWeight::classical(2.5), 3))));
    check_round_trip(to_json(counterexample_report()));
    check_round_trip(to_json(moment_sequence(RadialWeight::custom([](double r) { return 1.0 + r; }), 10)));
}

TEST_CASE("floats keep full precision") {
    const double x = 0.1 + 0.2;
    const auto j = to_json(InequalityVerdict::make(x, 1.0 / 3.0, 0.0));
    CHECK(nlohmann::json::parse(dump_canonical(j))["lhs"].get<double>() == x);
}

TEST_CASE("report fields") {
    const auto r = to_json(check_weak_condition(moment_sequence(RadialWeight::counterexample(), 5)));
    CHECK(r["condition"] == "WeakCondition");
    CHECK(r["first_violation"] == 1);
    CHECK(r["margins"].size() == 4);
    const auto ok = to_json(check_weak_condition(moment_sequence(RadialWeight::classical(2.0), 5)));
    CHECK(ok["first_violation"].is_null());
    const auto h = to_json(moment_sequence(RadialWeight::custom([](double) { return 1.0; }), 2));
    CHECK(h["provenance"][0] == "closed_form");
    CHECK(h["provenance"][1] == "quadrature");
    CHECK(format_q(2.0) == "2.000000");
}

}
