#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "weissler/cli.hpp"

using weissler::run_cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("moments") {
    const auto r = run({"moments", "--weight", "counterexample", "--n", "2"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "moments");
    CHECK(j["result"]["values"][1].get<double>() == doctest::Approx(0.2083333).epsilon(1e-7));
    CHECK(j["result"]["values"][2].get<double>() == 0.10625);
    const auto p = run({"moments", "--weight", "power:m=0", "--n", "1", "--format", "human"});
    CHECK(p.out.find("h_2 = 0.5") != std::string::npos);
}

TEST_CASE("check exit codes") {
    CHECK(run({"check", "--weight", "classical:alpha=3", "--condition", "strong"}).code == 0);
    const auto weak = run({"check", "--weight", "counterexample", "--condition", "weak"});
    CHECK(weak.code == 1);
    CHECK(nlohmann::json::parse(weak.out)["result"]["first_violation"] == 1);
    const auto pw = run({"check", "--weight", "power:m=2", "--condition", "strong"});
    CHECK(pw.code == 0);
    for (const auto& m : nlohmann::json::parse(pw.out)["result"]["margins"]) CHECK(m.get<double>() > 0.0);
    CHECK(run({"check", "--weight", "counterexample", "--condition", "h4"}).code == 1);
}

TEST_CASE("weissler") {
    const auto r = run({"weissler", "--weight", "classical:alpha=2", "--coeffs", "1,1", "--n", "2", "--r",
                        "0.70710678"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out)["result"];
    CHECK(j["lhs"].get<double>() == doctest::Approx(2.0833).epsilon(1e-4));
    CHECK(j["rhs"].get<double>() == 2.25);
    const auto id = run({"weissler", "--weight", "classical:alpha=2", "--coeffs", "1,1", "--n", "1", "--r", "1"});
    CHECK(nlohmann::json::parse(id.out)["result"]["gap"].get<double>() == 0.0);
    CHECK(run({"weissler", "--weight", "classical:alpha=2", "--coeffs", "1,0.01", "--n", "2", "--r", "0.8"}).code == 1);
    CHECK(run({"weissler", "--weight", "classical:alpha=2", "--coeffs", "1,x"}).code == 2);
    CHECK(run({"weissler", "--weight", "classical:alpha=2", "--coeffs", "1,-1"}).code == 2);
}

TEST_CASE("bernoulli") {
    const auto ce = run({"bernoulli", "--weight", "counterexample", "--q", "2"});
    CHECK(ce.code == 1);
    CHECK(nlohmann::json::parse(ce.out)["result"]["psi"]["2.000000"].get<double>() ==
          doctest::Approx(0.0105).epsilon(0.02));
    CHECK(run({"bernoulli", "--weight", "classical:alpha=2", "--q", "2,3,5"}).code == 0);
    const auto one = run({"bernoulli", "--weight", "counterexample", "--q", "1"});
    CHECK(one.code == 0);
    CHECK(nlohmann::json::parse(one.out)["result"]["psi"]["1.000000"].get<double>() == 0.0);
    CHECK(run({"bernoulli", "--weight", "counterexample", "--q", "0.5"}).code == 2);
}

TEST_CASE("input errors exit 2") {
    CHECK(run({"moments", "--weight", "nonsense"}).code == 2);
    CHECK(run({"moments"}).code == 2);
    CHECK(run({"moments", "--weight", "counterexample", "--max-index", "1"}).code == 2);
    CHECK(run({"moments", "--weight", "counterexample", "--tolerance", "0"}).code == 2);
    CHECK(run({"check", "--weight", "counterexample", "--condition", "nope"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("numerical failures exit 3") {
    // Ten moments are not enough for the series at q = 200.
    const auto r = run({"bernoulli", "--weight", "power:m=0", "--q", "200", "--max-index", "10"});
    CHECK(r.code == 3);
    CHECK(r.err.find("numerical") != std::string::npos);
}

TEST_CASE("csv and human formats") {
    const auto csv = run({"check", "--weight", "classical:alpha=2", "--condition", "weak", "--format", "csv",
                          "--max-index", "4"});
    CHECK(csv.out.rfind("name,index,lhs,rhs,gap,bound\n", 0) == 0);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 4);
    const auto human = run({"weissler", "--weight", "classical:alpha=2", "--coeffs", "1,1", "--format", "human"});
    CHECK(human.out.find("2.08333") != std::string::npos);
}

TEST_CASE("output file is written and JSON round-trips") {
    const auto path = std::filesystem::temp_directory_path() / "weissler_cli_out.json";
    std::filesystem::remove(path);
    const auto r = run({"bernoulli", "--weight", "counterexample", "--q", "1.25,2", "--out", path.string()});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    std::ifstream f(path);
    const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(nlohmann::json::parse(text).dump(2) + "\n" == text);
    CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
    std::filesystem::remove(path);
}

TEST_CASE("reproduce-paper") {
    const auto r = run({"reproduce-paper", "--weight", "classical:alpha=2", "--format", "human"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS  [101] psi_prime_1") != std::string::npos);
    CHECK(r.out.find("PASS  [102] psi(2)") != std::string::npos);
    CHECK(r.out.find("PASS  [202] equality margins") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

}
