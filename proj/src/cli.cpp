#include "weissler/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "weissler/acceptance.hpp"
#include "weissler/analytic.hpp"
#include "weissler/bernoulli.hpp"
#include "weissler/conditions.hpp"
#include "weissler/error.hpp"
#include "weissler/serialize.hpp"
#include "weissler/weights.hpp"

namespace weissler {

namespace {

struct RunConfig {
    std::string weight_spec;
    double tolerance = 1e-12;
    std::size_t max_index = 60;
    std::string format = "json";
    std::string out_path;
};

struct CsvRow {
    std::string name;
    std::size_t index = 0;
    std::optional<double> lhs, rhs, gap;
    double bound = 0.0;
};

// Everything a subcommand produces; rendered once at the end.
struct Report {
    std::string command;
    nlohmann::json result;
    double bound = 0.0;
    std::vector<CsvRow> rows;
    std::vector<std::string> human;
    int exit_code = kExitHolds;
};

std::string g6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string full(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string render(const Report& rep, const RunConfig& cfg) {
    std::ostringstream os;
    if (cfg.format == "json") {
        nlohmann::json env{{"command", rep.command},
                           {"weight", cfg.weight_spec.empty() ? nlohmann::json() : nlohmann::json(cfg.weight_spec)},
                           {"tolerance", cfg.tolerance},
                           {"max_index", cfg.max_index},
                           {"bound", rep.bound},
                           {"result", rep.result}};
        os << dump_canonical(env) << '\n';
    } else if (cfg.format == "csv") {
        os << "name,index,lhs,rhs,gap,bound\n";
        auto opt = [](const std::optional<double>& v) { return v ? full(*v) : std::string(); };
        for (const auto& r : rep.rows)
            os << r.name << ',' << r.index << ',' << opt(r.lhs) << ',' << opt(r.rhs) << ',' << opt(r.gap)
               << ',' << full(r.bound) << '\n';
    } else {
        for (const auto& line : rep.human) os << line << '\n';
    }
    return os.str();
}

void write_atomically(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw InputError("cannot write " + tmp.string());
        f << text;
        f.flush();
        if (!f) throw InputError("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw InputError("cannot move output into " + path + ": " + ec.message());
    }
}

RadialWeight require_weight(const RunConfig& cfg) {
    if (cfg.weight_spec.empty()) throw InputError("--weight is required for this command");
    return parse_weight_spec(cfg.weight_spec);
}

Report cmd_moments(const RunConfig& cfg, std::optional<std::size_t> n) {
    const RadialWeight w = require_weight(cfg);
    const std::size_t N = n.value_or(cfg.max_index);
    const MomentSequence h = moment_sequence(w, N, cfg.tolerance);
    Report rep{"moments", to_json(h), h.max_error_bound(), {}, {}, kExitHolds};
    for (std::size_t k = 0; k <= N; ++k) {
        const bool closed = h.provenance(k).source == Provenance::Source::ClosedForm;
        rep.rows.push_back({"h", 2 * k, h[k], std::nullopt, std::nullopt, h.error_bound(k)});
        rep.human.push_back("h_" + std::to_string(2 * k) + " = " + g6(h[k]) +
                            (closed ? "  (closed form)" : "  (quadrature, +-" + g6(h.error_bound(k)) + ")"));
    }
    return rep;
}

Report cmd_check(const RunConfig& cfg, const std::string& condition) {
    const RadialWeight w = require_weight(cfg);
    const MomentSequence h = moment_sequence(w, cfg.max_index, cfg.tolerance);
    Report rep;
    rep.command = "check";
    if (condition == "h4") {
        const InequalityVerdict v = check_h4_bound(h);
        rep.result = to_json(v);
        rep.bound = v.truncation_bound;
        rep.rows.push_back({"h4_bound", 2, v.lhs, v.rhs, v.gap, v.truncation_bound});
        rep.human.push_back("h4 bound: h_4 = " + g6(v.lhs) + " <= " + g6(v.rhs) + ", gap " + g6(v.gap) +
                            (v.holds ? "  holds" : "  VIOLATED"));
        rep.exit_code = v.holds ? kExitHolds : kExitViolation;
        return rep;
    }
    ConditionReport r;
    if (condition == "weak") r = check_weak_condition(h);
    else if (condition == "strong") r = check_strong_condition(h);
    else if (condition == "lemma2") r = check_lemma2_inequality(h, std::max(cfg.tolerance, 1e-15));
    else if (condition == "cauchy") r = check_cauchy_lower(h);
    else throw InputError("unknown condition '" + condition + "'");

    rep.result = to_json(r);
    rep.bound = std::max(r.tol_report, h.max_error_bound());
    const std::string name(condition_name(r.condition));
    for (std::size_t i = 0; i < r.margins.size(); ++i) {
        const std::size_t m = r.first_index + i;
        rep.rows.push_back({name, m, r.lhs[i], r.rhs[i], r.margins[i], rep.bound});
        rep.human.push_back(name + " m=" + std::to_string(m) + ": margin " + g6(r.margins[i]));
    }
    if (r.violated()) {
        rep.human.push_back("first violation at m = " + std::to_string(*r.first_violation));
        rep.exit_code = kExitViolation;
    } else {
        rep.human.push_back("holds for 1 <= m <= " + std::to_string(r.holds_up_to));
    }
    return rep;
}

Report cmd_weissler(const RunConfig& cfg, const std::string& coeffs, unsigned n, std::optional<double> r_opt) {
    const RadialWeight w = require_weight(cfg);
    if (n < 1) throw InputError("--n must be at least 1");
    const double r = r_opt.value_or(1.0 / std::sqrt(static_cast<double>(n)));
    const PowerSeries f = PowerSeries::parse(coeffs);
    if (!f.is_nonnegative_real()) throw InputError("--coeffs must be nonnegative reals");
    const InequalityVerdict v = weissler_even_check(f, w, n, r, cfg.tolerance);
    Report rep{"weissler", to_json(v), v.truncation_bound, {}, {}, v.holds ? kExitHolds : kExitViolation};
    rep.rows.push_back({"weissler", n, v.lhs, v.rhs, v.gap, v.truncation_bound});
    rep.human.push_back("||(f_r)^n||^2 = " + g6(v.lhs) + ", (||f||^2)^n = " + g6(v.rhs) + ", gap " + g6(v.gap) +
                        (v.holds ? "  holds" : "  VIOLATED"));
    return rep;
}

Report cmd_bernoulli(const RunConfig& cfg, const std::vector<double>& qs) {
    const RadialWeight w = require_weight(cfg);
    for (double q : qs)
        if (!(q >= 1.0)) throw InputError("every q must be >= 1");
    const MomentSequence h = moment_sequence(w, cfg.max_index, cfg.tolerance);
    const double series_tol = std::max(cfg.tolerance, 1e-15);
    const BernoulliReport br = bernoulli_report(h, qs, series_tol);
    Report rep{"bernoulli", to_json(br), br.tail_bound, {}, {}, kExitHolds};
    rep.human.push_back("S(1) = " + g6(br.S1) + ", psi'(1) = " + g6(br.psi_prime_1));
    for (const auto& [q, v] : br.psi_at) {
        const bool holds = v <= br.tail_bound;
        if (!holds) rep.exit_code = kExitViolation;
        rep.rows.push_back({"psi", 0, std::nullopt, std::nullopt, -v, br.tail_bound});
        rep.rows.back().name = "psi(" + format_q(q) + ")";
        rep.human.push_back("psi(" + g6(q) + ") = " + g6(v) + (holds ? "" : "  (inequality fails)"));
    }
    return rep;
}

Report cmd_reproduce(const RunConfig& cfg) {
    std::vector<CriterionResult> rows = run_acceptance();
    for (auto& r : counterexample_rows(1e-13)) rows.push_back(std::move(r));
    if (!cfg.weight_spec.empty())
        for (auto& r : weight_rows(parse_weight_spec(cfg.weight_spec), cfg.max_index, cfg.tolerance))
            rows.push_back(std::move(r));

    Report rep;
    rep.command = "reproduce-paper";
    nlohmann::json arr = nlohmann::json::array();
    bool all = true;
    for (const auto& r : rows) {
        all = all && r.passed;
        arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        rep.rows.push_back({r.name, static_cast<std::size_t>(r.id), std::nullopt, std::nullopt, std::nullopt, 0.0});
        rep.human.push_back(format_row(r));
    }
    rep.result = {{"rows", arr}, {"all_passed", all}};
    rep.exit_code = all ? kExitHolds : kExitViolation;
    return rep;
}

std::vector<double> parse_q_list(const std::string& text) {
    std::vector<double> qs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            qs.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError("bad q value '" + item + "'");
        }
    }
    if (qs.empty()) throw InputError("--q needs at least one value");
    return qs;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Moment conditions and contractive inequalities for radial Bergman weights", "weissler_lab"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--weight", cfg.weight_spec,
                   "classical:alpha=<a> | power:m=<m> | counterexample | table:<csv>");
    app.add_option("--tolerance", cfg.tolerance, "absolute tolerance")->check(CLI::PositiveNumber);
    app.add_option("--max-index", cfg.max_index, "largest k in h_{2k}")->check(CLI::Range(2, 100000));
    app.add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv", "human"}));
    app.add_option("--out", cfg.out_path, "write the report here instead of stdout");

    std::optional<std::size_t> moments_n;
    auto* moments = app.add_subcommand("moments", "even moments h_{2k}, k <= n");
    moments->add_option("--n", moments_n);

    std::string condition;
    auto* check = app.add_subcommand("check", "check a moment condition");
    check->add_option("--condition", condition)
        ->required()
        ->check(CLI::IsMember({"weak", "strong", "lemma2", "h4", "cauchy"}));

    std::string coeffs;
    unsigned wn = 2;
    std::optional<double> wr;
    auto* weiss = app.add_subcommand("weissler", "||(f_r)^n||^2 <= (||f||^2)^n for a polynomial f");
    weiss->add_option("--coeffs", coeffs)->required();
    weiss->add_option("--n", wn);
    weiss->add_option("--r", wr)->check(CLI::Range(0.0, 1.0));

    std::string qtext = "2";
    auto* bern = app.add_subcommand("bernoulli", "psi(q) = S(q) - S(1)^q at each q");
    bern->add_option("--q", qtext, "comma-separated list, each >= 1");

    auto* repro = app.add_subcommand("reproduce-paper", "run every acceptance check");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitHolds;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        Report rep;
        if (moments->parsed()) rep = cmd_moments(cfg, moments_n);
        else if (check->parsed()) rep = cmd_check(cfg, condition);
        else if (weiss->parsed()) rep = cmd_weissler(cfg, coeffs, wn, wr);
        else if (bern->parsed()) rep = cmd_bernoulli(cfg, parse_q_list(qtext));
        else if (repro->parsed()) rep = cmd_reproduce(cfg);

        const std::string text = render(rep, cfg);
        if (cfg.out_path.empty()) out << text;
        else write_atomically(cfg.out_path, text);
        return rep.exit_code;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return kExitNumericalError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "numerical error: " << e.what() << '\n';
        return kExitNumericalError;
    }
}

}  // namespace weissler
