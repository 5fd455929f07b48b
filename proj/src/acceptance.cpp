#include "weissler/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "weissler/analytic.hpp"
#include "weissler/bernoulli.hpp"
#include "weissler/conditions.hpp"
#include "weissler/error.hpp"
#include "weissler/parallel.hpp"

namespace weissler {

namespace {

constexpr double kTol = 1e-12;

std::vector<RadialWeight> conditioned_weights() {
    std::vector<RadialWeight> ws;
    for (double a : {1.5, 2.0, 2.5, 3.0, 5.0}) ws.push_back(RadialWeight::classical(a));
    for (double m : {0.5, 1.0, 2.0, 7.0}) ws.push_back(RadialWeight::power(m));
    return ws;
}

std::string fmt(const char* f, double x) {
    char buf[96];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

// Runs body, which fills detail and returns ok; records timing and errors.
template <typename Body>
CriterionResult timed(int id, std::string name, double budget, Body body) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.budget_seconds = budget;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(r.detail);
    } catch (const std::exception& e) {
        r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = ok && r.seconds < budget;
    if (ok && !r.passed) r.detail += fmt(" (over budget: %.3g s)", r.seconds);
    return r;
}

CriterionResult counterexample_criterion() {
    return timed(1, "counterexample psi'(1) and psi(2)", 1.0, [](std::string& d) {
        const MomentSequence h = moment_sequence(RadialWeight::counterexample(), 40);
        const double dp = psi_prime(1.0, h, 1e-13).value;
        const double p2 = psi(2.0, h, 1e-13).value;
        d = fmt("psi'(1) = %.7f", dp) + fmt(", psi(2) = %.7f", p2);
        return dp >= 0.0046 && dp <= 0.0050 && p2 >= 0.0103 && p2 <= 0.0107;
    });
}

CriterionResult classical_equality_criterion() {
    return timed(2, "classical weights: strong condition is equality", 1.0, [](std::string& d) {
        double worst = 0.0;
        for (double a : {1.5, 2.0, 2.5, 3.0, 5.0}) {
            const ConditionReport r = check_strong_condition(moment_sequence(RadialWeight::classical(a), 31));
            for (double m : r.margins) worst = std::max(worst, std::fabs(m));
        }
        d = fmt("max |margin| = %.3g (limit 1e-10)", worst);
        return worst <= 1e-10;
    });
}

CriterionResult power_margin_criterion() {
    return timed(3, "power weights: strong-condition margin formula", 1.0, [](std::string& d) {
        double worst = 0.0;
        for (double m : {0.5, 1.0, 2.0, 7.0}) {
            const ConditionReport r = check_strong_condition(moment_sequence(RadialWeight::power(m), 31));
            for (std::size_t n = 1; n <= 30; ++n) {
                const double nd = static_cast<double>(n);
                const double expected = 2.0 * m / ((1.0 + nd) * (2.0 + m + 2.0 * nd) * (4.0 + m + 2.0 * nd));
                worst = std::max(worst, std::fabs(r.margin_at(n) - expected));
            }
        }
        d = fmt("max deviation = %.3g (limit 1e-10)", worst);
        return worst <= 1e-10;
    });
}

CriterionResult dilation_criterion() {
    return timed(4, "even-exponent Weissler inequality and sharpness", 30.0, [](std::string& d) {
        std::vector<RadialWeight> ws;
        for (double a : {1.5, 2.0, 3.0}) ws.push_back(RadialWeight::classical(a));
        for (double m : {1.0, 2.0}) ws.push_back(RadialWeight::power(m));
        std::vector<MomentSequence> hs;
        for (const auto& w : ws) hs.push_back(moment_sequence(w, 24, kTol));

        std::mt19937_64 rng(20240601);
        std::uniform_int_distribution<int> degree(0, 6);
        std::uniform_real_distribution<double> coeff(0.0, 1.0);
        std::vector<PowerSeries> polys;
        for (int i = 0; i < 200; ++i) {
            std::vector<double> c(static_cast<std::size_t>(degree(rng)) + 1);
            for (double& x : c) x = coeff(rng);
            polys.push_back(PowerSeries::from_real(c));
        }

        std::vector<int> failures(polys.size(), 0);
        parallel_for(polys.size(), [&](std::size_t i) {
            for (const auto& h : hs)
                for (unsigned n : {2u, 3u, 4u})
                    if (!weissler_even_check(polys[i], h, n, 1.0 / std::sqrt(double(n))).holds) ++failures[i];
        });
        int holds_failures = 0;
        for (int f : failures) holds_failures += f;

        int sharp_misses = 0;
        const double probe[] = {1.0, 0.01};
        for (const auto& h : hs)
            for (unsigned n : {2u, 3u, 4u})
                if (weissler_even_check(PowerSeries::from_real(probe), h, n, 1.05 / std::sqrt(double(n))).holds)
                    ++sharp_misses;
        d = std::to_string(polys.size() * hs.size() * 3 - holds_failures) + "/" +
            std::to_string(polys.size() * hs.size() * 3) + " hold at r = 1/sqrt(n); " +
            std::to_string(hs.size() * 3 - sharp_misses) + "/" + std::to_string(hs.size() * 3) +
            " fail at r = 1.05/sqrt(n)";
        return holds_failures == 0 && sharp_misses == 0;
    });
}

CriterionResult bernoulli_criterion() {
    return timed(5, "Bernoulli-type inequality and concavity of phi", 10.0, [](std::string& d) {
        double worst_psi = -1.0, worst_phi2 = -1.0;
        for (const auto& w : conditioned_weights()) {
            const MomentSequence h = moment_sequence(w, 60, kTol);
            for (double q : {1.25, 1.5, 2.0, 3.0, 5.0}) worst_psi = std::max(worst_psi, psi(q, h).value);
            for (int i = 0; i < 50; ++i) {
                const double q = 1.0 + 4.0 * i / 49.0;
                worst_phi2 = std::max(worst_phi2, phi_and_derivatives(q, h).phi_double_prime);
            }
        }
        d = fmt("max psi = %.3g", worst_psi) + fmt(", max phi'' = %.3g (limit 1e-10)", worst_phi2);
        return worst_psi <= 1e-10 && worst_phi2 <= 1e-10;
    });
}

CriterionResult sequence_criterion() {
    return timed(6, "T_n sign and s_k recursion", 1.0, [](std::string& d) {
        double worst = -1.0;
        int recursion_failures = 0;
        for (const auto& w : conditioned_weights()) {
            const AbstractSequence g = AbstractSequence::from_moments(moment_sequence(w, 16, kTol));
            for (std::size_t n = 0; n <= 12; ++n) {
                worst = std::max(worst, lemma1_Tn(g, n));
                if (!lemma1_sk_recursion_check(g, n)) ++recursion_failures;
            }
        }
        d = fmt("max T_n = %.3g", worst) + ", recursion mismatches: " + std::to_string(recursion_failures);
        return worst <= 1e-12 && recursion_failures == 0;
    });
}

CriterionResult bessel_criterion() {
    return timed(7, "Bessel identities, u1/u2, log-moment inequality", 2.0, [](std::string& d) {
        const double xs[] = {0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
        const double residual = bessel_identity_check(xs, 5).max();
        std::vector<double> ts(200);
        for (int i = 0; i < 200; ++i) ts[i] = 2.0 * i / 199.0;
        double min_u = 1.0;
        for (const URow& row : u1_u2_positivity(ts)) min_u = std::min({min_u, row.u1, row.u2});
        int violations = 0;
        for (const auto& w : conditioned_weights())
            if (check_lemma2_inequality(moment_sequence(w, 31, kTol)).violated()) ++violations;
        d = fmt("Bessel residual %.3g", residual) + fmt(", min(u1, u2) = %.3g", min_u) +
            ", lemma-2 violations: " + std::to_string(violations);
        return residual <= 1e-12 && min_u >= -1e-10 && violations == 0;
    });
}

CriterionResult oracle_criterion() {
    return timed(8, "oracle equivalence: moments, convolution, multinomial", 5.0, [](std::string& d) {
        std::vector<RadialWeight> ws = conditioned_weights();
        ws.push_back(RadialWeight::counterexample());
        double worst_moment = 0.0;
        for (const auto& w : ws)
            for (unsigned m = 0; m <= 40; ++m) {
                const double closed = moment(w, m, kTol).value;
                const double quad = moment(w, m, kTol, MomentMethod::Quadrature).value;
                worst_moment = std::max(worst_moment, std::fabs(closed - quad));
            }

        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> coeff(0.0, 1.0);
        std::uniform_int_distribution<int> small(0, 5);
        double worst_float = 0.0;
        bool integer_exact = true;
        for (std::size_t deg = 0; deg <= 4; ++deg)
            for (unsigned n = 1; n <= 5; ++n) {
                std::vector<double> fl(deg + 1), in(deg + 1);
                for (auto& x : fl) x = coeff(rng);
                for (auto& x : in) x = small(rng);
                const auto ref_f = oracle::nested_power(fl, n);
                const auto ref_i = oracle::nested_power(in, n);
                const PowerSeries pf = series_power(PowerSeries::from_real(fl), n, n * deg);
                const PowerSeries pi = series_power(PowerSeries::from_real(in), n, n * deg);
                for (std::size_t k = 0; k <= n * deg; ++k) {
                    worst_float = std::max(worst_float, std::fabs(pf[k].real() - ref_f[k]));
                    integer_exact = integer_exact && pi[k].real() == ref_i[k];
                }
            }

        bool multinomial = true;
        for (unsigned n = 1; n <= 8; ++n)
            for (unsigned k = 0; k <= 12; ++k)
                multinomial = multinomial && oracle::multinomial_sum(n, k) == oracle::ipow(n, k);

        d = fmt("moment |closed - quad| max %.3g (limit 1e-11)", worst_moment) +
            fmt(", convolution float dev %.3g", worst_float) +
            (integer_exact ? ", integer exact" : ", integer MISMATCH") +
            (multinomial ? ", multinomial exact" : ", multinomial MISMATCH");
        return worst_moment <= 10.0 * kTol && worst_float <= 1e-12 && integer_exact && multinomial;
    });
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
    return {counterexample_criterion(), classical_equality_criterion(), power_margin_criterion(),
            dilation_criterion(),       bernoulli_criterion(),           sequence_criterion(),
            bessel_criterion(),         oracle_criterion()};
}

std::vector<CriterionResult> counterexample_rows(double tol) {
    const BernoulliReport rep = counterexample_report(std::min(tol, 1e-13));
    CriterionResult a{101, "psi_prime_1 ~ 0.0048", false, fmt("%.7f", rep.psi_prime_1), 0.0, 0.0};
    a.passed = rep.psi_prime_1 >= 0.0046 && rep.psi_prime_1 <= 0.0050;
    const double p2 = rep.psi_at.at(2.0);
    CriterionResult b{102, "psi(2) ~ 0.0105", false, fmt("%.7f", p2), 0.0, 0.0};
    b.passed = p2 >= 0.0103 && p2 <= 0.0107;
    return {a, b};
}

std::vector<CriterionResult> weight_rows(const RadialWeight& w, std::size_t max_index, double tol) {
    std::vector<CriterionResult> rows;
    const MomentSequence h = moment_sequence(w, max_index, tol);
    const ConditionReport strong = check_strong_condition(h);
    CriterionResult s{201, "strong condition on " + w.label(), !strong.violated(), "", 0.0, 0.0};
    s.detail = strong.violated() ? "first violation at m = " + std::to_string(*strong.first_violation)
                                 : "no violation up to m = " + std::to_string(strong.holds_up_to);
    rows.push_back(s);
    if (w.kind() == RadialWeight::Kind::Classical) {
        double worst = 0.0;
        for (double m : strong.margins) worst = std::max(worst, std::fabs(m));
        rows.push_back({202, "equality margins on " + w.label(), worst <= 1e-10,
                        fmt("max |margin| = %.3g", worst), 0.0, 0.0});
    }
    return rows;
}

std::string format_row(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << ": " << r.detail;
    if (r.budget_seconds > 0.0) os << fmt("  (%.3f s", r.seconds) << fmt(" / %.0f s)", r.budget_seconds);
    return os.str();
}

}  // namespace weissler
