#include "weissler/bernoulli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "weissler/error.hpp"
#include "weissler/kernels.hpp"
#include "weissler/special.hpp"

namespace weissler {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kMaxTerms = 100000;

double factorial(std::size_t n) {
    double f = 1.0;
    for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
    return f;
}

// sum_n c_n h[n + shift], where c_{n+1} = c_n * ratio(n) and ratio(n) is
// nonincreasing in n.  The tail after N is at most c_{N+1} / (1 - ratio(N+1))
// because every h entry is at most 1.
template <typename Ratio>
SeriesValue moment_series(const MomentSequence& h, double tol, std::size_t shift, double c0,
                          Ratio ratio, const char* name) {
    if (!(tol > 0.0)) throw InputError(std::string(name) + ": tolerance must be positive");
    std::vector<double> coeffs{c0};
    double tail = std::numeric_limits<double>::infinity();
    for (std::size_t N = 0;; ++N) {
        const double next = coeffs.back() * ratio(N);
        const double r = ratio(N + 1);
        tail = next == 0.0 ? 0.0 : (r < 1.0 ? next / (1.0 - r) : tail);
        if ((r < 1.0 || next == 0.0) && tail <= tol) break;
        if (N >= kMaxTerms) throw NumericalError(std::string(name) + ": series did not converge", 0.0, tail);
        coeffs.push_back(next);
    }
    std::size_t N = coeffs.size() - 1;
    if (N + shift > h.max_index() && h.max_index() >= shift) {
        // Short sequence: if it is nonincreasing, every missing moment is at
        // most the last one, which bounds the rest of the series.
        const auto v = h.values();
        const bool nonincreasing = std::is_sorted(v.rbegin(), v.rend());
        const std::size_t Nc = h.max_index() - shift;
        const double r = ratio(Nc + 1);
        const double last = v.back();
        if (nonincreasing && (last == 0.0 || r < 1.0)) {
            const double coeff_tail = last == 0.0 ? 0.0 : coeffs[Nc + 1] / (1.0 - r);
            if (last * coeff_tail <= tol) {
                coeffs.resize(Nc + 1);
                tail = last * coeff_tail;
                N = Nc;
            }
        }
    }
    if (N + shift > h.max_index())
        throw InsufficientMoments(std::string(name) + ": need moments up to h_" +
                                      std::to_string(2 * (N + shift)) + " (index " +
                                      std::to_string(N + shift) + "), have index " +
                                      std::to_string(h.max_index()),
                                  N + shift);
    const auto hv = h.values().subspan(shift, N + 1);
    const double value = kernels::dot(coeffs, hv);
    double moment_err = 0.0;
    for (std::size_t n = 0; n <= N; ++n) moment_err += coeffs[n] * h.error_bound(n + shift);
    const double rounding = 4.0 * static_cast<double>(N + 2) * kEps * std::fabs(value);
    return {value, tail + moment_err + rounding, N};
}

void require_q(double q, double min, const char* name) {
    if (!std::isfinite(q) || q < min)
        throw InputError(std::string(name) + ": q must be >= " + std::to_string(min));
}

}  // namespace

SeriesValue series_S(double q, const MomentSequence& h, double tol) {
    require_q(q, 0.0, "series_S");
    return moment_series(h, tol, 0, 1.0,
                         [q](std::size_t n) { const double m = n + 1.0; return q / (m * m); },
                         "series_S");
}

SeriesValue series_B(double q, const MomentSequence& h, double tol) {
    require_q(q, 0.0, "series_B");
    return moment_series(h, tol, 1, 1.0,
                         [q](std::size_t n) { return q / ((n + 1.0) * (n + 2.0)); }, "series_B");
}

SeriesValue series_A(double q, const MomentSequence& h, double tol) {
    require_q(q, 0.0, "series_A");
    return moment_series(h, tol, 2, 0.5,
                         [q](std::size_t n) { return q / ((n + 1.0) * (n + 3.0)); }, "series_A");
}

BoundedValue psi(double q, const MomentSequence& h, double tol) {
    require_q(q, 1.0, "psi");
    const SeriesValue sq = series_S(q, h, tol);
    const SeriesValue s1 = series_S(1.0, h, tol);
    const double power = std::pow(s1.value, q);
    const double bound = sq.tail_bound + q * std::pow(s1.value, q - 1.0) * s1.tail_bound +
                         4.0 * kEps * (sq.value + power);
    return {sq.value - power, bound, std::max(sq.n_used, s1.n_used)};
}

BoundedValue psi_prime(double q, const MomentSequence& h, double tol) {
    require_q(q, 1.0, "psi_prime");
    const SeriesValue b = series_B(q, h, tol);
    const SeriesValue s1 = series_S(1.0, h, tol);
    const double log_s1 = std::log(s1.value);
    const double power = std::pow(s1.value, q);
    // d/dS [ln(S) S^q] = S^(q-1) (1 + q ln S)
    const double bound = b.tail_bound +
                         std::pow(s1.value, q - 1.0) * (1.0 + q * log_s1) * s1.tail_bound +
                         4.0 * kEps * (b.value + power * std::fabs(log_s1));
    return {b.value - log_s1 * power, bound, std::max(b.n_used + 1, s1.n_used)};
}

PhiDerivatives phi_and_derivatives(double q, const MomentSequence& h, double tol) {
    require_q(q, 1.0, "phi_and_derivatives");
    const SeriesValue s = series_S(q, h, tol);
    const SeriesValue b = series_B(q, h, tol);
    const SeriesValue a = series_A(q, h, tol);
    const SeriesValue s1 = series_S(1.0, h, tol);
    const double log_s1 = std::log(s1.value);
    PhiDerivatives d;
    d.S = s.value;
    d.B = b.value;
    d.A = a.value;
    d.phi = std::log(s.value) - q * log_s1;
    d.phi_prime = b.value / s.value - log_s1;
    d.phi_double_prime = (a.value * s.value - b.value * b.value) / (s.value * s.value);
    d.bound = std::max({s.tail_bound, b.tail_bound, a.tail_bound, s1.tail_bound});
    return d;
}

PhiNumeratorSeries phi_numerator_coefficients(const MomentSequence& h, std::size_t n_max) {
    if (h.max_index() < n_max + 2)
        throw InputError("phi_numerator_coefficients: need moments through index n_max + 2");
    PhiNumeratorSeries out;
    for (std::size_t n = 0; n <= n_max; ++n) {
        double first = 0.0, second = 0.0;
        for (std::size_t k = 0; k <= n; ++k) {
            const double fa = factorial(n - k), fb = factorial(k);
            const double base = fa * fa * fb * fb;
            first += h[n - k] * h[k + 2] / (base * (k + 1.0) * (k + 2.0));
            second += h[n - k + 1] * h[k + 1] / (base * (n - k + 1.0) * (k + 1.0));
        }
        out.first.push_back(first);
        out.second.push_back(second);
    }
    return out;
}

AbstractSequence AbstractSequence::from_values(std::vector<double> g) {
    if (g.empty() || g[0] != 1.0) throw InputError("abstract sequence must start with g_0 = 1");
    for (std::size_t n = 1; n < g.size(); ++n) {
        if (!std::isfinite(g[n]) || !(g[n] > 0.0))
            throw InputError("abstract sequence entries must be positive");
        if (g[n] > g[n - 1]) throw InputError("abstract sequence must be nonincreasing");
    }
    return AbstractSequence(std::move(g));
}

AbstractSequence AbstractSequence::from_moments(const MomentSequence& h) {
    return from_values(std::vector<double>(h.values().begin(), h.values().end()));
}

double lemma1_Tn(const AbstractSequence& g, std::size_t n) {
    if (g.size() < n + 3)
        throw InputError("lemma1_Tn: sequence must be defined through index n + 2");
    double first = 0.0, second = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
        const double fa = factorial(n - k), fb = factorial(k);
        const double base = fa * fa * fb * fb;
        first += g[n - k] * g[k + 2] / (base * (k + 1.0) * (k + 2.0));
        second += g[n - k + 1] * g[k + 1] / (base * (n - k + 1.0) * (k + 1.0));
    }
    return first - second;
}

Lemma1Trace lemma1_trace(const AbstractSequence& g, std::size_t n) {
    if (g.size() < n + 3)
        throw InputError("lemma1_trace: sequence must be defined through index n + 2");
    for (std::size_t i = 0; i < n + 3; ++i)
        if (g[i] == 0.0) throw InputError("lemma1_trace: zero entry in g");

    auto sq = [](double x) { return x * x; };
    auto F = [](long i) { return factorial(static_cast<std::size_t>(i)); };
    auto G = [&g](long i) { return g[static_cast<std::size_t>(i)]; };

    Lemma1Trace tr;
    tr.even = n % 2 == 0;
    const long nl = static_cast<long>(n);
    tr.head = G(0) * G(nl + 2) / (sq(F(nl)) * (nl + 1.0) * (nl + 2.0));
    tr.T_direct = lemma1_Tn(g, n);

    if (tr.even) {
        const long m = nl / 2;
        for (long k = 0; k < m; ++k)
            tr.t.push_back(G(m + k + 2) * G(m - k) / (sq(F(m + k + 2)) * sq(F(m - k))) *
                           (-2.0 * m + 4.0 * k * k + 8.0 * k + 2.0));
        auto closed = [&](long k) {
            return -(2.0 * k + 1.0) * G(m + k + 1) * G(m - k + 1) /
                   (sq(F(m - k)) * sq(F(m + k + 1)) * (m - k + 1.0));
        };
        tr.s.push_back(-sq(G(m + 1)) / (sq(F(m)) * sq(F(m + 1)) * (m + 1.0)));
        tr.s_closed.push_back(closed(0));
        for (long k = 1; k <= m; ++k) {
            const double factor = (m - k + 2.0) / (m + k + 1.0) * G(m - k + 1) * G(m + k + 1) /
                                  (G(m - k + 2) * G(m + k));
            tr.s.push_back(tr.s.back() * factor + tr.t[static_cast<std::size_t>(k - 1)]);
            tr.s_closed.push_back(closed(k));
        }
        tr.T_decomposed = tr.head + tr.s.front();
        for (double t : tr.t) tr.T_decomposed += t;
    } else {
        const long a = (nl + 3) / 2, b = (nl + 1) / 2, K = (nl - 1) / 2;
        for (long k = 0; k <= K; ++k)
            tr.t.push_back(G(a + k) * G(b - k) / (sq(F(a + k)) * sq(F(b - k))) *
                           (-static_cast<double>(nl) + 4.0 * k * k + 4.0 * k - 1.0));
        auto closed = [&](long k) {
            return -2.0 * (k + 1.0) * G(a + k) * G(b - k) /
                   (sq(F(a + k)) * sq(F(K - k)) * static_cast<double>(b - k));
        };
        tr.s.push_back(tr.t.front());
        tr.s_closed.push_back(closed(0));
        for (long k = 1; k <= K; ++k) {
            const double factor = static_cast<double>(a - k) / static_cast<double>(a + k) *
                                  G(a + k) * G(b - k) / (G(b + k) * G(a - k));
            tr.s.push_back(tr.s.back() * factor + tr.t[static_cast<std::size_t>(k)]);
            tr.s_closed.push_back(closed(k));
        }
        tr.T_decomposed = tr.head;
        for (double t : tr.t) tr.T_decomposed += t;
    }
    tr.upper_bound = tr.head + tr.s.back();
    return tr;
}

bool lemma1_sk_recursion_check(const AbstractSequence& g, std::size_t n) {
    const Lemma1Trace tr = lemma1_trace(g, n);
    for (std::size_t k = 0; k < tr.s.size(); ++k) {
        const double diff = std::fabs(tr.s[k] - tr.s_closed[k]);
        if (!(diff <= 1e-10 * std::fabs(tr.s_closed[k]))) return false;
    }
    return true;
}

double BesselResiduals::max() const noexcept {
    return std::max({derivative_recurrence, three_term, derivative_average});
}

BesselResiduals bessel_identity_check(std::span<const double> x_grid, unsigned nu_max) {
    if (x_grid.empty()) throw InputError("bessel_identity_check: empty grid");
    BesselResiduals r;
    for (double xd : x_grid) {
        if (!(xd > 0.0 && xd <= 20.0))
            throw InputError("bessel_identity_check: grid points must lie in (0, 20]");
        const long double x = xd;
        for (unsigned n = 0; n <= nu_max; ++n) {
            const long double in = bessel_I_ext(n, x);
            const long double up = bessel_I_ext(n + 1, x);
            const long double down = bessel_I_ext(n == 0 ? 1 : n - 1, x);
            const long double d = bessel_I_prime_ext(n, x);
            const long double nn = n;
            r.derivative_recurrence = std::max(
                r.derivative_recurrence, static_cast<double>(std::fabs(d - up - nn / x * in)));
            r.three_term = std::max(r.three_term,
                                    static_cast<double>(std::fabs(2 * nn / x * in - down + up)));
            r.derivative_average = std::max(r.derivative_average,
                                            static_cast<double>(std::fabs(2 * d - down - up)));
        }
    }
    return r;
}

std::vector<URow> u1_u2_positivity(std::span<const double> t_grid) {
    std::vector<URow> rows;
    rows.reserve(t_grid.size());
    for (double td : t_grid) {
        if (!(td >= 0.0 && td <= 2.0)) throw InputError("u1_u2_positivity: t must lie in [0, 2]");
        const long double t = td;
        const long double t2 = t * t;
        const long double u1 = 16 * std::log1p(bessel_I0_minus_one_ext(t)) - 4 * t2 + t2 * t2 / 4;
        const long double u2 = t2 * bessel_I_ext(0, t) - 8 * bessel_I_ext(2, t);
        rows.push_back({td, static_cast<double>(u1), static_cast<double>(u2)});
    }
    return rows;
}

YVValues y_v_functions(double h2) {
    if (!(h2 > 0.0 && h2 < 1.0)) throw InputError("y_v_functions: h2 must lie in (0, 1)");
    const double p = 1.0 + h2;
    YVValues r;
    r.y = h2 + h2 * h2 / p - p * std::log1p(h2 + h2 * h2 / (2.0 * p));
    r.v = r.y / p;
    r.v_prime = -h2 * h2 * (2.0 + 3.0 * h2 + 3.0 * h2 * h2) /
                (p * p * p * (2.0 + 4.0 * h2 + 3.0 * h2 * h2));
    r.y_nonpositive = r.y <= 0.0;
    r.v_prime_nonpositive = r.v_prime <= 0.0;
    return r;
}

BernoulliReport bernoulli_report(const MomentSequence& h, std::span<const double> q_list,
                                 double tol) {
    BernoulliReport rep;
    const SeriesValue s1 = series_S(1.0, h, tol);
    const BoundedValue dp = psi_prime(1.0, h, tol);
    rep.S1 = s1.value;
    rep.psi_prime_1 = dp.value;
    rep.N_used = std::max(s1.n_used, dp.n_used);
    rep.tail_bound = std::max(s1.tail_bound, dp.bound);
    for (double q : q_list) {
        const BoundedValue v = psi(q, h, tol);
        rep.psi_at[q] = v.value;
        rep.N_used = std::max(rep.N_used, v.n_used);
        rep.tail_bound = std::max(rep.tail_bound, v.bound);
    }
    return rep;
}

std::optional<double> psi_zero_crossing(const MomentSequence& h, double upper, double tol) {
    if (!(upper > 1.0)) throw InputError("psi_zero_crossing: upper end must exceed 1");
    constexpr int kSteps = 400;
    double prev_q = 1.0;
    double prev_v = 0.0;
    for (int i = 1; i <= kSteps; ++i) {
        const double q = 1.0 + (upper - 1.0) * i / kSteps;
        const double v = psi(q, h, tol).value;
        if (prev_v > 0.0 && v <= 0.0) {
            double lo = prev_q, hi = q;
            while (hi - lo > 1e-8) {
                const double mid = 0.5 * (lo + hi);
                (psi(mid, h, tol).value > 0.0 ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi);
        }
        prev_q = q;
        prev_v = v;
    }
    return std::nullopt;
}

BernoulliReport counterexample_report(double tol) {
    const MomentSequence h = moment_sequence(RadialWeight::counterexample(), 40);
    const double qs[] = {1.25, 1.5, 2.0, 3.0};
    BernoulliReport rep = bernoulli_report(h, qs, tol);
    rep.search_upper = 3.0;
    rep.zero_crossing = psi_zero_crossing(h, rep.search_upper, tol);
    if (!(rep.psi_prime_1 > 0.0))
        throw NumericalError("counterexample: psi'(1) is not positive", rep.psi_prime_1,
                             rep.tail_bound);
    if (!(rep.psi_at.at(2.0) > 0.0))
        throw NumericalError("counterexample: psi(2) is not positive", rep.psi_at.at(2.0),
                             rep.tail_bound);
    return rep;
}

}  // namespace weissler
