#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "weissler/weights.hpp"

namespace weissler {

inline constexpr double kDefaultSeriesTolerance = 1e-13;

// A truncated series sum.  tail_bound covers the omitted tail (using
// h_{2n} <= h_0 = 1), the moment error bounds and rounding.
struct SeriesValue {
    double value = 0.0;
    double tail_bound = 0.0;
    std::size_t n_used = 0;  // index of the last term summed
};

// S(q) = sum_n q^n h_{2n} / (n!)^2.  N is the smallest index whose ratio-test
// tail bound term(N+1) / (1 - q/(N+2)^2) is at most tol.  Throws
// InsufficientMoments (naming that N) when h is shorter.
SeriesValue series_S(double q, const MomentSequence& h, double tol = kDefaultSeriesTolerance);

// B(q) = sum_n q^n h_{2(n+1)} / ((n!)^2 (n+1))  (= S'(q))
SeriesValue series_B(double q, const MomentSequence& h, double tol = kDefaultSeriesTolerance);

// A(q) = sum_n q^n h_{2(n+2)} / ((n!)^2 (n+1)(n+2))  (= S''(q))
SeriesValue series_A(double q, const MomentSequence& h, double tol = kDefaultSeriesTolerance);

struct BoundedValue {
    double value = 0.0;
    double bound = 0.0;
    std::size_t n_used = 0;
};

// psi(q) = S(q) - S(1)^q.  Positive psi means the Bernoulli-type inequality
// fails at q.
BoundedValue psi(double q, const MomentSequence& h, double tol = kDefaultSeriesTolerance);

// psi'(q) = sum_n n q^(n-1) h_{2n} / (n!)^2 - ln(S(1)) S(1)^q, summed termwise.
BoundedValue psi_prime(double q, const MomentSequence& h, double tol = kDefaultSeriesTolerance);

struct PhiDerivatives {
    double phi = 0.0;
    double phi_prime = 0.0;
    double phi_double_prime = 0.0;
    // S(q), B(q), A(q) as used above.
    double S = 0.0;
    double B = 0.0;
    double A = 0.0;
    double bound = 0.0;  // largest tail bound among S, B, A, S(1)
};

// phi(q) = ln S(q) - q ln S(1), phi' = B/S - ln S(1), phi'' = (A S - B^2) / S^2.
PhiDerivatives phi_and_derivatives(double q, const MomentSequence& h,
                                   double tol = kDefaultSeriesTolerance);

// Power-series coefficients of the two products in the numerator of phi'':
// first[n]  = sum_k h_{2(n-k)} h_{2(k+2)} / (((n-k)!)^2 (k!)^2 (k+1)(k+2))   [A S]
// second[n] = sum_k h_{2(n-k+1)} h_{2(k+1)} / (((n-k)!)^2 (k!)^2 (n-k+1)(k+1)) [B^2]
struct PhiNumeratorSeries {
    std::vector<double> first;
    std::vector<double> second;
};
PhiNumeratorSeries phi_numerator_coefficients(const MomentSequence& h, std::size_t n_max);

// g_0 = 1 and 0 < g_n <= g_{n-1}.
class AbstractSequence {
public:
    static AbstractSequence from_values(std::vector<double> g);
    static AbstractSequence from_moments(const MomentSequence& h);

    std::size_t size() const noexcept { return g_.size(); }
    double operator[](std::size_t n) const { return g_.at(n); }
    std::span<const double> values() const noexcept { return g_; }

private:
    explicit AbstractSequence(std::vector<double> g) : g_(std::move(g)) {}
    std::vector<double> g_;
};

// T_n: difference of the two convolution sums, straight from the definition.
// Needs g through index n+2.
double lemma1_Tn(const AbstractSequence& g, std::size_t n);

// Intermediate quantities of the parity-split argument for T_n.
struct Lemma1Trace {
    bool even = true;
    std::vector<double> t;          // t_k
    std::vector<double> s;          // s_k from the recursion
    std::vector<double> s_closed;   // s_k from the closed form
    double head = 0.0;              // g_0 g_{n+2} / ((n!)^2 (n+1)(n+2))
    double T_direct = 0.0;          // lemma1_Tn
    double T_decomposed = 0.0;      // head + s_0 + sum t (even) or head + sum t (odd)
    double upper_bound = 0.0;       // head + s_last
};
Lemma1Trace lemma1_trace(const AbstractSequence& g, std::size_t n);

// Runs the s_k recursion and compares every step against the closed form
// (relative error <= 1e-10).
bool lemma1_sk_recursion_check(const AbstractSequence& g, std::size_t n);

// Largest absolute residuals, over the grid and 0 <= n <= nu_max, of
//   I'_n - I_{n+1} - (n/x) I_n
//   (2n/x) I_n - I_{n-1} + I_{n+1}
//   2 I'_n - I_{n-1} - I_{n+1}
// with I_{-1} = I_1 and I' from the differentiated series.
struct BesselResiduals {
    double derivative_recurrence = 0.0;
    double three_term = 0.0;
    double derivative_average = 0.0;

    double max() const noexcept;
};
BesselResiduals bessel_identity_check(std::span<const double> x_grid, unsigned nu_max);

// u_1(t) = 16 ln I_0(t) - 4t^2 + t^4/4,  u_2(t) = t^2 I_0(t) - 8 I_2(t).
struct URow {
    double t = 0.0;
    double u1 = 0.0;
    double u2 = 0.0;
};
std::vector<URow> u1_u2_positivity(std::span<const double> t_grid);

// y(h2, 2h2^2/(1+h2)), v = y/(1+h2) and the closed-form v'.
struct YVValues {
    double y = 0.0;
    double v = 0.0;
    double v_prime = 0.0;
    bool y_nonpositive = true;
    bool v_prime_nonpositive = true;
};
YVValues y_v_functions(double h2);

struct BernoulliReport {
    double S1 = 0.0;
    std::map<double, double> psi_at;
    double psi_prime_1 = 0.0;
    std::size_t N_used = 0;
    double tail_bound = 0.0;
    // First q in (1, search_upper] where psi drops to <= 0, if the scan found one.
    std::optional<double> zero_crossing;
    double search_upper = 0.0;
};

// S(1), psi'(1) and psi at every requested q for an arbitrary sequence.
BernoulliReport bernoulli_report(const MomentSequence& h, std::span<const double> q_list,
                                 double tol = kDefaultSeriesTolerance);

// Scans psi on (1, upper] and bisects the first sign change to width 1e-8.
std::optional<double> psi_zero_crossing(const MomentSequence& h, double upper,
                                        double tol = kDefaultSeriesTolerance);

// The counterexample weight's report: S(1), psi'(1), psi at {1.25, 1.5, 2, 3}
// and the crossing scan on (1, 3].  Throws NumericalError if psi'(1) or
// psi(2) fail to come out positive.
BernoulliReport counterexample_report(double tol = kDefaultSeriesTolerance);

}  // namespace weissler
