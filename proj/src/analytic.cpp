#include "weissler/analytic.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>

#include "weissler/error.hpp"
#include "weissler/kernels.hpp"

namespace weissler {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double parse_number(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw InputError("cannot parse coefficient '" + std::string(s) + "'");
    return v;
}

std::vector<double> real_parts(const PowerSeries& f) {
    std::vector<double> out;
    for (const auto& c : f.coeffs()) out.push_back(c.real());
    return out;
}

std::vector<double> imag_parts(const PowerSeries& f) {
    std::vector<double> out;
    for (const auto& c : f.coeffs()) out.push_back(c.imag());
    return out;
}

// sum_{k > kmax} lambda^k / k!
double poisson_tail(double lambda, std::size_t kmax) {
    if (lambda <= 0.0) return 0.0;
    double k = static_cast<double>(kmax + 1);
    double term = std::exp(k * std::log(lambda) - std::lgamma(k + 1.0));
    double total = 0.0;
    for (int i = 0; i < 100000; ++i) {
        total += term;
        const double ratio = lambda / (k + 1.0);
        if (ratio < 0.5 && term * ratio <= 1e-17 * total) {
            total += term * ratio / (1.0 - ratio);
            break;
        }
        term *= ratio;
        k += 1.0;
        if (!std::isfinite(total)) break;
    }
    return total;
}

}  // namespace

PowerSeries::PowerSeries(std::vector<std::complex<double>> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.assign(1, 0.0);
    for (const auto& c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw InputError("power series coefficients must be finite");
}

PowerSeries PowerSeries::from_real(std::span<const double> coeffs) {
    return PowerSeries(std::vector<std::complex<double>>(coeffs.begin(), coeffs.end()));
}

PowerSeries PowerSeries::parse(std::string_view text) {
    if (text.starts_with("coeffs=")) text.remove_prefix(7);
    std::vector<double> values;
    while (true) {
        const auto comma = text.find(',');
        values.push_back(parse_number(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return from_real(values);
}

PowerSeries PowerSeries::from_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open coefficient file '" + path.string() + "'");
    std::vector<double> values;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        const std::string_view cell = std::string_view(line).substr(0, line.find(','));
        try {
            values.push_back(parse_number(cell));
        } catch (const InputError&) {
            if (!first) throw;
        }
        first = false;
    }
    if (values.empty()) throw InputError("coefficient file '" + path.string() + "' is empty");
    return from_real(values);
}

bool PowerSeries::is_real() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.imag() == 0.0; });
}

bool PowerSeries::is_nonnegative_real() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const auto& c) { return c.imag() == 0.0 && c.real() >= 0.0; });
}

std::vector<double> PowerSeries::nonnegative_coefficients() const {
    if (!is_nonnegative_real())
        throw InputError("inequality checks need nonnegative real coefficients");
    return real_parts(*this);
}

PowerSeries dilate(const PowerSeries& f, double r) {
    if (!(r > 0.0 && r <= 1.0)) throw InputError("dilate: r must lie in (0, 1]");
    std::vector<std::complex<double>> out(f.coeffs().begin(), f.coeffs().end());
    double rk = 1.0;
    for (auto& c : out) {
        c *= rk;
        rk *= r;
    }
    return PowerSeries(std::move(out));
}

PowerSeries series_power(const PowerSeries& f, unsigned n, std::size_t K_out) {
    if (n == 0) throw InputError("series_power: n must be at least 1");
    const std::size_t len = K_out + 1;
    auto truncate = [len](std::vector<double> v) {
        v.resize(len, 0.0);
        return v;
    };
    const std::vector<double> fr = real_parts(f);
    std::vector<double> pr = truncate(fr);
    std::vector<double> tmp(len);
    if (f.is_real()) {
        for (unsigned i = 1; i < n; ++i) {
            kernels::convolve(pr, fr, tmp);
            pr.swap(tmp);
        }
        return PowerSeries::from_real(pr);
    }
    const std::vector<double> fi = imag_parts(f);
    std::vector<double> pi = truncate(fi);
    std::vector<double> a(len), b(len), c(len), d(len);
    for (unsigned i = 1; i < n; ++i) {
        kernels::convolve(pr, fr, a);
        kernels::convolve(pi, fi, b);
        kernels::convolve(pr, fi, c);
        kernels::convolve(pi, fr, d);
        for (std::size_t k = 0; k < len; ++k) {
            pr[k] = a[k] - b[k];
            pi[k] = c[k] + d[k];
        }
    }
    std::vector<std::complex<double>> out(len);
    for (std::size_t k = 0; k < len; ++k) out[k] = {pr[k], pi[k]};
    return PowerSeries(std::move(out));
}

NormValue bergman_norm_sq(const PowerSeries& f, const MomentSequence& h, double tail_estimate) {
    const std::size_t K = f.truncation();
    if (h.max_index() < K)
        throw InputError("bergman_norm_sq: need moments up to h_" + std::to_string(2 * K));
    std::vector<double> mod2(K + 1);
    for (std::size_t k = 0; k <= K; ++k) mod2[k] = std::norm(f[k]);
    const double value = kernels::dot(mod2, h.values().first(K + 1));
    double err = 0.0;
    for (std::size_t k = 0; k <= K; ++k) err += mod2[k] * h.error_bound(k);
    return {value, err + tail_estimate + 4.0 * kEps * value};
}

InequalityVerdict weissler_even_check(const PowerSeries& f, const MomentSequence& h, unsigned n,
                                      double r) {
    if (n == 0) throw InputError("weissler_even_check: n must be at least 1");
    f.nonnegative_coefficients();
    const std::size_t K = f.truncation();
    if (h.max_index() < n * K)
        throw InputError("weissler_even_check: need moments up to index n * deg f = " +
                         std::to_string(n * K));
    const NormValue lhs = bergman_norm_sq(series_power(dilate(f, r), n, n * K), h);
    const NormValue base = bergman_norm_sq(f, h);
    const double rhs = std::pow(base.value, n);
    const double slack = 4.0 * kEps * static_cast<double>(n * (K + 2)) * (lhs.value + rhs);
    const double bound = lhs.bound + n * std::pow(base.value, n - 1.0) * base.bound + slack;
    return InequalityVerdict::make(lhs.value, rhs, bound);
}

InequalityVerdict weissler_even_check(const PowerSeries& f, const RadialWeight& w, unsigned n,
                                      double r, double tol) {
    if (n == 0) throw InputError("weissler_even_check: n must be at least 1");
    return weissler_even_check(f, moment_sequence(w, n * f.truncation(), tol), n, r);
}

std::vector<SharpnessRow> sharpness_probe(const RadialWeight& w, unsigned n, double r,
                                          std::span<const double> eps_grid, double tol) {
    if (eps_grid.empty()) throw InputError("sharpness_probe: empty eps grid");
    if (n == 0) throw InputError("sharpness_probe: n must be at least 1");
    const MomentSequence h = moment_sequence(w, std::max<std::size_t>(n, 1), tol);
    std::vector<SharpnessRow> rows;
    for (double eps : eps_grid) {
        if (!(eps > 0.0 && eps <= 0.2)) throw InputError("sharpness_probe: eps must lie in (0, 0.2]");
        const double coeffs[] = {1.0, eps};
        const InequalityVerdict v = weissler_even_check(PowerSeries::from_real(coeffs), h, n, r);
        const double nd = n;
        rows.push_back({eps, v.lhs, v.rhs, v.gap, v.truncation_bound,
                        (nd - nd * nd * r * r) * eps * eps * h[1]});
    }
    return rows;
}

CompositionTable exp_composition_coeffs(const PowerSeries& phi, std::size_t N, std::size_t Kmax) {
    std::vector<double> a = phi.nonnegative_coefficients();
    a.resize(std::min(a.size(), N + 1));
    CompositionTable g(N, Kmax);
    std::vector<double> q(N + 1, 0.0), tmp(N + 1);
    q[0] = 1.0;
    g(0, 0) = 1.0;
    for (std::size_t k = 1; k <= Kmax; ++k) {
        kernels::convolve(q, a, tmp);
        const double inv = 1.0 / static_cast<double>(k);
        for (std::size_t n = 0; n <= N; ++n) {
            q[n] = tmp[n] * inv;
            g(n, k) = q[n];
        }
    }
    return g;
}

InequalityVerdict zero_free_weissler_check(const PowerSeries& phi, const MomentSequence& h,
                                           double q, std::size_t N, std::size_t Kmax) {
    if (!std::isfinite(q) || q < 1.0) throw InputError("zero_free_weissler_check: q must be >= 1");
    std::vector<double> a = phi.nonnegative_coefficients();
    if (h.max_index() < N)
        throw InputError("zero_free_weissler_check: need moments up to index N = " +
                         std::to_string(N));
    const double a0 = a[0];
    a[0] = 0.0;
    const CompositionTable g = exp_composition_coeffs(PowerSeries::from_real(a), N, Kmax);

    std::vector<double> qpow(Kmax + 1);
    qpow[0] = 1.0;
    for (std::size_t k = 1; k <= Kmax; ++k) qpow[k] = qpow[k - 1] * q;

    std::vector<double> lhs_terms(N + 1), rhs_terms(N + 1);
    double lhs_moment_err = 0.0, rhs_moment_err = 0.0;
    std::vector<double> row(Kmax + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        for (std::size_t k = 0; k <= Kmax; ++k) row[k] = g(n, k);
        const double cq = kernels::dot(row, qpow);
        const double c1 = kernels::sum(row);
        const double scale = std::pow(q, -static_cast<double>(n)) * cq * cq;
        lhs_terms[n] = scale * h[n];
        rhs_terms[n] = c1 * c1 * h[n];
        lhs_moment_err += scale * h.error_bound(n);
        rhs_moment_err += c1 * c1 * h.error_bound(n);
    }
    const double lhs_reduced = kernels::sum(lhs_terms);
    const double rhs_inner = kernels::sum(rhs_terms);

    // Cauchy estimates with nonnegative coefficients: the z^n coefficient of
    // e^(q phi) is at most e^(q phi(R)) / R^n.
    const bool k_sum_exact = Kmax >= N;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 2000; ++i) {
        const double R = std::pow(1.01, i);
        double Phi = 0.0, Rk = 1.0;
        for (std::size_t k = 1; k < a.size(); ++k) {
            Rk *= R;
            Phi += a[k] * Rk;
        }
        if (!std::isfinite(Phi) || q * Phi > 600.0) break;
        const double x = 1.0 / (q * R * R);
        const double y = 1.0 / (R * R);
        const double np1 = static_cast<double>(N + 1);
        const double lhs_tail = std::exp(2.0 * q * Phi + np1 * std::log(x) - std::log1p(-x));
        const double rhs_tail = std::exp(2.0 * Phi + np1 * std::log(y) - std::log1p(-y));
        double lhs_kerr = 0.0, rhs_kerr = 0.0;
        if (!k_sum_exact) {
            lhs_kerr = 2.0 * std::exp(q * Phi) * poisson_tail(q * Phi, Kmax) / (1.0 - x);
            rhs_kerr = 2.0 * std::exp(Phi) * poisson_tail(Phi, Kmax) / (1.0 - y);
        }
        const double delta = rhs_tail + rhs_kerr;
        const double total =
            lhs_tail + lhs_kerr + q * std::pow(rhs_inner + delta, q - 1.0) * delta;
        if (total < best) best = total;
    }

    const double shift = std::exp(2.0 * q * a0);
    const double lhs = shift * lhs_reduced;
    const double rhs = shift * std::pow(rhs_inner, q);
    const double moment_err = lhs_moment_err + q * std::pow(rhs_inner, q - 1.0) * rhs_moment_err;
    const double rounding = 8.0 * kEps * static_cast<double>(N + Kmax + 2) * (lhs + rhs);
    return InequalityVerdict::make(lhs, rhs, shift * (best + moment_err) + rounding);
}

}  // namespace weissler
