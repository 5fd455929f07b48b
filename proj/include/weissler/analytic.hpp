#pragma once

#include <complex>
#include <cstddef>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "weissler/verdict.hpp"
#include "weissler/weights.hpp"

namespace weissler {

// Truncated Taylor series a_0 + a_1 z + ... + a_K z^K.
class PowerSeries {
public:
    PowerSeries() : coeffs_(1, 0.0) {}
    explicit PowerSeries(std::vector<std::complex<double>> coeffs);
    static PowerSeries from_real(std::span<const double> coeffs);

    // "1,0.5,0.25" or "coeffs=1,0.5,0.25".
    static PowerSeries parse(std::string_view text);
    // First column of a CSV file, one coefficient per row.
    static PowerSeries from_csv(const std::filesystem::path& path);

    std::size_t truncation() const noexcept { return coeffs_.size() - 1; }
    const std::complex<double>& operator[](std::size_t k) const { return coeffs_.at(k); }
    std::span<const std::complex<double>> coeffs() const noexcept { return coeffs_; }

    bool is_real() const noexcept;
    bool is_nonnegative_real() const noexcept;
    // Real parts; throws InputError unless every coefficient is a nonnegative real.
    std::vector<double> nonnegative_coefficients() const;

private:
    std::vector<std::complex<double>> coeffs_;
};

// f_r(z) = f(rz), 0 < r <= 1.
PowerSeries dilate(const PowerSeries& f, double r);

// Coefficients of f^n up to degree K_out, by repeated convolution.
PowerSeries series_power(const PowerSeries& f, unsigned n, std::size_t K_out);

struct NormValue {
    double value = 0.0;
    double bound = 0.0;
};

// Parseval: ||f||^2 = sum_k |a_k|^2 h_{2k}.  The bound collects the moment
// error bounds, rounding, and the caller's tail estimate.
NormValue bergman_norm_sq(const PowerSeries& f, const MomentSequence& h,
                          double tail_estimate = 0.0);

// ||(f_r)^n||^2_{A^2(w)} <= (||f||^2_{A^2(w)})^n for a polynomial f with
// nonnegative real coefficients.
InequalityVerdict weissler_even_check(const PowerSeries& f, const MomentSequence& h, unsigned n,
                                      double r);
InequalityVerdict weissler_even_check(const PowerSeries& f, const RadialWeight& w, unsigned n,
                                      double r, double tol = kDefaultMomentTolerance);

struct SharpnessRow {
    double eps = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;
    double bound = 0.0;
    // Leading-order prediction (n - n^2 r^2) eps^2 h_2.
    double analytic_gap = 0.0;
};

// weissler_even_check on f = 1 + eps z for every eps in the grid (0, 0.2].
std::vector<SharpnessRow> sharpness_probe(const RadialWeight& w, unsigned n, double r,
                                          std::span<const double> eps_grid,
                                          double tol = kDefaultMomentTolerance);

// g[n][k] = coefficient of z^n in phi^k / k!,  0 <= n <= N, 0 <= k <= Kmax.
class CompositionTable {
public:
    CompositionTable(std::size_t N, std::size_t Kmax)
        : N_(N), Kmax_(Kmax), data_((N + 1) * (Kmax + 1), 0.0) {}

    std::size_t N() const noexcept { return N_; }
    std::size_t Kmax() const noexcept { return Kmax_; }
    double operator()(std::size_t n, std::size_t k) const { return data_[n * (Kmax_ + 1) + k]; }
    double& operator()(std::size_t n, std::size_t k) { return data_[n * (Kmax_ + 1) + k]; }

private:
    std::size_t N_;
    std::size_t Kmax_;
    std::vector<double> data_;
};

CompositionTable exp_composition_coeffs(const PowerSeries& phi, std::size_t N, std::size_t Kmax);

// For f = e^phi with phi a polynomial with nonnegative coefficients:
//   lhs = sum_{n<=N} q^-n (sum_k q^k g[n][k])^2 h_{2n}
//   rhs = (sum_{n<=N} (sum_k g[n][k])^2 h_{2n})^q
// A constant term a_0 is factored out as e^(2 q a_0) on both sides.  The
// truncation bound covers the n > N tail and any k > Kmax terms through
// Cauchy estimates on circles of radius R > 1 (best R over a grid).
InequalityVerdict zero_free_weissler_check(const PowerSeries& phi, const MomentSequence& h,
                                           double q, std::size_t N, std::size_t Kmax);

}  // namespace weissler
