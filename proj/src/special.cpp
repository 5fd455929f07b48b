#include "weissler/special.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "weissler/error.hpp"

namespace weissler {

namespace {

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
constexpr double kLanczosG = 7.0;

double lanczos(double x) {
    if (x < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos(1.0 - x));
    x -= 1.0;
    double a = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (x + static_cast<double>(i));
    const double t = x + kLanczosG + 0.5;
    // t^(x+1/2) overflows before the product does, so take it in two halves.
    const double p = std::pow(t, 0.5 * (x + 0.5));
    return std::sqrt(2.0 * std::numbers::pi) * p * (p * std::exp(-t)) * a;
}

constexpr int kMaxTerms = 2000;

// Shared series loop.  first is the m = 0 term; the ratio of term m+1 to
// term m is (x/2)^2 / ((m+1)(m+1+nu)), decreasing in m.
template <typename Real>
Real bessel_series(unsigned nu, Real x, Real tol, bool skip_first) {
    Real term = 1;
    const Real half = x / 2;
    for (unsigned k = 1; k <= nu; ++k) term *= half / static_cast<Real>(k);
    const Real quarter_sq = half * half;
    Real total = skip_first ? Real(0) : term;
    for (int m = 0; m < kMaxTerms; ++m) {
        const Real ratio = quarter_sq / (static_cast<Real>(m + 1) * static_cast<Real>(m + 1 + nu));
        term *= ratio;
        total += term;
        if (term == 0) break;
        const Real next_ratio =
            quarter_sq / (static_cast<Real>(m + 2) * static_cast<Real>(m + 2 + nu));
        if (next_ratio < 1 && term * next_ratio / (1 - next_ratio) <= tol) break;
    }
    return total;
}

}  // namespace

double gamma_function(double x) {
    if (!std::isfinite(x) || x <= 0.0)
        throw InputError("gamma_function: argument must be positive and finite, got " +
                         std::to_string(x));
    double result;
    if (x == std::floor(x) && x <= 171.0) {
        result = 1.0;
        for (double k = 2.0; k < x; k += 1.0) result *= k;
    } else if (x - 0.5 == std::floor(x - 0.5) && x <= 171.0) {
        result = std::sqrt(std::numbers::pi);
        for (double k = 0.5; k < x; k += 1.0) result *= k;
    } else {
        result = lanczos(x);
    }
    if (!std::isfinite(result))
        throw NumericalError("gamma_function: overflow", result,
                             std::numeric_limits<double>::infinity());
    return result;
}

double bessel_I(unsigned nu, double x, double tol) {
    if (!(x >= 0.0 && x <= 50.0)) throw InputError("bessel_I: x must lie in [0, 50]");
    if (!(tol > 0.0)) throw InputError("bessel_I: tol must be positive");
    return bessel_series<double>(nu, x, tol, false);
}

long double bessel_I_ext(unsigned nu, long double x) {
    if (!(x >= 0.0L && x <= 50.0L)) throw InputError("bessel_I: x must lie in [0, 50]");
    return bessel_series<long double>(nu, x, std::numeric_limits<long double>::min(), false);
}

long double bessel_I0_minus_one_ext(long double x) {
    if (!(x >= 0.0L && x <= 50.0L)) throw InputError("bessel_I: x must lie in [0, 50]");
    return bessel_series<long double>(0, x, std::numeric_limits<long double>::min(), true);
}

long double bessel_I_prime_ext(unsigned nu, long double x) {
    if (!(x >= 0.0L && x <= 50.0L)) throw InputError("bessel_I: x must lie in [0, 50]");
    // d/dx (x/2)^(2m+nu) = (2m+nu)/2 * (x/2)^(2m+nu-1)
    const long double half = x / 2;
    long double total = 0;
    long double fact_m = 1;
    long double fact_mnu = 1;
    for (unsigned k = 2; k <= nu; ++k) fact_mnu *= k;
    for (int m = 0; m < kMaxTerms; ++m) {
        if (m > 0) {
            fact_m *= m;
            fact_mnu *= static_cast<long double>(m + nu);
        }
        const int power = 2 * m + static_cast<int>(nu);
        if (power == 0) continue;
        const long double term =
            static_cast<long double>(power) / 2 * std::pow(half, power - 1) / (fact_m * fact_mnu);
        total += term;
        if (m > 2 && term <= total * std::numeric_limits<long double>::epsilon() * 1e-3L) break;
        if (term == 0) break;
    }
    return total;
}

}  // namespace weissler
