#pragma once

#include <functional>
#include <span>

namespace weissler {

struct QuadratureResult {
    double value = 0.0;
    // Sum of panel error estimates plus a rounding allowance.
    double error_bound = 0.0;
    int panels = 0;
};

// Composite adaptive Gauss-Legendre quadrature on [a, b].
//
// The interval is first cut at every breakpoint strictly inside (a, b).  Each
// panel is integrated with the 15-point rule on the whole panel and on both
// halves; the difference is the panel's error estimate.  The panel with the
// largest estimate is bisected until the estimates sum to at most abs_tol.
//
// Throws InputError if f returns a non-finite value, NumericalError (carrying
// the current estimate and bound) if the panel budget runs out first.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, std::span<const double> breakpoints = {},
                           int max_panels = 5000);

// 15-point Gauss-Legendre rule on [-1, 1].
std::span<const double> gauss_legendre_nodes();
std::span<const double> gauss_legendre_weights();

}  // namespace weissler
