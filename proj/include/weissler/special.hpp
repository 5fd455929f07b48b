#pragma once

namespace weissler {

// Gamma function for x > 0.  Positive integers and half-integers go through
// the factorial / sqrt(pi) products; everything else uses a Lanczos
// approximation (g = 7, 9 terms), good to about 15 significant digits.
// Throws InputError for x <= 0 or non-finite x, NumericalError on overflow.
double gamma_function(double x);

// Modified Bessel function of the first kind, integer order, from its power
// series.  Terms are summed until the geometric tail bound drops below tol.
// Domain: 0 <= x <= 50.
double bessel_I(unsigned nu, double x, double tol = 1e-15);

// Extended-precision versions used by the identity and u-function checks.
long double bessel_I_ext(unsigned nu, long double x);
// I_0(x) - 1 without cancellation for small x.
long double bessel_I0_minus_one_ext(long double x);
// d/dx I_nu(x), by differentiating the series term by term.
long double bessel_I_prime_ext(unsigned nu, long double x);

}  // namespace weissler
