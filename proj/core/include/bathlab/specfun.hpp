#pragma once

#include <complex>

namespace bathlab::specfun {

using Complex = std::complex<double>;

// All three throw PoleError when z is a non-positive integer.

/// Digamma psi(z) = d/dz ln Gamma(z).
///
/// Reflection psi(z) = psi(1 - z) - pi cot(pi z) for Re z < 0, upward
/// recurrence until Re z >= 10, then the Bernoulli asymptotic series through
/// B_14 (about 1e-15 relative there).
Complex digamma(Complex z);

/// Trigamma psi'(z), same scheme; reflection uses
/// psi'(z) + psi'(1 - z) = pi^2 / sin^2(pi z).
Complex trigamma(Complex z);

/// ln Gamma(z) by downward recurrence from the Stirling series.
///
/// Summing principal logarithms of the recurrence factors gives the analytic
/// continuation with a single cut along the negative real axis (the usual
/// "loggamma" branch). Real part equals ln|Gamma(z)| everywhere.
Complex log_gamma(Complex z);

}  // namespace bathlab::specfun
