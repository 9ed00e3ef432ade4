#pragma once

#include <complex>
#include <cstdint>

namespace murmur {

using Complex = std::complex<double>;

/// log Gamma, any branch consistent under exp; reflection below Re(z) = 1/2.
/// Throws std::domain_error at nonpositive integer z.
Complex log_gamma(Complex z);

/// Gamma(z) = exp(log_gamma(z)).
Complex gamma_fn(Complex z);

/// log sin(pi z), overflow-safe for large |Im z|; branch consistent under exp.
Complex log_sin_pi(Complex z);

/// Riemann zeta by Euler-Maclaurin with a certified remainder bound.
/// Throws at s = 1.
Complex zeta(Complex s);

/// Hurwitz zeta(s, a) for 0 < a <= 1, same machinery. zeta(s) == hurwitz_zeta(s, 1).
Complex hurwitz_zeta(Complex s, double a);

/// L(s, chi_d) = d^{-s} sum_{a=1}^{d} chi_d(a) zeta(s, a/d); d must be a
/// fundamental discriminant.
Complex dirichlet_L(Complex s, int64_t d);

/// L'/L(s, chi_d) for Re(s) > 1/2. Central log-difference with h = 1e-5 for
/// Re(s) <= 3, prime-power series with certified tail otherwise.
/// Throws when |L| < 1e-8 (proximity to a zero).
Complex l_log_derivative(Complex s, int64_t d);

/// Prime-power series -sum Lambda(n) chi_d(n) n^{-s} truncated at prime
/// powers below cutoff. Exposed for cross-validation; caller owns the tail.
Complex l_log_derivative_series(Complex s, int64_t d, int64_t cutoff);

/// Gamma((1-s)/2) / Gamma(s/2) via log-gamma differences.
Complex gamma_ratio_even(Complex s);

/// Gamma((2-s)/2) / Gamma((1+s)/2), the companion ratio.
Complex gamma_ratio_odd(Complex s);

/// Gamma(3/2-s) / Gamma(1/2+s), the elliptic-curve kernel ratio.
Complex gamma_ratio_ec(Complex s);

}  // namespace murmur
