#pragma once

namespace fareyidx {

// Euler-Maclaurin evaluations, accurate to ~1e-17 relative in long double.

// Hurwitz zeta(s, a) for s > 1, a > 0.
long double hurwitz_zeta(long double s, long double a);

// Riemann zeta for s > 1.
long double riemann_zeta_em(long double s);

// d/ds zeta(s) for s > 1 (series -sum log n / n^s, accelerated).
long double riemann_zeta_prime_em(long double s);

// Digamma function for a > 0.
long double digamma(long double a);

struct Constants {
    long double zeta2;
    long double zeta2_prime;
    long double euler_gamma;
};

// gamma, zeta(2), zeta'(2); precision_digits must be <= 15 (long double kernel).
Constants constants(int precision_digits = 15);

inline constexpr int kMaxPrecisionDigits = 15;

}  // namespace fareyidx
