#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "fareyidx/bfree.hpp"
#include "fareyidx/characters.hpp"

namespace fareyidx {

// Raised when a truncated evaluation cannot certify the requested precision.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// L(s, chi) for real s >= 1. For the principal character this is
// zeta(s) * prod_{p|k} (1 - p^{-s}); s = 1 principal is a pole (domain error).
// Non-principal values go through Hurwitz zeta (s > 1) or digamma (s = 1).
std::complex<long double> l_value(long double s, const DirichletCharacter& chi);

// The finitely many Euler factor shapes over the set B appearing in the
// moment main terms. Products over explicit B are exact up to rounding.
enum class EulerFactorKind {
    inv_one_plus_inv_p,        // prod (1 + 1/p)^{-1}
    plogp_over_p2_minus_1,     // sum  p log p / (p^2 - 1)
    l_ratio_correction,        // prod (1 - chi(p)/p^{l-1}) (1 - chi(p)/p^l)^{-1}
    second_moment_correction,  // prod (1 - chi(p)/p) (1 - chi(p)/p^2)^{-1}
};

struct EulerProductResult {
    std::complex<long double> value;
    long double tail_bound;  // certified; 0 for a finite explicit B
};

// Product or sum of `kind` over p in B (skipping p | k for the two real
// kinds; the chi kinds vanish there on their own). A k-free B is refused:
// its reinterpretation lives in the squarefree main-term evaluators.
EulerProductResult euler_product_over_B(EulerFactorKind kind, const BFreeSpec& b,
                                        std::uint32_t k, const DirichletCharacter* chi,
                                        int l_param, long double precision_target);

// Exact rational prod_{p in ps} (1 + 1/p)^{-1}.
mpq_class exact_inv_one_plus_inv_p(const std::vector<std::uint64_t>& ps);

// sum_{p > P} p^{-2}, via the prime zeta function; accurate to ~1e-17.
long double prime_zeta2_tail(const std::vector<std::uint64_t>& primes_to_P);

struct TailedProduct {
    long double value;
    long double error_bound;
};

// prod over all primes p (p not dividing k) of f(p), where
// log f(p) = c2/p^2 + r(p) with |r(p)| <= M3/p^3 for p > the truncation point.
// Factors up to the last sieved prime are multiplied directly; the tail is
// c2 * sum_{p>P} p^{-2} plus a certified remainder bound M3/(2 P^2).
TailedProduct prod_over_primes(const std::function<long double(std::uint64_t)>& factor,
                               long double c2, long double M3,
                               const std::vector<std::uint64_t>& primes, std::uint64_t k = 1);

std::vector<std::uint64_t> prime_factors_of(std::uint64_t n);

}  // namespace fareyidx
