#include "fareyidx/lseries.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fareyidx/special_functions.hpp"

namespace fareyidx {

namespace {

std::complex<long double> chi_value_l(const DirichletCharacter& chi, std::uint64_t n) {
    const int e = chi.value_exponent(n);
    if (e < 0) return {0.0L, 0.0L};
    const long double ang = 2.0L * std::numbers::pi_v<long double> * e / chi.root_order;
    return {std::cos(ang), std::sin(ang)};
}

int small_mobius(int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    if (n > 1) m = -m;
    return m;
}

}  // namespace

std::vector<std::uint64_t> prime_factors_of(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            fs.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

std::complex<long double> l_value(long double s, const DirichletCharacter& chi) {
    if (s < 1.0L) throw std::domain_error("l_value: s >= 1 required");
    const std::uint32_t k = chi.modulus;
    if (chi.is_principal()) {
        if (s == 1.0L) throw std::domain_error("l_value: pole at s = 1 for the principal character");
        long double v = riemann_zeta_em(s);
        for (std::uint64_t p : prime_factors_of(k)) v *= 1.0L - std::pow(static_cast<long double>(p), -s);
        return {v, 0.0L};
    }
    std::complex<long double> acc{0.0L, 0.0L};
    if (s == 1.0L) {
        // Complete periods of the series sum to zero, leaving
        // L(1,chi) = -(1/k) sum_r chi(r) psi(r/k).
        for (std::uint64_t r = 1; r < k; ++r) {
            const auto c = chi_value_l(chi, r);
            if (c == std::complex<long double>{}) continue;
            acc += c * digamma(static_cast<long double>(r) / k);
        }
        return -acc / static_cast<long double>(k);
    }
    for (std::uint64_t r = 1; r < k; ++r) {
        const auto c = chi_value_l(chi, r);
        if (c == std::complex<long double>{}) continue;
        acc += c * hurwitz_zeta(s, static_cast<long double>(r) / k);
    }
    return acc * std::pow(static_cast<long double>(k), -s);
}

mpq_class exact_inv_one_plus_inv_p(const std::vector<std::uint64_t>& ps) {
    mpq_class q(1);
    for (std::uint64_t p : ps) {
        q *= mpq_class(p, p + 1);  // (1 + 1/p)^{-1} = p/(p+1)
    }
    q.canonicalize();
    return q;
}

EulerProductResult euler_product_over_B(EulerFactorKind kind, const BFreeSpec& b,
                                        std::uint32_t k, const DirichletCharacter* chi,
                                        int l_param, long double precision_target) {
    if (b.is_kfree())
        throw std::invalid_argument(
            "euler_product_over_B: k-free B has no convergent interpretation here; "
            "use the squarefree main-term evaluators");
    EulerProductResult out{{1.0L, 0.0L}, 0.0L};
    if (kind == EulerFactorKind::plogp_over_p2_minus_1) out.value = 0.0L;
    if (b.is_none()) return out;

    for (std::uint64_t p : b.primes) {
        const long double pl = static_cast<long double>(p);
        switch (kind) {
            case EulerFactorKind::inv_one_plus_inv_p:
                if (k % p != 0) out.value *= pl / (pl + 1.0L);
                break;
            case EulerFactorKind::plogp_over_p2_minus_1:
                if (k % p != 0) out.value += pl * std::log(pl) / (pl * pl - 1.0L);
                break;
            case EulerFactorKind::l_ratio_correction: {
                if (!chi) throw std::invalid_argument("euler_product_over_B: chi required");
                if (l_param < 3) throw std::invalid_argument("euler_product_over_B: l >= 3 required");
                const auto c = chi_value_l(*chi, p);
                const auto num = 1.0L - c * std::pow(pl, -(static_cast<long double>(l_param) - 1.0L));
                const auto den = 1.0L - c * std::pow(pl, -static_cast<long double>(l_param));
                out.value *= num / den;
                break;
            }
            case EulerFactorKind::second_moment_correction: {
                if (!chi) throw std::invalid_argument("euler_product_over_B: chi required");
                const auto c = chi_value_l(*chi, p);
                out.value *= (1.0L - c / pl) / (1.0L - c / (pl * pl));
                break;
            }
        }
    }
    if (out.tail_bound > precision_target)
        throw TruncationError("euler_product_over_B: truncation error exceeds target precision");
    return out;
}

long double prime_zeta2_tail(const std::vector<std::uint64_t>& primes_to_P) {
    // P(2) = sum_{n>=1} mu(n)/n log zeta(2n), then subtract the sieved part.
    long double pz2 = 0.0L;
    for (int n = 1; n <= 40; ++n) {
        const int m = small_mobius(n);
        if (m == 0) continue;
        pz2 += m * std::log(riemann_zeta_em(2.0L * n)) / n;
    }
    long double partial = 0.0L;
    for (auto it = primes_to_P.rbegin(); it != primes_to_P.rend(); ++it) {
        const long double p = static_cast<long double>(*it);
        partial += 1.0L / (p * p);
    }
    return pz2 - partial;
}

TailedProduct prod_over_primes(const std::function<long double(std::uint64_t)>& factor,
                               long double c2, long double M3,
                               const std::vector<std::uint64_t>& primes, std::uint64_t k) {
    long double logsum = 0.0L;
    for (std::uint64_t p : primes) {
        if (k % p == 0) continue;
        logsum += std::log(factor(p));
    }
    const long double P = static_cast<long double>(primes.back());
    logsum += c2 * prime_zeta2_tail(primes);
    // |sum_{p>P} r(p)| <= M3 sum_{p>P} p^{-3} <= M3 / (2 P^2)
    const long double rem = std::abs(M3) / (2.0L * P * P);
    const long double value = std::exp(logsum);
    return {value, value * (std::exp(rem) - 1.0L) * 1.0000001L + 1e-16L};
}

}  // namespace fareyidx
