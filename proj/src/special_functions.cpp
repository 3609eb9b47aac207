#include "fareyidx/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fareyidx {

namespace {

// B_{2j} / (2j)! for j = 1..7
constexpr long double kBernFact[] = {
    1.0L / 12.0L,        -1.0L / 720.0L,          1.0L / 30240.0L, -1.0L / 1209600.0L,
    1.0L / 47900160.0L,  -691.0L / 1307674368000.0L, 1.0L / 74724249600.0L,
};
// B_{2j} / (2j) for j = 1..7
constexpr long double kBernOver2j[] = {
    1.0L / 12.0L, -1.0L / 120.0L, 1.0L / 252.0L, -1.0L / 240.0L,
    1.0L / 132.0L, -691.0L / 32760.0L, 1.0L / 12.0L,
};
constexpr int kJ = 7;

}  // namespace

long double hurwitz_zeta(long double s, long double a) {
    if (s <= 1.0L) throw std::domain_error("hurwitz_zeta: s > 1 required");
    if (a <= 0.0L) throw std::domain_error("hurwitz_zeta: a > 0 required");
    const int N = 32;
    long double sum = 0.0L;
    for (int n = 0; n < N; ++n) sum += std::pow(n + a, -s);
    const long double x = N + a;
    sum += std::pow(x, 1.0L - s) / (s - 1.0L);
    sum += 0.5L * std::pow(x, -s);
    long double poch = s;                    // s(s+1)...(s+2j-2)
    long double xp = std::pow(x, -s - 1.0L);
    for (int j = 0; j < kJ; ++j) {
        sum += kBernFact[j] * poch * xp;
        poch *= (s + 2 * j + 1) * (s + 2 * j + 2);
        xp /= x * x;
    }
    return sum;
}

long double riemann_zeta_em(long double s) { return hurwitz_zeta(s, 1.0L); }

long double riemann_zeta_prime_em(long double s) {
    if (s <= 1.0L) throw std::domain_error("riemann_zeta_prime_em: s > 1 required");
    const int N = 64;
    long double sum = 0.0L;  // accumulates sum_{n >= 2} log n / n^s
    for (int n = 2; n < N; ++n) sum += std::log(static_cast<long double>(n)) * std::pow(n, -s);
    const long double x = N;
    const long double lx = std::log(x);
    sum += std::pow(x, 1.0L - s) * (lx / (s - 1.0L) + 1.0L / ((s - 1.0L) * (s - 1.0L)));
    sum += 0.5L * lx * std::pow(x, -s);
    // Derivatives of log(x) x^{-s} have the form x^{-s-m} (a_m + b_m log x).
    long double am = 0.0L, bm = 1.0L;
    int m = 0;
    for (int j = 1; j <= kJ; ++j) {
        while (m < 2 * j - 1) {
            const long double an = bm - (s + m) * am;
            const long double bn = -(s + m) * bm;
            am = an;
            bm = bn;
            ++m;
        }
        sum -= kBernFact[j - 1] * (am + bm * lx) * std::pow(x, -s - m);
    }
    return -sum;
}

long double digamma(long double a) {
    if (a <= 0.0L) throw std::domain_error("digamma: a > 0 required");
    const int N = 32;
    long double sum = 0.0L;
    for (int n = 0; n < N; ++n) sum -= 1.0L / (a + n);
    const long double x = a + N;
    sum += std::log(x) - 0.5L / x;
    const long double x2 = x * x;
    long double xp = x2;
    for (int j = 0; j < kJ; ++j) {
        sum -= kBernOver2j[j] / xp;
        xp *= x2;
    }
    return sum;
}

Constants constants(int precision_digits) {
    if (precision_digits > kMaxPrecisionDigits)
        throw std::domain_error("constants: precision beyond configured maximum");
    Constants c;
    c.zeta2 = riemann_zeta_em(2.0L);
    c.zeta2_prime = riemann_zeta_prime_em(2.0L);
    c.euler_gamma = std::numbers::egamma_v<long double>;
    return c;
}

}  // namespace fareyidx
