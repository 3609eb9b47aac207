#include "fareyidx/asympt.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fareyidx/farey.hpp"
#include "fareyidx/lseries.hpp"
#include "fareyidx/special_functions.hpp"

namespace fareyidx {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

const std::vector<std::uint64_t>& cached_primes(std::uint64_t limit) {
    static std::vector<std::uint64_t> primes;
    if (primes.empty() || primes.back() < limit / 2 || primes.back() > limit)
        primes = primes_up_to(limit);
    return primes;
}

// prod over p in B, p not dividing k, of (1 + 1/p)^{-1}, times the same over p | k.
long double bfree_unit_factor(const BFreeSpec& b, std::uint32_t k) {
    long double v = 1.0L;
    if (b.is_explicit()) {
        for (std::uint64_t p : b.primes)
            if (k % p != 0) v *= static_cast<long double>(p) / (p + 1);
    }
    for (std::uint64_t p : prime_factors_of(k)) v *= static_cast<long double>(p) / (p + 1);
    return v;
}

long double bfree_log_sum(const BFreeSpec& b, std::uint32_t k) {
    long double v = 0.0L;
    auto term = [](std::uint64_t p) {
        const long double pl = static_cast<long double>(p);
        return pl * std::log(pl) / (pl * pl - 1.0L);
    };
    if (b.is_explicit()) {
        for (std::uint64_t p : b.primes)
            if (k % p != 0) v += term(p);
    }
    for (std::uint64_t p : prime_factors_of(k)) v += term(p);
    return v;
}

std::complex<long double> chi_at(const DirichletCharacter& chi, std::uint64_t n) {
    const int e = chi.value_exponent(n);
    if (e < 0) return {0.0L, 0.0L};
    const long double ang = 2.0L * kPi * e / chi.root_order;
    return {std::cos(ang), std::sin(ang)};
}

void reject_kfree(const BFreeSpec& b, const char* where) {
    if (b.is_kfree())
        throw std::invalid_argument(std::string(where) +
                                    ": k-free B is handled by the squarefree evaluators");
}

DirichletCharacter squared_character(const DirichletCharacter& chi) {
    DirichletCharacter sq = chi;
    sq.principal = true;
    for (auto& e : sq.expo) {
        if (e < 0) continue;
        e = static_cast<std::int32_t>((2 * static_cast<std::int64_t>(e)) % sq.root_order);
        sq.principal &= (e == 0);
    }
    return sq;
}

}  // namespace

std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::first_moment: return "first-moment";
        case TheoremId::second_moment: return "second-moment";
        case TheoremId::higher_moment: return "higher-moment";
        case TheoremId::deficiency_sum: return "deficiency";
        case TheoremId::sf_first_moment: return "sf-first-moment";
        case TheoremId::sf_second_moment: return "sf-second-moment";
        case TheoremId::sf_deficiency_sum: return "sf-deficiency";
    }
    return "?";
}

TheoremId theorem_from_name(const std::string& name) {
    for (TheoremId id : {TheoremId::first_moment, TheoremId::second_moment,
                         TheoremId::higher_moment, TheoremId::deficiency_sum,
                         TheoremId::sf_first_moment, TheoremId::sf_second_moment,
                         TheoremId::sf_deficiency_sum}) {
        if (theorem_name(id) == name) return id;
    }
    throw std::invalid_argument("unknown theorem name: " + name);
}

double MainTerm::normalizer(std::uint64_t Q) const {
    const double x = static_cast<double>(Q < 2 ? 2 : Q);
    const double qe = q_exponent + (add_theta ? theta : 0.0);
    return std::pow(x, qe) * std::pow(std::log(x), log_exponent);
}

std::string MainTerm::normalizer_text() const {
    std::string s = "Q^" + std::to_string(q_exponent) + (add_theta ? "+theta" : "");
    if (log_exponent != 0.0) s += " * log(Q)^" + std::to_string(log_exponent);
    return s;
}

MainTerm mt_first_moment(std::uint64_t Q, std::uint32_t k, std::uint64_t u, const BFreeSpec& b) {
    reject_kfree(b, "mt_first_moment");
    MomentQuery{1, Q ? Q : 1, b, k, u}.validate();
    MainTerm mt;
    mt.theorem = TheoremId::first_moment;
    mt.q_exponent = 1.0;
    mt.add_theta = true;
    mt.theta = b.theta;
    mt.log_exponent = 1.5;
    if (Q == 0) return mt;
    const auto c = constants();
    const long double q2 = static_cast<long double>(Q) * Q;
    const long double phik = character_group(k).size();
    mt.value = 3.0L * q2 / (2.0L * phik * c.zeta2) * bfree_unit_factor(b, k);
    return mt;
}

long double hall_shiu_second_moment(std::uint64_t Q) {
    if (Q == 0) return 0.0L;
    const auto c = constants();
    const long double q2 = static_cast<long double>(Q) * Q;
    return 24.0L / (kPi * kPi) * q2 *
           (std::log(2.0L * Q) - c.zeta2_prime / c.zeta2 - 17.0L / 8.0L + 2.0L * c.euler_gamma);
}

MainTerm mt_second_moment(std::uint64_t Q, std::uint32_t k, std::uint64_t u, const BFreeSpec& b) {
    reject_kfree(b, "mt_second_moment");
    MomentQuery{2, Q ? Q : 1, b, k, u}.validate();
    MainTerm mt;
    mt.theorem = TheoremId::second_moment;
    mt.q_exponent = 1.0;
    mt.add_theta = true;
    mt.theta = b.theta;
    mt.log_exponent = 2.0;
    if (Q == 0) return mt;
    const auto c = constants();
    const long double q2 = static_cast<long double>(Q) * Q;
    const auto group = character_group(k);
    const long double phik = group.size();
    const std::uint64_t ubar = inverse_mod(u, k);

    const long double bracket = std::log(2.0L * Q) + 2.0L * c.euler_gamma -
                                c.zeta2_prime / c.zeta2 - 17.0L / 8.0L + bfree_log_sum(b, k);
    std::complex<long double> total =
        4.0L * q2 / (phik * c.zeta2) * bracket * bfree_unit_factor(b, k);

    for (const auto& chi : group) {
        if (chi.is_principal()) continue;
        const auto lratio = l_value(1.0L, chi) / l_value(2.0L, chi);
        const auto bfac =
            euler_product_over_B(EulerFactorKind::second_moment_correction, b, k, &chi, 0, 1.0L);
        total += 4.0L * q2 / phik * chi_at(chi, ubar) * lratio * bfac.value;
    }
    mt.value = total;
    return mt;
}

MainTerm mt_higher_moment(std::uint64_t Q, int l, std::uint32_t k, std::uint64_t u,
                          const BFreeSpec& b, HigherVariant variant) {
    reject_kfree(b, "mt_higher_moment");
    if (l < 3) throw std::domain_error("mt_higher_moment: l >= 3 required");
    MomentQuery{l, Q ? Q : 1, b, k, u}.validate();
    MainTerm mt;
    mt.theorem = TheoremId::higher_moment;
    mt.add_theta = false;
    mt.theta = b.theta;
    if (l == 3) {
        mt.q_exponent = 2.0;
        mt.log_exponent = 1.0;
    } else {
        mt.q_exponent = static_cast<double>(l - 1);
        mt.log_exponent = 0.0;
    }
    mt.note = variant == HigherVariant::derived_all_chars
                  ? "coefficient 2^l over all characters (derived form)"
                  : "coefficient 4 over non-principal characters (as printed; suspected misprint)";
    if (Q == 0) return mt;

    const auto group = character_group(k);
    const long double phik = group.size();
    const std::uint64_t ubar = inverse_mod(u, k);
    const long double coeff = variant == HigherVariant::derived_all_chars
                                  ? std::pow(2.0L, static_cast<long double>(l))
                                  : 4.0L;
    const long double ql = std::pow(static_cast<long double>(Q), static_cast<long double>(l));

    std::complex<long double> total{0.0L, 0.0L};
    for (const auto& chi : group) {
        if (variant == HigherVariant::printed_nonprincipal && chi.is_principal()) continue;
        const auto lratio = l_value(static_cast<long double>(l - 1), chi) /
                            l_value(static_cast<long double>(l), chi);
        const auto bfac =
            euler_product_over_B(EulerFactorKind::l_ratio_correction, b, k, &chi, l, 1.0L);
        total += chi_at(chi, ubar) * lratio * bfac.value;
    }
    mt.value = coeff * ql / phik * total;
    return mt;
}

MainTerm mt_deficiency(std::uint64_t Q, std::uint32_t k, const BFreeSpec& b, bool principal) {
    reject_kfree(b, "mt_deficiency");
    b.validate();
    MainTerm mt;
    mt.theorem = TheoremId::deficiency_sum;
    if (principal) {
        mt.q_exponent = 1.0;
        mt.add_theta = true;
        mt.theta = b.theta;
        mt.log_exponent = 2.0;
    } else {
        mt.q_exponent = 1.0;
        mt.add_theta = false;
        mt.log_exponent = 4.0;
    }
    if (Q == 0 || !principal) return mt;  // non-principal main term vanishes
    const auto c = constants();
    const long double q2 = static_cast<long double>(Q) * Q;
    mt.value = (2.0L - 3.0L / c.zeta2) * q2 * bfree_unit_factor(b, k);
    return mt;
}

MainTerm mt_squarefree(SquarefreeTheorem which, std::uint64_t Q, std::uint32_t k, std::uint64_t u,
                       std::uint64_t truncation) {
    MomentQuery{1, Q ? Q : 1, BFreeSpec::kfree_spec(2), k, u}.validate();
    MainTerm mt;
    mt.q_exponent = 1.5;
    mt.add_theta = false;
    switch (which) {
        case SquarefreeTheorem::first:
            mt.theorem = TheoremId::sf_first_moment;
            mt.log_exponent = 1.0;
            break;
        case SquarefreeTheorem::deficiency:
            mt.theorem = TheoremId::sf_deficiency_sum;
            mt.log_exponent = 2.5;
            break;
        case SquarefreeTheorem::second:
            mt.theorem = TheoremId::sf_second_moment;
            mt.log_exponent = 2.5;
            break;
    }
    if (Q == 0) return mt;

    const auto& primes = cached_primes(truncation);
    const auto c = constants();
    const auto group = character_group(k);
    const long double phik = group.size();
    const long double q2 = static_cast<long double>(Q) * Q;
    const long double kl = static_cast<long double>(k);

    // prod_{p | k} p^2 / (p^2 + p - 1), exact finite product.
    long double ak = 1.0L;
    for (std::uint64_t p : prime_factors_of(k)) {
        const long double pl = p;
        ak *= pl * pl / (pl * pl + pl - 1.0L);
    }
    // prod_p (1 - 1/(p(p+1))) over all primes.
    const auto c1 = prod_over_primes(
        [](std::uint64_t p) {
            const long double pl = p;
            return 1.0L - 1.0L / (pl * (pl + 1.0L));
        },
        -1.0L, 1.5L, primes);
    // prod_{p not | k} (1 - phi(k)/(p(p+1))).
    const auto bk = prod_over_primes(
        [&](std::uint64_t p) {
            const long double pl = p;
            return 1.0L - phik / (pl * (pl + 1.0L));
        },
        -phik, phik + phik * phik / 2.0L + 1.0L, primes, k);
    long double l2chi0 = c.zeta2;
    for (std::uint64_t p : prime_factors_of(k))
        l2chi0 *= 1.0L - 1.0L / (static_cast<long double>(p) * p);

    if (which == SquarefreeTheorem::first) {
        // principal contribution only; non-principal main terms vanish.
        const long double principal =
            12.0L * q2 / (kPi * kPi) * ak * c1.value - q2 / (2.0L * kl * l2chi0) * bk.value;
        mt.value = principal / phik;
        return mt;
    }

    if (which == SquarefreeTheorem::deficiency) {
        const auto c2 = prod_over_primes(
            [](std::uint64_t p) {
                const long double pl = p;
                const long double d = pl * pl * pl + pl * pl - pl;
                return d / (d - 1.0L);
            },
            0.0L, 1.1L, primes);
        mt.value = 12.0L * q2 / (kPi * kPi) * ak * (c2.value - c1.value) -
                   q2 / (kl * l2chi0) * bk.value;
        return mt;
    }

    // Second moment: principal part plus the non-principal L(1,chi) terms.
    long double logsum_k = 0.0L;   // sum_{p | k} log p / (p + 1)
    for (std::uint64_t p : prime_factors_of(k))
        logsum_k += std::log(static_cast<long double>(p)) / (p + 1.0L);
    long double logsum = 0.0L;     // sum_{p not | k} p log p / ((p+1)(p^2+p-1))
    for (std::uint64_t p : primes) {
        if (k % p == 0) continue;
        const long double pl = p;
        logsum += pl * std::log(pl) / ((pl + 1.0L) * (pl * pl + pl - 1.0L));
    }
    const long double bracket = std::log(2.0L * Q) + 2.0L * c.euler_gamma - 1.5L -
                                2.0L * c.zeta2_prime / c.zeta2 + logsum_k + logsum;
    const long double principal = 24.0L * q2 / (kPi * kPi) * bracket * ak * c1.value -
                                  12.0L * q2 / (kPi * kPi) * ak * c1.value -
                                  q2 / (2.0L * kl * l2chi0) * bk.value;
    std::complex<long double> total = principal;
    const std::uint64_t ubar = inverse_mod(u, k);
    for (const auto& chi : group) {
        if (chi.is_principal()) continue;
        const auto chi2 = squared_character(chi);
        // prod_p (1 - chi(p^2)/p^2) collapses to 1/L(2, chi^2).
        const std::complex<long double> prod_a =
            chi2.is_principal()
                ? std::complex<long double>(1.0L / l2chi0, 0.0L)
                : 1.0L / l_value(2.0L, chi2);
        std::complex<long double> prod_b{1.0L, 0.0L};
        for (std::uint64_t p : primes) {
            const auto cv = chi_at(chi, p);
            if (cv == std::complex<long double>{}) continue;
            const long double pl = p;
            prod_b *= 1.0L - cv / (pl * (pl + cv));
        }
        total += chi_at(chi, ubar) * 4.0L * q2 * l_value(1.0L, chi) * prod_a * prod_b;
    }
    mt.value = total / phik;
    return mt;
}

mpz_class empirical_for(const CompareQuery& q, std::uint64_t Q, const SieveTables& tables) {
    switch (q.theorem) {
        case TheoremId::first_moment:
        case TheoremId::sf_first_moment:
            return *moment_direct(MomentQuery{1, Q, q.b, q.k, q.u}, tables).integer;
        case TheoremId::second_moment:
        case TheoremId::sf_second_moment:
            return *moment_direct(MomentQuery{2, Q, q.b, q.k, q.u}, tables).integer;
        case TheoremId::higher_moment:
            return *moment_direct(MomentQuery{q.l, Q, q.b, q.k, q.u}, tables).integer;
        case TheoremId::deficiency_sum:
        case TheoremId::sf_deficiency_sum: {
            const auto group = character_group(q.k);
            const auto sum = deficiency_char_sum(Q, q.b, group.front(), tables);
            // principal-character accumulation only touches exponent zero
            return sum.cyclotomic->raw().front();
        }
    }
    throw std::logic_error("empirical_for: unhandled theorem");
}

MainTerm main_term_for(const CompareQuery& q, std::uint64_t Q) {
    switch (q.theorem) {
        case TheoremId::first_moment:
            return mt_first_moment(Q, q.k, q.u, q.b);
        case TheoremId::second_moment:
            return mt_second_moment(Q, q.k, q.u, q.b);
        case TheoremId::higher_moment:
            return mt_higher_moment(Q, q.l, q.k, q.u, q.b, q.variant);
        case TheoremId::deficiency_sum:
            return mt_deficiency(Q, q.k, q.b, true);
        case TheoremId::sf_first_moment:
            return mt_squarefree(SquarefreeTheorem::first, Q, q.k, q.u);
        case TheoremId::sf_second_moment:
            return mt_squarefree(SquarefreeTheorem::second, Q, q.k, q.u);
        case TheoremId::sf_deficiency_sum:
            return mt_squarefree(SquarefreeTheorem::deficiency, Q, q.k, q.u);
    }
    throw std::logic_error("main_term_for: unhandled theorem");
}

std::vector<MomentReport> compare(const CompareQuery& q, const std::vector<std::uint64_t>& sweep) {
    if (sweep.empty()) return {};
    for (std::size_t i = 1; i < sweep.size(); ++i)
        if (sweep[i] <= sweep[i - 1])
            throw std::invalid_argument("compare: sweep must be ascending");
    const SieveTables tables = build_sieve(sweep.back(), q.b);
    std::vector<MomentReport> out;
    out.reserve(sweep.size());
    for (std::uint64_t Q : sweep) {
        const mpz_class emp = empirical_for(q, Q, tables);
        const MainTerm mt = main_term_for(q, Q);
        MomentReport r;
        r.q = Q;
        r.theorem = theorem_name(q.theorem);
        r.empirical = emp.get_d();
        r.main = mt.real();
        r.raw_error = r.empirical - r.main;
        r.normalized_error = r.raw_error / mt.normalizer(Q);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace fareyidx
