#include "fareyidx/moments.hpp"

#include <cstdlib>
#include <numeric>
#include <thread>
#include <vector>

#include "fareyidx/farey.hpp"

namespace fareyidx {

namespace {

int env_thread_count() {
    if (const char* env = std::getenv("FAREYIDX_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

void require_matching_bspec(const SieveTables& tables, const BFreeSpec& b, const char* where) {
    if (tables.bspec().to_string() != b.to_string())
        throw std::invalid_argument(std::string(where) + ": sieve built for B = " +
                                    tables.bspec().to_string() + ", query has B = " + b.to_string());
}

}  // namespace

void MomentQuery::validate() const {
    if (l < 1) throw std::invalid_argument("MomentQuery: l >= 1 required");
    if (Q < 1) throw std::invalid_argument("MomentQuery: Q >= 1 required");
    if (k < 1) throw std::invalid_argument("MomentQuery: k >= 1 required");
    if (std::gcd(u, static_cast<std::uint64_t>(k)) != 1)
        throw std::invalid_argument("MomentQuery: gcd(u, k) = 1 required");
    b.validate();
}

std::complex<double> ExactSum::approx() const {
    if (integer) return {integer->get_d(), 0.0};
    if (cyclotomic) return cyclotomic->to_complex();
    return {0.0, 0.0};
}

ExactSum moment_direct(const MomentQuery& q, const SieveTables& tables) {
    q.validate();
    if (tables.limit() < q.Q) throw std::invalid_argument("moment_direct: sieve too small");
    require_matching_bspec(tables, q.b, "moment_direct");

    const int threads = env_thread_count();
    std::vector<mpz_class> partial(threads, 0);
    std::vector<std::uint64_t> counts(threads, 0);
    auto work = [&](int t) {
        mpz_class acc = 0;
        std::uint64_t cnt = 0;
        for (std::uint64_t s = 1 + t; s <= q.Q; s += threads) {
            if (!tables.bfree(s)) continue;
            if (q.k > 1 && s % q.k != q.u % q.k) continue;
            acc += index_power_sum_for_denominator(s, q.Q, q.l, tables);
            cnt += tables.phi(s);
        }
        partial[t] = std::move(acc);
        counts[t] = cnt;
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    ExactSum out;
    mpz_class total = 0;
    std::uint64_t count = 0;
    for (int t = 0; t < threads; ++t) {
        total += partial[t];
        count += counts[t];
    }
    out.integer = std::move(total);
    out.count = count;
    return out;
}

ExactSum moment_char(int l, std::uint64_t Q, const BFreeSpec& b, const DirichletCharacter& chi,
                     const SieveTables& tables) {
    if (tables.limit() < Q) throw std::invalid_argument("moment_char: sieve too small");
    require_matching_bspec(tables, b, "moment_char");
    ExactSum out;
    CycElement acc(static_cast<int>(chi.root_order));
    std::uint64_t count = 0;
    for (std::uint64_t s = 1; s <= Q; ++s) {
        if (!tables.bfree(s)) continue;
        const int e = chi.value_exponent(s);
        if (e < 0) continue;
        acc.add_term(e, index_power_sum_for_denominator(s, Q, l, tables));
        count += tables.phi(s);
    }
    out.cyclotomic = std::move(acc);
    out.count = count;
    return out;
}

double decompose_check(int l, std::uint64_t Q, const BFreeSpec& b, std::uint32_t k,
                       std::uint64_t u, const SieveTables& tables, bool exact_mode) {
    MomentQuery q{l, Q, b, k, u};
    q.validate();
    const auto group = character_group(k);
    const std::uint64_t ubar = inverse_mod(u % (k == 1 ? 1 : k), k);
    const mpz_class direct = *moment_direct(q, tables).integer;

    // Per-denominator power sums are character independent; compute them once.
    std::vector<mpz_class> w(Q + 1);
    for (std::uint64_t s = 1; s <= Q; ++s) {
        if (!tables.bfree(s)) continue;
        if (std::gcd(s, static_cast<std::uint64_t>(k)) != 1) continue;
        w[s] = index_power_sum_for_denominator(s, Q, l, tables);
    }

    const int L = static_cast<int>(group.front().root_order);
    if (exact_mode) {
        CycElement total(L);
        for (const auto& chi : group) {
            CycElement m(L);
            for (std::uint64_t s = 1; s <= Q; ++s) {
                if (!tables.bfree(s)) continue;
                const int e = chi.value_exponent(s);
                if (e < 0) continue;
                m.add_term(e, w[s]);
            }
            total += m.rotated(chi.value_exponent(ubar));
        }
        CycElement expect(L);
        expect.add_term(0, mpz_class(group.size()) * direct);  // phi(k) * direct
        total -= expect;
        if (total.is_zero()) return 0.0;
        return std::abs(total.to_complex()) / static_cast<double>(group.size());
    }

    std::complex<double> total{0.0, 0.0};
    for (const auto& chi : group) {
        std::complex<double> m{0.0, 0.0};
        for (std::uint64_t s = 1; s <= Q; ++s) {
            if (!tables.bfree(s)) continue;
            if (chi.vanishes_at(s)) continue;
            m += chi.value(s) * w[s].get_d();
        }
        total += chi.value(ubar) * m;
    }
    total /= static_cast<double>(group.size());
    return std::abs(total - std::complex<double>(direct.get_d(), 0.0));
}

ExactSum deficiency_char_sum(std::uint64_t Q, const BFreeSpec& b, const DirichletCharacter& chi,
                             const SieveTables& tables) {
    if (tables.limit() < Q) throw std::invalid_argument("deficiency_char_sum: sieve too small");
    require_matching_bspec(tables, b, "deficiency_char_sum");
    ExactSum out;
    CycElement acc(static_cast<int>(chi.root_order));
    std::uint64_t count = 0;
    for (std::uint64_t s = 1; s <= Q; ++s) {
        if (!tables.bfree(s)) continue;
        const int e = chi.value_exponent(s);
        if (e < 0) continue;
        const std::int64_t d = deficiency(s, Q, tables);
        acc.add_term(e, mpz_class(static_cast<long>(d)));
        count += static_cast<std::uint64_t>(d);
    }
    out.cyclotomic = std::move(acc);
    out.count = count;
    return out;
}

}  // namespace fareyidx
