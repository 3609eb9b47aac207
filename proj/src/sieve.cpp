#include "fareyidx/sieve.hpp"

#include <stdexcept>

namespace fareyidx {

SieveTables::SieveTables(std::uint64_t limit, const BFreeSpec& b) : limit_(limit), bspec_(b) {
    if (limit < 1) throw std::invalid_argument("build_sieve: limit must be >= 1");
    if (limit > kSieveLimitMax)
        throw std::length_error("build_sieve: limit exceeds configured memory budget");
    b.validate();

    const std::uint64_t n = limit;
    mu_.assign(n + 1, 0);
    phi_.assign(n + 1, 0);
    spf_.assign(n + 1, 0);
    mu_[1] = 1;
    phi_[1] = 1;

    // Linear sieve for mu, phi and smallest prime factor.
    primes_.clear();
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            primes_.push_back(i);
            mu_[i] = -1;
            phi_[i] = static_cast<std::uint32_t>(i - 1);
        }
        for (std::uint64_t p : primes_) {
            if (p > spf_[i] || i * p > n) break;
            spf_[i * p] = static_cast<std::uint32_t>(p);
            if (i % p == 0) {
                mu_[i * p] = 0;
                phi_[i * p] = static_cast<std::uint32_t>(phi_[i] * p);
                break;
            }
            mu_[i * p] = static_cast<std::int8_t>(-mu_[i]);
            phi_[i * p] = static_cast<std::uint32_t>(phi_[i] * (p - 1));
        }
    }

    nprefix_.assign(n + 1, 0);
    for (std::uint64_t i = 1; i <= n; ++i) nprefix_[i] = nprefix_[i - 1] + phi_[i];

    bfree_.assign(n + 1, 1);
    bfree_[0] = 0;
    switch (b.kind) {
        case BFreeSpec::Kind::none:
            break;
        case BFreeSpec::Kind::explicit_primes:
            for (std::uint64_t p : b.primes) {
                for (std::uint64_t m = p; m <= n; m += p) bfree_[m] = 0;
            }
            break;
        case BFreeSpec::Kind::kfree:
            for (std::uint64_t p : primes_) {
                std::uint64_t pk = 1;
                bool overflow = false;
                for (int j = 0; j < b.k; ++j) {
                    if (pk > n / p) {
                        overflow = true;
                        break;
                    }
                    pk *= p;
                }
                if (overflow) break;
                for (std::uint64_t m = pk; m <= n; m += pk) bfree_[m] = 0;
            }
            break;
    }
}

std::vector<std::uint64_t> SieveTables::divisors(std::uint64_t n) const {
    std::vector<std::uint64_t> divs{1};
    while (n > 1) {
        const std::uint64_t p = spf_[n];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        const std::size_t base = divs.size();
        std::uint64_t pe = 1;
        for (int j = 1; j <= e; ++j) {
            pe *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
        }
    }
    return divs;
}

std::vector<std::pair<std::uint64_t, int>> SieveTables::squarefree_divisors(std::uint64_t n) const {
    std::vector<std::pair<std::uint64_t, int>> divs{{1, 1}};
    while (n > 1) {
        const std::uint64_t p = spf_[n];
        while (n % p == 0) n /= p;
        const std::size_t base = divs.size();
        for (std::size_t i = 0; i < base; ++i)
            divs.emplace_back(divs[i].first * p, -divs[i].second);
    }
    return divs;
}

SieveTables build_sieve(std::uint64_t limit, const BFreeSpec& b) { return SieveTables(limit, b); }

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint8_t> composite(limit + 1, 0);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            for (std::uint64_t m = i * i; m <= limit; m += i) composite[m] = 1;
        }
    }
    return primes;
}

}  // namespace fareyidx
