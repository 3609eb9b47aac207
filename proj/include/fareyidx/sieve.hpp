#pragma once

#include <cstdint>
#include <vector>

#include "fareyidx/bfree.hpp"

namespace fareyidx {

// Multiplicative-function tables up to a fixed limit, built once and shared
// read-only afterwards. totient_prefix(n) counts the Farey fractions of
// order n (the totient summatory function).
class SieveTables {
public:
    SieveTables(std::uint64_t limit, const BFreeSpec& b);

    std::uint64_t limit() const { return limit_; }
    const BFreeSpec& bspec() const { return bspec_; }

    int mu(std::uint64_t n) const { return mu_[n]; }
    std::uint64_t phi(std::uint64_t n) const { return phi_[n]; }
    bool bfree(std::uint64_t n) const { return bfree_[n] != 0; }
    std::uint64_t totient_prefix(std::uint64_t n) const { return nprefix_[n]; }

    // Smallest prime factor; 0 for n < 2.
    std::uint64_t spf(std::uint64_t n) const { return spf_[n]; }

    const std::vector<std::uint64_t>& primes() const { return primes_; }

    // Divisors of n (unsorted), via the smallest-prime-factor table.
    std::vector<std::uint64_t> divisors(std::uint64_t n) const;
    // Squarefree divisors paired with their Mobius value.
    std::vector<std::pair<std::uint64_t, int>> squarefree_divisors(std::uint64_t n) const;

private:
    std::uint64_t limit_;
    BFreeSpec bspec_;
    std::vector<std::int8_t> mu_;
    std::vector<std::uint32_t> phi_;
    std::vector<std::uint8_t> bfree_;
    std::vector<std::uint64_t> nprefix_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint64_t> primes_;
};

// Maximum table size accepted by build_sieve before reporting a resource
// error; roughly 2 GiB of tables.
inline constexpr std::uint64_t kSieveLimitMax = 1ull << 27;

SieveTables build_sieve(std::uint64_t limit, const BFreeSpec& b = BFreeSpec::none_spec());

// Plain prime list up to limit, for code that does not need the full tables.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

}  // namespace fareyidx
