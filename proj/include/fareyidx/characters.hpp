#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace fareyidx {

// A Dirichlet character mod k with values stored exactly: chi(n) = zeta_L^expo[n mod k]
// where L is the exponent of the unit group, or 0 when gcd(n,k) > 1 (expo = -1).
struct DirichletCharacter {
    std::uint32_t modulus = 1;
    std::uint32_t root_order = 1;     // L
    bool principal = true;
    std::vector<std::int32_t> expo;   // size max(modulus,1); -1 marks a vanishing value

    // Exponent of zeta_L at n, or -1 if chi(n) = 0.
    int value_exponent(std::uint64_t n) const {
        return expo[modulus <= 1 ? 0 : static_cast<std::size_t>(n % modulus)];
    }
    bool vanishes_at(std::uint64_t n) const { return value_exponent(n) < 0; }
    std::complex<double> value(std::uint64_t n) const;
    bool is_principal() const { return principal; }
};

inline constexpr std::uint32_t kCharModulusMax = 4096;

// All phi(k) characters mod k, principal first, in a deterministic order.
// Built by assigning roots of unity to a generating set of the unit group.
std::vector<DirichletCharacter> character_group(std::uint32_t k);

// Multiplicative inverse of u modulo k in [1, k]; for k = 1 returns 1.
std::uint64_t inverse_mod(std::uint64_t u, std::uint64_t k);

}  // namespace fareyidx
