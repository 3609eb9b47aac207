#include "fareyidx/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace fareyidx {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) result = (result * base) % mod;
        base = (base * base) % mod;
        exp >>= 1;
    }
    return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
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

std::uint64_t euler_phi_u64(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p : prime_factors(n)) result -= result / p;
    return result;
}

// Primitive root mod an odd prime power p^a.
std::uint64_t primitive_root_odd(std::uint64_t p, std::uint64_t pa) {
    const auto pf = prime_factors(p - 1);
    std::uint64_t g = 2;
    for (;; ++g) {
        bool ok = true;
        for (std::uint64_t f : pf) {
            if (pow_mod(g, (p - 1) / f, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) break;
    }
    if (pa == p) return g;
    // Lift: g stays primitive mod p^a unless g^{p-1} = 1 (mod p^2).
    if (pow_mod(g, p - 1, p * p) == 1) g += p;
    return g % pa;
}

struct Generator {
    std::uint64_t value;  // lifted to mod k via CRT
    std::uint64_t order;
};

}  // namespace

std::uint64_t inverse_mod(std::uint64_t u, std::uint64_t k) {
    if (k <= 1) return 1;
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(k), new_r = static_cast<std::int64_t>(u % k);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::invalid_argument("inverse_mod: arguments not coprime");
    if (t < 0) t += static_cast<std::int64_t>(k);
    std::uint64_t inv = static_cast<std::uint64_t>(t);
    return inv == 0 ? k : inv;
}

std::complex<double> DirichletCharacter::value(std::uint64_t n) const {
    const int e = value_exponent(n);
    if (e < 0) return {0.0, 0.0};
    const double ang = 2.0 * std::numbers::pi * e / root_order;
    return {std::cos(ang), std::sin(ang)};
}

std::vector<DirichletCharacter> character_group(std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("character_group: k >= 1 required");
    if (k > kCharModulusMax)
        throw std::length_error("character_group: modulus beyond configured bound");

    if (k == 1) {
        DirichletCharacter chi;
        chi.modulus = 1;
        chi.root_order = 1;
        chi.principal = true;
        chi.expo = {0};
        return {chi};
    }

    // Generators of (Z/kZ)^* from the prime-power decomposition, CRT-lifted.
    std::vector<Generator> gens;
    {
        std::uint64_t rest = k;
        for (std::uint64_t p = 2; p <= rest; ++p) {
            if (rest % p != 0) continue;
            std::uint64_t pa = 1;
            while (rest % p == 0) {
                rest /= p;
                pa *= p;
            }
            const std::uint64_t other = k / pa;
            // x = g (mod pa), x = 1 (mod other); a scan is fine at this modulus scale.
            auto crt = [&](std::uint64_t g) -> std::uint64_t {
                for (std::uint64_t x = 1; x < k; ++x)
                    if (x % pa == g % pa && (other == 1 || x % other == 1)) return x;
                throw std::logic_error("character_group: CRT lift failed");
            };
            if (p == 2) {
                if (pa == 2) continue;  // trivial local group
                if (pa == 4) {
                    gens.push_back({crt(3), 2});
                } else {
                    gens.push_back({crt(pa - 1), 2});
                    std::uint64_t ord = pa / 4;  // order of 5 mod 2^a
                    gens.push_back({crt(5), ord});
                }
            } else {
                const std::uint64_t g = primitive_root_odd(p, pa);
                gens.push_back({crt(g), euler_phi_u64(pa)});
            }
        }
    }

    std::uint64_t group_order = 1;  // phi(k)
    std::uint64_t exponent = 1;     // L = lcm of generator orders
    for (const auto& g : gens) {
        group_order *= g.order;
        exponent = std::lcm(exponent, g.order);
    }

    // Discrete-log table: unit -> exponent tuple, filled by enumerating all tuples.
    const std::size_t r = gens.size();
    std::vector<std::vector<std::uint32_t>> dlog(k);
    {
        std::vector<std::uint32_t> tuple(r, 0);
        for (std::uint64_t count = 0; count < group_order; ++count) {
            std::uint64_t u = 1;
            for (std::size_t j = 0; j < r; ++j) u = (u * pow_mod(gens[j].value, tuple[j], k)) % k;
            dlog[u] = tuple;
            for (std::size_t j = r; j-- > 0;) {
                if (++tuple[j] < gens[j].order) break;
                tuple[j] = 0;
            }
        }
    }

    std::vector<DirichletCharacter> group;
    group.reserve(group_order);
    std::vector<std::uint32_t> e(r, 0);
    for (std::uint64_t count = 0; count < group_order; ++count) {
        DirichletCharacter chi;
        chi.modulus = k;
        chi.root_order = static_cast<std::uint32_t>(exponent);
        chi.principal = true;
        for (std::size_t j = 0; j < r; ++j) chi.principal &= (e[j] == 0);
        chi.expo.assign(k, -1);
        for (std::uint64_t n = 0; n < k; ++n) {
            if (std::gcd(n, static_cast<std::uint64_t>(k)) != 1) continue;
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < r; ++j)
                acc += static_cast<std::uint64_t>(dlog[n][j]) * e[j] * (exponent / gens[j].order);
            chi.expo[n] = static_cast<std::int32_t>(acc % exponent);
        }
        group.push_back(std::move(chi));
        for (std::size_t j = r; j-- > 0;) {
            if (++e[j] < gens[j].order) break;
            e[j] = 0;
        }
    }
    return group;
}

}  // namespace fareyidx
