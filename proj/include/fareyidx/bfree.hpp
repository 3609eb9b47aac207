#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fareyidx {

// Divisibility constraint on Farey denominators: either an explicit ascending
// list of primes, k-free integers (k=2 being squarefree), or no constraint.
// theta is only used to normalize empirical errors in asymptotic reports.
struct BFreeSpec {
    enum class Kind { none, explicit_primes, kfree };

    Kind kind = Kind::none;
    std::vector<std::uint64_t> primes;  // explicit_primes: strictly ascending
    int k = 0;                          // kfree: k >= 2
    double theta = 0.51;                // in (1/2, 1)

    static BFreeSpec none_spec() { return BFreeSpec{}; }
    static BFreeSpec explicit_spec(std::vector<std::uint64_t> ps);
    static BFreeSpec kfree_spec(int k);

    bool is_none() const { return kind == Kind::none; }
    bool is_explicit() const { return kind == Kind::explicit_primes; }
    bool is_kfree() const { return kind == Kind::kfree; }
    bool is_squarefree() const { return kind == Kind::kfree && k == 2; }

    // Textual form used by the CLI and config files:
    //   "none" | "primes:2,5,11" | "kfree:2"
    static BFreeSpec parse(const std::string& text);
    std::string to_string() const;

    void validate() const;
};

bool is_prime_u64(std::uint64_t n);

}  // namespace fareyidx
