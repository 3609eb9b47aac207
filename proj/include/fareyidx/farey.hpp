#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

#include "fareyidx/sieve.hpp"

namespace fareyidx {

struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Three consecutive members of the order-Q sequence, extended by the
// identification gamma_{i+N} = gamma_i + 1 (so the fraction after 1/1
// is (Q+1)/Q and the one before 1/Q is 0/1).
struct FareyWindow {
    Fraction prev, cur, next;
    std::uint64_t order = 1;
};

// Thrown by index_of when a window violates the exact-division invariant.
struct IntegrityError : std::logic_error {
    using std::logic_error::logic_error;
};

inline constexpr std::uint64_t kFareyOrderMax = 1ull << 30;

// Ascending enumeration of F_Q by the next-term recurrence
//   q_{i+1} = floor((Q + q_{i-1}) / q_i) * q_i - q_{i-1}
// seeded with 0/1, 1/Q. O(1) memory, one window per fraction of F_Q.
class FareyStream {
public:
    explicit FareyStream(std::uint64_t Q);

    // Fills w with the window around the next fraction; false when done.
    bool next(FareyWindow& w);

    std::uint64_t order() const { return q_; }

private:
    std::uint64_t q_;
    std::uint64_t an_, ad_;  // previous fraction
    std::uint64_t bn_, bd_;  // current fraction
    bool done_ = false;
};

// (den(prev) + den(next)) / den(cur), checked to be an exact integer.
std::uint64_t index_of(const FareyWindow& w);

// Number of fractions in F_Q (totient summatory function); tables.limit() >= Q.
std::uint64_t farey_count(std::uint64_t Q, const SieveTables& tables);

// sum_{d|s} mu(d) floor(Q/d)
std::int64_t mertens_floor_sum(std::uint64_t s, std::uint64_t Q, const SieveTables& tables);

// Count of fractions with denominator s in F_Q whose index is floor(2Q/s) - 1.
std::int64_t deficiency(std::uint64_t s, std::uint64_t Q, const SieveTables& tables);

// T(s) = sum of indices over fractions with denominator s; two closed forms
// (via the deficiency and via the Mobius floor sum) agree exactly.
std::int64_t index_sum_for_denominator(std::uint64_t s, std::uint64_t Q,
                                       const SieveTables& tables);

std::int64_t index_square_sum_for_denominator(std::uint64_t s, std::uint64_t Q,
                                              const SieveTables& tables);

// sum of nu^l over fractions with denominator s: closed forms for l = 1, 2,
// the coprime residue loop floor((Q+r)/s)^l, Q-s < r <= Q, for l >= 3.
mpz_class index_power_sum_for_denominator(std::uint64_t s, std::uint64_t Q, int l,
                                          const SieveTables& tables);

}  // namespace fareyidx
