#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>

#include "fareyidx/bfree.hpp"
#include "fareyidx/characters.hpp"
#include "fareyidx/cyclotomic.hpp"
#include "fareyidx/sieve.hpp"

namespace fareyidx {

// One moment cell: sum of nu^l over fractions of F_Q whose denominator is
// B-free and lies in the residue class u mod k.
struct MomentQuery {
    int l = 1;
    std::uint64_t Q = 1;
    BFreeSpec b;
    std::uint32_t k = 1;
    std::uint64_t u = 1;

    void validate() const;
};

// Progression-restricted sums are exact integers; character-twisted sums are
// exact elements of Z[zeta_L]. count is the number of contributing fractions.
struct ExactSum {
    std::optional<mpz_class> integer;
    std::optional<CycElement> cyclotomic;
    std::uint64_t count = 0;

    std::complex<double> approx() const;
};

ExactSum moment_direct(const MomentQuery& q, const SieveTables& tables);

ExactSum moment_char(int l, std::uint64_t Q, const BFreeSpec& b, const DirichletCharacter& chi,
                     const SieveTables& tables);

// | direct - (1/phi(k)) sum_chi chi(u^{-1}) M(chi) |. In exact mode the
// difference is tested in Z[zeta_L] and a clean zero comes back as 0.0;
// in floating mode the character sums are accumulated in complex doubles.
double decompose_check(int l, std::uint64_t Q, const BFreeSpec& b, std::uint32_t k,
                       std::uint64_t u, const SieveTables& tables, bool exact_mode = true);

// sum over B-free s <= Q of chi(s) delta(s); count tallies deficient fractions
// with chi(s) != 0.
ExactSum deficiency_char_sum(std::uint64_t Q, const BFreeSpec& b, const DirichletCharacter& chi,
                             const SieveTables& tables);

}  // namespace fareyidx
