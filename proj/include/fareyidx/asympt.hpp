#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "fareyidx/bfree.hpp"
#include "fareyidx/moments.hpp"

namespace fareyidx {

enum class TheoremId {
    first_moment,
    second_moment,
    higher_moment,
    deficiency_sum,
    sf_first_moment,
    sf_second_moment,
    sf_deficiency_sum,
};

std::string theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name);

// One asymptotic main term together with the error normalizer used to gauge
// empirical residual trends: normalizer(Q) = Q^{q_exponent (+ theta)} log(Q)^{log_exponent}.
struct MainTerm {
    std::complex<long double> value{0.0L, 0.0L};
    TheoremId theorem = TheoremId::first_moment;
    double q_exponent = 1.0;
    double log_exponent = 0.0;
    bool add_theta = false;
    double theta = 0.51;
    std::string note;

    double real() const { return static_cast<double>(value.real()); }
    double normalizer(std::uint64_t Q) const;
    std::string normalizer_text() const;
};

// The per-character coefficient in the higher-moment main term: the derived
// form uses 2^l over the whole character group; the printed statement uses
// 4 over non-principal characters only and looks like a misprint.
enum class HigherVariant { derived_all_chars, printed_nonprincipal };

MainTerm mt_first_moment(std::uint64_t Q, std::uint32_t k, std::uint64_t u, const BFreeSpec& b);

MainTerm mt_second_moment(std::uint64_t Q, std::uint32_t k, std::uint64_t u, const BFreeSpec& b);

// Second moment at k = 1, B = none in the historical closed form
// (24/pi^2) Q^2 (log 2Q - zeta'(2)/zeta(2) - 17/8 + 2 gamma); agrees with
// mt_second_moment to rounding and is kept as an independent algebraic route.
long double hall_shiu_second_moment(std::uint64_t Q);

MainTerm mt_higher_moment(std::uint64_t Q, int l, std::uint32_t k, std::uint64_t u,
                          const BFreeSpec& b,
                          HigherVariant variant = HigherVariant::derived_all_chars);

// Principal-character deficiency sum main term (2 - 3/zeta(2)) Q^2 * B-factors.
MainTerm mt_deficiency(std::uint64_t Q, std::uint32_t k, const BFreeSpec& b,
                       bool principal = true);

enum class SquarefreeTheorem { first, deficiency, second };

// Squarefree-denominator main terms; infinite Euler products are truncated at
// `truncation` with certified tails.
MainTerm mt_squarefree(SquarefreeTheorem which, std::uint64_t Q, std::uint32_t k, std::uint64_t u,
                       std::uint64_t truncation = 1000000);

struct MomentReport {
    std::uint64_t q = 0;
    std::string theorem;
    double empirical = 0.0;
    double main = 0.0;
    double raw_error = 0.0;
    double normalized_error = 0.0;
};

struct CompareQuery {
    TheoremId theorem = TheoremId::first_moment;
    int l = 1;
    std::uint32_t k = 1;
    std::uint64_t u = 1;
    BFreeSpec b;
    HigherVariant variant = HigherVariant::derived_all_chars;
};

// Empirical value per theorem: the exact progression moment for the moment
// theorems, the principal-character deficiency sum for the deficiency ones.
mpz_class empirical_for(const CompareQuery& q, std::uint64_t Q, const SieveTables& tables);

MainTerm main_term_for(const CompareQuery& q, std::uint64_t Q);

std::vector<MomentReport> compare(const CompareQuery& q, const std::vector<std::uint64_t>& sweep);

}  // namespace fareyidx
