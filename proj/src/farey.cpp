#include "fareyidx/farey.hpp"

#include <cassert>
#include <numeric>

namespace fareyidx {

FareyStream::FareyStream(std::uint64_t Q) : q_(Q) {
    if (Q < 1) throw std::invalid_argument("FareyStream: Q >= 1 required");
    if (Q > kFareyOrderMax) throw std::length_error("FareyStream: Q exceeds the machine-word cap");
    an_ = 0;
    ad_ = 1;
    bn_ = 1;
    bd_ = Q;
}

bool FareyStream::next(FareyWindow& w) {
    if (done_) return false;
    const std::uint64_t k = (q_ + ad_) / bd_;
    const std::uint64_t cn = k * bn_ - an_;
    const std::uint64_t cd = k * bd_ - ad_;
    w.prev = {an_, ad_};
    w.cur = {bn_, bd_};
    w.next = {cn, cd};
    w.order = q_;
    if (bn_ == bd_) done_ = true;  // just emitted 1/1
    an_ = bn_;
    ad_ = bd_;
    bn_ = cn;
    bd_ = cd;
    return true;
}

std::uint64_t index_of(const FareyWindow& w) {
    const std::uint64_t s = w.prev.den + w.next.den;
    if (s % w.cur.den != 0) throw IntegrityError("index_of: neighbor sum not divisible");
    return s / w.cur.den;
}

std::uint64_t farey_count(std::uint64_t Q, const SieveTables& tables) {
    return tables.totient_prefix(Q);
}

std::int64_t mertens_floor_sum(std::uint64_t s, std::uint64_t Q, const SieveTables& tables) {
    std::int64_t acc = 0;
    for (const auto& [d, mu] : tables.squarefree_divisors(s))
        acc += mu * static_cast<std::int64_t>(Q / d);
    return acc;
}

std::int64_t deficiency(std::uint64_t s, std::uint64_t Q, const SieveTables& tables) {
    if (s < 1 || s > Q) throw std::invalid_argument("deficiency: 1 <= s <= Q required");
    const std::int64_t phi = static_cast<std::int64_t>(tables.phi(s));
    const std::int64_t floor2q = static_cast<std::int64_t>(2 * Q / s);
    const std::int64_t eps = (s == 1) ? 1 : 0;
    const std::int64_t d = phi * (floor2q + 1) - 2 * mertens_floor_sum(s, Q, tables) - eps;
    assert(d >= 0 && d <= phi);
    return d;
}

std::int64_t index_sum_for_denominator(std::uint64_t s, std::uint64_t Q,
                                       const SieveTables& tables) {
    if (s < 1 || s > Q) throw std::invalid_argument("index_sum: 1 <= s <= Q required");
    const std::int64_t phi = static_cast<std::int64_t>(tables.phi(s));
    const std::int64_t floor2q = static_cast<std::int64_t>(2 * Q / s);
    const std::int64_t t = phi * floor2q - deficiency(s, Q, tables);
#ifndef NDEBUG
    const std::int64_t eps = (s == 1) ? 1 : 0;
    assert(t == 2 * mertens_floor_sum(s, Q, tables) - phi + eps);
#endif
    return t;
}

std::int64_t index_square_sum_for_denominator(std::uint64_t s, std::uint64_t Q,
                                              const SieveTables& tables) {
    if (s < 1 || s > Q) throw std::invalid_argument("index_square_sum: 1 <= s <= Q required");
    const std::int64_t phi = static_cast<std::int64_t>(tables.phi(s));
    const std::int64_t floor2q = static_cast<std::int64_t>(2 * Q / s);
    return phi * floor2q * floor2q - deficiency(s, Q, tables) * (2 * floor2q - 1);
}

namespace {

mpz_class mpz_from_u128(unsigned __int128 v) {
    mpz_class hi(static_cast<std::uint64_t>(v >> 64));
    hi <<= 64;
    return hi + mpz_class(static_cast<std::uint64_t>(v));
}

int bit_width_u64(std::uint64_t v) {
    int b = 0;
    while (v) {
        ++b;
        v >>= 1;
    }
    return b;
}

}  // namespace

mpz_class index_power_sum_for_denominator(std::uint64_t s, std::uint64_t Q, int l,
                                          const SieveTables& tables) {
    if (l < 1) throw std::invalid_argument("index_power_sum: l >= 1 required");
    if (l == 1) return mpz_class(static_cast<long>(index_sum_for_denominator(s, Q, tables)));
    if (l == 2) return mpz_class(static_cast<long>(index_square_sum_for_denominator(s, Q, tables)));
    if (s < 1 || s > Q) throw std::invalid_argument("index_power_sum: 1 <= s <= Q required");

    // floor((Q+r)/s)^l over Q-s < r <= Q with gcd(r,s) = 1; the per-term power
    // fits __int128 for moderate l, with a big-integer path beyond that.
    const bool narrow = bit_width_u64(2 * Q) * l + bit_width_u64(s) <= 120;
    unsigned __int128 acc = 0;
    mpz_class wide = 0;
    for (std::uint64_t r = Q - s + 1; r <= Q; ++r) {
        if (std::gcd(r, s) != 1) continue;
        const std::uint64_t nu = (Q + r) / s;
        if (narrow) {
            unsigned __int128 pw = 1;
            for (int j = 0; j < l; ++j) pw *= nu;
            acc += pw;
        } else {
            mpz_class pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), nu, static_cast<unsigned long>(l));
            wide += pw;
        }
    }
    return narrow ? mpz_from_u128(acc) : wide;
}

}  // namespace fareyidx
