#include "fareyidx/farey_map.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <random>

namespace fareyidx {

namespace {

Rational make_rat(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool in_triangle(const RationalPoint& p) {
    return p.x > 0 && p.x <= 1 && p.y > 0 && p.y <= 1 && p.x + p.y > 1;
}

std::int64_t floor_rational(const Rational& q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return static_cast<std::int64_t>(fl.get_si());
}

Rational star_area(std::int64_t l) {
    if (l <= 1) return make_rat(1, 2);
    return make_rat(2, l * (l + 1));
}

// Shared tail loop: P(L) must be a nested family (P(L+1) inside P(L)) of
// regions with area 2/(L(L+1)); used with {digit >= L} and its preimages.
RegionTails tail_loop(const std::function<const Region&(std::int64_t)>& P, const Region& r,
                      std::int64_t c, std::int64_t level_cap) {
    RegionTails out{Rational(0), Rational(0)};
    if (r.empty()) return out;
    for (std::int64_t L = c + 1; L <= level_cap; ++L) {
        const Rational aL = region_intersect(P(L), r).area();
        if (aL == 0) return out;
        if (aL == star_area(L)) {
            // P(L) inside r: every deeper level is swallowed as well, and the
            // remaining sums telescope to closed forms.
            out.unweighted += make_rat(2, L);
            if (L == c + 1)
                out.weighted += (c + 1) * aL + make_rat(2, L + 1);
            else
                out.weighted += make_rat(2, L);
            return out;
        }
        out.unweighted += aL;
        out.weighted += (L == c + 1) ? (c + 1) * aL : aL;
    }
    throw CutoffError("region_tail: level cap reached without certification");
}

}  // namespace

Region farey_triangle() {
    Region r;
    r.add(make_polygon({{Rational(1), Rational(0)}, {Rational(1), Rational(1)},
                        {Rational(0), Rational(1)}}));
    return r;
}

std::int64_t digit(const RationalPoint& p) {
    if (!in_triangle(p)) throw std::domain_error("digit: point outside the Farey triangle");
    Rational q = (1 + p.x) / p.y;
    q.canonicalize();
    return floor_rational(q);
}

RationalPoint t_map(const RationalPoint& p) {
    const std::int64_t k = digit(p);
    return {p.y, k * p.y - p.x};
}

RationalPoint t_inv(const RationalPoint& p) {
    if (!in_triangle(p)) throw std::domain_error("t_inv: point outside the Farey triangle");
    Rational q = (1 + p.y) / p.x;
    q.canonicalize();
    const std::int64_t k = floor_rational(q);
    return {k * p.x - p.y, p.x};
}

Region min_digit_region(std::int64_t l) {
    if (l < 1) throw std::invalid_argument("min_digit_region: l >= 1 required");
    if (l == 1) return farey_triangle();
    Region r;
    r.add(make_polygon({{Rational(1), Rational(0)},
                        {Rational(1), make_rat(2, l)},
                        {make_rat(l - 1, l + 1), make_rat(2, l + 1)}}));
    return r;
}

Region digit_cell(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("digit_cell: k >= 1 required");
    Region out;
    for (const auto& poly : farey_triangle().polys) {
        // k <= (1+x)/y < k+1, as closed half-planes (boundaries are null sets).
        ConvexPolygon p = clip_halfplane(poly, Rational(1), Rational(-k), Rational(1));
        p = clip_halfplane(p, Rational(-1), Rational(k + 1), Rational(-1));
        out.add(std::move(p));
    }
    return out;
}

Region preimage_step(const Region& r, std::int64_t cell_cap) {
    Region out;
    if (r.empty()) return out;
    const Rational minx = r.min_x();
    for (std::int64_t k = 1; k <= cell_cap; ++k) {
        // Images of all cells with digit >= k lie in the strip {x <= 2/k}.
        if (minx > 0 && Rational(2) <= minx * k) return out;
        const Region cell = digit_cell(k);
        for (const auto& poly : r.polys) {
            // Inverse of (x,y) -> (y, ky - x).
            const ConvexPolygon back = apply_linear(poly, k, -1, 1, 0);
            for (const auto& cp : cell.polys) out.add(poly_intersect(back, cp));
        }
    }
    throw CutoffError("preimage_step: cell cap reached without certification");
}

Region preimage_min_digit(std::int64_t l, int h, std::int64_t cell_cap) {
    if (h < 0) throw std::invalid_argument("preimage_min_digit: h >= 0 required");
    if (l == 1) return farey_triangle();  // the shift is a bijection of the triangle
    Region r = min_digit_region(l);
    for (int step = 0; step < h; ++step) r = preimage_step(r, cell_cap);
    return r;
}

RegionTails region_tail(const Region& r, std::int64_t c, std::int64_t level_cap) {
    std::map<std::int64_t, Region> cache;
    auto getP = [&cache](std::int64_t L) -> const Region& {
        auto it = cache.find(L);
        if (it == cache.end()) it = cache.emplace(L, min_digit_region(L)).first;
        return it->second;
    };
    return tail_loop(getP, r, c, level_cap);
}

std::int64_t cutoff_value(CutoffPolicy policy, const std::vector<int>& h) {
    if (h.empty()) throw std::invalid_argument("cutoff_value: empty offset list");
    int hmax = 0;
    for (int v : h) {
        if (v < 1) throw std::invalid_argument("cutoff_value: offsets must be >= 1");
        hmax = std::max(hmax, v);
    }
    if (policy == CutoffPolicy::pow2) {
        if (hmax > 20) throw std::invalid_argument("cutoff_value: offset too large for 2^{h+1}");
        return std::int64_t(1) << (hmax + 1);
    }
    return 4 * std::int64_t(hmax) + 2;
}

namespace {

// All digit-region pullbacks used by one constant evaluation, cached per
// (shift, level). Slot m is the unshifted one.
class PullbackCache {
public:
    explicit PullbackCache(const std::vector<int>& h) : h_(h) {}

    const Region& get(std::size_t slot, std::int64_t level) {
        const int shift = slot < h_.size() ? h_[slot] : 0;
        const auto key = std::make_pair(shift, level);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, preimage_min_digit(level, shift)).first;
        return it->second;
    }

private:
    std::vector<int> h_;
    std::map<std::pair<int, std::int64_t>, Region> cache_;
};

// Enumerates intersections over all index tuples in [1..c]^{slots} for the
// given slot subset, invoking sink on each nonempty final region.
void enumerate_tuples(PullbackCache& cache, const std::vector<std::size_t>& slots,
                      std::int64_t c, std::size_t depth, const Region& acc,
                      const std::function<void(const Region&)>& sink) {
    if (depth == slots.size()) {
        sink(acc);
        return;
    }
    for (std::int64_t l = 1; l <= c; ++l) {
        const Region next = region_intersect(acc, cache.get(slots[depth], l));
        if (next.empty()) continue;
        enumerate_tuples(cache, slots, c, depth + 1, next, sink);
    }
}

}  // namespace

mpq_class correlation_constant(const std::vector<int>& h, CutoffPolicy policy) {
    const std::int64_t c = cutoff_value(policy, h);
    const std::size_t m = h.size();
    PullbackCache cache(h);

    Rational acc(0);

    // Finite block: every slot index at most c.
    {
        std::vector<std::size_t> all(m + 1);
        for (std::size_t i = 0; i <= m; ++i) all[i] = i;
        enumerate_tuples(cache, all, c, 0, farey_triangle(),
                         [&](const Region& r) { acc += r.area(); });
    }

    // Exactly one slot beyond c; two or more large indices give empty
    // intersections, which the tail loop would detect as immediate zeros.
    for (std::size_t big = 0; big <= m; ++big) {
        std::vector<std::size_t> others;
        for (std::size_t i = 0; i <= m; ++i)
            if (i != big) others.push_back(i);
        auto getP = [&](std::int64_t L) -> const Region& { return cache.get(big, L); };
        enumerate_tuples(cache, others, c, 0, farey_triangle(), [&](const Region& y) {
            acc += tail_loop(getP, y, c, 4096).unweighted;
        });
    }

    mpq_class a = 2 * acc;
    a.canonicalize();
    return a;
}

McEstimate correlation_constant_mc(const std::vector<int>& h, std::uint64_t samples,
                                   std::uint64_t seed, CutoffPolicy policy) {
    if (samples < 10000)
        throw std::invalid_argument("correlation_constant_mc: samples >= 10^4 required");
    const std::int64_t c = cutoff_value(policy, h);
    const std::size_t m = h.size();
    const int hmax = *std::max_element(h.begin(), h.end());

    // Exact mass of the tuples with one index beyond the cutoff.
    double tail_mass = 0.0;
    {
        PullbackCache cache(h);
        for (std::size_t big = 0; big <= m; ++big) {
            std::vector<std::size_t> others;
            for (std::size_t i = 0; i <= m; ++i)
                if (i != big) others.push_back(i);
            auto getP = [&](std::int64_t L) -> const Region& { return cache.get(big, L); };
            Rational t(0);
            enumerate_tuples(cache, others, c, 0, farey_triangle(), [&](const Region& y) {
                t += tail_loop(getP, y, c, 4096).unweighted;
            });
            tail_mass += 2.0 * t.get_d();
        }
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    auto trunc_digit = [c](double x, double y) {
        const double k = std::floor((1.0 + x) / y);
        return std::min(k, static_cast<double>(c));
    };
    double sum = 0.0, sumsq = 0.0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        double x = uni(rng), y = uni(rng);
        if (x + y < 1.0) {
            x = 1.0 - x;
            y = 1.0 - y;
        }
        double prod = trunc_digit(x, y);
        double cx = x, cy = y;
        for (int step = 1; step <= hmax; ++step) {
            const double k = std::floor((1.0 + cx) / cy);
            const double ny = k * cy - cx;
            cx = cy;
            cy = ny;
            for (std::size_t j = 0; j < m; ++j)
                if (h[j] == step) prod *= trunc_digit(cx, cy);
        }
        sum += prod;
        sumsq += prod * prod;
    }
    const double n = static_cast<double>(samples);
    const double mean = sum / n;
    const double var = std::max(0.0, sumsq / n - mean * mean);
    McEstimate est;
    est.value = mean + tail_mass;
    est.stderror = std::sqrt(var / n);
    est.samples = samples;
    return est;
}

namespace {

mpz_class mpz_from_u128(unsigned __int128 v) {
    mpz_class hi(static_cast<std::uint64_t>(v >> 64));
    hi <<= 64;
    return hi + mpz_class(static_cast<std::uint64_t>(v));
}

mpz_class correlation_sum(const std::vector<int>& h, std::uint64_t Q, bool restricted,
                          const Fraction& t) {
    if (h.empty()) throw std::invalid_argument("empirical_correlation: empty offset list");
    for (int v : h)
        if (v < 1) throw std::invalid_argument("empirical_correlation: offsets must be >= 1");
    if (restricted && (t.num == 0 || t.num > t.den))
        throw std::invalid_argument("empirical_correlation: t must lie in (0, 1]");

    const std::size_t H = static_cast<std::size_t>(*std::max_element(h.begin(), h.end()));
    const std::size_t ring_size = H + 1;
    std::vector<std::uint64_t> ring(ring_size, 0);
    std::vector<std::uint8_t> in_range(ring_size, 1);
    std::vector<std::uint64_t> head;  // first H indices, replayed for the wraparound
    head.reserve(H);

    FareyStream stream(Q);
    FareyWindow w;
    unsigned __int128 acc = 0;
    mpz_class total = 0;
    std::uint64_t produced = 0;  // values fed into the ring
    std::uint64_t count = 0;     // N(Q), known once the stream ends
    bool stream_done = false;

    auto flush_needed = [&](unsigned __int128 v) {
        // Keep headroom: flush to the big integer before 2^126 overflows.
        if (v >> 120) {
            total += mpz_from_u128(v);
            return true;
        }
        return false;
    };

    while (true) {
        std::uint64_t nu;
        bool flag = true;
        if (!stream_done && stream.next(w)) {
            nu = index_of(w);
            if (restricted) {
                // gamma = cur <= t  <=>  num * t.den <= t.num * den
                flag = w.cur.num * t.den <= t.num * w.cur.den;
            }
            if (head.size() < H) head.push_back(nu);
            ++count;
        } else {
            stream_done = true;
            const std::uint64_t replay = produced - count;  // how many head values reused
            if (replay >= H) break;
            nu = head[replay % head.size()];
            flag = true;  // flags only matter for base positions i <= N
        }
        const std::size_t slot = produced % ring_size;
        ring[slot] = nu;
        in_range[slot] = flag ? 1 : 0;
        ++produced;
        if (produced >= ring_size) {
            const std::uint64_t base = produced - ring_size;  // 0-based position
            const std::size_t base_slot = produced % ring_size;
            if (!restricted || in_range[base_slot]) {
                unsigned __int128 prod = ring[base_slot];
                for (int offset : h) prod *= ring[(base + offset) % ring_size];
                acc += prod;
                if (flush_needed(acc)) acc = 0;
            }
        }
    }
    total += mpz_from_u128(acc);
    return total;
}

}  // namespace

mpz_class empirical_correlation(const std::vector<int>& h, std::uint64_t Q) {
    return correlation_sum(h, Q, false, Fraction{1, 1});
}

mpz_class empirical_correlation_sub(const std::vector<int>& h, std::uint64_t Q,
                                    const Fraction& t) {
    return correlation_sum(h, Q, true, t);
}

VisibleCountReport visible_count_check(const Region& region, std::uint64_t Q) {
    VisibleCountReport rep;
    if (region.empty() || Q == 0) return rep;
    // Integer bounding box of Q * region.
    Rational maxx = region.polys.front().v.front().x;
    Rational maxy = region.polys.front().v.front().y;
    for (const auto& p : region.polys)
        for (const auto& pt : p.v) {
            if (pt.x > maxx) maxx = pt.x;
            if (pt.y > maxy) maxy = pt.y;
        }
    const std::int64_t ax = floor_rational(region.min_x() * static_cast<long>(Q));
    const std::int64_t ay = floor_rational(region.min_y() * static_cast<long>(Q));
    const std::int64_t bx = -floor_rational(-(maxx * static_cast<long>(Q)));
    const std::int64_t by = -floor_rational(-(maxy * static_cast<long>(Q)));

    std::uint64_t count = 0;
    for (std::int64_t a = std::max<std::int64_t>(ax, 0); a <= bx; ++a) {
        for (std::int64_t b = std::max<std::int64_t>(ay, 0); b <= by; ++b) {
            if (std::gcd(a, b) != 1) continue;
            if (a + b == static_cast<std::int64_t>(Q)) continue;  // open diagonal x + y = 1
            const RationalPoint p{make_rat(a, static_cast<long>(Q)),
                                  make_rat(b, static_cast<long>(Q))};
            if (region_contains_closed(region, p)) ++count;
        }
    }
    rep.count = count;
    const double area = region.area().get_d();
    rep.prediction = 6.0 / (std::numbers::pi * std::numbers::pi) * area *
                     static_cast<double>(Q) * static_cast<double>(Q);
    rep.deviation = static_cast<double>(count) - rep.prediction;
    return rep;
}

}  // namespace fareyidx
