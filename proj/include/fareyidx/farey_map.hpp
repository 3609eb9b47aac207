#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fareyidx/farey.hpp"
#include "fareyidx/rational_geometry.hpp"

namespace fareyidx {

// Raised when a digit-cell enumeration reaches its cap without the exact
// strip test certifying that no further cell can contribute.
struct CutoffError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The open triangle {0 < x <= 1, 0 < y <= 1, x + y > 1} that parameterizes
// consecutive Farey denominator pairs (q_{i-1}/Q, q_i/Q).
Region farey_triangle();

// floor((1 + x)/y); equals the Farey index along denominator orbits.
std::int64_t digit(const RationalPoint& p);

// The area-preserving shift (x,y) -> (y, digit*y - x) and its inverse.
RationalPoint t_map(const RationalPoint& p);
RationalPoint t_inv(const RationalPoint& p);

// Region with digit >= l: the whole triangle for l = 1, a single triangle
// with vertices (1,0), (1,2/l), ((l-1)/(l+1), 2/(l+1)) for l >= 2.
Region min_digit_region(std::int64_t l);

// Region with digit exactly k (a quadrilateral for k >= 2, a triangle for k = 1).
Region digit_cell(std::int64_t k);

inline constexpr std::int64_t kPreimageCellCap = 1024;

// One backward step of the shift applied to a region. Cell enumeration stops
// once 2/k <= min x-coordinate of the region, which certifies that the images
// of all remaining cells miss it; failing that by the cap raises CutoffError.
Region preimage_step(const Region& r, std::int64_t cell_cap = kPreimageCellCap);

// T^{-h} of the digit >= l region, exact.
Region preimage_min_digit(std::int64_t l, int h, std::int64_t cell_cap = kPreimageCellCap);

struct RegionTails {
    Rational weighted;    // sum_{L > c} L * area(cell_L intersect R)
    Rational unweighted;  // sum_{L > c} area({digit >= L} intersect R)
};

// Exact tail sums by telescoping areas of {digit >= L} intersect R. The loop
// ends when the intersection empties out or swallows a whole digit >= L
// region (then the remaining sum has a closed form); hitting level_cap
// without either raises CutoffError.
RegionTails region_tail(const Region& r, std::int64_t c, std::int64_t level_cap = 4096);

enum class CutoffPolicy {
    pow2,    // c_h = 2^{h+1}
    linear,  // c_h = 4h + 2
};

std::int64_t cutoff_value(CutoffPolicy policy, const std::vector<int>& h);

// The exact rational constant A(h_1,...,h_m) with S_h(Q) ~ A * N(Q):
// twice the sum over index tuples of areas of digit-region intersections,
// finite part up to the cutoff plus exactly telescoped tails. The value is
// policy independent; computing it under both policies is a self-check.
mpq_class correlation_constant(const std::vector<int>& h,
                               CutoffPolicy policy = CutoffPolicy::pow2);

struct McEstimate {
    double value = 0.0;
    double stderror = 0.0;
    std::uint64_t samples = 0;
};

// Monte-Carlo evaluation of the same constant: the digit product integral is
// sampled with digits truncated at the cutoff, and the truncated tail mass is
// restored from the exact telescoped tails.
McEstimate correlation_constant_mc(const std::vector<int>& h, std::uint64_t samples,
                                   std::uint64_t seed = 1,
                                   CutoffPolicy policy = CutoffPolicy::pow2);

// S_{h_1,...,h_m}(Q): sum over F_Q of nu(gamma_i) * prod_j nu(gamma_{i+h_j})
// with periodic index extension; restricted to gamma_i <= t when t is given.
mpz_class empirical_correlation(const std::vector<int>& h, std::uint64_t Q);
mpz_class empirical_correlation_sub(const std::vector<int>& h, std::uint64_t Q, const Fraction& t);

struct VisibleCountReport {
    std::uint64_t count = 0;
    double prediction = 0.0;
    double deviation = 0.0;
};

// Exact count of visible lattice points in Q * region against the
// (6/pi^2) * area prediction. Membership is closed except on the diagonal
// x + y = 1, matching the half-open triangle.
VisibleCountReport visible_count_check(const Region& region, std::uint64_t Q);

}  // namespace fareyidx
