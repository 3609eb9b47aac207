#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <vector>

namespace fareyidx {

// Integer coefficients of the n-th cyclotomic polynomial, ascending degree.
std::vector<mpz_class> cyclotomic_polynomial(int n);

// An element of Z[zeta_L] held as an integer combination of zeta_L^0..zeta_L^{L-1}.
// Sums and root-of-unity shifts stay in this group-ring form; equality and the
// zero test reduce modulo the L-th cyclotomic polynomial, so they are exact.
class CycElement {
public:
    explicit CycElement(int order) : order_(order), coeff_(order, 0) {}

    int order() const { return order_; }

    // += w * zeta_L^e
    void add_term(int e, const mpz_class& w) {
        e %= order_;
        if (e < 0) e += order_;
        coeff_[static_cast<std::size_t>(e)] += w;
    }

    CycElement& operator+=(const CycElement& o);
    CycElement& operator-=(const CycElement& o);

    // Multiplication by zeta_L^e (a cyclic shift).
    CycElement rotated(int e) const;

    bool is_zero() const;
    bool operator==(const CycElement& o) const;

    std::complex<double> to_complex() const;

    const std::vector<mpz_class>& raw() const { return coeff_; }

private:
    int order_;
    std::vector<mpz_class> coeff_;
};

}  // namespace fareyidx
