#include "fareyidx/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fareyidx {

namespace {

// Exact division of integer polynomials, quotient only. Caller guarantees
// divisibility (x^n - 1 is a product of cyclotomic polynomials).
std::vector<mpz_class> poly_div_exact(std::vector<mpz_class> num,
                                      const std::vector<mpz_class>& den) {
    const std::size_t dn = num.size() - 1;
    const std::size_t dd = den.size() - 1;
    std::vector<mpz_class> quot(dn - dd + 1, 0);
    for (std::size_t i = dn + 1; i-- > dd;) {
        mpz_class c = num[i] / den[dd];
        quot[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    return quot;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n >= 1 required");
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<mpz_class> poly(static_cast<std::size_t>(n) + 1, 0);
    poly.front() = -1;
    poly.back() = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        poly = poly_div_exact(std::move(poly), cyclotomic_polynomial(d));
    }
    return poly;
}

CycElement& CycElement::operator+=(const CycElement& o) {
    if (o.order_ != order_) throw std::invalid_argument("CycElement: mixed orders");
    for (int i = 0; i < order_; ++i) coeff_[i] += o.coeff_[i];
    return *this;
}

CycElement& CycElement::operator-=(const CycElement& o) {
    if (o.order_ != order_) throw std::invalid_argument("CycElement: mixed orders");
    for (int i = 0; i < order_; ++i) coeff_[i] -= o.coeff_[i];
    return *this;
}

CycElement CycElement::rotated(int e) const {
    CycElement out(order_);
    e %= order_;
    if (e < 0) e += order_;
    for (int i = 0; i < order_; ++i) out.coeff_[(i + e) % order_] = coeff_[i];
    return out;
}

bool CycElement::is_zero() const {
    // Remainder of the coefficient polynomial modulo Phi_L must vanish.
    const std::vector<mpz_class> phi = cyclotomic_polynomial(order_);
    std::vector<mpz_class> rem = coeff_;
    const std::size_t dd = phi.size() - 1;
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i] == 0) continue;
        mpz_class c = rem[i];  // Phi_L is monic
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * phi[j];
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    return true;
}

bool CycElement::operator==(const CycElement& o) const {
    CycElement diff = *this;
    diff -= o;
    return diff.is_zero();
}

std::complex<double> CycElement::to_complex() const {
    std::complex<double> acc{0.0, 0.0};
    for (int i = 0; i < order_; ++i) {
        if (coeff_[i] == 0) continue;
        const double ang = 2.0 * std::numbers::pi * i / order_;
        acc += coeff_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

}  // namespace fareyidx
