#pragma once

#include <vector>

#include "prym/rat.hpp"

namespace prym {

// Dense integer polynomial; coefficient index = power of s. Normalized so
// the leading coefficient is nonzero (empty vector = zero polynomial).
struct IntPolynomial {
    std::vector<Int> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> c) : coeffs(std::move(c)) { normalize(); }
    static IntPolynomial constant(const Int& c) { return IntPolynomial({c}); }

    void normalize();
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero
    Int coeff(int i) const;

    bool operator==(const IntPolynomial& o) const { return coeffs == o.coeffs; }
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_neg(const IntPolynomial& a);
IntPolynomial poly_pow(const IntPolynomial& a, int n);

// Exact division; throws if the remainder is nonzero.
IntPolynomial poly_divexact(const IntPolynomial& a, const IntPolynomial& b);

// Coefficients of p(1 + t) (Taylor shift).
IntPolynomial poly_shift_one(const IntPolynomial& p);

// First nonzero Taylor coefficient of p at s = 1.
struct VanishingInfo {
    int order = 0;
    Int leading;
};

VanishingInfo vanishing_order_and_leading(const IntPolynomial& p);

// Truncated power-series inverse of p (requires p(0) = +-1), degrees 0..cap.
std::vector<Int> poly_series_inverse(const IntPolynomial& p, int cap);

}  // namespace prym
