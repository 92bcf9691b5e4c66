#include "prym/polynomial.hpp"

#include <stdexcept>

namespace prym {

void IntPolynomial::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Int IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs.size())) return 0;
    return coeffs[i];
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_neg(const IntPolynomial& a) {
    std::vector<Int> c = a.coeffs;
    for (Int& x : c) x = -x;
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) {
    return poly_add(a, poly_neg(b));
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Int> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_pow(const IntPolynomial& a, int n) {
    IntPolynomial r = IntPolynomial::constant(1);
    for (int i = 0; i < n; ++i) r = poly_mul(r, a);
    return r;
}

IntPolynomial poly_divexact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (a.is_zero()) return IntPolynomial();
    std::vector<Int> rem = a.coeffs;
    int da = a.degree(), db = b.degree();
    if (da < db) throw std::invalid_argument("inexact polynomial division");
    std::vector<Int> q(da - db + 1, 0);
    for (int i = da - db; i >= 0; --i) {
        Int num = rem[i + db];
        if (num % b.coeffs[db] != 0) throw std::invalid_argument("inexact polynomial division");
        Int f = num / b.coeffs[db];
        q[i] = f;
        for (int j = 0; j <= db; ++j) rem[i + j] -= f * b.coeffs[j];
    }
    for (const Int& r : rem)
        if (r != 0) throw std::invalid_argument("inexact polynomial division");
    return IntPolynomial(std::move(q));
}

IntPolynomial poly_shift_one(const IntPolynomial& p) {
    // Horner evaluation at (1 + t).
    IntPolynomial res;
    IntPolynomial x(std::vector<Int>{1, 1});
    for (int i = p.degree(); i >= 0; --i) {
        res = poly_mul(res, x);
        res = poly_add(res, IntPolynomial::constant(p.coeffs[i]));
    }
    return res;
}

VanishingInfo vanishing_order_and_leading(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no vanishing order");
    IntPolynomial q = poly_shift_one(p);
    VanishingInfo info;
    for (int i = 0; i <= q.degree(); ++i) {
        if (q.coeffs[i] != 0) {
            info.order = i;
            info.leading = q.coeffs[i];
            return info;
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<Int> poly_series_inverse(const IntPolynomial& p, int cap) {
    Int c0 = p.coeff(0);
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument("series inverse needs unit constant term");
    std::vector<Int> inv(cap + 1, 0);
    inv[0] = c0;  // 1/c0 = c0 for units
    for (int k = 1; k <= cap; ++k) {
        Int s = 0;
        for (int j = 1; j <= k; ++j) s += p.coeff(j) * inv[k - j];
        inv[k] = -s * c0;
    }
    return inv;
}

}  // namespace prym
