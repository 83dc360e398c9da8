#pragma once

#include <string>
#include <vector>

#include "cfk/integer.hpp"

namespace cfk {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// coeff(i) is the coefficient of x^i; the leading coefficient is nonzero.
class IntegerPolynomial {
public:
    /// Throws invalid-input for the zero polynomial. Trailing zero
    /// coefficients are stripped.
    explicit IntegerPolynomial(std::vector<Int> coeffs);

    static IntegerPolynomial from_ints(std::initializer_list<long> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const { return c_.back(); }

    Int value_at(const Int& x) const;
    int sign_at(const Int& x) const;
    /// Sign of P(p/q) via the homogeneous form sum c_i p^i q^(d-i).
    int sign_at(const Rat& x) const;

    IntegerPolynomial derivative() const;

    /// gcd of all coefficients, positive.
    Int content() const;
    /// content-free copy with positive leading coefficient.
    IntegerPolynomial normalized() const;

    /// P(x + m), computed by repeated synthetic division (exact).
    IntegerPolynomial taylor_shift(const Int& m) const;
    /// x^degree * P(1/x). Degree drops if the constant term is zero.
    IntegerPolynomial reversed() const;

    /// Number of sign variations in the coefficient sequence (Descartes).
    int sign_variations() const;

    bool operator==(const IntegerPolynomial& o) const { return c_ == o.c_; }

    /// Exact quotient; throws invalid-input if the division is not exact.
    IntegerPolynomial divide_exact(const IntegerPolynomial& divisor) const;

    /// Primitive gcd with positive leading coefficient.
    static IntegerPolynomial gcd(const IntegerPolynomial& a, const IntegerPolynomial& b);

    bool is_squarefree() const;

    /// Render like "x^3 - x - 2" (for ids and error messages).
    std::string to_string() const;

private:
    std::vector<Int> c_;
};

/// poly / gcd(poly, poly'), content-normalized with positive leading
/// coefficient. The result divides poly and is squarefree.
IntegerPolynomial squarefree_part(const IntegerPolynomial& poly);

/// Exact count of distinct real roots of a squarefree polynomial in (lo, hi],
/// by Sturm's theorem. Requires sign_at(lo) != 0.
int sturm_root_count(const IntegerPolynomial& poly, const Rat& lo, const Rat& hi);

} // namespace cfk
