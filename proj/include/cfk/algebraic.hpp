#pragma once

#include <optional>

#include "cfk/polynomial.hpp"

namespace cfk {

/// An irrational real algebraic number: a squarefree defining polynomial plus
/// an isolating rational interval with a certified sign change. Immutable.
class AlgebraicNumber {
public:
    const IntegerPolynomial& poly() const { return poly_; }
    const RatInterval& interval() const { return interval_; }
    int degree() const { return poly_.degree(); }

    /// Certify `hint` down to an isolating interval for a unique root.
    /// Throws: no-root, ambiguous-root, rational-number, invalid-input.
    static AlgebraicNumber isolate(const IntegerPolynomial& poly, const RatInterval& hint);

private:
    AlgebraicNumber(IntegerPolynomial poly, RatInterval interval)
        : poly_(std::move(poly)), interval_(std::move(interval)) {}

    IntegerPolynomial poly_;
    RatInterval interval_;
};

inline AlgebraicNumber isolate_root(const IntegerPolynomial& poly, const RatInterval& hint) {
    return AlgebraicNumber::isolate(poly, hint);
}

/// The unique integer m with m <= root < m+1, by exact sign evaluation only
/// (galloping search from the interval's lower end, then binary search).
Int floor_of_root(const AlgebraicNumber& num);

/// Interval [p/10^digits, (p+1)/10^digits] containing the root, computed by
/// exact-rational bisection of the isolating interval. Independent of the
/// polynomial-transform expansion path; used as an oracle against it.
RatInterval decimal_oracle(const AlgebraicNumber& num, unsigned long digits);

namespace detail {

/// Floor of the unique root of `poly` described either by an isolating
/// interval (with cached endpoint sign) or, when `ival` is null, as the
/// unique positive root of a polynomial with exactly one coefficient sign
/// variation. Throws rational-number if the root is hit exactly.
Int floor_root(const IntegerPolynomial& poly, const RatInterval* ival, int sign_hi);

/// Bisect until the lower endpoint lies strictly above m (keeps isolation;
/// the endpoints stay non-roots).
void raise_above(const IntegerPolynomial& poly, RatInterval& ival, int& sign_hi, const Int& m);

} // namespace detail

} // namespace cfk
