#include "cfk/algebraic.hpp"

namespace cfk {

AlgebraicNumber AlgebraicNumber::isolate(const IntegerPolynomial& poly, const RatInterval& hint) {
    if (!(hint.lo < hint.hi)) fail(Errc::invalid_input, "isolation hint must satisfy lo < hi");
    IntegerPolynomial p = poly.normalized();
    if (p.degree() < 2)
        fail(Errc::rational_number, "degree < 2: root is rational (" + p.to_string() + ")");
    if (!p.is_squarefree())
        fail(Errc::invalid_input, "polynomial is not squarefree: " + p.to_string());
    int s_lo = p.sign_at(hint.lo);
    int s_hi = p.sign_at(hint.hi);
    if (s_lo == 0 || s_hi == 0)
        fail(Errc::rational_number, "polynomial vanishes at a hint endpoint");
    int count = sturm_root_count(p, hint.lo, hint.hi);
    if (count == 0) fail(Errc::no_root, "no root of " + p.to_string() + " in the hint interval");
    if (count > 1)
        fail(Errc::ambiguous_root, std::to_string(count) + " roots of " + p.to_string() +
                                       " in the hint interval");
    if (s_lo == s_hi)
        fail(Errc::certification_failure, "single root without endpoint sign change");
    return AlgebraicNumber(std::move(p), hint);
}

namespace detail {

namespace {

// Exact predicate "root < c" for integer probes.
// Interval mode evaluates signs only strictly inside the isolating interval,
// where the unique root is the only possible zero.
struct RootProbe {
    const IntegerPolynomial& poly;
    const RatInterval* ival;
    int sign_hi; // sign at ival->hi when ival, else sign of the leading coeff

    bool root_less_than(const Int& c) const {
        if (ival) {
            Rat rc(c);
            if (rc <= ival->lo) return false;
            if (rc >= ival->hi) return true;
            int s = poly.sign_at(c);
            if (s == 0)
                fail(Errc::rational_number,
                     "root is the integer " + c.get_str() + " (rational number)");
            return s == sign_hi;
        }
        if (sgn(c) <= 0) return false;
        int s = poly.sign_at(c);
        if (s == 0)
            fail(Errc::certification_failure,
                 "unexpected rational root at " + c.get_str() + " in certified mode");
        return s == sgn(poly.leading());
    }
};

} // namespace

Int floor_root(const IntegerPolynomial& poly, const RatInterval* ival, int sign_hi) {
    RootProbe probe{poly, ival, ival ? sign_hi : sgn(poly.leading())};
    // root >= start always; gallop up to the first probe past the root.
    Int below = ival ? rat_floor(ival->lo) : Int(1);
    Int step = 1;
    Int above = below + 1;
    while (!probe.root_less_than(above)) {
        below = above;
        above = below + step;
        step *= 2;
    }
    while (above - below > 1) {
        Int mid = (above + below) / 2;
        if (probe.root_less_than(mid))
            above = mid;
        else
            below = mid;
    }
    return below;
}

void raise_above(const IntegerPolynomial& poly, RatInterval& ival, int& sign_hi, const Int& m) {
    Rat mq(m);
    while (ival.lo <= mq) {
        Rat mid = (ival.lo + ival.hi) / 2;
        int s = poly.sign_at(mid);
        if (s == 0)
            fail(Errc::rational_number, "root is the rational midpoint (rational number)");
        if (s == sign_hi)
            ival.hi = mid;
        else
            ival.lo = mid;
    }
}

} // namespace detail

Int floor_of_root(const AlgebraicNumber& num) {
    const RatInterval& iv = num.interval();
    int sign_hi = num.poly().sign_at(iv.hi);
    Int m = detail::floor_root(num.poly(), &iv, sign_hi);
    // root == m is possible only with m strictly inside the interval
    if (Rat(m) > iv.lo && num.poly().sign_at(m) == 0)
        fail(Errc::rational_number, "root is the integer " + m.get_str());
    return m;
}

RatInterval decimal_oracle(const AlgebraicNumber& num, unsigned long digits) {
    if (digits < 1) fail(Errc::invalid_input, "digits must be >= 1");
    const Int scale = pow10_int(digits);
    Rat lo = num.interval().lo;
    Rat hi = num.interval().hi;
    int sign_hi = num.poly().sign_at(hi);
    auto grid_floor = [&](const Rat& x) { return rat_floor(x * Rat(scale)); };
    for (;;) {
        if ((hi - lo) * Rat(scale) <= 1) {
            Int p = grid_floor(lo);
            if (p == grid_floor(hi)) {
                Rat a(p, scale), b(p + 1, scale);
                a.canonicalize();
                b.canonicalize();
                return {a, b};
            }
        }
        Rat mid = (lo + hi) / 2;
        int s = num.poly().sign_at(mid);
        if (s == 0) fail(Errc::rational_number, "root is rational");
        if (s == sign_hi)
            hi = mid;
        else
            lo = mid;
    }
}

} // namespace cfk
