#include "cfk/cf.hpp"

namespace cfk {

const Int& CFExpansion::coeff(std::size_t n) const {
    if (n < 1 || n > coeffs.size())
        fail(Errc::insufficient_expansion,
             "coefficient index " + std::to_string(n) + " outside certified length " +
                 std::to_string(coeffs.size()));
    return coeffs[n - 1];
}

namespace {

// +-x^deg P(m + 1/x), content-normalized with positive leading coefficient.
// The degree drops when P(m) == 0 (a conjugate rational root at m leaves the
// scene through the pole of the substitution).
IntegerPolynomial lagrange_transform(const IntegerPolynomial& p, const Int& m) {
    return p.taylor_shift(m).reversed().normalized();
}

} // namespace

LagrangeExpander::LagrangeExpander(const AlgebraicNumber& num)
    : poly_(num.poly()), interval_(num.interval()), cf_{Int(0), {}, true} {
    sign_hi_ = poly_.sign_at(interval_->hi);
    if (sign_hi_ == 0) fail(Errc::certification_failure, "isolating interval endpoint is a root");
}

void LagrangeExpander::step() {
    const Int m = detail::floor_root(poly_, interval_ ? &*interval_ : nullptr, sign_hi_);

    const int sign_at_m = poly_.sign_at(m);
    if (sign_at_m == 0) {
        if (!interval_)
            fail(Errc::certification_failure, "positive rational root in certified mode");
        if (Rat(m) > interval_->lo)
            fail(Errc::rational_number,
                 "expansion terminated: value is rational with last coefficient " + m.get_str());
        // else: conjugate rational root at m, outside the isolating interval;
        // the transform below just drops one degree.
    }

    IntegerPolynomial next = lagrange_transform(poly_, m);
    if (next.degree() < 2)
        fail(Errc::certification_failure, "transform degenerated below degree 2");

    if (next.sign_variations() == 1) {
        // The next complete quotient is the unique positive root: no interval
        // needs to be carried.
        interval_.reset();
    } else {
        if (!interval_) {
            // Re-synthesize an isolating bracket (m, m+1) from the floor just
            // computed; both endpoints are certified non-roots here.
            int s_lo = sign_at_m;
            int s_hi = poly_.sign_at(Int(m + 1));
            if (s_lo == 0 || s_hi == 0 || s_lo == s_hi)
                fail(Errc::certification_failure, "floor bracket lost the root");
            interval_ = RatInterval(Rat(m), Rat(m + 1));
            sign_hi_ = s_hi;
        }
        detail::raise_above(poly_, *interval_, sign_hi_, m);
        // x -> 1/(x - m) is a decreasing bijection of (m, inf), so the
        // endpoints swap and isolation is preserved exactly.
        Rat new_lo = Rat(1) / (interval_->hi - Rat(m));
        Rat new_hi = Rat(1) / (interval_->lo - Rat(m));
        interval_ = RatInterval(std::move(new_lo), std::move(new_hi));
        sign_hi_ = next.sign_at(interval_->hi);
        if (sign_hi_ == 0)
            fail(Errc::certification_failure, "transformed interval endpoint is a root");
    }

    poly_ = std::move(next);

    if (!b0_done_) {
        cf_.b0 = m;
        b0_done_ = true;
    } else {
        if (sgn(m) <= 0)
            fail(Errc::certification_failure, "partial quotient below 1");
        cf_.coeffs.push_back(m);
    }
}

void LagrangeExpander::ensure(std::size_t count) {
    if (!b0_done_) step();
    while (cf_.coeffs.size() < count) step();
}

CFExpansion LagrangeExpander::take(std::size_t terms) {
    if (terms < 1) fail(Errc::invalid_input, "terms must be >= 1");
    ensure(terms - 1);
    CFExpansion out;
    out.b0 = cf_.b0;
    out.coeffs.assign(cf_.coeffs.begin(), cf_.coeffs.begin() + static_cast<long>(terms - 1));
    return out;
}

CFExpansion cf_expand(const AlgebraicNumber& num, std::size_t terms) {
    LagrangeExpander exp(num);
    return exp.take(terms);
}

CFExpansion cf_from_interval(const Rat& lo_in, const Rat& hi_in) {
    if (!(lo_in < hi_in)) fail(Errc::invalid_input, "interval must satisfy lo < hi");
    Rat lo = lo_in, hi = hi_in;
    CFExpansion cf{Int(0), {}, true};
    bool first = true;
    for (;;) {
        Int m = rat_floor(lo);
        if (m != rat_floor(hi)) {
            if (first) {
                cf.b0 = m; // lower endpoint's floor, but not shared
                cf.b0_certified = false;
            }
            return cf;
        }
        if (first) {
            cf.b0 = m;
            first = false;
        } else {
            cf.coeffs.push_back(m);
        }
        if (lo == Rat(m)) return cf; // the endpoint value terminates here
        Rat new_lo = Rat(1) / (hi - Rat(m));
        Rat new_hi = Rat(1) / (lo - Rat(m));
        lo = std::move(new_lo);
        hi = std::move(new_hi);
    }
}

namespace detail {

ConvergentTable convergent_table(const CFExpansion& cf, std::size_t upto) {
    if (upto > cf.certified_len())
        fail(Errc::insufficient_expansion, "convergents need " + std::to_string(upto) +
                                               " coefficients, have " +
                                               std::to_string(cf.certified_len()));
    ConvergentTable t;
    t.A.resize(upto + 1);
    t.B.resize(upto + 1);
    Int Ap = 1, Bp = 0; // A(-1), B(-1)
    t.A[0] = cf.b0;
    t.B[0] = 1;
    for (std::size_t n = 1; n <= upto; ++n) {
        const Int& b = cf.coeffs[n - 1];
        t.A[n] = b * t.A[n - 1] + Ap;
        t.B[n] = b * t.B[n - 1] + Bp;
        Ap = t.A[n - 1];
        Bp = t.B[n - 1];
    }
    return t;
}

ErrorEnclosure enclosure_at(const CFExpansion& cf_in, std::size_t n, const Int& Bn, const Int& Bn1,
                            std::size_t depth, LagrangeExpander* expander) {
    const CFExpansion* cf = &cf_in;
    if (depth < 2) depth = 2;
    for (;;) {
        // tail convergents of t = [b_{n+1}; b_{n+2}, ...]
        std::size_t want = n + depth;
        if (cf->certified_len() < want) {
            if (expander) {
                expander->ensure(want);
                cf = &expander->current();
            }
            if (cf->certified_len() < n + 2)
                fail(Errc::insufficient_expansion,
                     "error enclosure at n=" + std::to_string(n) + " needs tail coefficients");
        }
        std::size_t avail = std::min(want, cf->certified_len());
        Int p_prev = 1, q_prev = 0;
        Int p = cf->coeffs[n], q = 1; // b_{n+1}
        for (std::size_t i = n + 1; i < avail; ++i) {
            Int np = cf->coeffs[i] * p + p_prev;
            Int nq = cf->coeffs[i] * q + q_prev;
            p_prev = std::move(p);
            q_prev = std::move(q);
            p = std::move(np);
            q = std::move(nq);
        }
        // t lies strictly between the last two convergents of its own CF
        Rat c1(p_prev, q_prev), c2(p, q);
        c1.canonicalize();
        c2.canonicalize();
        Rat t_lo = std::min(c1, c2);
        Rat t_hi = std::max(c1, c2);

        Rat rBn(Bn), rBn1(Bn1);
        ErrorEnclosure enc{Rat(1) / (rBn * (t_hi * rBn + rBn1)),
                           Rat(1) / (rBn * (t_lo * rBn + rBn1))};
        Rat spread = enc.hi - enc.lo;
        mpq_mul_2exp(spread.get_mpq_t(), spread.get_mpq_t(), 40);
        if (spread <= enc.lo) return enc;
        if (avail == cf->certified_len() && !expander && avail < want) {
            // cannot deepen further; report the best we can prove
            fail(Errc::insufficient_expansion,
                 "enclosure at n=" + std::to_string(n) + " cannot reach target width with " +
                     std::to_string(avail) + " coefficients");
        }
        depth *= 2;
    }
}

} // namespace detail

ConvergentSequence convergents(const CFExpansion& cf, std::size_t upto) {
    detail::ConvergentTable t = detail::convergent_table(cf, upto);
    ConvergentSequence seq;
    seq.pairs.reserve(upto + 1);
    for (std::size_t i = 0; i <= upto; ++i) seq.pairs.emplace_back(t.A[i], t.B[i]);
    return seq;
}

ErrorEnclosure approximation_error(const AlgebraicNumber& num, const CFExpansion& cf,
                                   std::size_t n, std::size_t depth) {
    if (cf.certified_len() >= n + 2) {
        auto t = detail::convergent_table(cf, n);
        Int Bn1 = n == 0 ? Int(0) : t.B[n - 1];
        try {
            return detail::enclosure_at(cf, n, t.B[n], Bn1, depth, nullptr);
        } catch (const Error& e) {
            if (e.code() != Errc::insufficient_expansion) throw;
        }
    }
    // certified tail too short for the target width: expand afresh on demand
    LagrangeExpander exp(num);
    exp.ensure(n + std::max<std::size_t>(depth, 2));
    auto t = detail::convergent_table(exp.current(), n);
    return detail::enclosure_at(exp.current(), n, t.B[n], n == 0 ? Int(0) : t.B[n - 1], depth,
                                &exp);
}

} // namespace cfk
