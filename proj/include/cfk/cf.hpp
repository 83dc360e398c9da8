#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cfk/algebraic.hpp"

namespace cfk {

/// Finite certified prefix of a regular continued fraction
/// [b0; b1, b2, ...]. Every coefficient with index >= 1 is >= 1.
struct CFExpansion {
    Int b0;
    std::vector<Int> coeffs; // b1 ... b_N, all exact
    /// False only for interval-certified output whose endpoints straddle an
    /// integer before the first coefficient (not even b0 is shared).
    bool b0_certified = true;

    std::size_t certified_len() const { return coeffs.size(); }
    /// b_n for n >= 1.
    const Int& coeff(std::size_t n) const;
};

/// Convergent pairs (A(n), B(n)) from the standard recurrence
/// A(n) = b_n A(n-1) + A(n-2), B(n) = b_n B(n-1) + B(n-2),
/// with A(-1)=1, A(0)=b0, B(-1)=0, B(0)=1.
struct ConvergentSequence {
    std::vector<std::pair<Int, Int>> pairs; // index n = 0 ... upto
};

/// Exact rational enclosure 0 < lo <= |a - A(n)/B(n)| <= hi.
struct ErrorEnclosure {
    Rat lo;
    Rat hi;
};

/// Incremental exact expansion of an algebraic number's regular continued
/// fraction by the Lagrange polynomial-transform iteration: extract the floor
/// m of the current root by integer sign probes, then replace P(x) by the
/// content-normalized +-x^deg P(m + 1/x) and continue with the next complete
/// quotient. All arithmetic is integer/rational; emitted coefficients are
/// exact with no certification gap.
///
/// The isolating interval is carried (exactly transformed) only while the
/// working polynomial has more than one coefficient sign variation; once the
/// variation count reaches one, the complete quotient is its unique positive
/// root and probing needs no interval (it is re-synthesized from the floor
/// bracket in the rare case the count rises again).
class LagrangeExpander {
public:
    explicit LagrangeExpander(const AlgebraicNumber& num);

    /// Extend until at least `count` coefficients beyond b0 are available.
    /// Throws rational-number if the expansion terminates (rational root).
    void ensure(std::size_t count);

    /// First `terms` coefficients including b0 (so terms-1 partial quotients).
    CFExpansion take(std::size_t terms);

    const CFExpansion& current() const { return cf_; }

private:
    void step();

    IntegerPolynomial poly_;
    std::optional<RatInterval> interval_;
    int sign_hi_ = 0; // sign of poly_ at interval_->hi while interval_ is held
    CFExpansion cf_;
    bool b0_done_ = false;
};

/// First `terms` coefficients (b0 plus terms-1 partial quotients) of the
/// regular continued fraction of `num`.
CFExpansion cf_expand(const AlgebraicNumber& num, std::size_t terms);

/// Coefficients of the regular continued fraction provably shared by every
/// real in the closed interval [lo, hi]. Stops at the first step where the
/// two endpoints disagree on the floor, or where the lower endpoint's
/// expansion terminates. certified_len 0 (or b0_certified false) is a valid
/// outcome, not an error.
CFExpansion cf_from_interval(const Rat& lo, const Rat& hi);

/// Convergents for n = 0..upto. Throws insufficient-expansion if
/// upto > certified_len.
ConvergentSequence convergents(const CFExpansion& cf, std::size_t upto);

/// Enclosure of |a - A(n)/B(n)| from the exact identity
/// |a - A(n)/B(n)| = 1/(B(n) (t B(n) + B(n-1))) with t the (n+1)st complete
/// quotient, bounded between consecutive convergents of the coefficient tail.
/// The tail depth starts at `depth` coefficients and doubles until the
/// enclosure is tight: hi/lo < 1 + 2^-40. Missing tail coefficients are
/// expanded on demand from `num`.
ErrorEnclosure approximation_error(const AlgebraicNumber& num, const CFExpansion& cf,
                                   std::size_t n, std::size_t depth = 10);

namespace detail {

/// A(n-1),B(n-1),A(n),B(n) rolling recurrence table for n = 0..upto.
struct ConvergentTable {
    std::vector<Int> A; // A[i] = A(i)
    std::vector<Int> B;
};
ConvergentTable convergent_table(const CFExpansion& cf, std::size_t upto);

/// Enclosure from precomputed B(n), B(n-1); reads the tail out of `cf` and
/// optionally extends through `expander`. Throws insufficient-expansion when
/// the tail cannot be deepened far enough.
ErrorEnclosure enclosure_at(const CFExpansion& cf, std::size_t n, const Int& Bn, const Int& Bn1,
                            std::size_t depth, LagrangeExpander* expander);

} // namespace detail

} // namespace cfk
