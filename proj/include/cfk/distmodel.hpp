#pragma once

#include <optional>

#include "cfk/integer.hpp"

namespace cfk {

/// P(k) = -log2(1 - 1/(k+1)^2), k >= 1.
double gk_pmf(const Int& k);
inline double gk_pmf(unsigned long k) { return gk_pmf(Int(k)); }

/// Limiting law of continued-fraction tails: log2(1+s) for s in [0,1].
double gk_cdf(double s);

/// Gauss-Kuzmin pmf restricted to k <= maxn and renormalized:
/// gk_pmf(k) / (1 - log2((2+maxn)/(1+maxn))), zero above maxn.
double trunc_pmf(const Int& k, const Int& maxn);
inline double trunc_pmf(unsigned long k, unsigned long maxn) {
    return trunc_pmf(Int(k), Int(maxn));
}

/// Partial sum sum_{j=1..k} gk_pmf(j) = 1 - log2((k+2)/(k+1)), closed form.
double gk_partial_sum(const Int& k);

/// Limit 2^GKT(2) * ... * maxn^GKT(maxn) of the geometric means of
/// coefficients drawn from the truncated model; KC(1) = 1. Monotonically
/// increasing in maxn with limit Khinchin's constant.
double kc_value(const Int& maxn);
inline double kc_value(unsigned long maxn) { return kc_value(Int(maxn)); }

/// Khinchin's constant via the KC sequence, doubling the truncation point
/// until one more doubling moves the value by less than `tolerance`.
/// Memoized per tolerance (the computation is pure).
double khinchin_constant(double tolerance);

/// Standard or truncated Gauss-Kuzmin model, the `Q` side of fit statistics.
class GkModel {
public:
    static GkModel standard() { return GkModel(std::nullopt); }
    static GkModel truncated(Int maxn);

    bool is_truncated() const { return maxn_.has_value(); }
    const Int& maxn() const { return *maxn_; }

    bool in_support(const Int& k) const;
    double pmf(const Int& k) const;
    /// log2 of pmf, stable for arbitrarily large k (never underflows to
    /// -inf inside the support).
    double log2_pmf(const Int& k) const;
    /// Probability of lo <= k <= hi (hi absent = tail mass from lo up).
    double mass(const Int& lo, const std::optional<Int>& hi) const;

    std::string name() const { return maxn_ ? "gk-trunc(" + maxn_->get_str() + ")" : "gk"; }

private:
    explicit GkModel(std::optional<Int> maxn) : maxn_(std::move(maxn)) {}
    std::optional<Int> maxn_;
};

} // namespace cfk
