#include "cfk/distmodel.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace cfk {

namespace {

// 1/(k+1)^2 as a double; 0 when it underflows (k astronomically large).
double inv_sq(const Int& k) {
    double kd = mpz_get_d(k.get_mpz_t());
    if (kd > 1e150) return 0.0;
    double k1 = kd + 1.0;
    return 1.0 / (k1 * k1);
}

} // namespace

double gk_pmf(const Int& k) {
    if (sgn(k) <= 0) fail(Errc::invalid_input, "gk_pmf requires k >= 1");
    double x = inv_sq(k);
    if (x > 0.0) return -std::log1p(-x) / M_LN2;
    // far tail: -log2(1-x) ~ x/ln 2 with x = 1/(k+1)^2, via logs
    return std::exp2(-2.0 * log2_int(k + 1) - std::log2(M_LN2));
}

double gk_cdf(double s) {
    if (!(s >= 0.0 && s <= 1.0)) fail(Errc::invalid_input, "gk_cdf requires s in [0,1]");
    return std::log1p(s) / M_LN2;
}

double gk_partial_sum(const Int& k) {
    if (sgn(k) < 0) fail(Errc::invalid_input, "partial sum index must be >= 0");
    if (sgn(k) == 0) return 0.0;
    double kd = mpz_get_d(k.get_mpz_t());
    return 1.0 - std::log1p(1.0 / (kd + 1.0)) / M_LN2;
}

double trunc_pmf(const Int& k, const Int& maxn) {
    if (sgn(k) <= 0 || sgn(maxn) <= 0)
        fail(Errc::invalid_input, "trunc_pmf requires k >= 1 and maxn >= 1");
    if (k > maxn) return 0.0;
    return gk_pmf(k) / gk_partial_sum(maxn);
}

double kc_value(const Int& maxn) {
    if (sgn(maxn) <= 0) fail(Errc::invalid_input, "kc_value requires maxn >= 1");
    if (maxn == 1) return 1.0;
    if (!maxn.fits_ulong_p()) fail(Errc::invalid_input, "kc_value truncation point too large");
    unsigned long m = maxn.get_ui();
    KahanSum s;
    for (unsigned long k = 2; k <= m; ++k) s.add(gk_pmf(Int(k)) * std::log2(double(k)));
    return std::exp2(s.value() / gk_partial_sum(maxn));
}

double khinchin_constant(double tolerance) {
    if (!(tolerance > 0.0)) fail(Errc::invalid_input, "tolerance must be positive");

    static std::mutex mu;
    static std::map<double, double> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(tolerance);
        if (it != memo.end()) return it->second;
    }

    // Grow the raw sum sum_{k<=M} gk_pmf(k) log2 k incrementally; KC(M) only
    // differs by the analytic normalizer.
    KahanSum s;
    unsigned long m = 1;
    double prev = 1.0; // KC(1)
    double cur = prev;
    for (;;) {
        unsigned long next = m * 2;
        for (unsigned long k = m + 1; k <= next; ++k)
            s.add(gk_pmf(Int(k)) * std::log2(double(k)));
        m = next;
        prev = cur;
        cur = std::exp2(s.value() / gk_partial_sum(Int(m)));
        if (std::abs(cur - prev) < tolerance && m >= 4) break;
    }

    std::lock_guard<std::mutex> lock(mu);
    memo[tolerance] = cur;
    return cur;
}

GkModel GkModel::truncated(Int maxn) {
    if (sgn(maxn) <= 0) fail(Errc::invalid_input, "truncation point must be >= 1");
    return GkModel(std::optional<Int>(std::move(maxn)));
}

bool GkModel::in_support(const Int& k) const {
    if (sgn(k) <= 0) return false;
    return !maxn_ || k <= *maxn_;
}

double GkModel::pmf(const Int& k) const {
    if (sgn(k) <= 0) fail(Errc::invalid_input, "pmf requires k >= 1");
    if (maxn_) return trunc_pmf(k, *maxn_);
    return gk_pmf(k);
}

double GkModel::log2_pmf(const Int& k) const {
    if (!in_support(k)) fail(Errc::support_mismatch, "k outside model support");
    double x = inv_sq(k);
    double lg;
    if (x > 1e-280) {
        lg = std::log2(-std::log1p(-x) / M_LN2);
    } else {
        lg = -2.0 * log2_int(k + 1) - std::log2(M_LN2);
    }
    if (maxn_) lg -= std::log2(gk_partial_sum(*maxn_));
    return lg;
}

double GkModel::mass(const Int& lo, const std::optional<Int>& hi) const {
    if (sgn(lo) <= 0) fail(Errc::invalid_input, "mass requires lo >= 1");
    if (hi && *hi < lo) return 0.0;
    if (hi && *hi == lo) return pmf(lo);
    std::optional<Int> top = hi;
    if (maxn_ && (!top || *top > *maxn_)) top = *maxn_;
    if (top && *top < lo) return 0.0;
    double m = top ? gk_partial_sum(*top) - gk_partial_sum(lo - 1)
                   : std::log1p(1.0 / mpz_get_d(lo.get_mpz_t())) / M_LN2;
    if (maxn_) m /= gk_partial_sum(*maxn_);
    return m;
}

} // namespace cfk
