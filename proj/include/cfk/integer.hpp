#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "cfk/error.hpp"

namespace cfk {

using Int = mpz_class;
using Rat = mpq_class;

/// Closed rational interval [lo, hi].
struct RatInterval {
    Rat lo;
    Rat hi;

    RatInterval() = default;
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
    Rat width() const { return hi - lo; }
};

inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool is_integer(const Rat& q) { return mpz_cmp_ui(q.get_den_mpz_t(), 1) == 0; }

inline Int pow10_int(unsigned long digits) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, digits);
    return r;
}

/// Natural log of a positive big integer from its top 53 bits plus the bit
/// length; relative error is a few ulps, well under 2^-50.
inline double ln_int(const Int& n) {
    if (sgn(n) <= 0) fail(Errc::domain_error, "ln of non-positive integer");
    signed long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t()); // n = mant * 2^exp2, mant in [0.5, 1)
    return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

inline double log2_int(const Int& n) { return ln_int(n) / M_LN2; }

/// Log base used by the speed metrics, r_n and divergence measures.
enum class LogBase { natural, base2 };

inline double log_value(double x, LogBase b) {
    return b == LogBase::natural ? std::log(x) : std::log2(x);
}

inline double log_int(const Int& n, LogBase b) {
    return b == LogBase::natural ? ln_int(n) : log2_int(n);
}

/// Convert a rational to double (nearest).
inline double rat_to_double(const Rat& q) { return mpq_get_d(q.get_mpq_t()); }

/// Parse a plain decimal string ("1.41", "-0.5", "12") into an exact rational.
inline Rat parse_decimal(const std::string& s) {
    if (s.empty()) fail(Errc::invalid_input, "empty decimal string");
    std::size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = s[pos] == '-';
        ++pos;
    }
    Int num = 0;
    unsigned long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c == '.') {
            if (seen_dot) fail(Errc::invalid_input, "malformed decimal: " + s);
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            num = num * 10 + (c - '0');
            if (seen_dot) ++frac_digits;
            seen_digit = true;
        } else {
            fail(Errc::invalid_input, "malformed decimal: " + s);
        }
    }
    if (!seen_digit) fail(Errc::invalid_input, "malformed decimal: " + s);
    Rat r(num, pow10_int(frac_digits));
    r.canonicalize();
    return neg ? Rat(-r) : r;
}

/// Kahan compensated accumulator for long probability sums.
class KahanSum {
public:
    void add(double x) {
        double y = x - comp_;
        double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace cfk
