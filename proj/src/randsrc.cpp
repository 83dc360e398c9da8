#include "cfk/randsrc.hpp"

#include <cmath>
#include <random>

#include "cfk/distmodel.hpp"

namespace cfk {

const char* generator_version() { return "mt19937_64-rej10/1"; }

namespace {

// Uniform digit in 0..9 by rejection above the largest multiple of 10
// representable in 64 bits (bias-free).
class DigitStream {
public:
    explicit DigitStream(std::uint64_t seed) : eng_(seed) {}

    int next() {
        constexpr std::uint64_t limit = UINT64_MAX - (UINT64_MAX % 10ull + 1ull) % 10ull;
        for (;;) {
            std::uint64_t r = eng_();
            if (r <= limit) return static_cast<int>(r % 10ull);
        }
    }

    /// 53-bit uniform in [0, 1).
    double uniform01() { return double(eng_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 eng_;
};

} // namespace

RatInterval random_decimal(const RandomNumberSpec& spec) {
    if (spec.digits < 1) fail(Errc::invalid_input, "digits must be >= 1");
    DigitStream ds(spec.seed);
    Int num = 0;
    for (std::uint32_t i = 0; i < spec.digits; ++i) {
        num *= 10;
        num += ds.next();
    }
    Int den = pow10_int(spec.digits);
    Rat lo(num, den), hi(num + 1, den);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

CFExpansion random_cf(const RandomNumberSpec& spec) {
    RatInterval iv = random_decimal(spec);
    CFExpansion cf = cf_from_interval(iv.lo, iv.hi);
    if (cf.certified_len() == 0)
        fail(Errc::degenerate_interval,
             "interval certifies no coefficients (seed " + std::to_string(spec.seed) + ")");
    return cf;
}

CFExpansion gk_sampler(std::uint64_t seed, std::size_t n, std::optional<Int> maxn) {
    if (n < 1) fail(Errc::invalid_input, "sample size must be >= 1");
    if (maxn && sgn(*maxn) <= 0) fail(Errc::invalid_input, "maxn must be >= 1");
    DigitStream ds(seed);
    const double norm = maxn ? gk_partial_sum(*maxn) : 1.0;
    CFExpansion cf{Int(0), {}, true};
    cf.coeffs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double target = ds.uniform01() * norm;
        // invert S(k) = 1 - log2((k+2)/(k+1)) analytically, then fix up the
        // float boundary so the draw is exactly inverse-CDF wrt double S
        double v = std::exp2(1.0 - target); // (k+2)/(k+1) < v at the answer
        double guess = v > 1.0 ? 1.0 / (v - 1.0) : 1e18;
        Int k(std::max(1.0, std::min(guess, 4e18)));
        while (k > 1 && gk_partial_sum(k - 1) > target) --k;
        while (gk_partial_sum(k) <= target) ++k;
        if (maxn && k > *maxn) k = *maxn;
        cf.coeffs.push_back(k);
    }
    return cf;
}

} // namespace cfk
