#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cfk/cf.hpp"

namespace cfk {

/// Deterministic pseudo-random decimal: same seed and digit count always
/// reproduce the same number, across platforms (mt19937_64 is pinned by the
/// standard; digits come from rejection sampling of raw 64-bit draws).
struct RandomNumberSpec {
    std::uint64_t seed = 0;
    std::uint32_t digits = 1000;
};

/// Identifies the generator and digit/sampling derivation embedded in
/// reports, so that archived artifacts stay reproducible.
const char* generator_version();

/// Interval [d, d + 10^-digits] around a uniform decimal 0.d1 d2 ... d_digits.
RatInterval random_decimal(const RandomNumberSpec& spec);

/// Certified CF prefix of the random decimal interval (b0 = 0). The
/// certified length is whatever the interval supports, about 0.97 * digits.
/// Throws degenerate-interval if not even one coefficient is certified.
CFExpansion random_cf(const RandomNumberSpec& spec);

/// n coefficients drawn independently from the standard Gauss-Kuzmin pmf
/// (maxn absent) or its truncation (maxn present), by inverse-CDF sampling
/// of 53-bit uniforms. b0 is 0: the sample is a coefficient sequence, not a
/// number's expansion.
CFExpansion gk_sampler(std::uint64_t seed, std::size_t n, std::optional<Int> maxn = std::nullopt);

} // namespace cfk
