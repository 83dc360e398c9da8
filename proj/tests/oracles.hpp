#pragma once

// Test-only oracles, independent of the library's expansion path.

#include <cstdint>
#include <utility>
#include <vector>

#include "cfk/integer.hpp"

namespace cfk::testing {

/// Exact integer Lagrange algorithm for sqrt(k): returns (b0, period).
/// Standard P,Q recurrence; the period is detected by state repetition.
inline std::pair<std::uint64_t, std::vector<std::uint64_t>> surd_cf(std::uint64_t k) {
    std::uint64_t a0 = 0;
    while ((a0 + 1) * (a0 + 1) <= k) ++a0;
    std::vector<std::uint64_t> period;
    std::uint64_t P = 0, Q = 1;
    // first step state after extracting a0
    P = a0;
    Q = k - a0 * a0; // nonzero for non-square k
    std::uint64_t P0 = P, Q0 = Q;
    for (;;) {
        std::uint64_t a = (a0 + P) / Q;
        period.push_back(a);
        P = a * Q - P;
        Q = (k - P * P) / Q;
        if (P == P0 && Q == Q0) break;
    }
    return {a0, period};
}

/// Fibonacci numbers F(1)=1, F(2)=1, ... as exact integers.
inline std::vector<Int> fibonacci(std::size_t count) {
    std::vector<Int> f(count + 1);
    f[0] = 0;
    if (count >= 1) f[1] = 1;
    for (std::size_t i = 2; i <= count; ++i) f[i] = f[i - 1] + f[i - 2];
    return f;
}

} // namespace cfk::testing
