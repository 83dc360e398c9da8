#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cfk/cf.hpp"
#include "oracles.hpp"

using namespace cfk;

namespace {
AlgebraicNumber nth_root(long radicand, unsigned degree, long lo, long hi) {
    std::vector<Int> c(degree + 1);
    c[0] = -radicand;
    c[degree] = 1;
    return isolate_root(IntegerPolynomial(std::move(c)), {Rat(lo), Rat(hi)});
}

std::vector<long> longs(const std::vector<Int>& v, std::size_t n) {
    std::vector<long> out;
    for (std::size_t i = 0; i < n && i < v.size(); ++i) out.push_back(v[i].get_si());
    return out;
}
} // namespace

TEST_CASE("sqrt2 and the golden ratio have the classic expansions") {
    auto cf = cf_expand(nth_root(2, 2, 1, 2), 5);
    CHECK(cf.b0 == 1);
    CHECK(longs(cf.coeffs, 4) == std::vector<long>{2, 2, 2, 2});

    auto phi = isolate_root(IntegerPolynomial::from_ints({-1, -1, 1}), {Rat(1), Rat(2)});
    auto pf = cf_expand(phi, 5);
    CHECK(pf.b0 == 1);
    CHECK(longs(pf.coeffs, 4) == std::vector<long>{1, 1, 1, 1});

    CHECK_THROWS_AS(cf_expand(phi, 0), Error);
}

TEST_CASE("cbrt2 cross-checked against the decimal oracle route") {
    auto num = nth_root(2, 3, 1, 2);
    auto cf = cf_expand(num, 10);
    CHECK(cf.b0 == 1);
    CHECK(longs(cf.coeffs, 9) == std::vector<long>{3, 1, 5, 1, 1, 4, 1, 1, 8});

    // independent route: 60-digit decimal bracket, interval-certified prefix
    RatInterval dec = decimal_oracle(num, 60);
    CFExpansion via_interval = cf_from_interval(dec.lo, dec.hi);
    CHECK(via_interval.b0_certified);
    CHECK(via_interval.b0 == cf.b0);
    auto full = cf_expand(num, via_interval.certified_len() + 1);
    for (std::size_t i = 0; i < via_interval.certified_len(); ++i)
        CHECK(via_interval.coeffs[i] == full.coeffs[i]);
    CHECK(via_interval.certified_len() >= 50);
}

TEST_CASE("quadratic surds reproduce brute-force periods") {
    for (std::uint64_t k = 2; k <= 20; ++k) {
        std::uint64_t s = static_cast<std::uint64_t>(std::sqrt(double(k)));
        if (s * s == k) continue;
        auto [b0, period] = testing::surd_cf(k);
        auto num = nth_root(long(k), 2, 0, long(k));
        auto cf = cf_expand(num, 3 * period.size() + 2);
        CHECK(cf.b0 == b0);
        for (std::size_t i = 0; i < cf.coeffs.size(); ++i)
            CHECK(cf.coeffs[i] == period[i % period.size()]);
    }
}

TEST_CASE("prefix stability under re-expansion") {
    auto num = nth_root(5, 3, 1, 5);
    auto small = cf_expand(num, 40);
    auto big = cf_expand(num, 200);
    CHECK(small.b0 == big.b0);
    for (std::size_t i = 0; i < small.certified_len(); ++i)
        CHECK(small.coeffs[i] == big.coeffs[i]);
}

TEST_CASE("negative roots follow the floor convention") {
    auto neg = isolate_root(IntegerPolynomial::from_ints({-2, 0, 1}), {Rat(-2), Rat(-1)});
    auto cf = cf_expand(neg, 6);
    CHECK(cf.b0 == -2);
    CHECK(longs(cf.coeffs, 5) == std::vector<long>{1, 1, 2, 2, 2});
}

TEST_CASE("isolating a root among close conjugates (interval carried)") {
    // (x^2-2)(x^2-3): sqrt3 isolated between sqrt2 and 2
    auto p = IntegerPolynomial::from_ints({6, 0, -5, 0, 1});
    auto sqrt3 = isolate_root(p, {Rat(8, 5), Rat(2)});
    auto cf = cf_expand(sqrt3, 12);
    auto [b0, period] = testing::surd_cf(3);
    CHECK(cf.b0 == b0);
    for (std::size_t i = 0; i < cf.coeffs.size(); ++i)
        CHECK(cf.coeffs[i] == period[i % period.size()]);

    // and sqrt2 from the same polynomial
    auto sqrt2 = isolate_root(p, {Rat(13, 10), Rat(29, 20)});
    auto cf2 = cf_expand(sqrt2, 12);
    CHECK(cf2.b0 == 1);
    for (const Int& c : cf2.coeffs) CHECK(c == 2);
}

TEST_CASE("conjugate rational root at the floor drops the degree cleanly") {
    // (x-1)(x^2-3) = x^3 - x^2 - 3x + 3; isolate sqrt3; first step hits P(1)=0
    auto p = IntegerPolynomial::from_ints({3, -3, -1, 1});
    auto sqrt3 = isolate_root(p, {Rat(3, 2), Rat(2)});
    auto cf = cf_expand(sqrt3, 10);
    auto [b0, period] = testing::surd_cf(3);
    CHECK(cf.b0 == b0);
    for (std::size_t i = 0; i < cf.coeffs.size(); ++i)
        CHECK(cf.coeffs[i] == period[i % period.size()]);
}

TEST_CASE("rational roots are rejected during expansion") {
    // (x-2)(x-3) has only rational roots; the isolation cannot tell until the
    // expansion walks onto the root
    auto p = IntegerPolynomial::from_ints({6, -5, 1});
    auto fake = isolate_root(p, {Rat(3, 2), Rat(5, 2)});
    CHECK_THROWS_AS(cf_expand(fake, 5), Error);
    try {
        cf_expand(fake, 5);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::rational_number);
    }
}

TEST_CASE("convergents satisfy the recurrence and determinant identity") {
    CFExpansion cf{Int(1), {Int(2), Int(2)}, true};
    auto seq = convergents(cf, 2);
    REQUIRE(seq.pairs.size() == 3);
    CHECK(seq.pairs[0] == std::pair<Int, Int>(1, 1));
    CHECK(seq.pairs[1] == std::pair<Int, Int>(3, 2));
    CHECK(seq.pairs[2] == std::pair<Int, Int>(7, 5));

    CHECK_THROWS_AS(convergents(cf, 3), Error);

    // golden ratio: ratios of consecutive Fibonacci numbers
    CFExpansion ones{Int(1), {Int(1), Int(1), Int(1), Int(1)}, true};
    auto fib = testing::fibonacci(8);
    auto fs = convergents(ones, 4);
    for (std::size_t n = 0; n < fs.pairs.size(); ++n) {
        CHECK(fs.pairs[n].first == fib[n + 2]);
        CHECK(fs.pairs[n].second == fib[n + 1]);
    }
}

TEST_CASE("determinant identity holds for random expansions (property)") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        CFExpansion cf;
        cf.b0 = long(rng() % 19) - 9;
        std::size_t len = 2 + rng() % 40;
        for (std::size_t i = 0; i < len; ++i) cf.coeffs.emplace_back(1 + rng() % 999);
        auto seq = convergents(cf, len);
        for (std::size_t n = 1; n <= len; ++n) {
            const auto& [An, Bn] = seq.pairs[n];
            const auto& [Am, Bm] = seq.pairs[n - 1];
            Int det = An * Bm - Am * Bn;
            CHECK(det == (n % 2 == 0 ? -1 : 1)); // (-1)^(n+1)
        }
        // B strictly increasing from n = 2
        for (std::size_t n = 2; n <= len; ++n)
            CHECK(seq.pairs[n].second > seq.pairs[n - 1].second);
    }
}

TEST_CASE("cf_from_interval propagates shared coefficients exactly") {
    // [1.41, 1.42]: shared prefix 1; [2, 2]
    auto cf = cf_from_interval(Rat(141, 100), Rat(142, 100));
    CHECK(cf.b0 == 1);
    CHECK(longs(cf.coeffs, 10) == std::vector<long>{2, 2});

    // a closed interval ending exactly at 3/2 certifies [1; 2] and stops
    Rat eps(Int(1), pow10_int(30));
    auto below = cf_from_interval(Rat(3, 2) - eps, Rat(3, 2));
    CHECK(below.b0 == 1);
    CHECK(longs(below.coeffs, 10) == std::vector<long>{2});

    // just above 3/2 the expansions split immediately after b0: the CF of
    // 3/2 itself is [1;2] while anything above starts [1;1,1,...]
    auto above = cf_from_interval(Rat(3, 2), Rat(3, 2) + eps);
    CHECK(above.b0 == 1);
    CHECK(above.b0_certified);
    CHECK(above.certified_len() == 0);

    // floors differing immediately: certified_len 0 and b0 uncertified
    auto none = cf_from_interval(Rat(5, 2), Rat(3));
    CHECK_FALSE(none.b0_certified);
    CHECK(none.certified_len() == 0);

    CHECK_THROWS_AS(cf_from_interval(Rat(1), Rat(1)), Error);
}

TEST_CASE("approximation_error encloses the true error tightly") {
    auto num = nth_root(2, 2, 1, 2);
    auto cf = cf_expand(num, 64);

    // n=1: A/B = 3/2, |sqrt2 - 3/2| = 0.08578643..., coarse bounds (1/14, 1/10)
    auto e1 = approximation_error(num, cf, 1);
    CHECK(e1.lo > Rat(1, 14));
    CHECK(e1.hi < Rat(1, 10));
    Rat ref_lo(Int("8578643"), pow10_int(8));  // 0.08578643
    Rat ref_hi(Int("8578644"), pow10_int(8));
    CHECK(e1.lo <= ref_hi);
    CHECK(e1.hi >= ref_lo);

    // n=3: A/B = 17/12, B(4) = 29: coarse identity bounds
    auto e3 = approximation_error(num, cf, 3);
    CHECK(e3.lo > Rat(1, 12 * (29 + 12)));
    CHECK(e3.hi < Rat(1, 12 * 29));

    // tightness: hi/lo < 1 + 2^-40, i.e. (hi-lo)*2^40 <= lo
    for (std::size_t n : {0, 1, 5, 20, 50}) {
        auto e = approximation_error(num, cf, n);
        CHECK(sgn(e.lo) > 0);
        CHECK(e.lo <= e.hi);
        Rat spread = e.hi - e.lo;
        mpq_mul_2exp(spread.get_mpq_t(), spread.get_mpq_t(), 40);
        CHECK(spread <= e.lo);
    }

    // all-ones tails force deepening well past the default depth
    auto phi = isolate_root(IntegerPolynomial::from_ints({-1, -1, 1}), {Rat(1), Rat(2)});
    auto pcf = cf_expand(phi, 10);
    auto pe = approximation_error(phi, pcf, 4); // tail longer than cf: re-expands
    Rat spread = pe.hi - pe.lo;
    mpq_mul_2exp(spread.get_mpq_t(), spread.get_mpq_t(), 40);
    CHECK(spread <= pe.lo);
}

TEST_CASE("enclosure agrees with the decimal oracle midpoint") {
    auto num = nth_root(7, 3, 1, 7);
    auto cf = cf_expand(num, 40);
    auto table = convergents(cf, 12);
    auto enc = approximation_error(num, cf, 12);
    RatInterval dec = decimal_oracle(num, 40);
    // |a - A/B| bracket from the oracle interval
    Rat A(table.pairs[12].first), B(table.pairs[12].second);
    Rat lo = dec.lo - A / B, hi = dec.hi - A / B;
    if (sgn(lo) < 0) {
        std::swap(lo, hi);
        lo = -lo;
        hi = -hi;
    }
    CHECK(enc.lo <= hi);
    CHECK(enc.hi >= lo);
}
