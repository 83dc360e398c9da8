#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cfk/polynomial.hpp"

using namespace cfk;

TEST_CASE("construction strips trailing zeros and rejects the zero polynomial") {
    IntegerPolynomial p({Int(1), Int(2), Int(0)});
    CHECK(p.degree() == 1);
    CHECK_THROWS_AS(IntegerPolynomial({Int(0), Int(0)}), Error);
}

TEST_CASE("evaluation signs at integers and rationals") {
    auto p = IntegerPolynomial::from_ints({-2, 0, 1}); // x^2 - 2
    CHECK(p.sign_at(Int(1)) == -1);
    CHECK(p.sign_at(Int(2)) == 1);
    CHECK(p.sign_at(Rat(3, 2)) == 1);  // 9/4 - 2 > 0
    CHECK(p.sign_at(Rat(7, 5)) == -1); // 49/25 - 2 < 0
    CHECK(p.value_at(Int(3)) == 7);
}

TEST_CASE("squarefree part") {
    // (x-1)^2 (x+1) = x^3 - x^2 - x + 1 -> x^2 - 1
    auto p = IntegerPolynomial::from_ints({1, -1, -1, 1});
    CHECK(squarefree_part(p) == IntegerPolynomial::from_ints({-1, 0, 1}));

    auto q = IntegerPolynomial::from_ints({-2, 0, 1});
    CHECK(squarefree_part(q) == q);

    // content normalization: 3x^2 - 6 -> x^2 - 2
    auto r = IntegerPolynomial::from_ints({-6, 0, 3});
    CHECK(squarefree_part(r) == q);

    CHECK_THROWS_AS(squarefree_part(IntegerPolynomial::from_ints({5})), Error);
}

TEST_CASE("taylor shift and reversal compose to the expansion step") {
    // x^2 - 2 shifted by 1: (x+1)^2 - 2 = x^2 + 2x - 1
    auto p = IntegerPolynomial::from_ints({-2, 0, 1});
    auto s = p.taylor_shift(Int(1));
    CHECK(s == IntegerPolynomial::from_ints({-1, 2, 1}));
    // reversal: -x^2 + 2x + 1, normalized later by the caller
    auto r = s.reversed();
    CHECK(r == IntegerPolynomial::from_ints({1, 2, -1}));
    CHECK(r.normalized() == IntegerPolynomial::from_ints({-1, -2, 1}));
}

TEST_CASE("taylor shift by negative and large values") {
    auto p = IntegerPolynomial::from_ints({1, 3, 0, 2}); // 2x^3 + 3x + 1
    Int m(-7);
    auto s = p.taylor_shift(m);
    // check P(x+m) at a few points exactly
    for (long x = -3; x <= 3; ++x) CHECK(s.value_at(Int(x)) == p.value_at(Int(x) + m));
}

TEST_CASE("sign variations (Descartes)") {
    CHECK(IntegerPolynomial::from_ints({-2, 0, 1}).sign_variations() == 1);
    CHECK(IntegerPolynomial::from_ints({6, 0, -5, 0, 1}).sign_variations() == 2);
    CHECK(IntegerPolynomial::from_ints({1, 1, 1}).sign_variations() == 0);
}

TEST_CASE("sturm root counting") {
    auto p = IntegerPolynomial::from_ints({-2, 0, 1}); // roots +-sqrt2
    CHECK(sturm_root_count(p, Rat(1), Rat(2)) == 1);
    CHECK(sturm_root_count(p, Rat(-2), Rat(2)) == 2);
    CHECK(sturm_root_count(p, Rat(2), Rat(3)) == 0);

    // (x-1)(x-2)(x-3)
    auto w = IntegerPolynomial::from_ints({-6, 11, -6, 1});
    CHECK(sturm_root_count(w, Rat(0), Rat(4)) == 3);
    CHECK(sturm_root_count(w, Rat(0), Rat(5, 2)) == 2);
}

TEST_CASE("exact division and gcd") {
    auto a = IntegerPolynomial::from_ints({-1, 0, 1});  // (x-1)(x+1)
    auto b = IntegerPolynomial::from_ints({-1, 1});     // x-1
    CHECK(a.divide_exact(b) == IntegerPolynomial::from_ints({1, 1}));
    CHECK_THROWS_AS(a.divide_exact(IntegerPolynomial::from_ints({-2, 1})), Error);

    auto g = IntegerPolynomial::gcd(a, IntegerPolynomial::from_ints({-2, 1, 1})); // (x+2)(x-1)
    CHECK(g == b);
}

TEST_CASE("to_string rendering") {
    CHECK(IntegerPolynomial::from_ints({-2, 0, 1}).to_string() == "x^2-2");
    CHECK(IntegerPolynomial::from_ints({-1, -1, 1}).to_string() == "x^2-x-1");
    CHECK(IntegerPolynomial::from_ints({3}).to_string() == "3");
    CHECK(IntegerPolynomial::from_ints({0, -2}).to_string() == "-2x");
}
