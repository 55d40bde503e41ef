#include <doctest.h>

#include <random>

#include "speyer/exactnum.hpp"

using namespace speyer;

TEST_CASE("binomial values and conventions") {
    CHECK(binomial(3, 1) == 3);
    CHECK(binomial(2, 5) == 0);
    // factorial-formula oracle for C(6,3)
    CHECK(binomial(6, 3) == factorial(6) / (factorial(3) * factorial(3)));
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(5, -2) == 0);
    CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
    CHECK_THROWS_AS(binomial(-3, 2), std::domain_error);
}

TEST_CASE("binomial Pascal identity on random samples") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long> pick_n(1, 60);
    for (int trial = 0; trial < 200; ++trial) {
        const long n = pick_n(rng);
        const long k = std::uniform_int_distribution<long>(1, n)(rng);
        CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
    // the large values from the sweeps stay exact
    CHECK(binomial(197, 98) == binomial(196, 97) + binomial(196, 98));
}

TEST_CASE("rational normalization") {
    CHECK(rational(2, 4) == rational(1, 2));
    CHECK(rational(2, 4).get_den() == 2);
    CHECK(rational(3, -6) == rational(-1, 2));
    CHECK(rational(3, -6).get_den() == 2);
    CHECK(rational(0, 7) == Rational(0));
    CHECK(rational(0, 7).get_den() == 1);
    CHECK_THROWS_WITH_AS(rational(5, 0), "zero denominator", std::domain_error);
}

TEST_CASE("field axioms and order, randomized") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    auto rnd = [&] { return rational(num(rng), den(rng)); };
    for (int trial = 0; trial < 300; ++trial) {
        const Rational a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(Rational(a + b) - b == a);
        // comparison consistent with the sign of the difference
        const int cmp_sign = a < b ? -1 : (a == b ? 0 : 1);
        CHECK(cmp_sign == sign(Rational(a - b)));
    }
}

TEST_CASE("string round-trips") {
    CHECK(to_string(rational(-1, 2)) == "-1/2");
    CHECK(to_string(rational(7, 1)) == "7");
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-3/9") == rational(-1, 3));
    CHECK(to_string(parse_bigint("-123456789012345678901234567890")) ==
          "-123456789012345678901234567890");
    CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bigint(""), std::invalid_argument);

    std::mt19937 rng(99);
    std::uniform_int_distribution<long> num(-10000, 10000);
    std::uniform_int_distribution<long> den(1, 997);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational x = rational(num(rng), den(rng));
        CHECK(parse_rational(to_string(x)) == x);
    }
}
