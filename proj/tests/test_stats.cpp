#include <doctest.h>

#include <cmath>

#include "speyer/stats.hpp"

using namespace speyer;

TEST_CASE("exact mean") {
    CHECK(mean(6, Rational(1)) == Rational(3));
    CHECK(mean(3, Rational(1)) == rational(3, 2));
    CHECK(mean(2, Rational(5)) == Rational(1));
    CHECK_THROWS_AS(mean(1, Rational(1)), std::domain_error);
    CHECK_THROWS_AS(mean(4, Rational(0)), std::domain_error);
    for (long n = 2; n <= 25; ++n)
        for (const Rational& t : {rational(1, 2), Rational(1), rational(7, 3)})
            CHECK(mean(n, t) == rational(n, 2));
}

TEST_CASE("exact variance against the closed form") {
    CHECK(variance(3, Rational(1)) == rational(1, 4));
    CHECK(variance(2, rational(7, 5)) == Rational(0));
    // (2/8)(5/2) - 3/8 = 1/4
    CHECK(variance_closed(3, Rational(1)) == rational(1, 4));
    CHECK(variance_closed(2, Rational(1)) == Rational(0));
    CHECK(variance(4, Rational(1)) == variance_closed(4, Rational(1)));
    for (long n = 2; n <= 25; ++n)
        for (const Rational& t : {rational(1, 2), Rational(1), Rational(2), rational(7, 3)})
            CHECK(variance(n, t) == variance_closed(n, t));
}

TEST_CASE("ratio and its drift identity") {
    CHECK(ratio(2, Rational(1)) == Rational(2));
    CHECK(ratio(3, Rational(1)) == rational(5, 2));
    for (long n = 2; n <= 20; ++n)
        for (const Rational& t : {rational(1, 2), Rational(1), rational(7, 3)})
            CHECK(ratio(n + 1, t) == Rational(2) + t / ratio(n, t));
}

TEST_CASE("variance grows strictly in n") {
    for (const Rational& t : {rational(1, 2), Rational(1), rational(7, 3)}) {
        Rational prev = variance(3, t);
        for (long n = 4; n <= 25; ++n) {
            const Rational cur = variance(n, t);
            CHECK(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("normal cdf approximation stays within its published error bound") {
    // reference: Phi(x) = erfc(-x / sqrt(2)) / 2
    for (int i = -800; i <= 800; ++i) {
        const double x = i / 100.0;
        const double ref = 0.5 * std::erfc(-x / std::sqrt(2.0));
        CHECK(std::fabs(normal_cdf(x) - ref) < 1e-7);
    }
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-7));
}

TEST_CASE("distance diagnostics") {
    const double d50 = clt_distance(50, Rational(1));
    CHECK(d50 >= 0.0);
    CHECK(d50 <= 1.0);
    CHECK(d50 < 0.1);
    CHECK(llt_distance(50, Rational(1)) >= 0.0);
    CHECK_THROWS_AS(clt_distance(2, Rational(1)), std::domain_error);
    CHECK_THROWS_AS(llt_distance(2, Rational(1)), std::domain_error);
}

TEST_CASE("stats bundle") {
    const NormalityStats s = normality_stats(6, Rational(1));
    CHECK(s.mean == Rational(3));
    CHECK(s.variance == variance_closed(6, Rational(1)));
    CHECK(s.clt_dist.has_value());
    const NormalityStats s2 = normality_stats(2, Rational(1));
    CHECK_FALSE(s2.clt_dist.has_value());
}
