#include <doctest.h>

#include "speyer/gamma.hpp"
#include "speyer/gpoly.hpp"

using namespace speyer;

namespace {

UniPoly tmono(long c, int e) { return UniPoly::monomial(Rational(c), e); }

UniPoly upoly(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

}  // namespace

TEST_CASE("palindromicity") {
    CHECK(is_palindromic(h_closed(4), 4));
    CHECK_FALSE(is_palindromic(upoly({1, 2}), 1));
    CHECK(is_palindromic(upoly({0, 1}), 2));  // single centered term of darga 2
    CHECK_THROWS_AS(is_palindromic(upoly({1, 1, 1}), 1), std::domain_error);
    CHECK_THROWS_AS(is_palindromic(UniPoly{}, 3), std::domain_error);
}

TEST_CASE("gamma expansion") {
    const GammaVector g4 = gamma_expand(h_closed(4), 4);
    REQUIRE(g4.gammas.size() == 3);
    CHECK(g4.gammas[0].is_zero());
    CHECK(g4.gammas[1] == tmono(1, 1));
    CHECK(g4.gammas[2] == tmono(1, 2));

    const GammaVector g2 = gamma_expand(h_closed(2), 2);
    REQUIRE(g2.gammas.size() == 2);
    CHECK(g2.gammas[0].is_zero());
    CHECK(g2.gammas[1] == tmono(1, 1));

    // (1+x)^3 is the pure i = 0 basis element
    const auto cube = gamma_expand(upoly({1, 3, 3, 1}), 3);
    REQUIRE(cube.size() == 2);
    CHECK(cube[0] == Rational(1));
    CHECK(sign(cube[1]) == 0);

    CHECK_THROWS_AS(gamma_expand(upoly({1, 2}), 1), std::domain_error);
}

TEST_CASE("gamma recurrence") {
    const GammaVector g3 = gamma_recur(3);
    REQUIRE(g3.gammas.size() == 2);
    CHECK(g3.gammas[0].is_zero());
    CHECK(g3.gammas[1] == tmono(1, 1));

    const GammaVector g4 = gamma_recur(4);
    REQUIRE(g4.gammas.size() == 3);
    CHECK(g4.gammas[1] == tmono(1, 1));
    CHECK(g4.gammas[2] == tmono(1, 2));

    const GammaVector g5 = gamma_recur(5);
    REQUIRE(g5.gammas.size() == 3);
    CHECK(g5.gammas[1] == tmono(1, 1));
    CHECK(g5.gammas[2] == tmono(2, 2));

    CHECK_THROWS_AS(gamma_recur(1), std::domain_error);
}

TEST_CASE("recurrence equals expansion; reconstruction and the t = 1 binomials") {
    for (long n = 2; n <= 20; ++n) {
        const GammaVector rec = gamma_recur(n);
        const GammaVector exp = gamma_expand(h_closed(n), static_cast<int>(n));
        CHECK(rec.gammas == exp.gammas);
        CHECK(rec.gammas[0].is_zero());
        for (long i = 0; i < static_cast<long>(rec.gammas.size()); ++i)
            CHECK(eval(rec.gammas[i], Rational(1)) == Rational(binomial(n - i - 1, i - 1)));
    }
}

TEST_CASE("gamma positivity") {
    CHECK(gamma_positive(10, rational(1, 3)));
    const GammaVector g6 = gamma_recur(6);
    REQUIRE(g6.gammas.size() == 4);
    CHECK(eval(g6.gammas[0], Rational(1)) == 0);
    CHECK(eval(g6.gammas[1], Rational(1)) == 1);
    CHECK(eval(g6.gammas[2], Rational(1)) == 3);
    CHECK(eval(g6.gammas[3], Rational(1)) == 1);
    // t > 0 matters: gamma_{4,1}(-1) = -1
    CHECK_FALSE(gamma_positive(4, Rational(-1)));
    for (long n = 2; n <= 16; ++n)
        for (const Rational& t : {rational(1, 2), Rational(1), rational(7, 3)})
            CHECK(gamma_positive(n, t));
}

TEST_CASE("value at x = -1") {
    CHECK(h_at_minus_one(3).is_zero());
    CHECK(h_at_minus_one(4) == tmono(1, 2));
    CHECK(h_at_minus_one(2) == tmono(-1, 1));
    for (long n = 2; n <= 16; ++n) {
        const UniPoly v = h_at_minus_one(n);
        if (n % 2 == 1) {
            CHECK(v.is_zero());
        } else {
            const UniPoly g = gamma_recur(n).gammas[n / 2];
            CHECK(v == (n % 4 == 0 ? g : -g));
        }
    }
}
