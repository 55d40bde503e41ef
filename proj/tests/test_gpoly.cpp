#include <doctest.h>

#include <random>

#include "speyer/gpoly.hpp"
#include "speyer/report.hpp"

using namespace speyer;

namespace {

// Independent factorial-form oracle for the t^i coefficient:
// (n-i-1)! / ((d-i)! (n-d-i)! (i-1)!), zero when any lower factorial
// argument is negative.
BigInt s_oracle(long n, long d, long i) {
    if (d - i < 0 || n - d - i < 0 || i - 1 < 0) return BigInt(0);
    return factorial(n - i - 1) / (factorial(d - i) * factorial(n - d - i) * factorial(i - 1));
}

UniPoly upoly(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

}  // namespace

TEST_CASE("s_coeff examples and factorial oracle") {
    CHECK(s_coeff({4, 2}, 1) == 2);
    CHECK(s_coeff({5, 2}, 2) == 2);
    CHECK(s_coeff({6, 2}, 3) == 0);
    CHECK_THROWS_AS(s_coeff({1, 1}, 1), std::domain_error);
    CHECK_THROWS_AS(s_coeff({4, 2}, 0), std::domain_error);

    for (long n = 2; n <= 12; ++n)
        for (long d = 1; d <= n - 1; ++d)
            for (long i = 1; i <= d + 1; ++i) CHECK(s_coeff({n, d}, i) == s_oracle(n, d, i));
}

TEST_CASE("g_poly values") {
    CHECK(g_poly({4, 2}) == upoly({0, 2, 1}));      // 2t + t^2
    CHECK(g_poly({5, 2}) == upoly({0, 3, 2}));      // 3t + 2t^2
    for (long n : {2L, 5L, 9L}) CHECK(g_poly({n, 1}) == upoly({0, 1}));
    CHECK_THROWS_AS(g_poly({3, 5}), std::domain_error);
    CHECK_THROWS_AS(g_poly({1, 1}), std::domain_error);
}

TEST_CASE("g_poly structure invariants") {
    for (long n = 2; n <= 14; ++n) {
        for (long d = 1; d <= n - 1; ++d) {
            const UniPoly g = g_poly({n, d});
            CHECK(g == g_poly({n, n - d}));                       // symmetry in d
            CHECK(g.degree() == std::min(d, n - d));              // t-degree
            CHECK(sign(g.coeff(0)) == 0);                         // no constant term
            CHECK(g.coeff(1) == Rational(binomial(n - 2, d - 1)));  // t^1 coefficient
            for (int i = 1; i <= g.degree(); ++i) CHECK(sign(g.coeff(i)) > 0);
        }
    }
}

TEST_CASE("h_closed small values") {
    // h_2 = tx
    CHECK(h_closed(2) == BiPoly::term(Rational(1), 1, 1));
    // h_3 = tx + tx^2
    CHECK(h_closed(3) == BiPoly::term(Rational(1), 1, 1) + BiPoly::term(Rational(1), 1, 2));
    // h_4 = tx + (2t + t^2)x^2 + tx^3
    BiPoly h4 = BiPoly::term(Rational(1), 1, 1) + BiPoly::term(Rational(2), 1, 2) +
                BiPoly::term(Rational(1), 2, 2) + BiPoly::term(Rational(1), 1, 3);
    CHECK(h_closed(4) == h4);
    CHECK_THROWS_AS(h_closed(1), std::domain_error);
}

TEST_CASE("h_closed shape: degree, leading coefficient, palindromic slices") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> num(1, 9), den(1, 5);
    for (long n = 2; n <= 16; ++n) {
        const BiPoly h = h_closed(n);
        CHECK(h.xdegree() == n - 1);
        CHECK(h.xcoeff(n - 1) == UniPoly::monomial(Rational(1), 1));  // leading term tx^{n-1}
        for (long d = 1; d <= n - 1; ++d) CHECK(h.xcoeff(d) == g_poly({n, d}));
        // palindromic in x at random rational t
        const Rational t0 = rational(num(rng), den(rng));
        const UniPoly hx = eval_t(h, t0);
        CHECK(reverse(hx, n) == hx);
    }
}

TEST_CASE("h_recur equals the closed form") {
    CHECK(h_recur(2) == h_closed(2));
    // one hand step: h_4 = (1+x)(tx + tx^2) + tx * tx
    CHECK(h_recur(4) == BiPoly::term(Rational(1), 1, 1) + BiPoly::term(Rational(2), 1, 2) +
                            BiPoly::term(Rational(1), 2, 2) + BiPoly::term(Rational(1), 1, 3));
    CHECK(h_recur(10) == h_closed(10));
    CHECK_THROWS_AS(h_recur(0), std::domain_error);
}

TEST_CASE("eval examples from the proofs") {
    CHECK(eval_t(h_closed(3), Rational(1)) == upoly({0, 1, 1}));  // x + x^2
    CHECK(eval_x(h_closed(2), Rational(1)) == upoly({0, 1}));     // t
}

TEST_CASE("recurrence coefficient polynomials") {
    const BiPoly x = BiPoly::x(), t = BiPoly::t(), one = BiPoly::constant(Rational(1));
    CHECK(recurrence_coeffs(3).A == 2 * (x - one));
    CHECK(recurrence_coeffs(2).B == -2 * (2 * (t * x) + x + one));
    // C is n-independent: x^3 + 4tx^2 + 2x^2 + x
    const BiPoly c_expected =
        x * x * x + 4 * (t * x * x) + 2 * (x * x) + x;
    for (long n : {2L, 3L, 7L, 19L}) CHECK(recurrence_coeffs(n).C == c_expected);
}

TEST_CASE("hand-expanded identity instance at n = 2") {
    // h_4 - (1+x) h_3 - tx h_2 = 0
    const BiPoly one_plus_x = BiPoly::constant(Rational(1)) + BiPoly::x();
    const BiPoly tx = BiPoly::term(Rational(1), 1, 1);
    CHECK((h_closed(4) - one_plus_x * h_closed(3) - tx * h_closed(2)).is_zero());
}

TEST_CASE("verify_recurrences over a window") {
    const auto entries = verify_recurrences(12);
    CHECK(entries.size() == 3 * 11);
    for (const ReportEntry& e : entries) {
        CHECK(e.pass);
        CHECK_FALSE(e.experimental);
    }
    // deterministic ordering: ascending n, eq1..eq3 within each n
    CHECK(entries[0].claim == "thm2.1-eq1");
    CHECK(entries[0].params.at("n") == "2");
    CHECK(entries[5].claim == "thm2.1-eq3");
    CHECK(entries[5].params.at("n") == "3");
    CHECK_THROWS_AS(verify_recurrences(1), std::domain_error);
}
