#include <doctest.h>

#include <random>

#include "speyer/gpoly.hpp"
#include "speyer/laguerre.hpp"
#include "speyer/realroots.hpp"

using namespace speyer;

namespace {

UniPoly upoly(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

}  // namespace

TEST_CASE("classical form") {
    CHECK(laguerre_form(upoly({0, 0, 1})) == upoly({0, 0, 2}));   // x^2 -> 2x^2
    CHECK(laguerre_form(upoly({1, 0, 1})) == upoly({-2, 0, 2}));  // x^2+1 -> 2x^2-2
    CHECK(laguerre_form(upoly({9})).is_zero());
    CHECK(laguerre_form(UniPoly{}).is_zero());
}

TEST_CASE("generalized form") {
    std::mt19937 rng(2025);
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<int> deg(0, 6);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Rational> v(deg(rng) + 1);
        for (Rational& c : v) c = Rational(num(rng));
        const UniPoly f(std::move(v));
        CHECK(generalized_laguerre_form(f, 1) == laguerre_form(f));
    }
    // L_2(x^2) = (1/2) C(4,2) (f'')^2 = 12, constant
    CHECK(generalized_laguerre_form(upoly({0, 0, 1}), 2) == upoly({12}));
    CHECK(generalized_laguerre_form(upoly({3}), 2).is_zero());
    // 2r beyond the degree kills every term: tx with r >= 2
    CHECK(generalized_laguerre_form(upoly({0, 5}), 2).is_zero());
    CHECK_THROWS_AS(generalized_laguerre_form(upoly({1}), 0), std::domain_error);
}

TEST_CASE("laguerre_holds") {
    CHECK(laguerre_holds(eval_t(h_closed(6), Rational(2))).holds);
    CHECK(laguerre_holds(g_poly({7, 3})).holds);

    const LaguerreReport bad = laguerre_holds(upoly({1, 0, 1}));
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.witness.has_value());
    CHECK(*bad.witness == Rational(0));
    CHECK(sign(eval(laguerre_form(upoly({1, 0, 1})), *bad.witness)) < 0);
}

TEST_CASE("real-rooted polynomials satisfy the classical inequality") {
    for (long n = 2; n <= 12; ++n) {
        for (const Rational& t : {rational(1, 2), Rational(1), rational(7, 3)}) {
            const UniPoly f = eval_t(h_closed(n), t);
            REQUIRE(is_real_rooted(f));
            CHECK(laguerre_holds(f).holds);
        }
        for (long d = 1; d <= n - 1; ++d) CHECK(laguerre_holds(g_poly({n, d})).holds);
    }
}

TEST_CASE("witness accompanies every failure") {
    std::mt19937 rng(909);
    std::uniform_int_distribution<long> num(-5, 5);
    int failures = 0;
    for (int trial = 0; trial < 80; ++trial) {
        std::vector<Rational> v(4);
        for (Rational& c : v) c = Rational(num(rng));
        const UniPoly f(std::move(v));
        if (f.is_zero()) continue;
        const LaguerreReport rep = laguerre_holds(f);
        if (rep.holds) {
            CHECK_FALSE(rep.witness.has_value());
        } else {
            ++failures;
            REQUIRE(rep.witness.has_value());
            CHECK(sign(eval(laguerre_form(f), *rep.witness)) < 0);
        }
    }
    CHECK(failures > 0);  // the sample space contains non-real-rooted cubics
}

TEST_CASE("conjecture sweep records experimental outcomes") {
    const auto entries = conjecture_sweep(8, 2, {Rational(1)});
    CHECK(entries.size() == 7 * 2);
    for (const ReportEntry& e : entries) {
        CHECK(e.experimental);
        CHECK(e.claim == "conj8.3");
    }
    CHECK_THROWS_AS(conjecture_sweep(1, 2, {Rational(1)}), std::domain_error);
    CHECK_THROWS_AS(conjecture_sweep(5, 0, {Rational(1)}), std::domain_error);
}
