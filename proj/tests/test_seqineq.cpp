#include <doctest.h>

#include <random>

#include "speyer/gpoly.hpp"
#include "speyer/realroots.hpp"
#include "speyer/seqineq.hpp"

using namespace speyer;

namespace {

RSeq rseq(std::initializer_list<long> vals) {
    RSeq s;
    for (long v : vals) s.emplace_back(v);
    return s;
}

}  // namespace

TEST_CASE("l_operator") {
    CHECK(l_operator(rseq({1, 2, 2, 1})) == rseq({1, 2, 2, 1}));
    CHECK(l_operator(rseq({1})) == rseq({1}));
    CHECK(l_operator(RSeq{}).empty());
    const Rational c = rational(3, 2);
    CHECK(l_operator({c, c, c}) == RSeq{c * c, Rational(0), c * c});
    // constant sequences of any length >= 3: interior collapses to zero
    const RSeq five(5, Rational(2));
    const RSeq lfive = l_operator(five);
    CHECK(lfive.front() == 4);
    CHECK(lfive.back() == 4);
    for (size_t i = 1; i + 1 < lfive.size(); ++i) CHECK(sign(lfive[i]) == 0);
}

TEST_CASE("k-log-concavity") {
    // hand iteration: [1,5,1] -> [1,24,1] -> [1,575,1]
    CHECK(l_operator(rseq({1, 5, 1})) == rseq({1, 24, 1}));
    CHECK(l_operator(rseq({1, 24, 1})) == rseq({1, 575, 1}));
    CHECK(is_k_log_concave(rseq({1, 5, 1}), 1).ok);
    CHECK(is_k_log_concave(rseq({1, 5, 1}), 2).ok);

    const auto fail = is_k_log_concave(rseq({1, 1, 5}), 1);
    CHECK_FALSE(fail.ok);
    CHECK(fail.depth == 1);
    CHECK(fail.index == 1);

    // {g_{6,d}(1)}, depth 5
    CHECK(is_k_log_concave(g_sequence(6, Rational(1)), 5).ok);

    // degenerate lengths are vacuously log-concave
    CHECK(is_k_log_concave(RSeq{}, 3).ok);
    CHECK(is_k_log_concave(rseq({4}), 3).ok);
    CHECK(is_k_log_concave(rseq({4, 1}), 3).ok);
    CHECK_THROWS_AS(is_k_log_concave(rseq({1, 2, 1}), 0), std::domain_error);
}

TEST_CASE("higher Turan windows") {
    CHECK(higher_turan(rseq({1, 3, 3, 1})).ok);  // 4*6*6 - 8^2 = 80
    const auto fail = higher_turan(rseq({1, 1, 1, 10}));
    CHECK_FALSE(fail.ok);
    CHECK(fail.index == 0);
    CHECK(higher_turan(g_sequence(7, rational(1, 2))).ok);
    CHECK_THROWS_AS(higher_turan(rseq({1, 2, 1})), std::domain_error);
}

TEST_CASE("g_sequence") {
    CHECK(g_sequence(4, Rational(1)) == rseq({1, 3, 1}));
    CHECK(g_sequence(5, Rational(1)) == rseq({1, 5, 5, 1}));
    CHECK_THROWS_AS(g_sequence(1, Rational(1)), std::domain_error);

    std::mt19937 rng(8686);
    std::uniform_int_distribution<long> pick_n(2, 14), num(1, 9), den(1, 4);
    for (int trial = 0; trial < 30; ++trial) {
        const long n = pick_n(rng);
        const Rational t = rational(num(rng), den(rng));
        const RSeq s = g_sequence(n, t);
        REQUIRE(s.size() == static_cast<size_t>(n - 1));
        CHECK(s.front() == t);
        CHECK(s.back() == t);
        for (size_t d = 0; d < s.size(); ++d) CHECK(s[d] == s[s.size() - 1 - d]);
    }
}

TEST_CASE("l_transform_poly") {
    auto upoly = [](std::initializer_list<long> cs) {
        std::vector<Rational> v;
        for (long c : cs) v.emplace_back(c);
        return UniPoly(std::move(v));
    };
    CHECK(l_transform_poly(upoly({1, 3, 3, 1})) == upoly({1, 6, 6, 1}));
    CHECK(l_transform_poly(upoly({5})) == upoly({25}));
    CHECK(l_transform_poly(upoly({0, 1})) == upoly({0, 1}));
    CHECK(l_transform_poly(UniPoly{}).is_zero());
}

TEST_CASE("closure of real-rootedness under the coefficient L transform") {
    // real nonpositive zeros in, real zeros out; exercised on the h slices
    for (long n = 2; n <= 12; ++n)
        for (const Rational& t : {rational(1, 2), Rational(1), Rational(2)})
            CHECK(is_real_rooted(l_transform_poly(eval_t(h_closed(n), t))));
}

TEST_CASE("real-rootedness forces the higher Turan inequality") {
    for (long n = 5; n <= 12; ++n)
        for (const Rational& t : {rational(1, 2), Rational(1), rational(7, 3)}) {
            REQUIRE(is_real_rooted(eval_t(h_closed(n), t)));
            CHECK(higher_turan(g_sequence(n, t)).ok);
        }
}

TEST_CASE("depth-5 log-concavity across the theorem range") {
    for (long n = 4; n <= 12; ++n)
        for (const Rational& t : {rational(1, 2), Rational(1), rational(7, 3)})
            CHECK(is_k_log_concave(g_sequence(n, t), 5).ok);
}
