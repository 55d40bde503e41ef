#include "speyer/seqineq.hpp"

#include <stdexcept>

#include "speyer/gpoly.hpp"

namespace speyer {

namespace {

Rational at(const RSeq& s, long i) {
    if (i < 0 || i >= static_cast<long>(s.size())) return Rational(0);
    return s[i];
}

}  // namespace

RSeq l_operator(const RSeq& s) {
    RSeq b(s.size());
    for (long i = 0; i < static_cast<long>(s.size()); ++i)
        b[i] = s[i] * s[i] - at(s, i - 1) * at(s, i + 1);
    return b;
}

LogConcavityCheck is_k_log_concave(const RSeq& s, int k) {
    if (k < 1) throw std::domain_error("is_k_log_concave: require k >= 1");
    RSeq cur = s;
    for (int depth = 1; depth <= k; ++depth) {
        cur = l_operator(cur);
        for (std::size_t i = 0; i < cur.size(); ++i)
            if (sign(cur[i]) < 0) return {false, depth, i};
    }
    return {};
}

TuranCheck higher_turan(const RSeq& s) {
    if (s.size() < 4) throw std::domain_error("higher_turan: require length >= 4");
    for (std::size_t w = 0; w + 3 < s.size(); ++w) {
        const Rational &a0 = s[w], &a1 = s[w + 1], &a2 = s[w + 2], &a3 = s[w + 3];
        const Rational lhs = 4 * (a1 * a1 - a0 * a2) * (a2 * a2 - a1 * a3);
        const Rational mid = a1 * a2 - a0 * a3;
        if (sign(Rational(lhs - mid * mid)) < 0) return {false, w};
    }
    return {};
}

RSeq g_sequence(long n, const Rational& t) {
    if (n < 2) throw std::domain_error("g_sequence requires n >= 2");
    RSeq s(n - 1);
    for (long d = 1; d <= n - 1; ++d) s[d - 1] = eval(g_poly({n, d}), t);
    return s;
}

UniPoly l_transform_poly(const UniPoly& f) {
    if (f.is_zero()) return f;
    RSeq coeffs(f.coeffs().begin(), f.coeffs().end());
    return UniPoly(l_operator(coeffs));
}

}  // namespace speyer
