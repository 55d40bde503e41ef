#include "speyer/gpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace speyer {

void validate(const GIndex& idx) {
    if (idx.n < 2 || idx.d < 1 || idx.d > idx.n - 1)
        throw std::domain_error("invalid uniform-matroid index: require n >= 2 and 1 <= d <= n-1");
}

BigInt s_coeff(const GIndex& idx, long i) {
    validate(idx);
    if (i < 1) throw std::domain_error("s_coeff: require i >= 1");
    return binomial(idx.n - i - 1, idx.d - i) * binomial(idx.n - idx.d - 1, i - 1);
}

UniPoly g_poly(const GIndex& idx) {
    validate(idx);
    const long top = std::min(idx.d, idx.n - idx.d);
    std::vector<Rational> c(top + 1);
    for (long i = 1; i <= top; ++i) c[i] = Rational(s_coeff(idx, i));
    return UniPoly(std::move(c));
}

BiPoly h_closed(long n) {
    if (n < 2) throw std::domain_error("h_n requires n >= 2");
    std::vector<UniPoly> xc(n);
    for (long d = 1; d <= n - 1; ++d) xc[d] = g_poly({n, d});
    return BiPoly(std::move(xc));
}

BiPoly h_recur(long n) {
    if (n < 2) throw std::domain_error("h_n requires n >= 2");
    BiPoly prev = BiPoly::term(Rational(1), 1, 1);                            // h_2 = tx
    BiPoly cur = prev + BiPoly::term(Rational(1), 1, 2);                      // h_3 = tx + tx^2
    if (n == 2) return prev;
    const BiPoly one_plus_x = BiPoly::constant(Rational(1)) + BiPoly::x();
    const BiPoly tx = BiPoly::term(Rational(1), 1, 1);
    for (long m = 4; m <= n; ++m) {
        BiPoly next = one_plus_x * cur + tx * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

RecurrenceCoeffs recurrence_coeffs(long n) {
    if (n < 2) throw std::domain_error("recurrence_coeffs requires n >= 2");
    const BiPoly x = BiPoly::x();
    const BiPoly t = BiPoly::t();
    const BiPoly one = BiPoly::constant(Rational(1));
    const BiPoly x2 = x * x, x3 = x2 * x;

    RecurrenceCoeffs rc;
    rc.A = (n - 1) * (x - one);
    rc.B = -Rational(n) * (2 * (t * x) + x + one);
    rc.C = x * (x2 + 4 * (t * x) + 2 * x + one);
    rc.Atilde = (n - 1) * ((n - 2) * x3 + ((4 * n - 2) * t + (n + 2) * one) * x2 -
                           ((4 * n - 6) * t + (n - 4) * one) * x - n * one);
    rc.Btilde = -Rational(n) *
                (((n - 5) * t - 2 * one) * x3 +
                 ((4 * n - 8) * (t * t) + (2 * n - 6) * t + (n - 5) * one) * x2 +
                 ((5 * n - 9) * t + (2 * n - 4) * one) * x + (n - 1) * one);
    return rc;
}

std::vector<ReportEntry> verify_recurrences(long n_max) {
    if (n_max < 2) throw std::domain_error("verify_recurrences requires n_max >= 2");
    const BiPoly one_plus_x = BiPoly::constant(Rational(1)) + BiPoly::x();
    const BiPoly tx = BiPoly::term(Rational(1), 1, 1);

    std::vector<ReportEntry> entries;
    BiPoly hn = h_closed(2), hn1 = h_closed(3);
    for (long n = 2; n <= n_max; ++n) {
        const BiPoly hn2 = h_closed(n + 2);
        const RecurrenceCoeffs rc = recurrence_coeffs(n);

        const bool eq1 = (hn2 - one_plus_x * hn1 - tx * hn).is_zero();
        const bool eq2 = (rc.A * hn1 - rc.B * hn - rc.C * derivative_x(hn)).is_zero();
        const bool eq3 =
            (rc.Atilde * hn1 - rc.Btilde * hn - rc.C * rc.C * derivative_x(hn, 2)).is_zero();

        const std::string ns = std::to_string(n);
        entries.push_back({"thm2.1-eq1", {{"n", ns}}, eq1, false, std::nullopt});
        entries.push_back({"thm2.1-eq2", {{"n", ns}}, eq2, false, std::nullopt});
        entries.push_back({"thm2.1-eq3", {{"n", ns}}, eq3, false, std::nullopt});

        hn = std::move(hn1);
        hn1 = hn2;
    }
    return entries;
}

}  // namespace speyer
