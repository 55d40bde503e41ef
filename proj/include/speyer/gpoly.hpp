#pragma once

#include <vector>

#include "speyer/poly.hpp"
#include "speyer/report.hpp"

namespace speyer {

// Index pair of the uniform matroid U_{n,d}: ground set size n, rank d.
struct GIndex {
    long n = 0;
    long d = 0;
};

// Throws std::domain_error unless n >= 2 and 1 <= d <= n-1.
void validate(const GIndex& idx);

// Coefficient of t^i in g_{n,d}(t): C(n-i-1, d-i) * C(n-d-1, i-1).
// Vanishes once i exceeds min(d, n-d). Requires i >= 1.
BigInt s_coeff(const GIndex& idx, long i);

// Speyer's g-polynomial of U_{n,d} as a polynomial in t. No constant term;
// all coefficients are positive integers.
UniPoly g_poly(const GIndex& idx);

// h_n(x;t) = sum_{d=1}^{n-1} g_{n,d}(t) x^d assembled from the closed form.
// x-degree n-1, leading x-coefficient t.
BiPoly h_closed(long n);

// Same polynomial built from the seeds h_2 = tx, h_3 = tx + tx^2 and the
// three-term recurrence h_{m+2} = (1+x) h_{m+1} + tx h_m.
BiPoly h_recur(long n);

// Coefficient polynomials of the derivative recurrences, instantiated at a
// concrete n:
//   A = (n-1)(x-1)
//   B = -n(2tx + x + 1)
//   C = x(x^2 + 4tx + 2x + 1)
//   At = (n-1)((n-2)x^3 + (4nt+n-2t+2)x^2 - (4nt+n-6t-4)x - n)
//   Bt = -n((nt-5t-2)x^3 + (4nt^2+2nt-8t^2+n-6t-5)x^2 + (5nt+2n-9t-4)x + n-1)
struct RecurrenceCoeffs {
    BiPoly A, B, C, Atilde, Btilde;
};
RecurrenceCoeffs recurrence_coeffs(long n);

// Checks, for every 2 <= n <= n_max, three exact bivariate identities:
//   eq1: h_{n+2} - (1+x) h_{n+1} - tx h_n        = 0
//   eq2: A h_{n+1} - B h_n - C h_n'              = 0
//   eq3: At h_{n+1} - Bt h_n - C^2 h_n''         = 0
// with ' the x-derivative. Failures become report entries, not errors.
std::vector<ReportEntry> verify_recurrences(long n_max);

}  // namespace speyer
