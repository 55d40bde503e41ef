#pragma once

#include <optional>

#include "speyer/poly.hpp"

namespace speyer {

// h_n(x; t0) as a polynomial in x, assembled coefficientwise from the
// closed form at a pinned rational t0.
UniPoly h_at_t(long n, const Rational& t);

// Exact coefficient-distribution moments of h_n(x;t) at x = 1. mean equals
// n/2 identically; variance has the equivalent closed form below, and the
// two must agree exactly.
Rational mean(long n, const Rational& t);
Rational variance(long n, const Rational& t);

// (n-1)/(4(t+1)) * ratio(n,t) - n/(4(t+1)).
Rational variance_closed(long n, const Rational& t);

// f_{n+1}(1) / f_n(1), exact.
Rational ratio(long n, const Rational& t);

// The float boundary of the library: everything below this line is IEEE
// double; everything above it is exact.
double rat_double(const Rational& x);

// Standard normal CDF via the Zelen & Severo polynomial-in-1/(1+px)
// approximation (Abramowitz & Stegun, Handbook of Mathematical Functions,
// formula 26.2.17): absolute error < 7.5e-8 everywhere.
double normal_cdf(double x);

// sup_x | sum_{k <= mu + x sigma} p(n,k) - Phi(x) | where p(n,k) is the
// normalized coefficient distribution of h_n(x;t). The sup is attained at
// the jump points, so both sides of every jump are inspected. Requires a
// positive variance.
double clt_distance(long n, const Rational& t);

// sup over the grid x in [-6, 6], step 1/100, of
// | sigma p(n, floor(mu + x sigma)) - exp(-x^2/2)/sqrt(2 pi) |.
double llt_distance(long n, const Rational& t);

struct NormalityStats {
    long n = 0;
    Rational t;
    Rational mean;
    Rational variance;
    Rational ratio;
    std::optional<double> clt_dist;  // absent when the variance vanishes
    std::optional<double> llt_dist;
};

NormalityStats normality_stats(long n, const Rational& t);

}  // namespace speyer
