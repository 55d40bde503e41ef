#pragma once

#include <vector>

#include "speyer/poly.hpp"

namespace speyer {

// Mirroring the coefficients about darga/2 reproduces f. Requires
// darga >= degree; f must be nonzero.
bool is_palindromic(const UniPoly& f, int darga);
bool is_palindromic(const BiPoly& f, int darga);

// Coefficients of f in the basis x^i (1+x)^(darga-2i), i = 0..floor(darga/2).
struct GammaVector {
    int darga = 0;
    std::vector<UniPoly> gammas;  // entries are polynomials in t
};

// Expansion by lowest-exponent peeling; the basis change is unitriangular in
// that order, so the residual must vanish exactly. Throws on non-palindromic
// input.
GammaVector gamma_expand(const BiPoly& f, int darga);
std::vector<Rational> gamma_expand(const UniPoly& f, int darga);

// gamma vector of h_n from gamma_{n,i} = gamma_{n-1,i} + t gamma_{n-2,i-1}
// with seeds gamma_2 = gamma_3 = (0, t). Equals gamma_expand(h_n, n).
GammaVector gamma_recur(long n);

// Every gamma_{n,i}(t) >= 0 at the given rational t.
bool gamma_positive(long n, const Rational& t);

// h_n(-1; t): zero for odd n, (-1)^(n/2) gamma_{n,n/2}(t) for even n.
UniPoly h_at_minus_one(long n);

}  // namespace speyer
