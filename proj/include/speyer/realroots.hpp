#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "speyer/poly.hpp"

namespace speyer {

// Signed-remainder chain: p_0 = f, p_1 = f', p_{k+1} = -rem(p_{k-1}, p_k),
// ending at the last nonzero member (a constant for squarefree f, otherwise
// the gcd of f and f'). Members are rescaled to primitive integer form;
// positive scaling never changes a sign variation.
struct SturmChain {
    std::vector<UniPoly> polys;
};

SturmChain sturm_chain(const UniPoly& f);

// Sign variations of the chain at a point (zero values dropped), and the
// limits at the two infinities. For squarefree f and a < b,
// variations(a) - variations(b) counts the roots in (a, b].
int sign_variations(const SturmChain& chain, const Rational& at);
int sign_variations_neg_inf(const SturmChain& chain);
int sign_variations_pos_inf(const SturmChain& chain);

// 1 + max_i |a_i| / |a_deg|; every real root lies strictly inside (-M, M).
Rational cauchy_bound(const UniPoly& f);

// Number of distinct real roots in (lo, hi]; a missing bound means the
// corresponding infinity. Requires lo < hi when both are present.
long count_real_roots(const UniPoly& f,
                      const std::optional<Rational>& lo = std::nullopt,
                      const std::optional<Rational>& hi = std::nullopt);

// Every complex root of f is real (multiplicities are irrelevant: the test
// runs on f / gcd(f, f')).
bool is_real_rooted(const UniPoly& f);

// One isolated real root: either pinned exactly (lo = hi = *exact) or the
// unique root of the defining squarefree part inside the open interval.
struct RootInterval {
    Rational lo, hi;
    std::optional<Rational> exact;
};

// Sorted, pairwise disjoint isolation of the distinct real roots of f.
struct RootIsolation {
    std::vector<RootInterval> intervals;
};

// Sturm-count bisection inside (-M, M). A probe point that evaluates to
// zero (bisection midpoint, trial gap endpoint, or the simplest rational of
// a freshly isolated interval) pins that root exactly.
RootIsolation isolate_roots(const UniPoly& f);

// Narrows every non-exact interval to width <= `width` by sign bisection,
// promoting probe hits to exact roots. Throws on width <= 0 and when the
// isolation does not belong to f.
RootIsolation refine(const RootIsolation& iso, const UniPoly& f, const Rational& width);

// Distinct real roots of f, ascending, each with its multiplicity in f.
// Rational roots use repeated exact division; irrational ones recurse
// through gcd(f, f').
std::vector<std::pair<RootInterval, int>> roots_with_multiplicity(const UniPoly& f);

// Smallest-denominator (then smallest-numerator) rational in the open
// interval (a, b), by Stern-Brocot descent.
Rational simplest_in(const Rational& a, const Rational& b);

// Does g interlace f: sorted root multisets weave in the alternating
// pattern, weak inequalities unless `strict`. Requires deg f - deg g in
// {0, 1} and real-rooted inputs; zero polynomials interlace everything.
// Root equality across f and g is certified through gcd(f, g), never by
// interval coincidence.
bool interlaces(const UniPoly& g, const UniPoly& f, bool strict = false);

// p(x) >= 0 for every real x, decided exactly through the odd-multiplicity
// squarefree part.
bool nonneg_on_reals(const UniPoly& p);

}  // namespace speyer
