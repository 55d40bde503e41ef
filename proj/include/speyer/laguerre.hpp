#pragma once

#include <optional>
#include <string>
#include <vector>

#include "speyer/poly.hpp"
#include "speyer/report.hpp"

namespace speyer {

// f'^2 - f f''.
UniPoly laguerre_form(const UniPoly& f);

// L_r(f) = (1/2) sum_{k=0}^{2r} (-1)^{r+k} C(2r,k) f^(k) f^(2r-k).
// Reduces to laguerre_form for r = 1. Requires r >= 1.
UniPoly generalized_laguerre_form(const UniPoly& f, int r);

struct LaguerreReport {
    std::string target;
    int r = 1;
    bool holds = false;
    std::optional<Rational> witness;  // a point where the form is negative
};

// Global nonnegativity of the classical form, with a concrete witness point
// when it fails.
LaguerreReport laguerre_holds(const UniPoly& f, std::string target = {});

// Records nonneg_on_reals(L_r(h_n(x;t))) over the whole (n, r, t) box.
// Every entry is experimental: an inequality failing here is a finding to
// report, not a test failure.
std::vector<ReportEntry> conjecture_sweep(long n_max, int r_max,
                                          const std::vector<Rational>& t_grid);

// Flat "n,r,t,holds" summary of a sweep.
std::string sweep_csv(const std::vector<ReportEntry>& entries);

}  // namespace speyer
