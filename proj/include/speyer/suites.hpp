#pragma once

#include <string>
#include <vector>

#include "speyer/exactnum.hpp"
#include "speyer/report.hpp"

namespace speyer {

// Verification sweep configuration. The echoed report config covers only the
// fields that determine the entries (grid, depth, r_max, suites); execution
// parameters such as jobs never influence report bytes.
struct RunConfig {
    long n_min = 2;
    long n_max = 30;
    std::vector<Rational> t_grid;      // default {1/2, 1, 2, 7/3}
    int depth = 5;                     // log-concavity certification depth
    int r_max = 3;                     // generalized Laguerre sweep bound
    std::vector<std::string> suites;   // default: every suite
    int jobs = 1;

    RunConfig();
};

// Canonical suite order: recurrences, realroots, interlacing, logconcavity,
// turan, gamma, stats, laguerre, conjecture.
const std::vector<std::string>& all_suites();

// Throws std::invalid_argument with a user-facing message on a bad grid,
// unknown suite name, or a nonpositive t when a t-consuming suite is
// selected.
void validate_config(const RunConfig& cfg);

// Runs the selected suites over the grid. Entries are deterministic given
// the config: ordered by suite, then n, then the remaining parameters,
// independent of the number of worker threads.
VerificationReport run_suites(const RunConfig& cfg);

}  // namespace speyer
