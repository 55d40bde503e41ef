#include "speyer/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "speyer/gamma.hpp"
#include "speyer/gpoly.hpp"
#include "speyer/laguerre.hpp"
#include "speyer/realroots.hpp"
#include "speyer/seqineq.hpp"
#include "speyer/stats.hpp"

namespace speyer {

RunConfig::RunConfig()
    : t_grid{rational(1, 2), rational(1, 1), rational(2, 1), rational(7, 3)},
      suites(all_suites()) {}

const std::vector<std::string>& all_suites() {
    static const std::vector<std::string> kSuites = {
        "recurrences", "realroots", "interlacing", "logconcavity", "turan",
        "gamma",       "stats",     "laguerre",    "conjecture"};
    return kSuites;
}

namespace {

bool consumes_t(const std::string& suite) { return suite != "recurrences"; }

using Task = std::function<ReportEntry()>;

std::vector<ReportEntry> run_tasks(const std::vector<Task>& tasks, int jobs) {
    std::vector<ReportEntry> results(tasks.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
        return results;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            results[i] = tasks[i]();
        }
    };
    std::vector<std::thread> pool;
    const int threads = std::min<int>(jobs, static_cast<int>(tasks.size()));
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
    return results;
}

ReportEntry guarded(const std::string& claim, std::map<std::string, std::string> params,
                    bool experimental, const std::function<std::pair<bool, std::string>()>& run) {
    ReportEntry e;
    e.claim = claim;
    e.params = std::move(params);
    e.experimental = experimental;
    try {
        auto [pass, witness] = run();
        e.pass = pass;
        if (!witness.empty()) e.witness = witness;
    } catch (const std::exception& ex) {
        e.pass = false;
        e.witness = std::string("exception: ") + ex.what();
    }
    return e;
}

std::pair<bool, std::string> plain(bool pass) { return {pass, {}}; }

void add_realroots(const RunConfig& cfg, std::vector<Task>& tasks) {
    for (long n = std::max(2L, cfg.n_min); n <= cfg.n_max; ++n)
        for (const Rational& t : cfg.t_grid)
            tasks.push_back([n, t] {
                return guarded("thm3.1", {{"n", std::to_string(n)}, {"t", to_string(t)}}, false,
                               [&] { return plain(is_real_rooted(eval_t(h_closed(n), t))); });
            });
}

void add_interlacing(const RunConfig& cfg, std::vector<Task>& tasks) {
    for (long n = std::max(2L, cfg.n_min); n <= cfg.n_max; ++n)
        for (const Rational& t : cfg.t_grid)
            tasks.push_back([n, t] {
                return guarded("thm3.3", {{"n", std::to_string(n)}, {"t", to_string(t)}}, false,
                               [&] {
                                   const UniPoly fn = eval_t(h_closed(n), t);
                                   const UniPoly fn1 = eval_t(h_closed(n + 1), t);
                                   return plain(interlaces(fn, fn1, false));
                               });
            });
}

void add_logconcavity(const RunConfig& cfg, std::vector<Task>& tasks) {
    for (long n = std::max(4L, cfg.n_min); n <= cfg.n_max; ++n)
        for (const Rational& t : cfg.t_grid)
            tasks.push_back([n, t, k = cfg.depth] {
                return guarded("thm1.3",
                               {{"k", std::to_string(k)},
                                {"n", std::to_string(n)},
                                {"t", to_string(t)}},
                               false, [&]() -> std::pair<bool, std::string> {
                                   const auto res = is_k_log_concave(g_sequence(n, t), k);
                                   if (res.ok) return {true, {}};
                                   return {false, "depth=" + std::to_string(res.depth) +
                                                      " index=" + std::to_string(res.index)};
                               });
            });
}

void add_turan(const RunConfig& cfg, std::vector<Task>& tasks) {
    for (long n = std::max(5L, cfg.n_min); n <= cfg.n_max; ++n)
        for (const Rational& t : cfg.t_grid)
            tasks.push_back([n, t] {
                return guarded("thm1.5", {{"n", std::to_string(n)}, {"t", to_string(t)}}, false,
                               [&]() -> std::pair<bool, std::string> {
                                   const auto res = higher_turan(g_sequence(n, t));
                                   if (res.ok) return {true, {}};
                                   return {false, "index=" + std::to_string(res.index)};
                               });
            });
}

void add_gamma(const RunConfig& cfg, std::vector<Task>& tasks) {
    for (long n = std::max(2L, cfg.n_min); n <= cfg.n_max; ++n) {
        const std::string ns = std::to_string(n);
        tasks.push_back([n, ns] {
            return guarded("thm6.1-rec", {{"n", ns}}, false, [&] {
                return plain(gamma_recur(n).gammas ==
                             gamma_expand(h_closed(n), static_cast<int>(n)).gammas);
            });
        });
        tasks.push_back([n, ns] {
            return guarded("thm6.1-a011973", {{"n", ns}}, false, [&] {
                const GammaVector gv = gamma_recur(n);
                for (long i = 0; i < static_cast<long>(gv.gammas.size()); ++i)
                    if (eval(gv.gammas[i], Rational(1)) != Rational(binomial(n - i - 1, i - 1)))
                        return plain(false);
                return plain(true);
            });
        });
        tasks.push_back([n, ns] {
            return guarded("thm6.1-parity", {{"n", ns}}, false, [&] {
                const UniPoly v = h_at_minus_one(n);
                if (n % 2 == 1) return plain(v.is_zero());
                const UniPoly g = gamma_recur(n).gammas[n / 2];
                return plain(v == (n % 4 == 0 ? g : -g));
            });
        });
        for (const Rational& t : cfg.t_grid)
            tasks.push_back([n, ns, t] {
                return guarded("thm6.1-pos", {{"n", ns}, {"t", to_string(t)}}, false,
                               [&] { return plain(gamma_positive(n, t)); });
            });
    }
}

void add_stats(const RunConfig& cfg, std::vector<Task>& tasks) {
    for (long n = std::max(2L, cfg.n_min); n <= cfg.n_max; ++n) {
        const std::string ns = std::to_string(n);
        for (const Rational& t : cfg.t_grid) {
            tasks.push_back([n, ns, t] {
                return guarded("thm7.1-mean", {{"n", ns}, {"t", to_string(t)}}, false,
                               [&] { return plain(mean(n, t) == rational(n, 2)); });
            });
            tasks.push_back([n, ns, t] {
                return guarded("thm7.1-var", {{"n", ns}, {"t", to_string(t)}}, false,
                               [&] { return plain(variance(n, t) == variance_closed(n, t)); });
            });
            tasks.push_back([n, ns, t] {
                return guarded("thm7.1-ratio-drift", {{"n", ns}, {"t", to_string(t)}}, false,
                               [&] {
                                   return plain(ratio(n + 1, t) ==
                                                Rational(2) + t / ratio(n, t));
                               });
            });
        }
    }
    for (const Rational& t : cfg.t_grid) {
        tasks.push_back([t, n_min = std::max(3L, cfg.n_min), n_max = cfg.n_max] {
            return guarded("thm7.3-var-increasing",
                           {{"n_max", std::to_string(n_max)},
                            {"n_min", std::to_string(n_min)},
                            {"t", to_string(t)}},
                           false, [&] {
                               Rational prev = variance(n_min, t);
                               for (long n = n_min + 1; n <= n_max; ++n) {
                                   const Rational cur = variance(n, t);
                                   if (!(cur > prev)) return plain(false);
                                   prev = cur;
                               }
                               return plain(true);
                           });
        });
    }
    // fixed-scale asymptotics, independent of the grid
    tasks.push_back([] {
        return guarded("thm7.1-ratio-limit", {{"n", "200"}, {"t", "1"}}, false, [] {
            const double r = rat_double(ratio(200, Rational(1)));
            return plain(std::fabs(r - (1.0 + std::sqrt(2.0))) < 1e-10);
        });
    });
    tasks.push_back([] {
        return guarded("thm7.1-var-asymp", {{"n", "200"}, {"t", "1"}}, false, [] {
            const double s2 = rat_double(variance(200, Rational(1)));
            return plain(std::fabs(s2 * 4.0 * std::sqrt(2.0) / 200.0 - 1.0) <= 0.02);
        });
    });
    tasks.push_back([] {
        return guarded("thm7.1-clt-trend", {{"n", "50,100,200"}, {"t", "1"}}, false, [] {
            const double a = clt_distance(50, Rational(1));
            const double b = clt_distance(100, Rational(1));
            const double c = clt_distance(200, Rational(1));
            return plain(a > b && b > c && c < a / 2.0);
        });
    });
    tasks.push_back([] {
        return guarded("thm7.1-llt-trend", {{"n", "50,100,200"}, {"t", "1"}}, false, [] {
            const double a = llt_distance(50, Rational(1));
            const double b = llt_distance(100, Rational(1));
            const double c = llt_distance(200, Rational(1));
            return plain(a > b && b > c);
        });
    });
}

void add_laguerre(const RunConfig& cfg, std::vector<Task>& tasks) {
    for (long n = std::max(2L, cfg.n_min); n <= cfg.n_max; ++n) {
        const std::string ns = std::to_string(n);
        for (const Rational& t : cfg.t_grid)
            tasks.push_back([n, ns, t] {
                return guarded("eq8.1-h", {{"n", ns}, {"t", to_string(t)}}, false,
                               [&]() -> std::pair<bool, std::string> {
                                   const auto rep = laguerre_holds(eval_t(h_closed(n), t));
                                   if (rep.holds) return {true, {}};
                                   return {false, to_string(*rep.witness)};
                               });
            });
        for (long d = 1; d <= n - 1; ++d)
            tasks.push_back([n, ns, d] {
                return guarded("eq8.1-g", {{"d", std::to_string(d)}, {"n", ns}}, false,
                               [&]() -> std::pair<bool, std::string> {
                                   const auto rep = laguerre_holds(g_poly({n, d}));
                                   if (rep.holds) return {true, {}};
                                   return {false, to_string(*rep.witness)};
                               });
            });
    }
}

void add_conjecture(const RunConfig& cfg, std::vector<Task>& tasks) {
    for (long n = std::max(2L, cfg.n_min); n <= cfg.n_max; ++n)
        for (int r = 1; r <= cfg.r_max; ++r)
            for (const Rational& t : cfg.t_grid)
                tasks.push_back([n, r, t] {
                    return guarded("conj8.3",
                                   {{"n", std::to_string(n)},
                                    {"r", std::to_string(r)},
                                    {"t", to_string(t)}},
                                   true, [&]() -> std::pair<bool, std::string> {
                                       const UniPoly form = generalized_laguerre_form(
                                           eval_t(h_closed(n), t), r);
                                       return plain(nonneg_on_reals(form));
                                   });
                });
}

}  // namespace

void validate_config(const RunConfig& cfg) {
    if (cfg.n_min < 2) throw std::invalid_argument("n-min must be at least 2");
    if (cfg.n_max < cfg.n_min) throw std::invalid_argument("n-max must be >= n-min");
    if (cfg.t_grid.empty()) throw std::invalid_argument("t grid must not be empty");
    if (cfg.depth < 1) throw std::invalid_argument("depth must be at least 1");
    if (cfg.r_max < 1) throw std::invalid_argument("r-max must be at least 1");
    if (cfg.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
    if (cfg.suites.empty()) throw std::invalid_argument("no suites selected");
    for (const std::string& s : cfg.suites) {
        if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
            throw std::invalid_argument("unknown suite \"" + s + "\"");
        if (consumes_t(s))
            for (const Rational& t : cfg.t_grid)
                if (sign(t) <= 0)
                    throw std::invalid_argument("t must be positive for suite \"" + s + "\"");
    }
}

VerificationReport run_suites(const RunConfig& cfg) {
    validate_config(cfg);

    // normalized suite subset in canonical order
    std::vector<std::string> selected;
    for (const std::string& s : all_suites())
        if (std::find(cfg.suites.begin(), cfg.suites.end(), s) != cfg.suites.end())
            selected.push_back(s);

    std::vector<Task> tasks;
    for (const std::string& s : selected) {
        if (s == "recurrences") {
            // one task per n keeps the sweep parallel without re-deriving
            // the whole h table in a single worker
            for (long n = 2; n <= cfg.n_max; ++n)
                for (int eq = 1; eq <= 3; ++eq)
                    tasks.push_back([n, eq] {
                        return guarded("thm2.1-eq" + std::to_string(eq),
                                       {{"n", std::to_string(n)}}, false, [&] {
                                           const BiPoly hn = h_closed(n);
                                           const BiPoly hn1 = h_closed(n + 1);
                                           const RecurrenceCoeffs rc = recurrence_coeffs(n);
                                           const BiPoly one_plus_x =
                                               BiPoly::constant(Rational(1)) + BiPoly::x();
                                           const BiPoly tx = BiPoly::term(Rational(1), 1, 1);
                                           if (eq == 1)
                                               return plain((h_closed(n + 2) - one_plus_x * hn1 -
                                                             tx * hn)
                                                                .is_zero());
                                           if (eq == 2)
                                               return plain((rc.A * hn1 - rc.B * hn -
                                                             rc.C * derivative_x(hn))
                                                                .is_zero());
                                           return plain((rc.Atilde * hn1 - rc.Btilde * hn -
                                                         rc.C * rc.C * derivative_x(hn, 2))
                                                            .is_zero());
                                       });
                    });
        } else if (s == "realroots") {
            add_realroots(cfg, tasks);
        } else if (s == "interlacing") {
            add_interlacing(cfg, tasks);
        } else if (s == "logconcavity") {
            add_logconcavity(cfg, tasks);
        } else if (s == "turan") {
            add_turan(cfg, tasks);
        } else if (s == "gamma") {
            add_gamma(cfg, tasks);
        } else if (s == "stats") {
            add_stats(cfg, tasks);
        } else if (s == "laguerre") {
            add_laguerre(cfg, tasks);
        } else if (s == "conjecture") {
            add_conjecture(cfg, tasks);
        }
    }

    VerificationReport report;
    nlohmann::json cfg_json;
    cfg_json["n_min"] = cfg.n_min;
    cfg_json["n_max"] = cfg.n_max;
    nlohmann::json grid = nlohmann::json::array();
    for (const Rational& t : cfg.t_grid) grid.push_back(to_string(t));
    cfg_json["t_grid"] = std::move(grid);
    cfg_json["depth"] = cfg.depth;
    cfg_json["r_max"] = cfg.r_max;
    cfg_json["suites"] = selected;
    report.config = std::move(cfg_json);
    report.entries = run_tasks(tasks, cfg.jobs);
    return report;
}

}  // namespace speyer
