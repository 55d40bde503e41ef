#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "speyer/gamma.hpp"
#include "speyer/gpoly.hpp"
#include "speyer/report.hpp"
#include "speyer/stats.hpp"
#include "speyer/suites.hpp"

namespace {

using namespace speyer;

void emit(const std::string& body, const std::optional<std::string>& out_path) {
    if (!out_path) {
        std::cout << body;
        return;
    }
    std::ofstream out(*out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + *out_path);
    out << body;
}

std::string fmt_double(double v) {
    char buf[40];
    snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int cmd_gpoly(long n, std::optional<long> d, const std::string& format,
              const std::optional<std::string>& out) {
    std::ostringstream body;
    if (d) {
        const UniPoly g = g_poly({n, *d});
        if (format == "json") {
            nlohmann::json j{{"schema", kReportSchema}, {"n", n}, {"d", *d},
                             {"coeffs", poly_json(g)}};
            body << j.dump(2) << "\n";
        } else {
            body << g.str("t", false) << "\n";
        }
    } else {
        validate({n, 1});
        if (format == "json") {
            nlohmann::json rows = nlohmann::json::array();
            for (long dd = 1; dd <= n - 1; ++dd)
                rows.push_back({{"d", dd}, {"coeffs", poly_json(g_poly({n, dd}))}});
            nlohmann::json j{{"schema", kReportSchema}, {"n", n}, {"g", rows}};
            body << j.dump(2) << "\n";
        } else {
            for (long dd = 1; dd <= n - 1; ++dd)
                body << "g(" << n << "," << dd << ") = " << g_poly({n, dd}).str("t", false)
                     << "\n";
        }
    }
    emit(body.str(), out);
    return 0;
}

int cmd_hpoly(long n, const std::optional<std::string>& t_str, const std::string& format,
              const std::optional<std::string>& out) {
    const BiPoly h = h_closed(n);
    std::ostringstream body;
    if (t_str) {
        const Rational t = parse_rational(*t_str);
        if (sign(t) <= 0)
            std::cerr << "note: t = " << to_string(t)
                      << " is outside t > 0; the verified inequalities assume t > 0\n";
        const UniPoly hx = eval_t(h, t);
        if (format == "json") {
            nlohmann::json j{{"schema", kReportSchema}, {"n", n}, {"t", to_string(t)},
                             {"coeffs", poly_json(hx)}};
            body << j.dump(2) << "\n";
        } else {
            body << hx.str("x", true) << "\n";
        }
    } else {
        if (format == "json") {
            nlohmann::json j{{"schema", kReportSchema}, {"n", n}, {"xcoeffs", poly_json(h)}};
            body << j.dump(2) << "\n";
        } else {
            body << h.str() << "\n";
        }
    }
    emit(body.str(), out);
    return 0;
}

int cmd_gamma(long n, const std::optional<std::string>& t_str, const std::string& format,
              const std::optional<std::string>& out) {
    const GammaVector gv = gamma_recur(n);
    std::ostringstream body;
    if (t_str) {
        const Rational t = parse_rational(*t_str);
        if (format == "json") {
            nlohmann::json vals = nlohmann::json::array();
            for (const UniPoly& g : gv.gammas) vals.push_back(to_string(eval(g, t)));
            nlohmann::json j{{"schema", kReportSchema}, {"n", n}, {"t", to_string(t)},
                             {"gamma", vals}};
            body << j.dump(2) << "\n";
        } else {
            for (size_t i = 0; i < gv.gammas.size(); ++i)
                body << "gamma[" << i << "] = " << to_string(eval(gv.gammas[i], t)) << "\n";
        }
    } else {
        if (format == "json") {
            nlohmann::json j{{"schema", kReportSchema}, {"n", n}, {"gamma", gamma_json(gv)}};
            body << j.dump(2) << "\n";
        } else {
            for (size_t i = 0; i < gv.gammas.size(); ++i)
                body << "gamma[" << i << "] = " << gv.gammas[i].str("t", false) << "\n";
        }
    }
    emit(body.str(), out);
    return 0;
}

int cmd_stats(long n_min, long n_max, const std::vector<std::string>& t_strs,
              const std::string& format, const std::optional<std::string>& out) {
    std::vector<Rational> grid;
    for (const std::string& s : t_strs) grid.push_back(parse_rational(s));
    if (grid.empty()) grid = RunConfig().t_grid;
    for (const Rational& t : grid)
        if (sign(t) <= 0) throw std::invalid_argument("t must be positive");
    if (n_min < 2 || n_max < n_min) throw std::invalid_argument("require 2 <= n-min <= n-max");

    std::vector<NormalityStats> rows;
    for (long n = n_min; n <= n_max; ++n)
        for (const Rational& t : grid) rows.push_back(normality_stats(n, t));

    std::ostringstream body;
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const NormalityStats& s : rows) {
            nlohmann::json j{{"n", s.n},
                             {"t", to_string(s.t)},
                             {"mean", to_string(s.mean)},
                             {"variance", to_string(s.variance)},
                             {"ratio", to_string(s.ratio)}};
            j["clt_dist"] = s.clt_dist ? nlohmann::json(*s.clt_dist) : nlohmann::json();
            j["llt_dist"] = s.llt_dist ? nlohmann::json(*s.llt_dist) : nlohmann::json();
            arr.push_back(std::move(j));
        }
        body << arr.dump(2) << "\n";
    } else {
        body << "n,t,mean,variance,ratio,clt_dist,llt_dist\n";
        for (const NormalityStats& s : rows) {
            body << s.n << "," << to_string(s.t) << "," << to_string(s.mean) << ","
                 << to_string(s.variance) << "," << to_string(s.ratio) << ","
                 << (s.clt_dist ? fmt_double(*s.clt_dist) : "") << ","
                 << (s.llt_dist ? fmt_double(*s.llt_dist) : "") << "\n";
        }
    }
    emit(body.str(), out);
    return 0;
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed config file: " + std::string(e.what()));
    }
    if (j.contains("n_min")) cfg.n_min = j["n_min"].get<long>();
    if (j.contains("n_max")) cfg.n_max = j["n_max"].get<long>();
    if (j.contains("depth")) cfg.depth = j["depth"].get<int>();
    if (j.contains("r_max")) cfg.r_max = j["r_max"].get<int>();
    if (j.contains("jobs")) cfg.jobs = j["jobs"].get<int>();
    if (j.contains("suites")) cfg.suites = j["suites"].get<std::vector<std::string>>();
    if (j.contains("t_grid")) {
        cfg.t_grid.clear();
        for (const auto& s : j["t_grid"]) cfg.t_grid.push_back(parse_rational(s.get<std::string>()));
    }
}

int cmd_report_diff(const std::string& a_path, const std::string& b_path) {
    auto load = [](const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open report: " + path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument("malformed report " + path + ": " + e.what());
        }
        return j;
    };
    const int diffs = report_diff(load(a_path), load(b_path), std::cout);
    std::cout << diffs << " differences\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact g-polynomials of uniform matroids and certified verification "
                 "of their inequality, interlacing, and normality properties"};
    app.require_subcommand(1);

    std::string format = "text";
    std::optional<std::string> out_path;
    auto add_io = [&](CLI::App* cmd, bool csv_ok) {
        cmd->add_option("--format", format,
                        csv_ok ? "output format: text, json or csv" : "output format: text or json")
            ->check(csv_ok ? CLI::IsMember({"text", "json", "csv"})
                           : CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", out_path, "write the output to this path");
    };

    long n = 0, d_val = 0;
    std::optional<std::string> t_pin;

    CLI::App* gp = app.add_subcommand("gpoly", "print g-polynomials of U_{n,d}");
    gp->add_option("n,--n", n, "ground set size (n >= 2)")->required();
    CLI::Option* d_opt = gp->add_option("d,--d", d_val, "rank (1 <= d <= n-1); omit for every d");
    add_io(gp, false);

    CLI::App* hp = app.add_subcommand("hpoly", "print the generating polynomial h_n(x;t)");
    hp->add_option("n,--n", n, "index (n >= 2)")->required();
    hp->add_option("--t", t_pin, "pin t to an exact rational \"p/q\"");
    add_io(hp, false);

    CLI::App* gm = app.add_subcommand("gamma", "print the gamma vector of h_n");
    gm->add_option("n,--n", n, "index (n >= 2)")->required();
    gm->add_option("--t", t_pin, "evaluate the gamma entries at t = \"p/q\"");
    add_io(gm, false);

    long n_min = 2, n_max = 30;
    std::vector<std::string> t_strs;
    CLI::App* st = app.add_subcommand("stats", "normality diagnostics over an (n, t) grid");
    st->add_option("--n-min", n_min, "first n (default 2)");
    st->add_option("--n-max", n_max, "last n (default 30)");
    st->add_option("--t", t_strs, "grid point \"p/q\" (repeatable)");
    add_io(st, true);

    RunConfig cfg;
    std::vector<std::string> suites_csv;
    std::string config_path;
    CLI::App* vf = app.add_subcommand("verify", "run verification suites and emit a report");
    CLI::Option* o_nmin = vf->add_option("--n-min", cfg.n_min, "first n (default 2)");
    CLI::Option* o_nmax = vf->add_option("--n-max", cfg.n_max, "last n (default 30)");
    CLI::Option* o_t = vf->add_option("--t", t_strs, "grid point \"p/q\" (repeatable)");
    CLI::Option* o_depth = vf->add_option("--depth", cfg.depth, "log-concavity depth (default 5)");
    CLI::Option* o_rmax = vf->add_option("--r-max", cfg.r_max, "Laguerre sweep bound (default 3)");
    CLI::Option* o_suites =
        vf->add_option("--suites", suites_csv, "comma-separated suite list (default: all)")
            ->delimiter(',');
    CLI::Option* o_jobs = vf->add_option("--jobs", cfg.jobs, "worker threads (default 1)");
    vf->add_option("--config", config_path, "JSON config file; explicit flags win");
    add_io(vf, true);

    CLI::App* rd = app.add_subcommand("report-diff", "compare two verification reports");
    std::string diff_a, diff_b;
    rd->add_option("a", diff_a, "first report JSON")->required();
    rd->add_option("b", diff_b, "second report JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gp->parsed()) {
            std::optional<long> d;
            if (d_opt->count() > 0) d = d_val;
            return cmd_gpoly(n, d, format, out_path);
        }
        if (hp->parsed()) return cmd_hpoly(n, t_pin, format, out_path);
        if (gm->parsed()) return cmd_gamma(n, t_pin, format, out_path);
        if (st->parsed()) return cmd_stats(n_min, n_max, t_strs, format, out_path);
        if (rd->parsed()) return cmd_report_diff(diff_a, diff_b);

        // verify: config file first, explicit flags win
        if (!config_path.empty()) {
            RunConfig flags = cfg;
            cfg = RunConfig();
            apply_config_file(cfg, config_path);
            if (o_nmin->count()) cfg.n_min = flags.n_min;
            if (o_nmax->count()) cfg.n_max = flags.n_max;
            if (o_depth->count()) cfg.depth = flags.depth;
            if (o_rmax->count()) cfg.r_max = flags.r_max;
            if (o_jobs->count()) cfg.jobs = flags.jobs;
        }
        if (o_t->count() || (config_path.empty() && !t_strs.empty())) {
            cfg.t_grid.clear();
            for (const std::string& s : t_strs) cfg.t_grid.push_back(parse_rational(s));
        }
        if (o_suites->count()) cfg.suites = suites_csv;

        try {
            validate_config(cfg);
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        const VerificationReport report = run_suites(cfg);
        std::string body;
        if (format == "json")
            body = report_json(report).dump(2) + "\n";
        else if (format == "csv")
            body = report_csv(report);
        else
            body = report_text(report);
        emit(body, out_path);
        return all_proven_pass(report) ? 0 : 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
