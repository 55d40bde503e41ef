#include "speyer/laguerre.hpp"

#include <stdexcept>

#include "speyer/gpoly.hpp"
#include "speyer/realroots.hpp"

namespace speyer {

UniPoly laguerre_form(const UniPoly& f) {
    const UniPoly d1 = derivative(f);
    return d1 * d1 - f * derivative(f, 2);
}

UniPoly generalized_laguerre_form(const UniPoly& f, int r) {
    if (r < 1) throw std::domain_error("generalized_laguerre_form: require r >= 1");
    std::vector<UniPoly> deriv(2 * r + 1);
    deriv[0] = f;
    for (int k = 1; k <= 2 * r; ++k) deriv[k] = derivative(deriv[k - 1]);
    UniPoly sum;
    for (int k = 0; k <= 2 * r; ++k) {
        UniPoly term = Rational(binomial(2 * r, k)) * (deriv[k] * deriv[2 * r - k]);
        if ((r + k) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return rational(1, 2) * sum;
}

namespace {

// Some rational point where p is negative; p is known not to be
// nonnegative. Sample once inside every maximal root-free region.
Rational negative_point(const UniPoly& p) {
    const RootIsolation iso = isolate_roots(p);
    std::vector<Rational> samples;
    if (iso.intervals.empty()) {
        samples.emplace_back(0);
    } else {
        auto lower = [](const RootInterval& ri) { return ri.exact ? *ri.exact : ri.lo; };
        auto upper = [](const RootInterval& ri) { return ri.exact ? *ri.exact : ri.hi; };
        samples.push_back(lower(iso.intervals.front()) - 1);
        for (size_t i = 0; i + 1 < iso.intervals.size(); ++i)
            samples.push_back((upper(iso.intervals[i]) + lower(iso.intervals[i + 1])) / 2);
        samples.push_back(upper(iso.intervals.back()) + 1);
    }
    for (const Rational& x : samples)
        if (sign(eval(p, x)) < 0) return x;
    throw std::logic_error("negative_point: no negative sample for a non-nonnegative polynomial");
}

}  // namespace

LaguerreReport laguerre_holds(const UniPoly& f, std::string target) {
    LaguerreReport rep;
    rep.target = std::move(target);
    rep.r = 1;
    const UniPoly form = laguerre_form(f);
    rep.holds = nonneg_on_reals(form);
    if (!rep.holds) rep.witness = negative_point(form);
    return rep;
}

std::vector<ReportEntry> conjecture_sweep(long n_max, int r_max,
                                          const std::vector<Rational>& t_grid) {
    if (n_max < 2) throw std::domain_error("conjecture_sweep: require n_max >= 2");
    if (r_max < 1) throw std::domain_error("conjecture_sweep: require r_max >= 1");
    std::vector<ReportEntry> entries;
    for (long n = 2; n <= n_max; ++n) {
        const BiPoly hn = h_closed(n);
        for (int r = 1; r <= r_max; ++r) {
            for (const Rational& t : t_grid) {
                const UniPoly form = generalized_laguerre_form(eval_t(hn, t), r);
                const bool holds = nonneg_on_reals(form);
                entries.push_back({"conj8.3",
                                   {{"n", std::to_string(n)},
                                    {"r", std::to_string(r)},
                                    {"t", to_string(t)}},
                                   holds,
                                   true,
                                   holds ? std::nullopt
                                         : std::make_optional(to_string(negative_point(form)))});
            }
        }
    }
    return entries;
}

std::string sweep_csv(const std::vector<ReportEntry>& entries) {
    std::string out = "n,r,t,holds\n";
    for (const ReportEntry& e : entries) {
        out += e.params.at("n") + "," + e.params.at("r") + "," + e.params.at("t") + "," +
               (e.pass ? "true" : "false") + "\n";
    }
    return out;
}

}  // namespace speyer
