#include "speyer/stats.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "speyer/gpoly.hpp"

namespace speyer {

namespace {

void check_args(long n, const Rational& t) {
    if (n < 2) throw std::domain_error("require n >= 2");
    if (sign(t) <= 0) throw std::domain_error("require t > 0");
}

Rational value_at_one(long n, const Rational& t) {
    Rational s(0);
    for (long d = 1; d <= n - 1; ++d) s += eval(g_poly({n, d}), t);
    return s;
}

// Normalized coefficient distribution p(n,k) = g_{n,k}(t) / sum_j g_{n,j}(t)
// as doubles, index 0..n (zero outside 1..n-1), plus mean and sigma.
struct Distribution {
    std::vector<double> p;
    double mu;
    double sigma;
};

Distribution distribution(long n, const Rational& t) {
    if (n < 3) throw std::domain_error("distance diagnostics require n >= 3");
    const Rational var = variance(n, t);
    if (sign(var) == 0) throw std::domain_error("zero variance");
    const UniPoly f = h_at_t(n, t);
    const Rational total = eval(f, Rational(1));
    Distribution dist;
    dist.p.assign(n + 1, 0.0);
    for (long k = 1; k <= n - 1; ++k) dist.p[k] = rat_double(Rational(f.coeff(k) / total));
    dist.mu = static_cast<double>(n) / 2.0;
    dist.sigma = std::sqrt(rat_double(var));
    return dist;
}

}  // namespace

UniPoly h_at_t(long n, const Rational& t) {
    if (n < 2) throw std::domain_error("h_n requires n >= 2");
    std::vector<Rational> c(n);
    for (long d = 1; d <= n - 1; ++d) c[d] = eval(g_poly({n, d}), t);
    return UniPoly(std::move(c));
}

Rational mean(long n, const Rational& t) {
    check_args(n, t);
    const UniPoly f = h_at_t(n, t);
    const Rational f1 = eval(f, Rational(1));
    if (sign(f1) == 0) throw std::domain_error("mean: polynomial vanishes at 1");
    return eval(derivative(f), Rational(1)) / f1;
}

Rational variance(long n, const Rational& t) {
    check_args(n, t);
    const UniPoly f = h_at_t(n, t);
    const Rational f1 = eval(f, Rational(1));
    if (sign(f1) == 0) throw std::domain_error("variance: polynomial vanishes at 1");
    const Rational mu = eval(derivative(f), Rational(1)) / f1;
    return eval(derivative(f, 2), Rational(1)) / f1 + mu - mu * mu;
}

Rational variance_closed(long n, const Rational& t) {
    check_args(n, t);
    const Rational q = 4 * (t + 1);
    return Rational(n - 1) / q * ratio(n, t) - Rational(n) / q;
}

Rational ratio(long n, const Rational& t) {
    check_args(n, t);
    return value_at_one(n + 1, t) / value_at_one(n, t);
}

double rat_double(const Rational& x) { return x.get_d(); }

double normal_cdf(double x) {
    // Zelen & Severo, A&S 26.2.17; |error| < 7.5e-8.
    static constexpr double p = 0.2316419;
    static constexpr double b1 = 0.319381530;
    static constexpr double b2 = -0.356563782;
    static constexpr double b3 = 1.781477937;
    static constexpr double b4 = -1.821255978;
    static constexpr double b5 = 1.330274429;
    const double ax = std::fabs(x);
    const double k = 1.0 / (1.0 + p * ax);
    const double pdf = std::exp(-0.5 * ax * ax) / std::sqrt(2.0 * M_PI);
    const double tail = pdf * (((((b5 * k + b4) * k + b3) * k + b2) * k + b1) * k);
    return x >= 0.0 ? 1.0 - tail : tail;
}

double clt_distance(long n, const Rational& t) {
    check_args(n, t);
    const Distribution dist = distribution(n, t);
    double cdf = 0.0, sup = 0.0;
    for (long k = 1; k <= n - 1; ++k) {
        const double x = (static_cast<double>(k) - dist.mu) / dist.sigma;
        const double phi = normal_cdf(x);
        sup = std::max(sup, std::fabs(cdf - phi));  // just below the jump at k
        cdf += dist.p[k];
        sup = std::max(sup, std::fabs(cdf - phi));  // at the jump
    }
    return sup;
}

double llt_distance(long n, const Rational& t) {
    check_args(n, t);
    const Distribution dist = distribution(n, t);
    const double norm = 1.0 / std::sqrt(2.0 * M_PI);
    double sup = 0.0;
    for (int i = 0; i <= 1200; ++i) {
        const double x = -6.0 + 0.01 * i;
        const double k = std::floor(dist.mu + x * dist.sigma);
        const double pk =
            (k >= 1.0 && k <= static_cast<double>(n - 1)) ? dist.p[static_cast<long>(k)] : 0.0;
        sup = std::max(sup, std::fabs(dist.sigma * pk - norm * std::exp(-0.5 * x * x)));
    }
    return sup;
}

NormalityStats normality_stats(long n, const Rational& t) {
    NormalityStats s;
    s.n = n;
    s.t = t;
    s.mean = mean(n, t);
    s.variance = variance(n, t);
    s.ratio = ratio(n, t);
    if (sign(s.variance) > 0) {
        s.clt_dist = clt_distance(n, t);
        s.llt_dist = llt_distance(n, t);
    }
    return s;
}

}  // namespace speyer
