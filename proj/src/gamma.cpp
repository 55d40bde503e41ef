#include "speyer/gamma.hpp"

#include <stdexcept>

#include "speyer/gpoly.hpp"

namespace speyer {

namespace {

// (1+x)^m as a vector of binomial coefficients.
std::vector<Rational> one_plus_x_pow(int m) {
    std::vector<Rational> c(m + 1);
    for (int j = 0; j <= m; ++j) c[j] = Rational(binomial(m, j));
    return c;
}

}  // namespace

bool is_palindromic(const UniPoly& f, int darga) {
    if (f.is_zero()) throw std::domain_error("is_palindromic: zero polynomial");
    if (darga < f.degree()) throw std::domain_error("is_palindromic: darga below the degree");
    return reverse(f, darga) == f;
}

bool is_palindromic(const BiPoly& f, int darga) {
    if (f.is_zero()) throw std::domain_error("is_palindromic: zero polynomial");
    if (darga < f.xdegree()) throw std::domain_error("is_palindromic: darga below the degree");
    return reverse_x(f, darga) == f;
}

GammaVector gamma_expand(const BiPoly& f, int darga) {
    if (!is_palindromic(f, darga))
        throw std::domain_error("gamma_expand: input is not palindromic of this darga");
    GammaVector gv;
    gv.darga = darga;
    gv.gammas.resize(darga / 2 + 1);
    BiPoly residual = f;
    for (int i = 0; i <= darga / 2; ++i) {
        const UniPoly gi = residual.xcoeff(i);
        gv.gammas[i] = gi;
        if (gi.is_zero()) continue;
        const std::vector<Rational> pow = one_plus_x_pow(darga - 2 * i);
        std::vector<UniPoly> basis(darga - i + 1);
        for (int j = 0; j <= darga - 2 * i; ++j) basis[i + j] = pow[j] * gi;
        residual -= BiPoly(std::move(basis));
    }
    if (!residual.is_zero())
        throw std::logic_error("gamma_expand: nonzero residual after peeling");
    return gv;
}

std::vector<Rational> gamma_expand(const UniPoly& f, int darga) {
    if (!is_palindromic(f, darga))
        throw std::domain_error("gamma_expand: input is not palindromic of this darga");
    std::vector<Rational> gammas(darga / 2 + 1);
    UniPoly residual = f;
    for (int i = 0; i <= darga / 2; ++i) {
        const Rational gi = residual.coeff(i);
        gammas[i] = gi;
        if (sign(gi) == 0) continue;
        std::vector<Rational> pow = one_plus_x_pow(darga - 2 * i);
        std::vector<Rational> basis(darga - i + 1);
        for (int j = 0; j <= darga - 2 * i; ++j) basis[i + j] = pow[j] * gi;
        residual -= UniPoly(std::move(basis));
    }
    if (!residual.is_zero())
        throw std::logic_error("gamma_expand: nonzero residual after peeling");
    return gammas;
}

GammaVector gamma_recur(long n) {
    if (n < 2) throw std::domain_error("gamma_recur requires n >= 2");
    const UniPoly t = UniPoly::monomial(Rational(1), 1);
    std::vector<UniPoly> prev{UniPoly{}, t};  // gamma_2
    std::vector<UniPoly> cur{UniPoly{}, t};   // gamma_3
    if (n == 2) return {2, std::move(prev)};
    auto entry = [](const std::vector<UniPoly>& v, long i) {
        static const UniPoly kZero;
        if (i < 0 || i >= static_cast<long>(v.size())) return kZero;
        return v[i];
    };
    for (long m = 4; m <= n; ++m) {
        std::vector<UniPoly> next(m / 2 + 1);
        for (long i = 0; i <= m / 2; ++i) next[i] = entry(cur, i) + t * entry(prev, i - 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {static_cast<int>(n), std::move(cur)};
}

bool gamma_positive(long n, const Rational& t) {
    const GammaVector gv = gamma_recur(n);
    for (const UniPoly& g : gv.gammas)
        if (sign(eval(g, t)) < 0) return false;
    return true;
}

UniPoly h_at_minus_one(long n) {
    return eval_x(h_closed(n), Rational(-1));
}

}  // namespace speyer
