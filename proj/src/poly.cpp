#include "speyer/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace speyer {

namespace {

const Rational kZeroRat(0);
const UniPoly kZeroPoly;

// One printed term, e.g. "3/2*t^2*x^3". Exponent-zero parts are dropped,
// a unit coefficient is dropped unless the whole term is constant.
std::string format_term(const Rational& c, std::string_view var1, int e1,
                        std::string_view var2 = "", int e2 = 0) {
    Rational mag = abs(c);
    std::string out;
    if (mag != 1 || (e1 == 0 && e2 == 0)) out = to_string(mag);
    auto append_var = [&out](std::string_view v, int e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += v;
        if (e > 1) out += "^" + std::to_string(e);
    };
    append_var(var1, e1);
    append_var(var2, e2);
    return out;
}

std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        const auto& [negative, text] = terms[i];
        if (i == 0) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        out += text;
    }
    return out;
}

}  // namespace

void UniPoly::trim() {
    while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int exp) {
    if (exp < 0) throw std::domain_error("monomial: negative exponent");
    std::vector<Rational> v(exp + 1);
    v[exp] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::var() { return monomial(Rational(1), 1); }

const Rational& UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroRat;
    return c_[i];
}

const Rational& UniPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return UniPoly(std::move(v));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly{};
    std::vector<Rational> v(a.degree() + b.degree() + 1);
    for (int i = 0; i <= a.degree(); ++i) {
        if (sign(a.coeff(i)) == 0) continue;
        for (int j = 0; j <= b.degree(); ++j) v[i + j] += a.coeff(i) * b.coeff(j);
    }
    return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
    if (sign(s) == 0 || p.is_zero()) return UniPoly{};
    std::vector<Rational> v(p.coeffs().begin(), p.coeffs().end());
    for (Rational& c : v) c *= s;
    return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly& p, const Rational& s) { return s * p; }

Rational eval(const UniPoly& p, const Rational& v) {
    Rational acc(0);
    for (int i = p.degree(); i >= 0; --i) acc = acc * v + p.coeff(i);
    return acc;
}

UniPoly derivative(const UniPoly& p, int order) {
    if (order < 0) throw std::domain_error("derivative: negative order");
    UniPoly d = p;
    for (int k = 0; k < order; ++k) {
        if (d.degree() < 1) return UniPoly{};
        std::vector<Rational> v(d.degree());
        for (int i = 1; i <= d.degree(); ++i) v[i - 1] = Rational(i) * d.coeff(i);
        d = UniPoly(std::move(v));
    }
    return d;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    const int dn = num.degree(), dd = den.degree();
    if (dn < dd) return {UniPoly{}, num};
    std::vector<Rational> rem(num.coeffs().begin(), num.coeffs().end());
    std::vector<Rational> quo(dn - dd + 1);
    const Rational& lead = den.leading();
    for (int i = dn; i >= dd; --i) {
        if (sign(rem[i]) == 0) continue;
        Rational f = rem[i] / lead;
        quo[i - dd] = f;
        rem[i] = 0;
        for (int j = 0; j < dd; ++j) rem[i - dd + j] -= f * den.coeff(j);
    }
    rem.resize(dd);
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& num, const UniPoly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw std::logic_error("exact_div: division left a remainder");
    return q;
}

UniPoly gcd(const UniPoly& a0, const UniPoly& b0) {
    if (a0.is_zero() && b0.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    UniPoly a = a0.is_zero() ? a0 : primitive_part(a0);
    UniPoly b = b0.is_zero() ? b0 : primitive_part(b0);
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? std::move(r) : primitive_part(r);
    }
    return (Rational(1) / a.leading()) * a;
}

UniPoly primitive_part(const UniPoly& p) {
    if (p.is_zero()) return p;
    BigInt num_gcd(0), den_lcm(1);
    for (const Rational& c : p.coeffs()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return rational(den_lcm, num_gcd) * p;
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
    if (p.degree() == 0) return UniPoly::constant(Rational(1));
    UniPoly q = exact_div(p, gcd(p, derivative(p)));
    return (Rational(1) / q.leading()) * q;
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of the zero polynomial");
    std::vector<UniPoly> factors;
    if (p.degree() == 0) return factors;
    // Yun's algorithm over Q.
    UniPoly m = (Rational(1) / p.leading()) * p;
    UniPoly dm = derivative(m);
    UniPoly g = gcd(m, dm);
    if (g.degree() == 0) {
        factors.push_back(std::move(m));
        return factors;
    }
    UniPoly c = exact_div(m, g);
    UniPoly d = exact_div(dm, g) - derivative(c);
    while (c.degree() > 0) {
        UniPoly f = gcd(c, d);
        c = exact_div(c, f);
        d = exact_div(d, f) - derivative(c);
        factors.push_back(std::move(f));
    }
    return factors;
}

UniPoly squarefree_odd_part(const UniPoly& p) {
    const std::vector<UniPoly> factors = squarefree_decomposition(p);
    UniPoly odd = UniPoly::constant(Rational(1));
    for (size_t i = 0; i < factors.size(); i += 2) odd = odd * factors[i];
    return odd;
}

UniPoly reverse(const UniPoly& p, int darga) {
    if (darga < 0) throw std::domain_error("reverse: darga must be nonnegative");
    if (darga < p.degree()) throw std::domain_error("reverse: darga below the degree");
    if (p.is_zero()) return p;
    std::vector<Rational> v(darga + 1);
    for (int i = 0; i <= p.degree(); ++i) v[darga - i] = p.coeff(i);
    return UniPoly(std::move(v));
}

std::string UniPoly::str(std::string_view var, bool ascending) const {
    std::vector<std::pair<bool, std::string>> terms;
    auto push = [&](int i) {
        if (sign(c_[i]) == 0) return;
        terms.emplace_back(sign(c_[i]) < 0, format_term(c_[i], var, i));
    };
    if (ascending) {
        for (int i = 0; i <= degree(); ++i) push(i);
    } else {
        for (int i = degree(); i >= 0; --i) push(i);
    }
    return join_terms(terms);
}

// ---------------------------------------------------------------------------
// BiPoly

void BiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::constant(const Rational& c) {
    return BiPoly(std::vector<UniPoly>{UniPoly::constant(c)});
}

BiPoly BiPoly::x() { return term(Rational(1), 0, 1); }
BiPoly BiPoly::t() { return term(Rational(1), 1, 0); }

BiPoly BiPoly::term(const Rational& c, int texp, int xexp) {
    if (xexp < 0) throw std::domain_error("term: negative exponent");
    std::vector<UniPoly> v(xexp + 1);
    v[xexp] = UniPoly::monomial(c, texp);
    return BiPoly(std::move(v));
}

const UniPoly& BiPoly::xcoeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroPoly;
    return c_[i];
}

BiPoly BiPoly::operator-() const {
    std::vector<UniPoly> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return BiPoly(std::move(v));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly{};
    std::vector<UniPoly> v(a.xdegree() + b.xdegree() + 1);
    for (int i = 0; i <= a.xdegree(); ++i) {
        if (a.xcoeff(i).is_zero()) continue;
        for (int j = 0; j <= b.xdegree(); ++j) v[i + j] += a.xcoeff(i) * b.xcoeff(j);
    }
    return BiPoly(std::move(v));
}

BiPoly operator*(const Rational& s, const BiPoly& p) {
    if (sign(s) == 0 || p.is_zero()) return BiPoly{};
    std::vector<UniPoly> v(p.xcoeffs().begin(), p.xcoeffs().end());
    for (UniPoly& c : v) c = s * c;
    return BiPoly(std::move(v));
}

BiPoly operator*(long s, const BiPoly& p) { return Rational(s) * p; }

BiPoly derivative_x(const BiPoly& p, int order) {
    if (order < 0) throw std::domain_error("derivative_x: negative order");
    BiPoly d = p;
    for (int k = 0; k < order; ++k) {
        if (d.xdegree() < 1) return BiPoly{};
        std::vector<UniPoly> v(d.xdegree());
        for (int i = 1; i <= d.xdegree(); ++i) v[i - 1] = Rational(i) * d.xcoeff(i);
        d = BiPoly(std::move(v));
    }
    return d;
}

UniPoly eval_x(const BiPoly& p, const Rational& x0) {
    UniPoly acc;
    for (int i = p.xdegree(); i >= 0; --i) acc = x0 * acc + p.xcoeff(i);
    return acc;
}

UniPoly eval_t(const BiPoly& p, const Rational& t0) {
    std::vector<Rational> v(p.xdegree() + 1);
    for (int i = 0; i <= p.xdegree(); ++i) v[i] = eval(p.xcoeff(i), t0);
    return UniPoly(std::move(v));
}

BiPoly reverse_x(const BiPoly& p, int darga) {
    if (darga < 0) throw std::domain_error("reverse_x: darga must be nonnegative");
    if (darga < p.xdegree()) throw std::domain_error("reverse_x: darga below the x-degree");
    if (p.is_zero()) return p;
    std::vector<UniPoly> v(darga + 1);
    for (int i = 0; i <= p.xdegree(); ++i) v[darga - i] = p.xcoeff(i);
    return BiPoly(std::move(v));
}

std::string BiPoly::str() const {
    std::vector<std::pair<bool, std::string>> terms;
    for (int i = 0; i <= xdegree(); ++i) {
        const UniPoly& block = c_[i];
        for (int j = block.degree(); j >= 0; --j) {
            const Rational& c = block.coeff(j);
            if (sign(c) == 0) continue;
            terms.emplace_back(sign(c) < 0, format_term(c, "t", j, "x", i));
        }
    }
    return join_terms(terms);
}

}  // namespace speyer
