#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "speyer/exactnum.hpp"

namespace speyer {

// Dense univariate polynomial over Rational. Coefficients are stored lowest
// exponent first and kept canonical: no trailing zero coefficient, the zero
// polynomial is the empty sequence. Structural equality is mathematical
// equality.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, int exp);
    static UniPoly var();

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    std::span<const Rational> coeffs() const { return c_; }
    const Rational& coeff(int i) const;  // zero outside the stored range
    const Rational& leading() const;     // nonzero polynomial only

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);

    std::string str(std::string_view var = "x", bool ascending = true) const;

private:
    std::vector<Rational> c_;
    void trim();
};

UniPoly operator+(UniPoly a, const UniPoly& b);
UniPoly operator-(UniPoly a, const UniPoly& b);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const Rational& s, const UniPoly& p);
UniPoly operator*(const UniPoly& p, const Rational& s);

Rational eval(const UniPoly& p, const Rational& v);

// order-fold formal derivative; order 0 is the identity.
UniPoly derivative(const UniPoly& p, int order = 1);

// Quotient and remainder with deg(rem) < deg(den). Throws on zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);

// Quotient when the division is known exact; throws std::logic_error if a
// remainder survives.
UniPoly exact_div(const UniPoly& num, const UniPoly& den);

// Monic gcd by the Euclidean algorithm with content stripping. Throws when
// both inputs are zero.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// p scaled by the positive rational making the coefficients coprime
// integers; the leading sign is preserved.
UniPoly primitive_part(const UniPoly& p);

// p / gcd(p, p'), made monic: same distinct roots, all simple.
UniPoly squarefree_part(const UniPoly& p);

// Yun decomposition: result[i] is the monic product of the irreducible
// factors of multiplicity i + 1 in p.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

// Monic product of the real-irreducible content of odd multiplicity. p is
// nonnegative on all of R iff this part has no real roots and the leading
// coefficient of p is positive. Throws on zero input.
UniPoly squarefree_odd_part(const UniPoly& p);

// Formal x^darga * p(1/x); mirrors the coefficients about darga/2.
// Requires darga >= deg(p).
UniPoly reverse(const UniPoly& p, int darga);

// Polynomial in x whose coefficients are UniPoly in t, lowest x-exponent
// first, canonical in the same sense as UniPoly.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<UniPoly> xcoeffs) : c_(std::move(xcoeffs)) { trim(); }

    static BiPoly constant(const Rational& c);
    static BiPoly x();
    static BiPoly t();
    // c * t^texp * x^xexp
    static BiPoly term(const Rational& c, int texp, int xexp);

    bool is_zero() const { return c_.empty(); }
    int xdegree() const { return static_cast<int>(c_.size()) - 1; }
    std::span<const UniPoly> xcoeffs() const { return c_; }
    const UniPoly& xcoeff(int i) const;  // zero polynomial outside the range

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);

    // Flat term list: x ascending, t descending within each x block.
    std::string str() const;

private:
    std::vector<UniPoly> c_;
    void trim();
};

BiPoly operator+(BiPoly a, const BiPoly& b);
BiPoly operator-(BiPoly a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const Rational& s, const BiPoly& p);
BiPoly operator*(long s, const BiPoly& p);

BiPoly derivative_x(const BiPoly& p, int order = 1);
UniPoly eval_x(const BiPoly& p, const Rational& x0);  // polynomial in t
UniPoly eval_t(const BiPoly& p, const Rational& t0);  // polynomial in x
BiPoly reverse_x(const BiPoly& p, int darga);

}  // namespace speyer
