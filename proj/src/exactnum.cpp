#include "speyer/exactnum.hpp"

#include <stdexcept>

namespace speyer {

BigInt binomial(long n, long k) {
    if (k < 0) return BigInt(0);
    if (n < 0) throw std::domain_error("binomial: negative n with k >= 0 is not supported");
    if (k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Rational rational(const BigInt& p, const BigInt& q) {
    if (sign(q) == 0) throw std::domain_error("zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational rational(long p, long q) { return rational(BigInt(p), BigInt(q)); }

int sign(const BigInt& x) { return mpz_sgn(x.get_mpz_t()); }
int sign(const Rational& x) { return mpq_sgn(x.get_mpq_t()); }

BigInt parse_bigint(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a decimal integer: \"" + s + "\"");
    }
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_bigint(s));
    return rational(parse_bigint(s.substr(0, slash)), parse_bigint(s.substr(slash + 1)));
}

std::string to_string(const BigInt& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace speyer
