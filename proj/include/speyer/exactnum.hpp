#pragma once

#include <gmpxx.h>

#include <string>

namespace speyer {

// Exact scalars for every certificate in the library. GMP supplies the
// arithmetic; both types are kept canonical at all times (rationals
// normalized with positive denominator, zero stored uniquely), so structural
// equality is value equality. Values are immutable in practice and safe to
// share across threads.
using BigInt = mpz_class;
using Rational = mpq_class;

// C(n, k), with C(n, k) = 0 for k < 0 or k > n. Negative n with k >= 0 is
// outside the supported domain and throws std::domain_error.
BigInt binomial(long n, long k);

// n! for n >= 0.
BigInt factorial(long n);

// Normalized p/q. Throws std::domain_error("zero denominator") when q = 0.
Rational rational(long p, long q);
Rational rational(const BigInt& p, const BigInt& q);

int sign(const BigInt& x);
int sign(const Rational& x);

// Decimal round-trip for BigInt; "p/q" or bare "p" round-trip for Rational.
BigInt parse_bigint(const std::string& s);
Rational parse_rational(const std::string& s);
std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

}  // namespace speyer
