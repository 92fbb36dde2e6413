#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace trigprove {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den reduced; den must be nonzero
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// always "p/q", also for integers ("3/1")
std::string to_string(const Rational& q);
// accepts "p/q", "p", optional leading '-'; throws std::invalid_argument
Rational rational_from_string(std::string_view s);
// true iff s is exactly the canonical "p/q" spelling of some rational
bool is_canonical_rational_string(std::string_view s);

int sign(const Rational& q);
Rational abs(const Rational& q);
Rational power(const Rational& q, unsigned n);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// rounding onto the dyadic grid 2^-bits
Rational floor_dyadic(const Rational& q, unsigned bits);
Rational ceil_dyadic(const Rational& q, unsigned bits);


double to_double(const Rational& q);

}  // namespace trigprove
