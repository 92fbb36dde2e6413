#include "trigprove/rational.hpp"

#include <stdexcept>

namespace trigprove {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den)
{
    return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

}  // namespace

Rational rational_from_string(std::string_view s)
{
    std::string_view body = s;
    bool neg = false;
    if (!body.empty() && body.front() == '-') {
        neg = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("bad rational: " + std::string(s));
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator: " + std::string(s));
    if (neg)
        n = -n;
    return make_rational(n, d);
}

bool is_canonical_rational_string(std::string_view s)
{
    try {
        return to_string(rational_from_string(s)) == s;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

int sign(const Rational& q)
{
    return sgn(q);
}

Rational abs(const Rational& q)
{
    return sgn(q) < 0 ? Rational(-q) : q;
}

Rational power(const Rational& q, unsigned n)
{
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), n);
    Rational r(num, den);
    return r;  // powers of a reduced fraction stay reduced
}

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational floor_dyadic(const Rational& q, unsigned bits)
{
    Integer scaled = q.get_num() << bits;
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
    Integer den = 1;
    den <<= bits;
    return make_rational(f, den);
}

Rational ceil_dyadic(const Rational& q, unsigned bits)
{
    Integer scaled = q.get_num() << bits;
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
    Integer den = 1;
    den <<= bits;
    return make_rational(c, den);
}

double to_double(const Rational& q)
{
    return q.get_d();
}

}  // namespace trigprove
