#include "oracle.hpp"

#include <vector>

namespace oracle {

const char* const kPiDigits = "3.14159265358979323846264338327950288419716939937510";

Big::Big()
{
    mpfr_init2(v_, kBits);
    mpfr_set_zero(v_, 1);
}

Big::Big(double v)
{
    mpfr_init2(v_, kBits);
    mpfr_set_d(v_, v, MPFR_RNDN);
}

Big::Big(const trigprove::Rational& q)
{
    mpfr_init2(v_, kBits);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

Big::Big(const Big& o)
{
    mpfr_init2(v_, kBits);
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Big& Big::operator=(const Big& o)
{
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
}

Big::~Big()
{
    mpfr_clear(v_);
}

double Big::to_double() const
{
    return mpfr_get_d(v_, MPFR_RNDN);
}

std::string Big::str(int digits) const
{
    std::vector<char> buf(digits + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return buf.data();
}

Big operator+(const Big& a, const Big& b)
{
    Big r;
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Big operator-(const Big& a, const Big& b)
{
    Big r;
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Big operator*(const Big& a, const Big& b)
{
    Big r;
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Big operator/(const Big& a, const Big& b)
{
    Big r;
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Big operator-(const Big& a)
{
    Big r;
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Big pi()
{
    Big r;
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

Big sin(const Big& x)
{
    Big r;
    mpfr_sin(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Big cos(const Big& x)
{
    Big r;
    mpfr_cos(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Big abs(const Big& x)
{
    Big r;
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Big pow(const Big& x, unsigned n)
{
    Big r;
    mpfr_pow_ui(r.get(), x.get(), n, MPFR_RNDN);
    return r;
}

Big eval(const trigprove::PiPoly& p)
{
    const Big P = pi();
    Big r;
    for (std::size_t i = p.size(); i-- > 0;)
        r = r * P + Big(p.coeff(i));
    return r;
}

Big eval(const trigprove::UniPoly& p, const Big& x)
{
    Big r;
    for (std::size_t i = p.size(); i-- > 0;)
        r = r * x + eval(p.coeff(i));
    return r;
}

Big eval(const trigprove::MixedTrigPoly& f, const Big& x)
{
    const Big c = cos(x), s = sin(x);
    Big r;
    for (const auto& t : f.terms())
        r = r + eval(t.factor, x) * pow(c, t.cos_pow) * pow(s, t.sin_pow);
    return r;
}

Big eval_func(trigprove::TrigFunc func, const Big& x)
{
    return func == trigprove::TrigFunc::sin ? sin(x) : cos(x);
}

Big eval(const trigprove::MultiAngleSum& s, const Big& x)
{
    Big r = eval(s.constant_part, x);
    for (const auto& a : s.sub_addends)
        r = r + eval(a.combined(), x) * eval_func(a.func, Big(static_cast<double>(a.multiple)) * x);
    return r;
}

Big eval(const trigprove::MultiAngleForm& m, const Big& x)
{
    Big r(m.constant);
    for (const auto& e : m.entries)
        r = r + Big(e.coeff) * eval_func(m.kind, Big(static_cast<double>(e.multiple)) * x);
    return r;
}

}  // namespace oracle
