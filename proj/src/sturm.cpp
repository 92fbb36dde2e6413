#include "trigprove/sturm.hpp"

#include <stdexcept>

namespace trigprove {

bool has_rational_coeffs(const UniPoly& p)
{
    for (const auto& c : p.coeffs())
        if (c.degree() > 0)
            return false;
    return true;
}

RatPoly to_rational_poly(const UniPoly& p)
{
    std::vector<Rational> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) {
        if (c.degree() > 0)
            throw std::invalid_argument("polynomial has pi-dependent coefficients");
        out.push_back(c.coeff(0));
    }
    return RatPoly(std::move(out));
}

UniPoly to_unipoly(const RatPoly& p)
{
    std::vector<PiPoly> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs())
        out.push_back(PiPoly::constant(c));
    return UniPoly(std::move(out));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    const long db = b.degree();
    if (a.degree() < db)
        return {RatPoly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational lead = b.leading();
    for (long k = a.degree() - db; k >= 0; --k) {
        Rational c = r[static_cast<std::size_t>(k + db)] / lead;
        q[static_cast<std::size_t>(k)] = c;
        if (sgn(c) == 0)
            continue;
        for (long i = 0; i <= db; ++i)
            r[static_cast<std::size_t>(k + i)] -= c * b.coeffs()[static_cast<std::size_t>(i)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly primitive(const RatPoly& p)
{
    if (p.is_zero())
        return p;
    Integer l = 1, g = 0;
    for (const auto& c : p.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Rational> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) {
        Rational v = c * Rational(l);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
        out.push_back(v);
    }
    for (auto& v : out)
        v /= Rational(g);
    return RatPoly(std::move(out));
}

RatPoly gcd(RatPoly a, RatPoly b)
{
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = primitive(r);
    }
    if (a.is_zero())
        return a;
    return a * (1 / a.leading());
}

RatPoly squarefree_part(const RatPoly& p)
{
    if (p.degree() <= 0)
        return p;
    RatPoly g = gcd(p, p.derivative());
    return primitive(divmod(p, g).first);
}

std::vector<RatPoly> sturm_sequence(const RatPoly& p)
{
    std::vector<RatPoly> seq;
    if (p.is_zero())
        return seq;
    seq.push_back(p);
    RatPoly d = p.derivative();
    if (d.is_zero())
        return seq;
    seq.push_back(primitive(d));
    for (;;) {
        const RatPoly& a = seq[seq.size() - 2];
        const RatPoly& b = seq.back();
        RatPoly r = divmod(a, b).second;
        if (r.is_zero())
            break;
        seq.push_back(primitive(-r));
    }
    return seq;
}

unsigned sign_variations(const std::vector<RatPoly>& seq, const Rational& x)
{
    unsigned v = 0;
    int prev = 0;
    for (const auto& p : seq) {
        int s = sgn(p.eval(x));
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++v;
        prev = s;
    }
    return v;
}

unsigned sturm_count(const RatPoly& p, const Rational& a, const Rational& b)
{
    if (p.is_zero())
        throw std::invalid_argument("sturm_count of the zero polynomial");
    if (!(a < b))
        throw std::invalid_argument("sturm_count needs a < b");
    RatPoly s = squarefree_part(p);
    if (sgn(s.eval(a)) == 0)
        throw std::invalid_argument("sturm_count needs p(a) != 0");
    auto seq = sturm_sequence(s);
    unsigned va = sign_variations(seq, a), vb = sign_variations(seq, b);
    return va - vb;
}

unsigned sturm_count(const UniPoly& p, const Rational& a, const Rational& b)
{
    return sturm_count(to_rational_poly(p), a, b);
}

namespace {

void isolate(const std::vector<RatPoly>& seq, const Rational& a, const Rational& b, unsigned va, unsigned vb,
             std::vector<std::pair<Rational, Rational>>& out)
{
    unsigned n = va - vb;
    if (n == 0)
        return;
    if (n == 1) {
        out.emplace_back(a, b);
        return;
    }
    Rational m = (a + b) / 2;
    if (sgn(seq[0].eval(m)) == 0) {
        // exact root at m: isolate (a, m) without it, then (m, b]
        Rational l = (a + m) / 2, r = (m + b) / 2;
        while (true) {
            unsigned vl = sign_variations(seq, l), vr = sign_variations(seq, r);
            // shrink until m is the only root in (l, r]
            if (sgn(seq[0].eval(l)) != 0 && sgn(seq[0].eval(r)) != 0 && vl - vr == 1) {
                isolate(seq, a, l, va, vl, out);
                out.emplace_back(m, m);
                isolate(seq, r, b, vr, vb, out);
                return;
            }
            l = (l + m) / 2;
            r = (m + r) / 2;
        }
    }
    unsigned vm = sign_variations(seq, m);
    isolate(seq, a, m, va, vm, out);
    isolate(seq, m, b, vm, vb, out);
}

}  // namespace

std::vector<std::pair<Rational, Rational>> isolate_roots(const RatPoly& p, const Rational& a, const Rational& b)
{
    std::vector<std::pair<Rational, Rational>> out;
    RatPoly s = squarefree_part(p);
    if (sgn(s.eval(a)) == 0)
        throw std::invalid_argument("isolate_roots needs p(a) != 0");
    auto seq = sturm_sequence(s);
    isolate(seq, a, b, sign_variations(seq, a), sign_variations(seq, b), out);
    return out;
}

}  // namespace trigprove
