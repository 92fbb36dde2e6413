#include "trigprove/interval.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace trigprove {

RatInterval::RatInterval(const Rational& l, const Rational& h) : lo(l), hi(h)
{
    if (lo > hi)
        throw std::invalid_argument("interval with lo > hi");
}

RatInterval operator+(const RatInterval& a, const RatInterval& b)
{
    return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval operator-(const RatInterval& a, const RatInterval& b)
{
    return {a.lo - b.hi, a.hi - b.lo};
}

RatInterval operator-(const RatInterval& a)
{
    return {-a.hi, -a.lo};
}

RatInterval operator*(const RatInterval& a, const RatInterval& b)
{
    if (sgn(a.lo) >= 0 && sgn(b.lo) >= 0)
        return {a.lo * b.lo, a.hi * b.hi};
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    auto [mn, mx] = std::minmax_element(p, p + 4);
    return {*mn, *mx};
}

RatInterval operator*(const RatInterval& a, const Rational& s)
{
    if (sgn(s) >= 0)
        return {a.lo * s, a.hi * s};
    return {a.hi * s, a.lo * s};
}

RatInterval ipow(const RatInterval& a, unsigned n)
{
    if (n == 0)
        return RatInterval(Rational(1));
    Rational l = power(a.lo, n), h = power(a.hi, n);
    if (n % 2 == 1 || sgn(a.lo) >= 0)
        return {std::min(l, h), std::max(l, h)};
    if (sgn(a.hi) <= 0)
        return {h, l};
    return {Rational(0), std::max(l, h)};
}

RatInterval hull(const RatInterval& a, const RatInterval& b)
{
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

namespace {

// partial sums of atan(1/k) = sum (-1)^i / ((2i+1) k^(2i+1)); the bracket
// [S_N, S_{N+1}] shrinks and nests as N grows.
struct AtanBracket {
    Rational lo, hi;
};

AtanBracket atan_inv(unsigned k, const Rational& tail_tol)
{
    Rational sum = 0;
    Integer kpow = k;
    Integer k2 = Integer(k) * k;
    for (unsigned i = 0;; ++i) {
        Rational term = make_rational(Integer(1), Integer(2 * i + 1) * kpow);
        Rational next = i % 2 == 0 ? Rational(sum + term) : Rational(sum - term);
        Rational nterm = make_rational(Integer(1), Integer(2 * i + 3) * kpow * k2);
        if (nterm <= tail_tol) {
            Rational after = i % 2 == 0 ? Rational(next - nterm) : Rational(next + nterm);
            return {std::min(next, after), std::max(next, after)};
        }
        sum = next;
        kpow *= k2;
    }
}

RatInterval compute_pi(unsigned bits)
{
    const unsigned g = bits + 24;
    Rational tol = make_rational(Integer(1), Integer(1) << (g + 1));
    AtanBracket a5 = atan_inv(5, tol / 16);
    AtanBracket a239 = atan_inv(239, tol / 4);
    Rational lo = 16 * a5.lo - 4 * a239.hi;
    Rational hi = 16 * a5.hi - 4 * a239.lo;
    return {floor_dyadic(lo, g + 2), ceil_dyadic(hi, g + 2)};
}

}  // namespace

RatInterval pi_enclosure(unsigned precision_bits)
{
    if (precision_bits < 8)
        precision_bits = 8;
    static std::mutex mu;
    static std::map<unsigned, RatInterval> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(precision_bits);
        if (it != cache.end())
            return it->second;
    }
    RatInterval r = compute_pi(precision_bits);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(precision_bits, r);
    return r;
}

RatInterval pipoly_enclose(const PiPoly& p, unsigned precision_bits)
{
    if (p.is_zero())
        return RatInterval(Rational(0));
    if (p.degree() == 0)
        return RatInterval(p.coeff(0));
    const RatInterval pi = pi_enclosure(precision_bits);
    RatInterval acc(p.leading());
    for (std::size_t i = p.size() - 1; i-- > 0;)
        acc = acc * pi + RatInterval(p.coeffs()[i]);
    return acc;
}

RatInterval unipoly_eval_interval(const UniPoly& p, const RatInterval& x, unsigned precision_bits)
{
    if (p.is_zero())
        return RatInterval(Rational(0));
    RatInterval acc = pipoly_enclose(p.leading(), precision_bits);
    for (std::size_t i = p.size() - 1; i-- > 0;)
        acc = acc * x + pipoly_enclose(p.coeffs()[i], precision_bits);
    return acc;
}

std::vector<RatInterval> enclose_coefficients(const UniPoly& p, unsigned precision_bits)
{
    std::vector<RatInterval> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) {
        if (c.degree() <= 0) {
            out.emplace_back(c.coeff(0));
            continue;
        }
        RatInterval e = pipoly_enclose(c, precision_bits);
        out.emplace_back(floor_dyadic(e.lo, precision_bits), ceil_dyadic(e.hi, precision_bits));
    }
    return out;
}

RatInterval taylor_form_range(const std::vector<RatInterval>& c, const Rational& lo, const Rational& hi)
{
    if (c.empty())
        return RatInterval(Rational(0));
    std::vector<RatInterval> s(c);
    const std::size_t n = s.size();
    if (sgn(lo) != 0) {
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = n - 1; k >= i; --k)
                s[k - 1] = s[k - 1] + s[k] * lo;
    }
    const Rational w = hi - lo;
    RatInterval out = s[0];
    Rational wk = 1;
    for (std::size_t k = 1; k < n; ++k) {
        wk *= w;
        if (sgn(s[k].lo) < 0)
            out.lo += s[k].lo * wk;
        if (sgn(s[k].hi) > 0)
            out.hi += s[k].hi * wk;
    }
    return out;
}

int pipoly_sign(const PiPoly& p, unsigned start_bits, unsigned cap_bits)
{
    if (p.is_zero())
        return 0;
    if (p.degree() == 0)
        return sgn(p.coeff(0));
    for (unsigned bits = std::max(start_bits, 8u);; bits *= 2) {
        RatInterval e = pipoly_enclose(p, std::min(bits, cap_bits));
        if (e.positive())
            return 1;
        if (e.negative())
            return -1;
        if (bits >= cap_bits)
            throw UndecidableSign("sign of pi-polynomial undecided at precision cap");
    }
}

int pipoly_compare(const PiPoly& a, const PiPoly& b, unsigned start_bits, unsigned cap_bits)
{
    return pipoly_sign(a - b, start_bits, cap_bits);
}

}  // namespace trigprove
