#include "trigprove/series.hpp"

#include "trigprove/interval.hpp"
#include "trigprove/multiangle.hpp"

#include <stdexcept>

namespace trigprove {

namespace {

// series of sin(m x) or cos(m x) up to x^order
UniPoly trig_series(TrigFunc func, unsigned m, unsigned order)
{
    std::vector<PiPoly> c(order + 1);
    Rational mk = 1;
    for (unsigned k = 0; k <= order; ++k) {
        if (k > 0)
            mk *= m;
        bool odd = k % 2 == 1;
        if (odd != (func == TrigFunc::sin))
            continue;
        unsigned i = k / 2;
        Rational v = mk / Rational(factorial(k));
        c[k] = PiPoly::constant(i % 2 == 0 ? v : Rational(-v));
    }
    return UniPoly(std::move(c));
}

std::vector<PiPoly> padded(const UniPoly& p, unsigned order)
{
    std::vector<PiPoly> out(order + 1);
    for (unsigned k = 0; k <= order && k < p.size(); ++k)
        out[k] = p.coeffs()[k];
    return out;
}

}  // namespace

std::vector<PiPoly> series_coeffs_direct(const MixedTrigPoly& f, unsigned order)
{
    const UniPoly s = trig_series(TrigFunc::sin, 1, order), c = trig_series(TrigFunc::cos, 1, order);
    UniPoly acc;
    for (const auto& t : f.terms()) {
        UniPoly term = t.factor.truncated(order);
        for (unsigned i = 0; i < t.cos_pow; ++i)
            term = (term * c).truncated(order);
        for (unsigned i = 0; i < t.sin_pow; ++i)
            term = (term * s).truncated(order);
        acc += term;
    }
    return padded(acc, order);
}

std::vector<PiPoly> series_coeffs(const MixedTrigPoly& f, unsigned order)
{
    const MultiAngleSum e = expand_poly(f);
    UniPoly acc = e.constant_part.truncated(order);
    for (const auto& a : e.sub_addends)
        acc += (a.combined() * trig_series(a.func, a.multiple, order)).truncated(order);
    auto out = padded(acc, order);
    if (out != series_coeffs_direct(f, order))
        throw std::logic_error("series paths disagree");
    return out;
}

std::optional<LocalSign> local_sign(const MixedTrigPoly& f, unsigned max_order, unsigned precision_cap)
{
    const auto c = series_coeffs(f, max_order);
    for (unsigned k = 0; k <= max_order; ++k) {
        if (c[k].is_zero())
            continue;
        LocalSign ls;
        ls.order = k;
        ls.leading_coeff = c[k];
        ls.sign = pipoly_sign(c[k], 64, precision_cap);
        return ls;
    }
    return std::nullopt;
}

}  // namespace trigprove
