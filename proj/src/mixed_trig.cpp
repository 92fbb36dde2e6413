#include "trigprove/mixed_trig.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace trigprove {

MixedTrigPoly::MixedTrigPoly(std::vector<MixedTrigTerm> terms) : terms_(std::move(terms))
{
    normalize();
}

void MixedTrigPoly::normalize()
{
    std::map<std::pair<unsigned, unsigned>, UniPoly> merged;
    for (auto& t : terms_)
        merged[{t.cos_pow, t.sin_pow}] += t.factor;
    terms_.clear();
    for (auto& [key, factor] : merged)
        if (!factor.is_zero())
            terms_.push_back({std::move(factor), key.first, key.second});
}

MixedTrigPoly& MixedTrigPoly::operator+=(const MixedTrigPoly& o)
{
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    normalize();
    return *this;
}

MixedTrigPoly MixedTrigPoly::operator-() const
{
    MixedTrigPoly r = *this;
    for (auto& t : r.terms_)
        t.factor = -t.factor;
    return r;
}

MixedTrigPoly operator*(const MixedTrigPoly& a, const MixedTrigPoly& b)
{
    std::vector<MixedTrigTerm> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_)
            out.push_back({s.factor * t.factor, s.cos_pow + t.cos_pow, s.sin_pow + t.sin_pow});
    return MixedTrigPoly(std::move(out));
}

MixedTrigPoly MixedTrigPoly::pow(unsigned n) const
{
    MixedTrigPoly r = polynomial(UniPoly::constant(PiPoly::constant(Rational(1))));
    for (unsigned i = 0; i < n; ++i)
        r = r * *this;
    return r;
}

MixedTrigPoly MixedTrigPoly::scaled(const UniPoly& p) const
{
    std::vector<MixedTrigTerm> out = terms_;
    for (auto& t : out)
        t.factor *= p;
    return MixedTrigPoly(std::move(out));
}

}  // namespace trigprove

namespace trigprove {

std::optional<long> half_pi_multiple(const PiPoly& c)
{
    if (c.is_zero())
        return 0L;
    if (c.degree() != 1 || sgn(c.coeff(0)) != 0)
        return std::nullopt;
    Rational k = c.coeff(1) * 2;
    if (k.get_den() != 1 || !k.get_num().fits_slong_p())
        return std::nullopt;
    return k.get_num().get_si();
}

namespace {

// sin(k*pi/2 + y) and cos(k*pi/2 + y) as (sign, is_sin)
struct Image {
    int sign;
    bool is_sin;
};

Image sin_shift(long k)
{
    switch (((k % 4) + 4) % 4) {
    case 0: return {1, true};
    case 1: return {1, false};
    case 2: return {-1, true};
    default: return {-1, false};
    }
}

Image cos_shift(long k)
{
    switch (((k % 4) + 4) % 4) {
    case 0: return {1, false};
    case 1: return {-1, true};
    case 2: return {-1, false};
    default: return {1, true};
    }
}

MixedTrigPoly image_poly(Image im, int orientation)
{
    // sin(-x) = -sin x, cos(-x) = cos x
    int s = im.sign * (im.is_sin && orientation < 0 ? -1 : 1);
    UniPoly c = UniPoly::constant(PiPoly::constant(Rational(s)));
    return im.is_sin ? MixedTrigPoly::cos_sin(0, 1, c) : MixedTrigPoly::cos_sin(1, 0, c);
}

}  // namespace

MixedTrigPoly affine_substitute(const MixedTrigPoly& f, const PiPoly& offset, int orientation)
{
    auto k = half_pi_multiple(offset);
    if (!k)
        throw std::invalid_argument("substitution offset must be an integer multiple of pi/2");
    if (orientation != 1 && orientation != -1)
        throw std::invalid_argument("orientation must be +1 or -1");
    const MixedTrigPoly sin_img = image_poly(sin_shift(*k), orientation);
    const MixedTrigPoly cos_img = image_poly(cos_shift(*k), orientation);
    MixedTrigPoly out;
    for (const auto& t : f.terms()) {
        UniPoly h = t.factor.compose_linear(offset, PiPoly::constant(Rational(orientation)));
        out += (cos_img.pow(t.cos_pow) * sin_img.pow(t.sin_pow)).scaled(h);
    }
    return out;
}

MixedTrigPoly reflect_at(const MixedTrigPoly& f, const PiPoly& c)
{
    return affine_substitute(f, c, -1);
}

PiPoly value_at_half_pi_multiple(const MixedTrigPoly& f, const PiPoly& c)
{
    // g(x) = f(c + x); g(0) collects the terms without sin
    const MixedTrigPoly g = affine_substitute(f, c, 1);
    PiPoly v;
    for (const auto& t : g.terms())
        if (t.sin_pow == 0)
            v += t.factor.coeff(0);
    return v;
}

}  // namespace trigprove
