#include "trigprove/taylor.hpp"

namespace trigprove {

namespace {

// For t >= 0 the partial sums S_k >= f >= S_{k+2} (k = 4l+1 for sin, 4l for
// cos) once the terms decrease from index k+2 on, i.e. t^2 <= (k+3)(k+4).
RatInterval bracket(TrigFunc func, const Rational& t, unsigned precision_bits)
{
    const Rational tol = make_rational(Integer(1), Integer(1) << precision_bits);
    const Rational t2 = t * t;
    unsigned long k = func == TrigFunc::sin ? 1 : 0;
    Rational term = func == TrigFunc::sin ? t : Rational(1);
    Rational upper = term;
    for (unsigned l = 0;; ++l) {
        Rational next = term * t2 / Rational((k + 1) * (k + 2));
        Rational lower = upper - next;
        if (Rational((k + 3) * (k + 4)) >= t2 && (next <= tol || l > 4096))
            return {lower, upper};
        term = next * t2 / Rational((k + 3) * (k + 4));
        upper = lower + term;
        k += 4;
    }
}

}  // namespace

RatInterval enclose_sin(const Rational& x, unsigned precision_bits)
{
    if (sgn(x) < 0)
        return -bracket(TrigFunc::sin, -x, precision_bits);
    return bracket(TrigFunc::sin, x, precision_bits);
}

RatInterval enclose_cos(const Rational& x, unsigned precision_bits)
{
    return bracket(TrigFunc::cos, abs(x), precision_bits);
}

RatInterval enclose_mixed(const MixedTrigPoly& f, const Rational& x, unsigned precision_bits)
{
    RatInterval s = enclose_sin(x, precision_bits), c = enclose_cos(x, precision_bits);
    RatInterval acc(Rational(0));
    for (const auto& t : f.terms()) {
        RatInterval h = pipoly_enclose(t.factor.eval(PiPoly::constant(x)), precision_bits);
        acc = acc + h * ipow(c, t.cos_pow) * ipow(s, t.sin_pow);
    }
    return acc;
}

}  // namespace trigprove
