#pragma once

#include "trigprove/poly.hpp"

#include <vector>

namespace trigprove {

struct RatInterval {
    Rational lo;
    Rational hi;

    RatInterval() = default;
    explicit RatInterval(const Rational& v) : lo(v), hi(v) {}
    RatInterval(const Rational& l, const Rational& h);

    Rational width() const { return hi - lo; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool positive() const { return sgn(lo) > 0; }
    bool negative() const { return sgn(hi) < 0; }

    friend bool operator==(const RatInterval& a, const RatInterval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const RatInterval& a, const Rational& s);
RatInterval ipow(const RatInterval& a, unsigned n);
RatInterval hull(const RatInterval& a, const RatInterval& b);

// Machin enclosure of pi, width <= 2^-precision_bits, nested in precision
RatInterval pi_enclosure(unsigned precision_bits);

RatInterval pipoly_enclose(const PiPoly& p, unsigned precision_bits);

// Horner with interval coefficients and interval argument
RatInterval unipoly_eval_interval(const UniPoly& p, const RatInterval& x, unsigned precision_bits);

// Coefficient enclosures of p rounded outward to the grid 2^-precision_bits.
// Rational coefficients stay exact.
std::vector<RatInterval> enclose_coefficients(const UniPoly& p, unsigned precision_bits);

// Range enclosure of sum c_k t^k over t in [lo, hi] (0 <= lo <= hi) in
// centred form at lo: c is re-expanded around lo, then each shifted
// coefficient s_k contributes s_k * [0, (hi-lo)^k].
RatInterval taylor_form_range(const std::vector<RatInterval>& c, const Rational& lo, const Rational& hi);

// sign of the real number p(pi) by refining precision from start_bits up to
// cap_bits; 0 only for the zero polynomial. Throws UndecidableSign when the
// enclosure still straddles 0 at cap_bits.
int pipoly_sign(const PiPoly& p, unsigned start_bits, unsigned cap_bits);

// exact comparison a <=> b of two real numbers in Q[pi]
int pipoly_compare(const PiPoly& a, const PiPoly& b, unsigned start_bits, unsigned cap_bits);

struct UndecidableSign : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace trigprove
