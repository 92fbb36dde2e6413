#pragma once

#include "trigprove/poly.hpp"

#include <optional>
#include <vector>

namespace trigprove {

// factor(x) * cos(x)^cos_pow * sin(x)^sin_pow
struct MixedTrigTerm {
    UniPoly factor;
    unsigned cos_pow = 0;
    unsigned sin_pow = 0;

    friend bool operator==(const MixedTrigTerm&, const MixedTrigTerm&) = default;
};

// Terms kept sorted by (cos_pow, sin_pow), one per pair, none with a zero factor.
class MixedTrigPoly {
public:
    MixedTrigPoly() = default;
    explicit MixedTrigPoly(std::vector<MixedTrigTerm> terms);

    static MixedTrigPoly polynomial(const UniPoly& p) { return MixedTrigPoly({{p, 0, 0}}); }
    static MixedTrigPoly cos_sin(unsigned q, unsigned r, const UniPoly& factor) { return MixedTrigPoly({{factor, q, r}}); }

    const std::vector<MixedTrigTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    MixedTrigPoly& operator+=(const MixedTrigPoly& o);
    friend MixedTrigPoly operator+(MixedTrigPoly a, const MixedTrigPoly& b) { return a += b; }
    friend MixedTrigPoly operator-(const MixedTrigPoly& a, const MixedTrigPoly& b) { return a + (-b); }
    MixedTrigPoly operator-() const;
    friend MixedTrigPoly operator*(const MixedTrigPoly& a, const MixedTrigPoly& b);
    MixedTrigPoly pow(unsigned n) const;
    MixedTrigPoly scaled(const UniPoly& p) const;

    friend bool operator==(const MixedTrigPoly&, const MixedTrigPoly&) = default;

private:
    void normalize();
    std::vector<MixedTrigTerm> terms_;
};

// k when c = k*pi/2 for an integer k, otherwise nothing
std::optional<long> half_pi_multiple(const PiPoly& c);

// g(x) = f(offset + orientation*x) for offset in (pi/2)Z, orientation +-1;
// throws std::invalid_argument for any other offset
MixedTrigPoly affine_substitute(const MixedTrigPoly& f, const PiPoly& offset, int orientation);

// g(x) = f(c - x)
MixedTrigPoly reflect_at(const MixedTrigPoly& f, const PiPoly& c);

// exact value of f at a point c in (pi/2)Z
PiPoly value_at_half_pi_multiple(const MixedTrigPoly& f, const PiPoly& c);

// f > 0 on (lo, hi)
struct ProblemSpec {
    MixedTrigPoly f;
    PiPoly lo;
    PiPoly hi;

    friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

}  // namespace trigprove
