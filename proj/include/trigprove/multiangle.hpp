#pragma once

#include "trigprove/mixed_trig.hpp"

#include <string>
#include <vector>

namespace trigprove {

enum class TrigFunc { cos, sin };

const char* to_string(TrigFunc f);
TrigFunc trig_func_from_string(const std::string& s);

struct MultiAngleEntry {
    unsigned multiple;
    Rational coeff;

    friend bool operator==(const MultiAngleEntry&, const MultiAngleEntry&) = default;
};

// constant + sum coeff * func(multiple * x), multiples strictly decreasing
struct MultiAngleForm {
    TrigFunc kind = TrigFunc::cos;
    Rational constant;
    std::vector<MultiAngleEntry> entries;

    friend bool operator==(const MultiAngleForm&, const MultiAngleForm&) = default;
};

MultiAngleForm sin_power(unsigned n);
MultiAngleForm cos_power(unsigned n);
// cos(x)^q * sin(x)^r
MultiAngleForm product_expand(unsigned q, unsigned r);

// coeff * factor(x) * func(multiple * x)
struct SubAddend {
    UniPoly factor;
    TrigFunc func = TrigFunc::cos;
    unsigned multiple = 1;
    Rational coeff;

    UniPoly combined() const { return factor * PiPoly::constant(coeff); }

    friend bool operator==(const SubAddend&, const SubAddend&) = default;
};

struct MultiAngleSum {
    std::vector<SubAddend> sub_addends;
    UniPoly constant_part;

    bool is_zero() const { return sub_addends.empty() && constant_part.is_zero(); }
    friend bool operator==(const MultiAngleSum&, const MultiAngleSum&) = default;
};

// Terms whose factor is constant in x and terms with a polynomial factor are
// merged separately by (func, multiple). A constant rational total is kept as
// coeff with factor 1, otherwise coeff is 1. Ordered cos before sin, multiples
// ascending, constant factors first.
MultiAngleSum expand_poly(const MixedTrigPoly& f);

// canonical sub-addend for coeff*factor
SubAddend make_sub_addend(TrigFunc func, unsigned multiple, const UniPoly& total);

std::string print_multiangle(const MultiAngleSum& s);

}  // namespace trigprove
