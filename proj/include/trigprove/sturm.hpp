#pragma once

#include "trigprove/poly.hpp"

#include <utility>
#include <vector>

namespace trigprove {

bool has_rational_coeffs(const UniPoly& p);
// throws std::invalid_argument if some coefficient involves pi
RatPoly to_rational_poly(const UniPoly& p);
UniPoly to_unipoly(const RatPoly& p);

// a = q*b + r
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly gcd(RatPoly a, RatPoly b);
// positive rational multiple with coprime integer coefficients
RatPoly primitive(const RatPoly& p);
RatPoly squarefree_part(const RatPoly& p);

std::vector<RatPoly> sturm_sequence(const RatPoly& p);
unsigned sign_variations(const std::vector<RatPoly>& seq, const Rational& x);

// distinct real roots in (a, b]; p(a) != 0 required
unsigned sturm_count(const RatPoly& p, const Rational& a, const Rational& b);
unsigned sturm_count(const UniPoly& p, const Rational& a, const Rational& b);

// disjoint isolating intervals (a_i, b_i] for the distinct roots of p in (a, b],
// ascending; a degenerate interval [r, r] marks an exact rational root
std::vector<std::pair<Rational, Rational>> isolate_roots(const RatPoly& p, const Rational& a, const Rational& b);

}  // namespace trigprove
