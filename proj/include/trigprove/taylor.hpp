#pragma once

#include "trigprove/multiangle.hpp"
#include "trigprove/positivity.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trigprove {

enum class BoundDirection { upper, lower };

const char* to_string(BoundDirection d);
BoundDirection direction_from_string(const std::string& s);

struct TaylorBound {
    TrigFunc func;
    unsigned degree;
    BoundDirection direction;
    unsigned long radius_sq;  // (n+3)(n+4)
};

class ParityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

RatPoly maclaurin_rational(TrigFunc func, unsigned n);
UniPoly maclaurin(TrigFunc func, unsigned n);
TaylorBound classify(TrigFunc func, unsigned n);

// degree of the bound with index l: sin 4l+3 (lower) / 4l+1 (upper),
// cos 4l+2 (lower) / 4l (upper)
unsigned template_degree(TrigFunc func, BoundDirection dir, unsigned l);
// inverse of template_degree; throws if n does not fit the template
unsigned template_index(TrigFunc func, BoundDirection dir, unsigned n);

// rational upper bound of (multiple * hi)^2; precision 0 when hi is rational
struct ValidityCheck {
    Rational bound;
    unsigned precision = 0;
};
ValidityCheck validity_check(unsigned multiple, const PiPoly& hi, unsigned precision_bits);
// smallest index whose radius covers the check
unsigned minimal_index(TrigFunc func, BoundDirection dir, const ValidityCheck& v);

// One trig addend c(x) * func(multiple*x) whose factor c has constant sign on
// the piece domain. If c vanishes at the right end it is deflated there:
// c = (x - hi)^boundary_multiplicity * g, and sign_proof shows
// sign * (-1)^boundary_multiplicity * g > 0.
struct SignedAddend {
    TrigFunc func = TrigFunc::cos;
    unsigned multiple = 1;
    UniPoly factor;
    int sign = 1;
    unsigned boundary_multiplicity = 0;
    PiPoly sign_hi;
    PositivityProof sign_proof;

    friend bool operator==(const SignedAddend&, const SignedAddend&) = default;
};

struct BoundEntry {
    SignedAddend addend;
    unsigned degree = 0;
    BoundDirection direction = BoundDirection::lower;
    unsigned long radius_sq = 0;
    ValidityCheck validity;

    friend bool operator==(const BoundEntry& a, const BoundEntry& b)
    {
        return a.addend == b.addend && a.degree == b.degree && a.direction == b.direction &&
               a.radius_sq == b.radius_sq && a.validity.bound == b.validity.bound &&
               a.validity.precision == b.validity.precision;
    }
};

// deflated quotient for the sign proof: factor / (x - sign_hi)^k, scaled to be
// positive; nullopt if the division is not exact
std::optional<UniPoly> sign_proof_polynomial(const SignedAddend& a);

// Certify the sign of every factor on [lo, hi] (open at 0). Factors of
// non-constant sign are split into monomials.
std::vector<SignedAddend> resolve_signs(const MultiAngleSum& s, const Rational& lo, const PiPoly& hi,
                                        const PositivityOptions& opt);

struct DegreeAssignment {
    std::vector<unsigned> index;  // per signed addend
    unsigned K = 0;
};

class ValidityError : public std::runtime_error {
public:
    ValidityError(const std::string& msg, unsigned minimal_degree)
        : std::runtime_error(msg), minimal_degree_(minimal_degree)
    {
    }
    unsigned minimal_degree() const { return minimal_degree_; }

private:
    unsigned minimal_degree_;
};

// indices max(minimal valid index, K) for every addend
DegreeAssignment uniform_assignment(const std::vector<SignedAddend>& addends, const PiPoly& hi, unsigned K,
                                    unsigned precision_bits);

std::vector<BoundEntry> make_entries(const std::vector<SignedAddend>& addends, const DegreeAssignment& d,
                                     const PiPoly& hi, unsigned precision_bits);

// constant_part + sum factor * T_n(multiple * x)
UniPoly assemble_polynomial(const UniPoly& constant_part, const std::vector<BoundEntry>& entries);

struct Substitution {
    std::vector<BoundEntry> entries;
    UniPoly polynomial;
};

// downward approximation of the expanded function on [lo, hi]
Substitution substitute_bounds(const MultiAngleSum& s, const DegreeAssignment& d, const Rational& lo,
                               const PiPoly& hi, const PositivityOptions& opt);

// rigorous enclosures of sin, cos and a mixed trigonometric polynomial at a rational point
RatInterval enclose_sin(const Rational& x, unsigned precision_bits);
RatInterval enclose_cos(const Rational& x, unsigned precision_bits);
RatInterval enclose_mixed(const MixedTrigPoly& f, const Rational& x, unsigned precision_bits);

}  // namespace trigprove
