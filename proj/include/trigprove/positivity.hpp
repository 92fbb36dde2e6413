#pragma once

#include "trigprove/leaf_kernels.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trigprove {

enum class PositivityMode { sturm, bisection };

// lower_bound is the exact lower end of the range enclosure at this precision
struct Leaf {
    Rational lo;
    Rational hi;
    unsigned precision = 0;
    Rational lower_bound;

    friend bool operator==(const Leaf&, const Leaf&) = default;
};

// Evidence that P = x^j * Q > 0 on [lo, hi] (on (0, hi] when lo = 0 and j > 0).
struct PositivityProof {
    PositivityMode mode = PositivityMode::sturm;
    unsigned multiplicity_at_zero = 0;
    Rational lo;
    Rational hi;
    // precision of the enclosure that produced hi (0 when the domain end is rational)
    unsigned domain_precision = 0;
    // sturm
    unsigned root_count = 0;
    int sign_at_lo = 0;
    // bisection, sorted by lo and tiling [lo, hi]
    std::vector<Leaf> leaves;

    friend bool operator==(const PositivityProof&, const PositivityProof&) = default;
};

struct PositivityOptions {
    unsigned precision_bits = 256;
    unsigned precision_cap = 4096;
    std::size_t max_cells = 200000;
    unsigned max_depth = 90;
    Exec exec = Exec::parallel;
};

enum class PositivityStatus { proved, disproved, resource_limit };

struct PositivityResult {
    PositivityStatus status = PositivityStatus::resource_limit;
    std::optional<PositivityProof> proof;
    // disproved: a point of the domain with P(witness) <= 0, certified exactly
    std::optional<Rational> witness;
    std::string detail;
};

// P > 0 on [lo, delta] (open at 0 when lo = 0); lo >= 0 rational, delta in Q[pi]
PositivityResult prove_positive(const UniPoly& p, const Rational& lo, const PiPoly& delta,
                                const PositivityOptions& opt = {});
PositivityResult prove_positive(const UniPoly& p, const PiPoly& delta, const PositivityOptions& opt = {});

// precisions recorded in evidence: powers of two in [8, 65536]
bool valid_precision(unsigned bits);

// rational upper bound used for the domain end delta
Rational domain_upper(const PiPoly& delta, unsigned precision_bits);
unsigned domain_precision_for(const PiPoly& delta, unsigned precision_bits);

// Replays a proof; returns an error message or nothing when it holds.
std::optional<std::string> verify_positivity(const UniPoly& p, const PositivityProof& proof, Exec exec = Exec::parallel);

// exact sign of p(x) at a rational point (0 only when p(x) = 0 in Q[pi])
int sign_at(const UniPoly& p, const Rational& x, unsigned start_bits = 64, unsigned cap_bits = 1u << 16);

struct RootEnclosure {
    Rational lo;
    Rational hi;
    int sign_left = 0;
    int sign_right = 0;

    Rational width() const { return hi - lo; }
};

struct RootSearch {
    std::optional<RootEnclosure> root;
    // when root is empty: certified that p has no root in (0, bound]
    Rational bound;
};

// least root of p in (0, limit] (limit defaults to a Cauchy bound)
RootSearch least_positive_root(const UniPoly& p, const Rational& width_target, unsigned precision_bits,
                               const std::optional<Rational>& limit = std::nullopt,
                               unsigned precision_cap = 1u << 14);

Rational cauchy_bound(const UniPoly& p, unsigned precision_bits);

}  // namespace trigprove
