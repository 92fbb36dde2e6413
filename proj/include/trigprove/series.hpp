#pragma once

#include "trigprove/mixed_trig.hpp"

#include <optional>
#include <vector>

namespace trigprove {

// Maclaurin coefficients of x^0..x^order, through the multiple-angle form;
// cross-checked against series_coeffs_direct (throws std::logic_error on mismatch)
std::vector<PiPoly> series_coeffs(const MixedTrigPoly& f, unsigned order);
// same, by powering the sin and cos series directly
std::vector<PiPoly> series_coeffs_direct(const MixedTrigPoly& f, unsigned order);

struct LocalSign {
    unsigned order = 0;
    int sign = 0;
    PiPoly leading_coeff;
};

// First nonvanishing coefficient and its certified sign; nullopt when all
// coefficients up to max_order vanish. Throws UndecidableSign at the cap.
std::optional<LocalSign> local_sign(const MixedTrigPoly& f, unsigned max_order = 64, unsigned precision_cap = 1u << 14);

}  // namespace trigprove
