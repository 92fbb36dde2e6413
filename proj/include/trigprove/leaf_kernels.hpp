#pragma once

#include "trigprove/interval.hpp"

#include <map>
#include <vector>

namespace trigprove {

enum class Exec { serial, parallel };

struct Cell {
    Rational lo;
    Rational hi;
    unsigned precision = 0;
};

// coefficient enclosures of one polynomial, one table per precision
class CoefficientTables {
public:
    explicit CoefficientTables(UniPoly p) : p_(std::move(p)) {}
    const std::vector<RatInterval>& at(unsigned precision);
    const UniPoly& poly() const { return p_; }

private:
    UniPoly p_;
    std::map<unsigned, std::vector<RatInterval>> tables_;
};

// Range enclosure of the polynomial on every cell (centred form at cell.lo,
// coefficients at cell.precision). Output order follows input order; both
// variants produce identical results.
std::vector<RatInterval> enclose_cells(CoefficientTables& tables, const std::vector<Cell>& cells, Exec exec);

std::vector<RatInterval> enclose_cells_serial(CoefficientTables& tables, const std::vector<Cell>& cells);
std::vector<RatInterval> enclose_cells_parallel(CoefficientTables& tables, const std::vector<Cell>& cells);

}  // namespace trigprove
