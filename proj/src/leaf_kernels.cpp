#include "trigprove/leaf_kernels.hpp"

namespace trigprove {

const std::vector<RatInterval>& CoefficientTables::at(unsigned precision)
{
    auto it = tables_.find(precision);
    if (it == tables_.end())
        it = tables_.emplace(precision, enclose_coefficients(p_, precision)).first;
    return it->second;
}

namespace {

// fill the per-precision tables up front so the workers only read
std::vector<const std::vector<RatInterval>*> tables_for(CoefficientTables& tables, const std::vector<Cell>& cells)
{
    std::vector<const std::vector<RatInterval>*> out(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        out[i] = &tables.at(cells[i].precision);
    return out;
}

}  // namespace

std::vector<RatInterval> enclose_cells_serial(CoefficientTables& tables, const std::vector<Cell>& cells)
{
    auto coeffs = tables_for(tables, cells);
    std::vector<RatInterval> out(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        out[i] = taylor_form_range(*coeffs[i], cells[i].lo, cells[i].hi);
    return out;
}

std::vector<RatInterval> enclose_cells_parallel(CoefficientTables& tables, const std::vector<Cell>& cells)
{
    auto coeffs = tables_for(tables, cells);
    std::vector<RatInterval> out(cells.size());
    const long n = static_cast<long>(cells.size());
#pragma omp parallel for schedule(dynamic, 4) if (n > 8)
    for (long i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = taylor_form_range(*coeffs[static_cast<std::size_t>(i)],
                                                             cells[static_cast<std::size_t>(i)].lo,
                                                             cells[static_cast<std::size_t>(i)].hi);
    return out;
}

std::vector<RatInterval> enclose_cells(CoefficientTables& tables, const std::vector<Cell>& cells, Exec exec)
{
    return exec == Exec::parallel ? enclose_cells_parallel(tables, cells) : enclose_cells_serial(tables, cells);
}

}  // namespace trigprove
