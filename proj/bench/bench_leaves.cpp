#include "trigprove/parser.hpp"
#include "trigprove/positivity.hpp"

#include <benchmark/benchmark.h>

using namespace trigprove;

namespace {

const char* const kQ11 =
    "(1/2700)*x^2*((64*pi^4-640*pi^2)*x^9 + (-160*pi^5+1600*pi^3)*x^8 + (160*pi^6-2000*pi^4+4800*pi^2-5760)*x^7 + "
    "(-80*pi^7+1880*pi^5-12000*pi^3+11520*pi)*x^6 + (20*pi^8-1340*pi^6+12840*pi^4-20160*pi^2+28800)*x^5 + "
    "(-2*pi^9+610*pi^7-8700*pi^5+36000*pi^3-57600*pi)*x^4 + (-150*pi^8+4650*pi^6-34200*pi^4+28800*pi^2-86400)*x^3 + "
    "(15*pi^9-1875*pi^7+15300*pi^5+194400*pi)*x^2 + (450*pi^8-3150*pi^6-129600*pi^2)*x - 45*pi^9+225*pi^7+21600*pi^3)";

UniPoly q11()
{
    return parse_expression(kQ11).terms()[0].factor;
}

std::vector<Cell> grid(std::size_t n)
{
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < n; ++i)
        cells.push_back({make_rational(static_cast<long>(i), static_cast<long>(n)),
                         make_rational(static_cast<long>(i + 1), static_cast<long>(n)), 256});
    return cells;
}

void enclose(benchmark::State& state, Exec exec)
{
    CoefficientTables tables(q11());
    const auto cells = grid(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(enclose_cells(tables, cells, exec));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void verify(benchmark::State& state, Exec exec)
{
    const UniPoly p = q11();
    const auto r = prove_positive(p, parse_constant("pi/2 - 142/125"));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_positivity(p, *r.proof, exec));
}

}  // namespace

BENCHMARK_CAPTURE(enclose, serial, Exec::serial)->Arg(256)->Arg(4096);
BENCHMARK_CAPTURE(enclose, parallel, Exec::parallel)->Arg(256)->Arg(4096);
BENCHMARK_CAPTURE(verify, serial, Exec::serial);
BENCHMARK_CAPTURE(verify, parallel, Exec::parallel);

BENCHMARK_MAIN();
