#pragma once

#include "trigprove/mixed_trig.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace trigprove {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error("at " + std::to_string(pos) + ": " + msg), pos_(pos)
    {
    }
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// "lhs > rhs on (lo, hi)"; also accepts "<" (sides swapped). Division by
// constants c*pi^k is allowed; negative pi powers are cleared by multiplying
// the whole inequality by a power of pi.
ProblemSpec parse_problem(std::string_view text);

// a bare expression in x; negative pi powers are cleared as above
MixedTrigPoly parse_expression(std::string_view text);

// a constant in Q[pi] such as "pi/2" or "1.136"
PiPoly parse_constant(std::string_view text);

// "(lo, hi)"
std::pair<PiPoly, PiPoly> parse_interval(std::string_view text);

std::string print_problem(const ProblemSpec& p);
std::string print_expression(const MixedTrigPoly& f);
std::string print_pipoly(const PiPoly& p);
std::string print_unipoly(const UniPoly& p);

}  // namespace trigprove
