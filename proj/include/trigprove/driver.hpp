#pragma once

#include "trigprove/certificate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trigprove {

struct SearchConfig {
    unsigned K_max = 16;
    unsigned split_depth_max = 4;
    unsigned precision_bits = 256;
    unsigned precision_cap = 4096;
    Rational width_target = Rational(1, 100000);
    unsigned series_order = 64;
    // split attempts tried per piece before giving up on it
    unsigned splits_per_piece = 4;
    // prove_positive calls across the whole search
    std::size_t max_attempts = 3000;
    Exec exec = Exec::parallel;
};

enum class Verdict { proved, refuted, gave_up };

const char* to_string(Verdict v);

struct ProofOutcome {
    Verdict verdict = Verdict::gave_up;
    std::optional<Certificate> certificate;
    // refuted: f(witness) <= 0, with witness_value enclosing f(witness)
    std::optional<PiPoly> witness;
    std::optional<RatInterval> witness_value;
    std::vector<std::string> diagnostics;
};

ProofOutcome prove(const ProblemSpec& spec, const SearchConfig& cfg = {});

// certificate bytes of a proved outcome; throws std::logic_error otherwise
std::string emit(const ProofOutcome& o);

}  // namespace trigprove
