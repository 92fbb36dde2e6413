#pragma once

#include "trigprove/taylor.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace trigprove {

// Working coordinates of a piece: the piece proves g > 0 on [lo, hi] for
// g(x) = f(offset + orientation*x).
enum class FrameKind { none, reflect, shift };

struct PieceFrame {
    FrameKind kind = FrameKind::none;
    PiPoly offset;
    Rational lo;
    PiPoly hi;

    int orientation() const { return kind == FrameKind::reflect ? -1 : 1; }
    friend bool operator==(const PieceFrame&, const PieceFrame&) = default;
};

struct ProofPiece {
    PieceFrame frame;
    MultiAngleSum expansion;
    std::vector<BoundEntry> degrees;
    UniPoly polynomial;
    PositivityProof positivity;

    friend bool operator==(const ProofPiece&, const ProofPiece&) = default;
};

struct Certificate {
    int version = 1;
    std::string problem;
    std::vector<ProofPiece> pieces;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

class CertificateFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// canonical single-line JSON
std::string emit_certificate(const Certificate& c);
// strict inverse of emit_certificate; throws CertificateFormatError
Certificate parse_certificate(const std::string& bytes);

struct CheckResult {
    bool accepted = false;
    std::string step;  // failing step when rejected
    std::string reason;
};

CheckResult check(const std::string& bytes, Exec exec = Exec::parallel);

}  // namespace trigprove
