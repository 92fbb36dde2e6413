#include "trigprove/driver.hpp"

#include "trigprove/parser.hpp"
#include "trigprove/series.hpp"

#include <sstream>

namespace trigprove {

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::proved: return "proved";
    case Verdict::refuted: return "refuted";
    default: return "gave-up";
    }
}

std::string emit(const ProofOutcome& o)
{
    if (o.verdict != Verdict::proved || !o.certificate)
        throw std::logic_error(std::string("no certificate for a ") + to_string(o.verdict) + " outcome");
    return emit_certificate(*o.certificate);
}

namespace {

struct Frame {
    PiPoly offset;
    int orientation = 1;

    FrameKind kind() const
    {
        if (orientation < 0)
            return FrameKind::reflect;
        return offset.is_zero() ? FrameKind::none : FrameKind::shift;
    }
    PiPoly map(const PiPoly& w) const { return offset + w * Rational(orientation); }
};

PiPoly lift(const Rational& r)
{
    return PiPoly::constant(r);
}

std::string show(const PiPoly& p)
{
    return print_pipoly(p);
}

std::string degree_list(const std::vector<BoundEntry>& entries)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < entries.size(); ++i)
        os << (i ? " " : "") << to_string(entries[i].addend.func) << "(" << entries[i].addend.multiple << "x):"
           << entries[i].degree;
    return os.str();
}

class Search {
public:
    Search(const ProblemSpec& spec, const SearchConfig& cfg, ProofOutcome& out) : spec_(spec), cfg_(cfg), out_(out)
    {
        popt_.precision_bits = cfg.precision_bits;
        popt_.precision_cap = cfg.precision_cap;
        popt_.exec = cfg.exec;
    }

    bool refuted() const { return out_.verdict == Verdict::refuted; }

    void log(const std::string& s) { out_.diagnostics.push_back(s); }

    // smallest rational >= 0 not above p (p >= 0)
    Rational lower_rational(const PiPoly& p) const
    {
        if (p.degree() <= 0)
            return p.coeff(0);
        Rational r = floor_dyadic(pipoly_enclose(p, cfg_.precision_bits).lo, cfg_.precision_bits);
        return sgn(r) < 0 ? Rational(0) : r;
    }

    // f(frame(w)) < 0 for a rational w of the working domain; records the refutation
    bool try_refute(const MixedTrigPoly& g, const Frame& fr, const Rational& w)
    {
        const PiPoly x = fr.map(lift(w));
        if (cmp(spec_.lo, x) >= 0 || cmp(x, spec_.hi) >= 0)
            return false;
        for (unsigned bits = 64; bits <= cfg_.precision_cap; bits *= 2) {
            RatInterval v = enclose_mixed(g, w, bits);
            if (sgn(v.hi) < 0 || (sgn(v.lo) == 0 && sgn(v.hi) == 0)) {
                out_.verdict = Verdict::refuted;
                out_.witness = x;
                out_.witness_value = v;
                log("refuted: f(" + show(x) + ") in [" + to_string(v.lo) + ", " + to_string(v.hi) + "]");
                return true;
            }
            if (sgn(v.lo) > 0)
                return false;
        }
        return false;
    }

    // g < 0 just right of 0: look for a certified negative value
    bool refute_near_zero(const MixedTrigPoly& g, const Frame& fr, const PiPoly& hi)
    {
        Rational w = domain_upper(hi, cfg_.precision_bits);
        if (w > 1)
            w = 1;
        for (int i = 0; i < 256 && !refuted(); ++i) {
            w /= 2;
            if (try_refute(g, fr, w))
                return true;
        }
        return false;
    }

    std::optional<std::vector<ProofPiece>> deepen(const MixedTrigPoly& g, const Frame& fr, const Rational& lo,
                                                  const PiPoly& hi)
    {
        for (unsigned b = 0; b <= cfg_.split_depth_max; ++b) {
            log("split budget " + std::to_string(b) + " on [" + show(lift(lo)) + ", " + show(hi) + "]");
            auto r = solve(g, fr, lo, hi, b);
            if (r || refuted() || exhausted())
                return r;
        }
        return std::nullopt;
    }

private:
    int cmp(const PiPoly& a, const PiPoly& b) const { return pipoly_compare(a, b, 64, cfg_.precision_cap); }

    bool exhausted() const { return attempts_ >= cfg_.max_attempts; }

    PositivityResult attempt(const UniPoly& p, const Rational& lo, const PiPoly& hi)
    {
        ++attempts_;
        return prove_positive(p, lo, hi, popt_);
    }

    // largest k/10^e below the least root of p in (lo, hi], above lo
    std::optional<Rational> split_point(const UniPoly& p, const Rational& lo, const PiPoly& hi)
    {
        const UniPoly shifted = sgn(lo) == 0 ? p : p.shift(lift(lo));
        const Rational limit = domain_upper(hi, cfg_.precision_bits) - lo;
        RootSearch rs = least_positive_root(shifted, cfg_.width_target, cfg_.precision_bits, limit, cfg_.precision_cap);
        if (!rs.root)
            return std::nullopt;
        const Rational root_lo = lo + rs.root->lo;
        log("  least root near " + std::to_string(to_double(root_lo)) + " (enclosure width " +
            std::to_string(to_double(rs.root->width())) + ")");
        for (Integer den = 1000; den <= Integer(1000000000); den *= 10) {
            mpz_class num = root_lo.get_num() * den;
            mpz_class k;
            mpz_cdiv_q(k.get_mpz_t(), num.get_mpz_t(), root_lo.get_den().get_mpz_t());
            Rational a = make_rational(k - 1, den);
            if (a > lo)
                return cmp(lift(a), hi) < 0 ? std::optional<Rational>(a) : std::nullopt;
        }
        return std::nullopt;
    }

    ProofPiece make_piece(const Frame& fr, const Rational& lo, const PiPoly& hi, const MultiAngleSum& sum,
                          std::vector<BoundEntry> entries, const UniPoly& p, const PositivityProof& proof)
    {
        ProofPiece piece;
        piece.frame = {fr.kind(), fr.offset, lo, hi};
        piece.expansion = sum;
        piece.degrees = std::move(entries);
        piece.polynomial = p;
        piece.positivity = proof;
        return piece;
    }

    std::optional<std::vector<ProofPiece>> solve(const MixedTrigPoly& g, const Frame& fr, const Rational& lo,
                                                 const PiPoly& hi, unsigned budget)
    {
        try {
            return solve_unguarded(g, fr, lo, hi, budget);
        } catch (const UndecidableSign& e) {
            log(std::string("  undecidable sign: ") + e.what());
        } catch (const std::runtime_error& e) {
            log(std::string("  ") + e.what());
        }
        return std::nullopt;
    }

    std::optional<std::vector<ProofPiece>> solve_unguarded(const MixedTrigPoly& g, const Frame& fr, const Rational& lo,
                                                           const PiPoly& hi, unsigned budget)
    {
        if (exhausted())
            return std::nullopt;
        if (sgn(lo) == 0) {
            auto ls = local_sign(g, cfg_.series_order, cfg_.precision_cap);
            if (!ls) {
                if (g.is_zero()) {
                    refute_near_zero(g, fr, hi);
                    return std::nullopt;
                }
                log("  vanishes to order " + std::to_string(cfg_.series_order) + " at the left end");
                return std::nullopt;
            }
            if (ls->sign < 0) {
                log("  negative right of the left end (order " + std::to_string(ls->order) + ")");
                if (!refute_near_zero(g, fr, hi))
                    log("  no certified negative value found near the left end");
                return std::nullopt;
            }
        }
        const MultiAngleSum sum = expand_poly(g);
        const std::vector<SignedAddend> addends = resolve_signs(sum, lo, hi, popt_);
        const bool reflectable = half_pi_multiple(hi).has_value();
        const bool zero_at_hi =
            reflectable && pipoly_sign(value_at_half_pi_multiple(g, hi), 64, cfg_.precision_cap) == 0;
        if (zero_at_hi)
            log("  vanishes at " + show(hi) + "; direct attempts skipped");

        std::optional<Rational> last_split;
        unsigned splits = 0;
        for (unsigned K = 0; K <= cfg_.K_max && !exhausted(); ++K) {
            const DegreeAssignment d = uniform_assignment(addends, hi, K, cfg_.precision_bits);
            std::vector<BoundEntry> entries = make_entries(addends, d, hi, cfg_.precision_bits);
            const UniPoly p = assemble_polynomial(sum.constant_part, entries);
            const std::string head = "  K=" + std::to_string(K) + " [" + degree_list(entries) + "]";
            if (p.is_zero()) {
                log(head + ": bound polynomial vanishes");
                continue;
            }
            if (sgn(lo) == 0 && pipoly_sign(p.coeff(p.trailing_zeros()), 64, cfg_.precision_cap) < 0) {
                log(head + ": negative near the left end");
                continue;
            }
            if (!zero_at_hi) {
                PositivityResult r = attempt(p, lo, hi);
                if (r.status == PositivityStatus::proved) {
                    log(head + ": proved");
                    return std::vector<ProofPiece>{make_piece(fr, lo, hi, sum, std::move(entries), p, *r.proof)};
                }
                log(head + ": " + r.detail);
                if (r.status == PositivityStatus::disproved && r.witness && *r.witness > lo &&
                    try_refute(g, fr, *r.witness))
                    return std::nullopt;
            }
            if (budget == 0 || splits >= cfg_.splits_per_piece)
                continue;
            log(head + ": looking for a split");
            auto a = split_point(p, lo, hi);
            if (!a || (last_split && *a <= *last_split))
                continue;
            last_split = a;
            ++splits;
            const PiPoly a_pi = lift(*a);
            PositivityResult left = attempt(p, lo, a_pi);
            if (left.status != PositivityStatus::proved) {
                log("  left piece up to " + to_string(*a) + ": " + left.detail);
                continue;
            }
            log("  left piece up to " + to_string(*a) + " proved");
            std::optional<std::vector<ProofPiece>> right;
            if (reflectable) {
                Frame next{fr.offset + hi * Rational(fr.orientation), -fr.orientation};
                log("  reflect at " + show(hi) + " on [0, " + show(hi - a_pi) + "]");
                right = solve(reflect_at(g, hi), next, Rational(0), hi - a_pi, budget - 1);
            } else {
                log("  right piece [" + to_string(*a) + ", " + show(hi) + "]");
                right = solve(g, fr, *a, hi, budget - 1);
            }
            if (refuted())
                return std::nullopt;
            if (right) {
                std::vector<ProofPiece> out;
                out.push_back(make_piece(fr, lo, a_pi, sum, make_entries(addends, d, a_pi, cfg_.precision_bits), p,
                                         *left.proof));
                out.insert(out.end(), right->begin(), right->end());
                return out;
            }
        }
        return std::nullopt;
    }

    const ProblemSpec& spec_;
    const SearchConfig& cfg_;
    ProofOutcome& out_;
    PositivityOptions popt_;
    std::size_t attempts_ = 0;
};

}  // namespace

ProofOutcome prove(const ProblemSpec& spec, const SearchConfig& cfg)
{
    if (!valid_precision(cfg.precision_bits) || !valid_precision(cfg.precision_cap) ||
        cfg.precision_cap < cfg.precision_bits)
        throw std::invalid_argument("precisions must be powers of two in [8, 65536] with cap >= working precision");
    ProofOutcome out;
    Search search(spec, cfg, out);
    search.log("problem: " + print_problem(spec));
    const unsigned cap = cfg.precision_cap;
    const int s_lo = pipoly_sign(spec.lo, 64, cap);
    const int s_hi = pipoly_sign(spec.hi, 64, cap);

    if (s_lo < 0 && s_hi > 0) {
        const PiPoly v0 = value_at_half_pi_multiple(spec.f, PiPoly());
        if (pipoly_sign(v0, 64, cap) <= 0) {
            out.verdict = Verdict::refuted;
            out.witness = PiPoly();
            out.witness_value = pipoly_enclose(v0, cfg.precision_bits);
            search.log("refuted: f(0) = " + print_pipoly(v0));
            return out;
        }
    }

    struct Part {
        MixedTrigPoly g;
        Frame frame;
        Rational lo;
        PiPoly hi;
    };
    std::vector<Part> parts;
    if (s_lo < 0) {
        const Rational lo = s_hi < 0 ? search.lower_rational(-spec.hi) : Rational(0);
        parts.push_back({reflect_at(spec.f, PiPoly()), Frame{PiPoly(), -1}, lo, -spec.lo});
    }
    if (s_hi > 0) {
        const Rational lo = s_lo > 0 ? search.lower_rational(spec.lo) : Rational(0);
        parts.push_back({spec.f, Frame{PiPoly(), 1}, lo, spec.hi});
    }

    Certificate cert;
    cert.problem = print_problem(spec);
    for (const auto& part : parts) {
        auto pieces = search.deepen(part.g, part.frame, part.lo, part.hi);
        if (search.refuted())
            return out;
        if (!pieces) {
            out.verdict = Verdict::gave_up;
            search.log("gave up");
            return out;
        }
        cert.pieces.insert(cert.pieces.end(), pieces->begin(), pieces->end());
    }

    CheckResult c = check(emit_certificate(cert), cfg.exec);
    if (!c.accepted) {
        out.verdict = Verdict::gave_up;
        search.log("internal: certificate rejected at " + c.step + ": " + c.reason);
        return out;
    }
    out.verdict = Verdict::proved;
    out.certificate = std::move(cert);
    search.log("proved with " + std::to_string(out.certificate->pieces.size()) + " piece(s)");
    return out;
}

}  // namespace trigprove
