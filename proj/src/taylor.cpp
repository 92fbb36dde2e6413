#include "trigprove/taylor.hpp"

#include <algorithm>

namespace trigprove {

const char* to_string(BoundDirection d)
{
    return d == BoundDirection::upper ? "upper" : "lower";
}

BoundDirection direction_from_string(const std::string& s)
{
    if (s == "upper")
        return BoundDirection::upper;
    if (s == "lower")
        return BoundDirection::lower;
    throw std::invalid_argument("unknown bound direction " + s);
}

namespace {

void check_parity(TrigFunc func, unsigned n)
{
    if ((func == TrigFunc::sin) != (n % 2 == 1))
        throw ParityError(std::string(to_string(func)) + " needs " + (func == TrigFunc::sin ? "odd" : "even") +
                          " degree, got " + std::to_string(n));
}

}  // namespace

RatPoly maclaurin_rational(TrigFunc func, unsigned n)
{
    check_parity(func, n);
    std::vector<Rational> c(n + 1);
    const unsigned start = func == TrigFunc::sin ? 1 : 0;
    for (unsigned k = start, i = 0; k <= n; k += 2, ++i) {
        Rational v = make_rational(Integer(1), factorial(k));
        c[k] = i % 2 == 0 ? v : Rational(-v);
    }
    return RatPoly(std::move(c));
}

UniPoly maclaurin(TrigFunc func, unsigned n)
{
    RatPoly r = maclaurin_rational(func, n);
    std::vector<PiPoly> c;
    for (const auto& v : r.coeffs())
        c.push_back(PiPoly::constant(v));
    return UniPoly(std::move(c));
}

TaylorBound classify(TrigFunc func, unsigned n)
{
    check_parity(func, n);
    BoundDirection dir;
    if (func == TrigFunc::sin)
        dir = n % 4 == 1 ? BoundDirection::upper : BoundDirection::lower;
    else
        dir = n % 4 == 0 ? BoundDirection::upper : BoundDirection::lower;
    return {func, n, dir, static_cast<unsigned long>(n + 3) * (n + 4)};
}

unsigned template_degree(TrigFunc func, BoundDirection dir, unsigned l)
{
    if (func == TrigFunc::sin)
        return 4 * l + (dir == BoundDirection::lower ? 3 : 1);
    return 4 * l + (dir == BoundDirection::lower ? 2 : 0);
}

unsigned template_index(TrigFunc func, BoundDirection dir, unsigned n)
{
    const unsigned off = template_degree(func, dir, 0);
    if (n < off || (n - off) % 4 != 0)
        throw ParityError("degree " + std::to_string(n) + " does not give a " + to_string(dir) + " bound for " +
                          to_string(func));
    return (n - off) / 4;
}

ValidityCheck validity_check(unsigned multiple, const PiPoly& hi, unsigned precision_bits)
{
    if (hi.degree() <= 0) {
        Rational m = hi.coeff(0) * multiple;
        return {m * m, 0};
    }
    RatInterval e = pipoly_enclose(hi * Rational(multiple), precision_bits);
    return {ipow(e, 2).hi, precision_bits};
}

unsigned minimal_index(TrigFunc func, BoundDirection dir, const ValidityCheck& v)
{
    for (unsigned l = 0;; ++l) {
        unsigned n = template_degree(func, dir, l);
        if (Rational(static_cast<unsigned long>(n + 3) * (n + 4)) >= v.bound)
            return l;
    }
}

std::optional<UniPoly> sign_proof_polynomial(const SignedAddend& a)
{
    UniPoly g = a.factor;
    for (unsigned i = 0; i < a.boundary_multiplicity; ++i) {
        auto [q, rem] = g.divide_linear(a.sign_hi);
        if (!rem.is_zero())
            return std::nullopt;
        g = std::move(q);
    }
    const int s = a.boundary_multiplicity % 2 == 0 ? a.sign : -a.sign;
    return s > 0 ? g : -g;
}

namespace {

bool try_sign(const UniPoly& g, int s, const Rational& lo, const PiPoly& hi, const PositivityOptions& opt,
              PositivityProof& out)
{
    PositivityResult r = prove_positive(s > 0 ? g : -g, lo, hi, opt);
    if (r.status != PositivityStatus::proved)
        return false;
    out = *r.proof;
    return true;
}

// constant sign of factor on the domain, or nullopt
std::optional<SignedAddend> certify_sign(const SubAddend& sa, const UniPoly& factor, const Rational& lo,
                                         const PiPoly& hi, const PositivityOptions& opt)
{
    UniPoly g = factor;
    unsigned k = 0;
    while (g.degree() > 0) {
        auto [q, rem] = g.divide_linear(hi);
        if (!rem.is_zero())
            break;
        g = q;
        ++k;
    }
    const Rational hi_r = domain_upper(hi, opt.precision_bits);
    const Rational mid = (lo + hi_r) / 2;
    int guess = sign_at(g, mid, 64, opt.precision_cap);
    if (guess == 0)
        return std::nullopt;
    SignedAddend out;
    out.func = sa.func;
    out.multiple = sa.multiple;
    out.factor = factor;
    out.boundary_multiplicity = k;
    out.sign_hi = hi;
    if (!try_sign(g, guess, lo, hi, opt, out.sign_proof))
        return std::nullopt;
    out.sign = k % 2 == 0 ? guess : -guess;
    return out;
}

}  // namespace

std::vector<SignedAddend> resolve_signs(const MultiAngleSum& s, const Rational& lo, const PiPoly& hi,
                                        const PositivityOptions& opt)
{
    std::vector<SignedAddend> out;
    for (const auto& sa : s.sub_addends) {
        const UniPoly total = sa.combined();
        if (auto whole = certify_sign(sa, total, lo, hi, opt)) {
            out.push_back(std::move(*whole));
            continue;
        }
        for (std::size_t k = 0; k < total.size(); ++k) {
            if (total.coeffs()[k].is_zero())
                continue;
            UniPoly mono = UniPoly::monomial(k, total.coeffs()[k]);
            auto piece = certify_sign(sa, mono, lo, hi, opt);
            if (!piece)
                throw std::runtime_error("could not certify the sign of a monomial factor");
            out.push_back(std::move(*piece));
        }
    }
    return out;
}

DegreeAssignment uniform_assignment(const std::vector<SignedAddend>& addends, const PiPoly& hi, unsigned K,
                                    unsigned precision_bits)
{
    DegreeAssignment d;
    d.K = K;
    for (const auto& a : addends) {
        BoundDirection dir = a.sign > 0 ? BoundDirection::lower : BoundDirection::upper;
        unsigned l = minimal_index(a.func, dir, validity_check(a.multiple, hi, precision_bits));
        d.index.push_back(std::max(l, K));
    }
    return d;
}

std::vector<BoundEntry> make_entries(const std::vector<SignedAddend>& addends, const DegreeAssignment& d,
                                     const PiPoly& hi, unsigned precision_bits)
{
    if (d.index.size() != addends.size())
        throw std::invalid_argument("degree assignment does not match the addends");
    std::vector<BoundEntry> out;
    for (std::size_t i = 0; i < addends.size(); ++i) {
        const auto& a = addends[i];
        BoundEntry e;
        e.addend = a;
        e.direction = a.sign > 0 ? BoundDirection::lower : BoundDirection::upper;
        e.degree = template_degree(a.func, e.direction, d.index[i]);
        e.radius_sq = classify(a.func, e.degree).radius_sq;
        e.validity = validity_check(a.multiple, hi, precision_bits);
        if (e.validity.bound > Rational(e.radius_sq)) {
            unsigned l = minimal_index(a.func, e.direction, e.validity);
            throw ValidityError("degree " + std::to_string(e.degree) + " is not valid for " + to_string(a.func) +
                                    "(" + std::to_string(a.multiple) + "x) on this interval",
                                template_degree(a.func, e.direction, l));
        }
        out.push_back(std::move(e));
    }
    return out;
}

UniPoly assemble_polynomial(const UniPoly& constant_part, const std::vector<BoundEntry>& entries)
{
    UniPoly p = constant_part;
    for (const auto& e : entries) {
        UniPoly t = maclaurin(e.addend.func, e.degree).scale_argument(PiPoly::constant(Rational(e.addend.multiple)));
        p += e.addend.factor * t;
    }
    return p;
}

Substitution substitute_bounds(const MultiAngleSum& s, const DegreeAssignment& d, const Rational& lo,
                               const PiPoly& hi, const PositivityOptions& opt)
{
    auto addends = resolve_signs(s, lo, hi, opt);
    Substitution out;
    out.entries = make_entries(addends, d, hi, opt.precision_bits);
    out.polynomial = assemble_polynomial(s.constant_part, out.entries);
    return out;
}

}  // namespace trigprove
