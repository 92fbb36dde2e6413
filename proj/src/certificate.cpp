#include "trigprove/certificate.hpp"

#include "trigprove/parser.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace trigprove {

using json = nlohmann::json;

namespace {

constexpr unsigned kCompareStart = 64;
constexpr unsigned kCompareCap = 1u << 14;
constexpr unsigned kMaxPrecision = 1u << 16;

// ---- writing

json rat(const Rational& r)
{
    return to_string(r);
}

json pipoly(const PiPoly& p)
{
    json a = json::array();
    for (const auto& c : p.coeffs())
        a.push_back(rat(c));
    return a;
}

json unipoly(const UniPoly& p)
{
    json a = json::array();
    for (const auto& c : p.coeffs())
        a.push_back(pipoly(c));
    return a;
}

const char* frame_kind_name(FrameKind k)
{
    switch (k) {
    case FrameKind::none: return "none";
    case FrameKind::reflect: return "reflect";
    default: return "shift";
    }
}

json proof_json(const PositivityProof& p)
{
    json o;
    o["mode"] = p.mode == PositivityMode::sturm ? "sturm" : "bisection";
    o["multiplicity_at_zero"] = p.multiplicity_at_zero;
    o["lo"] = rat(p.lo);
    o["hi"] = rat(p.hi);
    o["domain_precision"] = p.domain_precision;
    if (p.mode == PositivityMode::sturm) {
        o["root_count"] = p.root_count;
        o["sign_at_lo"] = p.sign_at_lo;
    } else {
        json leaves = json::array();
        for (const auto& l : p.leaves)
            leaves.push_back(json::array({rat(l.lo), rat(l.hi), l.precision, rat(l.lower_bound)}));
        o["leaves"] = std::move(leaves);
    }
    return o;
}

json entry_json(const BoundEntry& e)
{
    json o;
    o["func"] = to_string(e.addend.func);
    o["multiple"] = e.addend.multiple;
    o["factor"] = unipoly(e.addend.factor);
    o["sign"] = e.addend.sign;
    o["boundary_multiplicity"] = e.addend.boundary_multiplicity;
    o["sign_hi"] = pipoly(e.addend.sign_hi);
    o["sign_proof"] = proof_json(e.addend.sign_proof);
    o["degree"] = e.degree;
    o["direction"] = to_string(e.direction);
    o["radius_sq"] = e.radius_sq;
    o["validity"] = {{"bound", rat(e.validity.bound)}, {"precision", e.validity.precision}};
    return o;
}

json expansion_json(const MultiAngleSum& s)
{
    json terms = json::array();
    for (const auto& t : s.sub_addends)
        terms.push_back({{"func", to_string(t.func)},
                         {"multiple", t.multiple},
                         {"factor", unipoly(t.factor)},
                         {"coeff", rat(t.coeff)}});
    return {{"constant", unipoly(s.constant_part)}, {"terms", std::move(terms)}};
}

// ---- reading

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw CertificateFormatError(where + ": " + what);
}

// object with exactly the given keys
const json& object(const json& j, const std::string& where, std::initializer_list<const char*> keys)
{
    if (!j.is_object())
        fail(where, "expected an object");
    std::set<std::string> want(keys.begin(), keys.end());
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!want.count(it.key()))
            fail(where, "unexpected key " + it.key());
    for (const auto& k : want)
        if (!j.contains(k))
            fail(where, "missing key " + k);
    return j;
}

const json& array(const json& j, const std::string& where)
{
    if (!j.is_array())
        fail(where, "expected an array");
    return j;
}

Rational read_rat(const json& j, const std::string& where)
{
    if (!j.is_string() || !is_canonical_rational_string(j.get<std::string>()))
        fail(where, "expected a canonical rational string");
    return rational_from_string(j.get<std::string>());
}

unsigned long read_uint(const json& j, const std::string& where)
{
    if (!j.is_number_unsigned())
        fail(where, "expected a non-negative integer");
    return j.get<unsigned long>();
}

unsigned read_u32(const json& j, const std::string& where)
{
    unsigned long v = read_uint(j, where);
    if (v > kMaxPrecision * 16ul)
        fail(where, "integer out of range");
    return static_cast<unsigned>(v);
}

int read_sign(const json& j, const std::string& where)
{
    if (!j.is_number_integer())
        fail(where, "expected an integer");
    long v = j.get<long>();
    if (v < -1 || v > 1)
        fail(where, "expected -1, 0 or 1");
    return static_cast<int>(v);
}

std::string read_string(const json& j, const std::string& where)
{
    if (!j.is_string())
        fail(where, "expected a string");
    return j.get<std::string>();
}

PiPoly read_pipoly(const json& j, const std::string& where)
{
    std::vector<Rational> c;
    for (const auto& v : array(j, where))
        c.push_back(read_rat(v, where));
    PiPoly p(std::move(c));
    if (p.size() != j.size())
        fail(where, "polynomial has trailing zero coefficients");
    return p;
}

UniPoly read_unipoly(const json& j, const std::string& where)
{
    std::vector<PiPoly> c;
    for (const auto& v : array(j, where))
        c.push_back(read_pipoly(v, where));
    UniPoly p(std::move(c));
    if (p.size() != j.size())
        fail(where, "polynomial has trailing zero coefficients");
    return p;
}

TrigFunc read_func(const json& j, const std::string& where)
{
    try {
        return trig_func_from_string(read_string(j, where));
    } catch (const std::invalid_argument&) {
        fail(where, "unknown function");
    }
}

PositivityProof read_proof(const json& j, const std::string& where)
{
    if (!j.is_object() || !j.contains("mode"))
        fail(where, "expected a positivity proof");
    PositivityProof p;
    const std::string mode = read_string(j["mode"], where + ".mode");
    if (mode == "sturm") {
        object(j, where, {"mode", "multiplicity_at_zero", "lo", "hi", "domain_precision", "root_count", "sign_at_lo"});
        p.mode = PositivityMode::sturm;
        p.root_count = read_u32(j["root_count"], where + ".root_count");
        p.sign_at_lo = read_sign(j["sign_at_lo"], where + ".sign_at_lo");
    } else if (mode == "bisection") {
        object(j, where, {"mode", "multiplicity_at_zero", "lo", "hi", "domain_precision", "leaves"});
        p.mode = PositivityMode::bisection;
        for (const auto& l : array(j["leaves"], where + ".leaves")) {
            if (!l.is_array() || l.size() != 4)
                fail(where + ".leaves", "expected [lo, hi, precision, lower_bound]");
            p.leaves.push_back({read_rat(l[0], where + ".leaves"), read_rat(l[1], where + ".leaves"),
                                read_u32(l[2], where + ".leaves"), read_rat(l[3], where + ".leaves")});
        }
    } else {
        fail(where, "unknown mode " + mode);
    }
    p.multiplicity_at_zero = read_u32(j["multiplicity_at_zero"], where + ".multiplicity_at_zero");
    p.lo = read_rat(j["lo"], where + ".lo");
    p.hi = read_rat(j["hi"], where + ".hi");
    p.domain_precision = read_u32(j["domain_precision"], where + ".domain_precision");
    return p;
}

BoundEntry read_entry(const json& j, const std::string& where)
{
    object(j, where,
           {"func", "multiple", "factor", "sign", "boundary_multiplicity", "sign_hi", "sign_proof", "degree",
            "direction", "radius_sq", "validity"});
    BoundEntry e;
    e.addend.func = read_func(j["func"], where + ".func");
    e.addend.multiple = read_u32(j["multiple"], where + ".multiple");
    e.addend.factor = read_unipoly(j["factor"], where + ".factor");
    e.addend.sign = read_sign(j["sign"], where + ".sign");
    e.addend.boundary_multiplicity = read_u32(j["boundary_multiplicity"], where + ".boundary_multiplicity");
    e.addend.sign_hi = read_pipoly(j["sign_hi"], where + ".sign_hi");
    e.addend.sign_proof = read_proof(j["sign_proof"], where + ".sign_proof");
    e.degree = read_u32(j["degree"], where + ".degree");
    try {
        e.direction = direction_from_string(read_string(j["direction"], where + ".direction"));
    } catch (const std::invalid_argument&) {
        fail(where + ".direction", "unknown direction");
    }
    e.radius_sq = read_uint(j["radius_sq"], where + ".radius_sq");
    const json& v = object(j["validity"], where + ".validity", {"bound", "precision"});
    e.validity.bound = read_rat(v["bound"], where + ".validity.bound");
    e.validity.precision = read_u32(v["precision"], where + ".validity.precision");
    return e;
}

MultiAngleSum read_expansion(const json& j, const std::string& where)
{
    object(j, where, {"constant", "terms"});
    MultiAngleSum s;
    s.constant_part = read_unipoly(j["constant"], where + ".constant");
    for (const auto& t : array(j["terms"], where + ".terms")) {
        object(t, where + ".terms", {"func", "multiple", "factor", "coeff"});
        SubAddend a;
        a.func = read_func(t["func"], where + ".terms.func");
        a.multiple = read_u32(t["multiple"], where + ".terms.multiple");
        a.factor = read_unipoly(t["factor"], where + ".terms.factor");
        a.coeff = read_rat(t["coeff"], where + ".terms.coeff");
        s.sub_addends.push_back(std::move(a));
    }
    return s;
}

PieceFrame read_frame(const json& j, const std::string& where)
{
    object(j, where, {"kind", "offset", "lo", "hi"});
    PieceFrame f;
    const std::string kind = read_string(j["kind"], where + ".kind");
    if (kind == "none")
        f.kind = FrameKind::none;
    else if (kind == "reflect")
        f.kind = FrameKind::reflect;
    else if (kind == "shift")
        f.kind = FrameKind::shift;
    else
        fail(where + ".kind", "unknown frame kind " + kind);
    f.offset = read_pipoly(j["offset"], where + ".offset");
    f.lo = read_rat(j["lo"], where + ".lo");
    f.hi = read_pipoly(j["hi"], where + ".hi");
    return f;
}

json certificate_json(const Certificate& c)
{
    json reflection = json::array(), expansion = json::array(), degrees = json::array(),
         polynomial = json::array(), positivity = json::array();
    for (const auto& p : c.pieces) {
        reflection.push_back({{"kind", frame_kind_name(p.frame.kind)},
                              {"offset", pipoly(p.frame.offset)},
                              {"lo", rat(p.frame.lo)},
                              {"hi", pipoly(p.frame.hi)}});
        expansion.push_back(expansion_json(p.expansion));
        json entries = json::array();
        for (const auto& e : p.degrees)
            entries.push_back(entry_json(e));
        degrees.push_back(std::move(entries));
        polynomial.push_back(unipoly(p.polynomial));
        positivity.push_back(proof_json(p.positivity));
    }
    return {{"version", c.version},       {"problem", c.problem},       {"reflection", std::move(reflection)},
            {"expansion", std::move(expansion)}, {"degrees", std::move(degrees)}, {"polynomial", std::move(polynomial)},
            {"positivity", std::move(positivity)}};
}

}  // namespace

std::string emit_certificate(const Certificate& c)
{
    return certificate_json(c).dump();
}

Certificate parse_certificate(const std::string& bytes)
{
    json j;
    try {
        j = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw CertificateFormatError(std::string("not JSON: ") + e.what());
    }
    object(j, "certificate", {"version", "problem", "reflection", "expansion", "degrees", "polynomial", "positivity"});
    Certificate c;
    if (!j["version"].is_number_integer() || j["version"].get<long>() != 1)
        fail("version", "unsupported certificate version");
    c.problem = read_string(j["problem"], "problem");
    const json& refl = array(j["reflection"], "reflection");
    const std::size_t n = refl.size();
    for (const char* k : {"expansion", "degrees", "polynomial", "positivity"})
        if (array(j[k], k).size() != n)
            fail(k, "piece count differs from reflection");
    if (n == 0)
        fail("reflection", "no pieces");
    for (std::size_t i = 0; i < n; ++i) {
        const std::string tag = "[" + std::to_string(i) + "]";
        ProofPiece p;
        p.frame = read_frame(refl[i], "reflection" + tag);
        p.expansion = read_expansion(j["expansion"][i], "expansion" + tag);
        for (const auto& e : array(j["degrees"][i], "degrees" + tag))
            p.degrees.push_back(read_entry(e, "degrees" + tag));
        p.polynomial = read_unipoly(j["polynomial"][i], "polynomial" + tag);
        p.positivity = read_proof(j["positivity"][i], "positivity" + tag);
        c.pieces.push_back(std::move(p));
    }
    if (emit_certificate(c) != bytes)
        throw CertificateFormatError("document is not in canonical form");
    return c;
}

namespace {

struct Rejection {
    std::string step;
    std::string reason;
};

[[noreturn]] void reject(const std::string& step, const std::string& reason)
{
    throw Rejection{step, reason};
}

int cmp(const PiPoly& a, const PiPoly& b)
{
    return pipoly_compare(a, b, kCompareStart, kCompareCap);
}

PiPoly lift(const Rational& r)
{
    return PiPoly::constant(r);
}

void check_proof_domain(const PositivityProof& p, const Rational& lo, const PiPoly& hi, const std::string& step,
                        const std::string& what)
{
    if (p.lo != lo)
        reject(step, what + " does not start at the piece's left end");
    const bool rational = hi.degree() <= 0;
    if (rational != (p.domain_precision == 0))
        reject(step, what + " domain precision inconsistent with the domain end");
    if (!rational && !valid_precision(p.domain_precision))
        reject(step, what + " domain precision out of range");
    if (p.hi != domain_upper(hi, p.domain_precision))
        reject(step, what + " does not end at the enclosure of the domain end");
}

struct Span {
    PiPoly lo, hi;
    bool lo_closed, hi_closed;
};

Span check_piece(const MixedTrigPoly& f, const ProofPiece& piece, std::size_t index, Exec exec)
{
    const std::string tag = " of piece " + std::to_string(index);
    const PieceFrame& fr = piece.frame;

    // reflection
    auto k = half_pi_multiple(fr.offset);
    if (!k)
        reject("reflection", "offset is not a multiple of pi/2" + tag);
    if (fr.kind == FrameKind::none && !fr.offset.is_zero())
        reject("reflection", "identity frame with an offset" + tag);
    if (fr.kind == FrameKind::shift && fr.offset.is_zero())
        reject("reflection", "shift frame without an offset" + tag);
    if (sgn(fr.lo) < 0)
        reject("reflection", "negative left end" + tag);
    if (cmp(lift(fr.lo), fr.hi) >= 0)
        reject("reflection", "empty domain" + tag);
    const MixedTrigPoly g = affine_substitute(f, fr.offset, fr.orientation());

    // expansion
    if (expand_poly(g) != piece.expansion)
        reject("expansion", "expansion does not reproduce" + tag);

    // classification, validity and signs
    std::map<std::pair<int, unsigned>, UniPoly> sums;
    for (std::size_t i = 0; i < piece.degrees.size(); ++i) {
        const BoundEntry& e = piece.degrees[i];
        const SignedAddend& a = e.addend;
        const std::string etag = " of entry " + std::to_string(i) + tag;
        if (a.multiple == 0 || (a.sign != 1 && a.sign != -1))
            reject("classification", "malformed addend" + etag);
        TaylorBound b;
        try {
            b = classify(a.func, e.degree);
        } catch (const ParityError& err) {
            reject("classification", err.what() + etag);
        }
        if (b.direction != e.direction || b.radius_sq != e.radius_sq)
            reject("classification", "direction or radius does not match the degree" + etag);
        if ((a.sign > 0) != (e.direction == BoundDirection::lower))
            reject("classification", "bound direction does not match the factor sign" + etag);

        const bool rational_hi = fr.hi.degree() <= 0;
        if (rational_hi != (e.validity.precision == 0))
            reject("validity", "check precision inconsistent with the domain end" + etag);
        if (!rational_hi && !valid_precision(e.validity.precision))
            reject("validity", "check precision out of range" + etag);
        ValidityCheck v = validity_check(a.multiple, fr.hi, e.validity.precision);
        if (v.bound != e.validity.bound)
            reject("validity", "recorded bound does not reproduce" + etag);
        if (v.bound > Rational(e.radius_sq))
            reject("validity", "degree not valid on the domain" + etag);

        if (cmp(a.sign_hi, fr.hi) < 0)
            reject("sign", "sign domain smaller than the piece" + etag);
        auto q = sign_proof_polynomial(a);
        if (!q)
            reject("sign", "factor does not vanish at the sign domain end" + etag);
        check_proof_domain(a.sign_proof, fr.lo, a.sign_hi, "sign", "sign proof" + etag);
        if (auto err = verify_positivity(*q, a.sign_proof, exec))
            reject("sign", *err + etag);
        sums[{static_cast<int>(a.func), a.multiple}] += a.factor;
    }

    // factor sums
    std::map<std::pair<int, unsigned>, UniPoly> want;
    for (const auto& t : piece.expansion.sub_addends)
        want[{static_cast<int>(t.func), t.multiple}] += t.combined();
    if (sums != want)
        reject("factor sums", "entry factors do not add up to the expansion" + tag);

    // polynomial
    if (assemble_polynomial(piece.expansion.constant_part, piece.degrees) != piece.polynomial)
        reject("polynomial", "bound polynomial does not reproduce" + tag);

    // positivity
    check_proof_domain(piece.positivity, fr.lo, fr.hi, "positivity", "positivity proof");
    if (auto err = verify_positivity(piece.polynomial, piece.positivity, exec))
        reject("positivity", *err + tag);

    const bool open_at_zero = sgn(fr.lo) == 0 && piece.positivity.multiplicity_at_zero > 0;
    const PiPoly s = PiPoly::constant(Rational(fr.orientation()));
    const PiPoly a = fr.offset + s * lift(fr.lo);
    const PiPoly b = fr.offset + s * fr.hi;
    if (fr.orientation() > 0)
        return {a, b, !open_at_zero, true};
    return {b, a, true, !open_at_zero};
}

void check_coverage(const ProblemSpec& spec, std::vector<Span> spans)
{
    std::sort(spans.begin(), spans.end(), [](const Span& x, const Span& y) { return cmp(x.lo, y.lo) < 0; });
    PiPoly reach = spec.lo;
    bool reach_covered = true;  // the open end itself needs no cover
    for (const auto& s : spans) {
        const int c = cmp(s.lo, reach);
        if (c > 0 && cmp(s.lo, spec.hi) < 0)
            reject("coverage", "gap before " + print_pipoly(s.lo));
        if (c == 0 && !reach_covered && !s.lo_closed && cmp(reach, spec.hi) < 0)
            reject("coverage", "point " + print_pipoly(reach) + " is not covered");
        if (c > 0)
            continue;
        const int d = cmp(s.hi, reach);
        if (d > 0) {
            reach = s.hi;
            reach_covered = s.hi_closed;
        } else if (d == 0) {
            reach_covered = reach_covered || s.hi_closed;
        }
    }
    if (cmp(reach, spec.hi) < 0)
        reject("coverage", "pieces end at " + print_pipoly(reach));
}

}  // namespace

CheckResult check(const std::string& bytes, Exec exec)
{
    CheckResult out;
    try {
        Certificate c;
        try {
            c = parse_certificate(bytes);
        } catch (const CertificateFormatError& e) {
            reject("parse", e.what());
        }
        ProblemSpec spec;
        try {
            spec = parse_problem(c.problem);
        } catch (const ParseError& e) {
            reject("problem", e.what());
        }
        if (print_problem(spec) != c.problem)
            reject("problem", "problem text is not in printed form");
        std::vector<Span> spans;
        for (std::size_t i = 0; i < c.pieces.size(); ++i)
            spans.push_back(check_piece(spec.f, c.pieces[i], i, exec));
        check_coverage(spec, std::move(spans));
        out.accepted = true;
    } catch (const Rejection& r) {
        out.step = r.step;
        out.reason = r.reason;
    } catch (const UndecidableSign& e) {
        out.step = "compare";
        out.reason = e.what();
    } catch (const std::exception& e) {
        out.step = "internal";
        out.reason = e.what();
    }
    return out;
}

}  // namespace trigprove
