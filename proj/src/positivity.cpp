#include "trigprove/positivity.hpp"

#include "trigprove/sturm.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace trigprove {

bool valid_precision(unsigned bits)
{
    return bits >= 8 && bits <= (1u << 16) && std::has_single_bit(bits);
}

Rational domain_upper(const PiPoly& delta, unsigned precision_bits)
{
    if (delta.degree() <= 0)
        return delta.coeff(0);
    return pipoly_enclose(delta, precision_bits).hi;
}

unsigned domain_precision_for(const PiPoly& delta, unsigned precision_bits)
{
    return delta.degree() <= 0 ? 0 : precision_bits;
}

int sign_at(const UniPoly& p, const Rational& x, unsigned start_bits, unsigned cap_bits)
{
    return pipoly_sign(p.eval(PiPoly::constant(x)), start_bits, cap_bits);
}

namespace {

struct Domain {
    Rational lo;
    PiPoly delta;
    unsigned cap;

    bool contains(const Rational& x) const
    {
        if (sgn(lo) == 0 ? sgn(x) <= 0 : x < lo)
            return false;
        return pipoly_compare(PiPoly::constant(x), delta, 64, cap) <= 0;
    }
};

PositivityResult disproved(const Rational& x, std::string detail)
{
    PositivityResult r;
    r.status = PositivityStatus::disproved;
    r.witness = x;
    r.detail = std::move(detail);
    return r;
}

PositivityResult resource_limit(std::string detail)
{
    PositivityResult r;
    r.status = PositivityStatus::resource_limit;
    r.detail = std::move(detail);
    return r;
}

// Q(0) < 0: walk toward 0 until a certified negative point shows up
std::optional<Rational> negative_near_zero(const UniPoly& q, const Rational& hi, const Domain& dom)
{
    Rational x = hi;
    for (int k = 0; k < 4096; ++k) {
        x /= 2;
        if (sign_at(q, x, 64, dom.cap) < 0 && dom.contains(x))
            return x;
    }
    return std::nullopt;
}

PositivityResult sturm_path(const UniPoly& q, unsigned j, const Domain& dom, const Rational& hi, unsigned dprec)
{
    const RatPoly qr = to_rational_poly(q);
    const int s0 = sgn(qr.eval(dom.lo));
    if (s0 <= 0) {
        if (sgn(dom.lo) > 0)
            return disproved(dom.lo, "non-positive at the left end");
        if (auto w = negative_near_zero(q, hi, dom))
            return disproved(*w, "negative near 0");
        return resource_limit("negative at 0 but no witness found");
    }
    const unsigned count = sturm_count(qr, dom.lo, hi);
    if (count == 0) {
        PositivityResult r;
        r.status = PositivityStatus::proved;
        PositivityProof p;
        p.mode = PositivityMode::sturm;
        p.multiplicity_at_zero = j;
        p.lo = dom.lo;
        p.hi = hi;
        p.domain_precision = dprec;
        p.root_count = 0;
        p.sign_at_lo = 1;
        r.proof = p;
        return r;
    }
    std::optional<Rational> zero_point;
    const RatPoly sq = squarefree_part(qr);
    const auto seq = sturm_sequence(sq);
    const Rational small = (hi - dom.lo) / (Integer(1) << 40);
    for (const auto& iso : isolate_roots(qr, dom.lo, hi)) {
        Rational a = iso.first, b = iso.second;
        // tighten so that b sits just right of the root
        while (b - a > small && sgn(sq.eval(b)) != 0) {
            Rational m = (a + b) / 2;
            if (sgn(sq.eval(m)) == 0) {
                b = m;
                break;
            }
            if (sign_variations(seq, a) - sign_variations(seq, m) == 1)
                b = m;
            else
                a = m;
        }
        const int sb = sgn(qr.eval(b));
        if (!dom.contains(b))
            continue;
        if (sb < 0)
            return disproved(b, "negative after a root");
        if (sb == 0 && !zero_point)
            zero_point = b;
    }
    if (zero_point)
        return disproved(*zero_point, "exact zero");
    return resource_limit("roots only at non-negative touching points or beyond the domain end");
}

Rational coefficient_error(const std::vector<RatInterval>& c, const Rational& x)
{
    Rational err = 0, xk = 1;
    for (const auto& iv : c) {
        err += iv.width() * xk;
        xk *= x;
    }
    return err;
}

PositivityResult bisection_path(const UniPoly& q, unsigned j, const Domain& dom, const Rational& hi, unsigned dprec,
                                const PositivityOptions& opt)
{
    CoefficientTables tables(q);
    std::vector<Cell> frontier{{dom.lo, hi, opt.precision_bits}};
    std::vector<unsigned> depth{0};
    std::vector<Leaf> leaves;
    std::size_t processed = 0;
    const Rational x_max = hi;
    while (!frontier.empty()) {
        processed += frontier.size();
        if (processed > opt.max_cells)
            return resource_limit("subdivision limit reached");
        auto ranges = enclose_cells(tables, frontier, opt.exec);
        std::vector<Cell> next;
        std::vector<unsigned> next_depth;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            const Cell& c = frontier[i];
            const RatInterval& r = ranges[i];
            if (r.positive()) {
                leaves.push_back({c.lo, c.hi, c.precision, r.lo});
                continue;
            }
            const unsigned d = depth[i];
            Rational mid = (c.lo + c.hi) / 2;
            if (r.negative() || d % 4 == 3 || d + 1 >= opt.max_depth) {
                int s = sign_at(q, mid, 64, opt.precision_cap);
                if (s <= 0 && dom.contains(mid))
                    return disproved(mid, s < 0 ? "negative at a cell midpoint" : "exact zero");
            }
            if (r.negative()) {
                if (sgn(c.lo) > 0 && dom.contains(c.lo) && sign_at(q, c.lo, 64, opt.precision_cap) < 0)
                    return disproved(c.lo, "negative on a cell");
            }
            if (d + 1 >= opt.max_depth)
                return resource_limit("subdivision depth limit reached");
            const auto& coeffs = tables.at(c.precision);
            const bool precision_bound = c.precision < opt.precision_cap &&
                                         coefficient_error(coeffs, x_max) * 8 > r.width();
            if (precision_bound) {
                next.push_back({c.lo, c.hi, std::min(c.precision * 2, opt.precision_cap)});
                next_depth.push_back(d + 1);
                continue;
            }
            next.push_back({c.lo, mid, c.precision});
            next.push_back({mid, c.hi, c.precision});
            next_depth.push_back(d + 1);
            next_depth.push_back(d + 1);
        }
        frontier = std::move(next);
        depth = std::move(next_depth);
    }
    std::sort(leaves.begin(), leaves.end(), [](const Leaf& a, const Leaf& b) { return a.lo < b.lo; });
    PositivityResult r;
    r.status = PositivityStatus::proved;
    PositivityProof p;
    p.mode = PositivityMode::bisection;
    p.multiplicity_at_zero = j;
    p.lo = dom.lo;
    p.hi = hi;
    p.domain_precision = dprec;
    p.leaves = std::move(leaves);
    r.proof = std::move(p);
    return r;
}

}  // namespace

PositivityResult prove_positive(const UniPoly& p, const Rational& lo, const PiPoly& delta,
                                const PositivityOptions& opt)
{
    if (p.is_zero())
        throw std::invalid_argument("prove_positive of the zero polynomial");
    if (sgn(lo) < 0)
        throw std::invalid_argument("prove_positive needs lo >= 0");
    const unsigned dprec = domain_precision_for(delta, opt.precision_bits);
    const Rational hi = domain_upper(delta, opt.precision_bits);
    if (!(lo < hi))
        throw std::invalid_argument("prove_positive needs lo < delta");
    const unsigned j = static_cast<unsigned>(p.trailing_zeros());
    const UniPoly q = p.divide_by_var_power(j);
    Domain dom{lo, delta, opt.precision_cap};
    if (has_rational_coeffs(q))
        return sturm_path(q, j, dom, hi, dprec);
    return bisection_path(q, j, dom, hi, dprec, opt);
}

PositivityResult prove_positive(const UniPoly& p, const PiPoly& delta, const PositivityOptions& opt)
{
    return prove_positive(p, Rational(0), delta, opt);
}

std::optional<std::string> verify_positivity(const UniPoly& p, const PositivityProof& proof, Exec exec)
{
    if (p.is_zero())
        return "polynomial is zero";
    if (p.trailing_zeros() != proof.multiplicity_at_zero)
        return "multiplicity at zero does not match the polynomial";
    if (sgn(proof.lo) < 0 || !(proof.lo < proof.hi))
        return "bad proof domain";
    const UniPoly q = p.divide_by_var_power(proof.multiplicity_at_zero);
    const bool rational = has_rational_coeffs(q);
    if (proof.mode == PositivityMode::sturm) {
        if (!rational)
            return "sturm evidence for a polynomial with pi coefficients";
        if (!proof.leaves.empty())
            return "sturm evidence carries leaves";
        const RatPoly qr = to_rational_poly(q);
        const int s = sgn(qr.eval(proof.lo));
        if (s != proof.sign_at_lo)
            return "sign at the left end does not match";
        if (s <= 0)
            return "not positive at the left end";
        if (sturm_count(qr, proof.lo, proof.hi) != proof.root_count)
            return "root count does not match";
        if (proof.root_count != 0)
            return "roots inside the domain";
        return std::nullopt;
    }
    if (rational)
        return "bisection evidence for a rational polynomial";
    if (proof.root_count != 0 || proof.sign_at_lo != 0)
        return "bisection evidence carries sturm fields";
    if (proof.leaves.empty())
        return "no leaves";
    std::vector<Cell> cells;
    cells.reserve(proof.leaves.size());
    Rational at = proof.lo;
    for (const auto& l : proof.leaves) {
        if (l.lo != at)
            return "leaves do not tile the domain";
        if (!(l.lo < l.hi))
            return "empty leaf";
        if (!valid_precision(l.precision))
            return "leaf precision not a power of two in range";
        if (sgn(l.lower_bound) <= 0)
            return "leaf lower bound not positive";
        cells.push_back({l.lo, l.hi, l.precision});
        at = l.hi;
    }
    if (at != proof.hi)
        return "leaves do not reach the domain end";
    CoefficientTables tables(q);
    auto ranges = enclose_cells(tables, cells, exec);
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (ranges[i].lo != proof.leaves[i].lower_bound)
            return "leaf " + std::to_string(i) + " lower bound does not reproduce";
    return std::nullopt;
}

Rational cauchy_bound(const UniPoly& p, unsigned precision_bits)
{
    if (p.degree() <= 0)
        return Rational(1);
    auto lead = pipoly_enclose(p.leading(), precision_bits);
    while (lead.contains_zero()) {
        precision_bits *= 2;
        lead = pipoly_enclose(p.leading(), precision_bits);
    }
    Rational lead_mag = sgn(lead.lo) > 0 ? lead.lo : Rational(-lead.hi);
    Rational m = 0;
    for (long i = 0; i < p.degree(); ++i) {
        auto c = pipoly_enclose(p.coeffs()[static_cast<std::size_t>(i)], precision_bits);
        m = std::max(m, std::max(abs(c.lo), abs(c.hi)));
    }
    return 1 + m / lead_mag;
}

namespace {

struct PiRootSearch {
    CoefficientTables q;
    CoefficientTables dq;
    const UniPoly& poly;
    unsigned precision;
    unsigned cap;
    unsigned max_depth = 200;

    int exact_sign(const Rational& x) const { return sign_at(poly, x, 64, cap); }

    // leftmost root in [a, b]; nullopt means certified root-free
    std::optional<RootEnclosure> search(const Rational& a, const Rational& b, unsigned depth)
    {
        std::vector<Cell> cell{{a, b, precision}};
        RatInterval r = enclose_cells_serial(q, cell)[0];
        if (!r.contains_zero())
            return std::nullopt;
        RatInterval d = enclose_cells_serial(dq, cell)[0];
        if (!d.contains_zero()) {
            int sa = exact_sign(a), sb = exact_sign(b);
            if (sa == 0)
                return RootEnclosure{a, a, -sb, sb};
            if (sb == 0)
                return RootEnclosure{b, b, sa, -sa};
            if (sa != sb)
                return RootEnclosure{a, b, sa, sb};
            return std::nullopt;
        }
        if (depth >= max_depth)
            throw UndecidableSign("root isolation did not separate at this precision");
        Rational m = (a + b) / 2;
        if (auto left = search(a, m, depth + 1))
            return left;
        return search(m, b, depth + 1);
    }
};

RootEnclosure refine(const std::function<int(const Rational&)>& sign, RootEnclosure e, const Rational& width)
{
    while (e.hi - e.lo > width) {
        Rational m = (e.lo + e.hi) / 2;
        int s = sign(m);
        if (s == 0)
            return {m, m, e.sign_left, e.sign_right};
        if (s == e.sign_left)
            e.lo = m;
        else
            e.hi = m;
    }
    return e;
}

}  // namespace

RootSearch least_positive_root(const UniPoly& p, const Rational& width_target, unsigned precision_bits,
                               const std::optional<Rational>& limit, unsigned precision_cap)
{
    if (p.is_zero())
        throw std::invalid_argument("least_positive_root of the zero polynomial");
    const UniPoly q = p.divide_by_var_power(p.trailing_zeros());
    Rational bound = cauchy_bound(q, precision_bits);
    if (limit && *limit < bound)
        bound = *limit;
    RootSearch out;
    out.bound = bound;
    if (q.degree() <= 0)
        return out;
    if (has_rational_coeffs(q)) {
        const RatPoly s = squarefree_part(to_rational_poly(q));
        if (sturm_count(s, Rational(0), bound) == 0)
            return out;
        Rational a = 0, b = bound;
        auto seq = sturm_sequence(s);
        // shrink (a, b] to the leftmost root
        while (sign_variations(seq, a) - sign_variations(seq, b) > 1 || b - a > width_target) {
            Rational m = (a + b) / 2;
            int sm = sgn(s.eval(m));
            unsigned left = sign_variations(seq, a) - sign_variations(seq, m);
            if (left >= 1) {
                if (sm == 0 && left == 1) {
                    int sa = sgn(s.eval(a));
                    out.root = RootEnclosure{m, m, sa, -sa};
                    return out;
                }
                b = m;
            } else {
                a = m;
            }
        }
        int sa = sgn(s.eval(a)), sb = sgn(s.eval(b));
        if (sb == 0)
            out.root = RootEnclosure{b, b, sa, -sa};
        else
            out.root = RootEnclosure{a, b, sa, sb};
        return out;
    }
    for (unsigned prec = precision_bits;; prec *= 2) {
        PiRootSearch rs{CoefficientTables(q), CoefficientTables(q.derivative()), q, prec, precision_cap};
        try {
            auto e = rs.search(Rational(0), bound, 0);
            if (!e)
                return out;
            if (e->lo != e->hi)
                e = refine([&](const Rational& x) { return rs.exact_sign(x); }, *e, width_target);
            out.root = e;
            return out;
        } catch (const UndecidableSign&) {
            if (prec >= precision_cap)
                throw;
        }
    }
}

}  // namespace trigprove
