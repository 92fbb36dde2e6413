#include "trigprove/parser.hpp"

#include "trigprove/interval.hpp"

#include <cctype>
#include <sstream>

namespace trigprove {

namespace {

// body / pi^pi_den
struct Value {
    MixedTrigPoly body;
    unsigned pi_den = 0;
};

UniPoly pi_power(unsigned k)
{
    return UniPoly::constant(PiPoly::monomial(k, Rational(1)));
}

UniPoly rational_const(const Rational& q)
{
    return UniPoly::constant(PiPoly::constant(q));
}

Value constant_value(const Rational& q)
{
    if (sgn(q) == 0)
        return {};
    return {MixedTrigPoly::polynomial(rational_const(q)), 0};
}

void align(Value& a, Value& b)
{
    if (a.pi_den < b.pi_den) {
        a.body = a.body.scaled(pi_power(b.pi_den - a.pi_den));
        a.pi_den = b.pi_den;
    } else if (b.pi_den < a.pi_den) {
        b.body = b.body.scaled(pi_power(a.pi_den - b.pi_den));
        b.pi_den = a.pi_den;
    }
}

bool divisible_by_pi(const MixedTrigPoly& f)
{
    for (const auto& t : f.terms())
        for (const auto& c : t.factor.coeffs())
            if (!c.is_zero() && sgn(c.coeff(0)) != 0)
                return false;
    return true;
}

MixedTrigPoly divide_by_pi(const MixedTrigPoly& f)
{
    std::vector<MixedTrigTerm> out;
    for (const auto& t : f.terms()) {
        std::vector<PiPoly> cs;
        for (const auto& c : t.factor.coeffs())
            cs.push_back(c.divide_by_var_power(1));
        out.push_back({UniPoly(std::move(cs)), t.cos_pow, t.sin_pow});
    }
    return MixedTrigPoly(std::move(out));
}

// smallest pi_den representing the same value
Value reduce(Value v)
{
    while (v.pi_den > 0 && !v.body.is_zero() && divisible_by_pi(v.body)) {
        v.body = divide_by_pi(v.body);
        --v.pi_den;
    }
    if (v.body.is_zero())
        v.pi_den = 0;
    return v;
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Value expr()
    {
        Value acc = term();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-')
                return acc;
            ++pos_;
            Value rhs = term();
            align(acc, rhs);
            acc.body = c == '+' ? acc.body + rhs.body : acc.body - rhs.body;
        }
    }

    Value term()
    {
        Value acc = factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '*' && c != '/')
                return acc;
            std::size_t at = pos_;
            ++pos_;
            Value rhs = factor();
            if (c == '*') {
                acc.body = acc.body * rhs.body;
                acc.pi_den += rhs.pi_den;
            } else {
                divide(acc, rhs, at);
            }
        }
    }

    Value factor()
    {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            Value v = factor();
            v.body = -v.body;
            return v;
        }
        if (peek() == '+') {
            ++pos_;
            return factor();
        }
        Value b = base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError(at, "non-integer exponent");
            std::string digits = take_digits();
            if (peek() == '.')
                throw ParseError(at, "non-integer exponent");
            if (digits.size() > 4)
                throw ParseError(at, "exponent too large");
            unsigned n = static_cast<unsigned>(std::stoul(digits));
            Value r{b.body.pow(n), b.pi_den * n};
            return r;
        }
        return b;
    }

    Value base()
    {
        skip_ws();
        std::size_t at = pos_;
        char c = peek();
        if (c == '(') {
            ++pos_;
            Value v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return constant_value(number());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id = identifier();
            if (id == "x")
                return {MixedTrigPoly::polynomial(UniPoly::monomial(1, PiPoly::constant(Rational(1)))), 0};
            if (id == "pi")
                return {MixedTrigPoly::polynomial(pi_power(1)), 0};
            if (id == "sin" || id == "cos") {
                skip_ws();
                expect('(');
                skip_ws();
                std::size_t arg = pos_;
                if (identifier() != "x")
                    throw ParseError(arg, "only sin(x) and cos(x) are supported");
                skip_ws();
                if (peek() != ')')
                    throw ParseError(pos_, "only sin(x) and cos(x) are supported");
                ++pos_;
                UniPoly one = rational_const(Rational(1));
                return {id == "sin" ? MixedTrigPoly::cos_sin(0, 1, one) : MixedTrigPoly::cos_sin(1, 0, one), 0};
            }
            if (id == "tan" || id == "sec" || id == "cot" || id == "csc")
                throw ParseError(at, "unsupported function '" + id +
                                         "': multiply through by a power of cos(x) (or sin(x)) to clear "
                                         "denominators and state the inequality as a mixed trigonometric "
                                         "polynomial");
            throw ParseError(at, "unknown identifier '" + id + "'");
        }
        if (c == '\0')
            throw ParseError(at, "unexpected end of input");
        throw ParseError(at, std::string("unexpected character '") + c + "'");
    }

    Rational number()
    {
        std::size_t at = pos_;
        std::string whole = take_digits();
        if (peek() == '.') {
            ++pos_;
            std::string frac = take_digits();
            if (whole.empty() && frac.empty())
                throw ParseError(at, "malformed number");
            Integer num(whole.empty() ? std::string("0") : whole, 10);
            Integer den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i)
                den *= 10;
            if (!frac.empty())
                num = num * den + Integer(frac, 10);
            return make_rational(num, den);
        }
        return Rational(Integer(whole, 10));
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void expect(char c)
    {
        skip_ws();
        if (peek() != c)
            throw ParseError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    bool at_end()
    {
        skip_ws();
        return pos_ >= s_.size();
    }

    std::string identifier()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    std::size_t pos() const { return pos_; }
    void set_pos(std::size_t p) { pos_ = p; }
    std::string_view rest() const { return s_.substr(pos_); }

private:
    std::string take_digits()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    static void divide(Value& a, const Value& d, std::size_t at)
    {
        const auto& terms = d.body.terms();
        if (terms.empty())
            throw ParseError(at, "division by zero");
        if (terms.size() != 1 || terms[0].cos_pow != 0 || terms[0].sin_pow != 0 || terms[0].factor.degree() != 0)
            throw ParseError(at, "division is only supported by constants of the form c*pi^k");
        const PiPoly& c = terms[0].factor.coeff(0);
        std::size_t nonzero = 0, j = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (sgn(c.coeffs()[i]) != 0) {
                ++nonzero;
                j = i;
            }
        if (nonzero != 1)
            throw ParseError(at, "division is only supported by constants of the form c*pi^k");
        Rational inv = 1 / c.coeffs()[j];
        MixedTrigPoly body = a.body.scaled(rational_const(inv));
        if (d.pi_den > 0)
            body = body.scaled(pi_power(d.pi_den));
        a.body = body;
        a.pi_den += static_cast<unsigned>(j);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

MixedTrigPoly clear_pi_denominator(const Value& v)
{
    return reduce(v).body;
}

PiPoly as_constant(const Value& raw, std::size_t at)
{
    Value v = reduce(raw);
    if (v.pi_den != 0)
        throw ParseError(at, "interval endpoints must be polynomials in pi");
    const auto& terms = v.body.terms();
    if (terms.empty())
        return {};
    if (terms.size() != 1 || terms[0].cos_pow != 0 || terms[0].sin_pow != 0 || terms[0].factor.degree() != 0)
        throw ParseError(at, "interval endpoints must be constants");
    return terms[0].factor.coeff(0);
}

void skip_keyword(Parser& p, const char* kw)
{
    p.skip_ws();
    std::size_t at = p.pos();
    if (p.identifier() != kw)
        throw ParseError(at, std::string("expected '") + kw + "'");
}

std::pair<PiPoly, PiPoly> interval_body(Parser& p)
{
    p.expect('(');
    std::size_t at_lo = p.pos();
    PiPoly lo = as_constant(p.expr(), at_lo);
    p.expect(',');
    std::size_t at_hi = p.pos();
    PiPoly hi = as_constant(p.expr(), at_hi);
    p.expect(')');
    if (pipoly_compare(lo, hi, 64, 1u << 14) >= 0)
        throw ParseError(at_lo, "empty interval: need lo < hi");
    return {lo, hi};
}

}  // namespace

ProblemSpec parse_problem(std::string_view text)
{
    Parser p(text);
    Value lhs = p.expr();
    p.skip_ws();
    std::size_t at = p.pos();
    char rel = p.peek();
    if (rel != '>' && rel != '<')
        throw ParseError(at, "expected '>' or '<'");
    p.set_pos(at + 1);
    if (p.peek() == '=')
        throw ParseError(at, "only strict inequalities are supported");
    Value rhs = p.expr();
    if (rel == '<')
        std::swap(lhs, rhs);
    align(lhs, rhs);
    Value diff{lhs.body - rhs.body, lhs.pi_den};
    skip_keyword(p, "on");
    auto [lo, hi] = interval_body(p);
    if (!p.at_end())
        throw ParseError(p.pos(), "trailing input");
    return {clear_pi_denominator(diff), lo, hi};
}

MixedTrigPoly parse_expression(std::string_view text)
{
    Parser p(text);
    Value v = p.expr();
    if (!p.at_end())
        throw ParseError(p.pos(), "trailing input");
    return clear_pi_denominator(v);
}

PiPoly parse_constant(std::string_view text)
{
    Parser p(text);
    Value v = p.expr();
    if (!p.at_end())
        throw ParseError(p.pos(), "trailing input");
    return as_constant(v, 0);
}

std::pair<PiPoly, PiPoly> parse_interval(std::string_view text)
{
    Parser p(text);
    auto r = interval_body(p);
    if (!p.at_end())
        throw ParseError(p.pos(), "trailing input");
    return r;
}

namespace {

struct Monomial {
    Rational coeff;
    unsigned pi_pow;
    unsigned x_pow;
    unsigned cos_pow;
    unsigned sin_pow;
};

std::string print_monomials(const std::vector<Monomial>& ms)
{
    if (ms.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& m : ms) {
        bool neg = sgn(m.coeff) < 0;
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;
        Rational mag = abs(m.coeff);
        std::vector<std::string> parts;
        bool has_other = m.pi_pow || m.x_pow || m.cos_pow || m.sin_pow;
        if (mag != 1 || !has_other) {
            if (mag.get_den() == 1)
                parts.push_back(mag.get_num().get_str());
            else
                parts.push_back("(" + to_string(mag) + ")");
        }
        auto pw = [&](const std::string& b, unsigned e) {
            if (e == 1)
                parts.push_back(b);
            else if (e > 1)
                parts.push_back(b + "^" + std::to_string(e));
        };
        pw("pi", m.pi_pow);
        pw("x", m.x_pow);
        pw("cos(x)", m.cos_pow);
        pw("sin(x)", m.sin_pow);
        for (std::size_t i = 0; i < parts.size(); ++i)
            out << (i ? "*" : "") << parts[i];
    }
    return out.str();
}

void collect(const UniPoly& p, unsigned q, unsigned r, std::vector<Monomial>& ms)
{
    for (std::size_t k = 0; k < p.size(); ++k)
        for (std::size_t i = 0; i < p.coeffs()[k].size(); ++i) {
            const Rational& c = p.coeffs()[k].coeffs()[i];
            if (sgn(c) != 0)
                ms.push_back({c, static_cast<unsigned>(i), static_cast<unsigned>(k), q, r});
        }
}

}  // namespace

std::string print_expression(const MixedTrigPoly& f)
{
    std::vector<Monomial> ms;
    for (const auto& t : f.terms())
        collect(t.factor, t.cos_pow, t.sin_pow, ms);
    return print_monomials(ms);
}

std::string print_unipoly(const UniPoly& p)
{
    std::vector<Monomial> ms;
    collect(p, 0, 0, ms);
    return print_monomials(ms);
}

std::string print_pipoly(const PiPoly& p)
{
    return print_unipoly(UniPoly::constant(p));
}

std::string print_problem(const ProblemSpec& p)
{
    return print_expression(p.f) + " > 0 on (" + print_pipoly(p.lo) + ", " + print_pipoly(p.hi) + ")";
}

}  // namespace trigprove
