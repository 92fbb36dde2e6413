#include "trigprove/multiangle.hpp"

#include "trigprove/parser.hpp"

#include <cassert>
#include <map>
#include <stdexcept>
#include <tuple>

namespace trigprove {

const char* to_string(TrigFunc f)
{
    return f == TrigFunc::sin ? "sin" : "cos";
}

TrigFunc trig_func_from_string(const std::string& s)
{
    if (s == "sin")
        return TrigFunc::sin;
    if (s == "cos")
        return TrigFunc::cos;
    throw std::invalid_argument("unknown function " + s);
}

namespace {

Rational inv_pow2(unsigned e)
{
    return make_rational(Integer(1), Integer(1) << e);
}

int parity_sign(long e)
{
    return e % 2 == 0 ? 1 : -1;
}

Integer binom(unsigned n, long k)
{
    if (k < 0 || static_cast<unsigned long>(k) > n)
        return 0;
    return binomial(n, static_cast<unsigned>(k));
}

void push(MultiAngleForm& f, unsigned multiple, const Rational& c)
{
    if (sgn(c) != 0)
        f.entries.push_back({multiple, c});
}

}  // namespace

MultiAngleForm sin_power(unsigned n)
{
    if (n == 0)
        throw std::invalid_argument("sin_power needs n >= 1");
    MultiAngleForm f;
    const Rational two_over = 2 * inv_pow2(n);
    if (n % 2 == 1) {
        f.kind = TrigFunc::sin;
        for (unsigned k = 0; k <= (n - 1) / 2; ++k)
            push(f, n - 2 * k, two_over * parity_sign((n - 1) / 2 + k) * Rational(binomial(n, k)));
    } else {
        f.kind = TrigFunc::cos;
        f.constant = inv_pow2(n) * Rational(binomial(n, n / 2));
        for (unsigned k = 0; k + 1 <= n / 2; ++k)
            push(f, n - 2 * k, two_over * parity_sign(n / 2 + k) * Rational(binomial(n, k)));
    }
    return f;
}

MultiAngleForm cos_power(unsigned n)
{
    if (n == 0)
        throw std::invalid_argument("cos_power needs n >= 1");
    MultiAngleForm f;
    f.kind = TrigFunc::cos;
    const Rational two_over = 2 * inv_pow2(n);
    if (n % 2 == 0)
        f.constant = inv_pow2(n) * Rational(binomial(n, n / 2));
    unsigned last = n % 2 == 1 ? (n - 1) / 2 : n / 2 - 1;
    for (unsigned k = 0; k <= last && n - 2 * k >= 1; ++k)
        push(f, n - 2 * k, two_over * Rational(binomial(n, k)));
    return f;
}

MultiAngleForm product_expand(unsigned q, unsigned r)
{
    if (q + r == 0)
        throw std::invalid_argument("product_expand needs q + r >= 1");
    if (q == 0)
        return sin_power(r);
    if (r == 0)
        return cos_power(q);
    const unsigned n = q, m = r, total = n + m;
    const Rational pre = inv_pow2(total - 1);
    auto inner = [&](long k) {
        Integer s = 0;
        for (long i = 0; i <= k; ++i)
            s += parity_sign(i) * binom(n, i) * binom(m, k - i);
        return s;
    };
    MultiAngleForm f;
    const bool n_odd = n % 2 == 1, m_odd = m % 2 == 1;
    if (m_odd) {
        f.kind = TrigFunc::sin;
        long last = n_odd ? static_cast<long>(total / 2) - 1 : static_cast<long>((total - 1) / 2);
        for (long k = 0; k <= last; ++k)
            push(f, total - 2 * static_cast<unsigned>(k),
                 pre * parity_sign(static_cast<long>((m - 1) / 2) + k) * Rational(inner(k)));
    } else {
        f.kind = TrigFunc::cos;
        long last = n_odd ? static_cast<long>((total - 1) / 2) : static_cast<long>(total / 2) - 1;
        for (long k = 0; k <= last; ++k)
            push(f, total - 2 * static_cast<unsigned>(k),
                 pre * parity_sign(static_cast<long>(m / 2) + k) * Rational(inner(k)));
        if (!n_odd) {
            assert(n % 2 == 0);
            long half = static_cast<long>(total / 2);
            Integer s = 0;
            for (long i = 0; i <= half; ++i)
                s += parity_sign(i) * binom(n, i) * binom(m, half - i);
            f.constant = pre * Rational(1, 2) * parity_sign(static_cast<long>((2 * m + n) / 2)) * Rational(s);
        }
    }
    return f;
}

SubAddend make_sub_addend(TrigFunc func, unsigned multiple, const UniPoly& total)
{
    if (total.degree() == 0 && total.coeff(0).degree() == 0)
        return {UniPoly::constant(PiPoly::constant(Rational(1))), func, multiple, total.coeff(0).coeff(0)};
    return {total, func, multiple, Rational(1)};
}

MultiAngleSum expand_poly(const MixedTrigPoly& f)
{
    // (func, multiple, factor depends on x)
    std::map<std::tuple<TrigFunc, unsigned, bool>, UniPoly> merged;
    MultiAngleSum out;
    for (const auto& t : f.terms()) {
        if (t.cos_pow == 0 && t.sin_pow == 0) {
            out.constant_part += t.factor;
            continue;
        }
        MultiAngleForm form = product_expand(t.cos_pow, t.sin_pow);
        if (sgn(form.constant) != 0)
            out.constant_part += t.factor * PiPoly::constant(form.constant);
        for (const auto& e : form.entries)
            merged[{form.kind, e.multiple, t.factor.degree() > 0}] += t.factor * PiPoly::constant(e.coeff);
    }
    for (const auto& [key, total] : merged)
        if (!total.is_zero())
            out.sub_addends.push_back(make_sub_addend(std::get<0>(key), std::get<1>(key), total));
    return out;
}

std::string print_multiangle(const MultiAngleSum& s)
{
    std::string out;
    auto append = [&](std::string piece) {
        bool neg = !piece.empty() && piece[0] == '-';
        if (out.empty())
            out = piece;
        else
            out += neg ? " - " + piece.substr(1) : " + " + piece;
    };
    if (!s.constant_part.is_zero()) {
        std::string c = print_unipoly(s.constant_part);
        append(s.constant_part.size() > 1 || c.find(' ') != std::string::npos ? "(" + c + ")" : c);
    }
    for (const auto& a : s.sub_addends) {
        std::string arg = a.multiple == 1 ? "x" : std::to_string(a.multiple) + "x";
        std::string fn = std::string(to_string(a.func)) + "(" + arg + ")";
        const bool unit_factor = a.factor == UniPoly::constant(PiPoly::constant(Rational(1)));
        if (unit_factor) {
            Rational mag = abs(a.coeff);
            std::string sign = sgn(a.coeff) < 0 ? "-" : "";
            if (mag == 1)
                append(sign + fn);
            else if (mag.get_den() == 1)
                append(sign + mag.get_num().get_str() + fn);
            else
                append(sign + "(" + to_string(mag) + ")" + fn);
        } else {
            append("(" + print_unipoly(a.combined()) + ")" + fn);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace trigprove
