#pragma once

#include "trigprove/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace trigprove {

struct PiTag {};
struct XTag {};

template <class C, class Tag>
class DensePoly;

inline bool is_zero_value(const Rational& q)
{
    return sgn(q) == 0;
}

template <class C, class Tag>
bool is_zero_value(const DensePoly<C, Tag>& p);

// Dense polynomial over a commutative ring C. Index i holds the coefficient
// of var^i; trailing zeros are always stripped so equality is structural.
template <class C, class Tag>
class DensePoly {
public:
    using coeff_type = C;

    DensePoly() = default;
    explicit DensePoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit DensePoly(const C& c) : c_{c} { trim(); }
    DensePoly(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }

    static DensePoly constant(C c) { return DensePoly(std::vector<C>{std::move(c)}); }

    static DensePoly monomial(std::size_t k, C c)
    {
        std::vector<C> v(k + 1);
        v[k] = std::move(c);
        return DensePoly(std::move(v));
    }

    const std::vector<C>& coeffs() const { return c_; }
    std::size_t size() const { return c_.size(); }
    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C(); }
    const C& leading() const { return c_.back(); }

    bool is_constant() const { return c_.size() <= 1; }

    // number of vanishing low-order coefficients (0 for the zero polynomial)
    std::size_t trailing_zeros() const
    {
        std::size_t j = 0;
        while (j < c_.size() && coeff_is_zero(c_[j]))
            ++j;
        return j < c_.size() ? j : 0;
    }

    DensePoly& operator+=(const DensePoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }

    DensePoly& operator-=(const DensePoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    DensePoly operator-() const
    {
        DensePoly r = *this;
        for (auto& v : r.c_)
            v = -v;
        return r;
    }

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<C> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (coeff_is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return DensePoly(std::move(r));
    }

    DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

    DensePoly scaled(const C& s) const
    {
        std::vector<C> r(c_);
        for (auto& v : r)
            v *= s;
        return DensePoly(std::move(r));
    }

    DensePoly pow(unsigned n) const
    {
        DensePoly r = constant(C(1));
        DensePoly b = *this;
        while (n) {
            if (n & 1u)
                r *= b;
            n >>= 1u;
            if (n)
                b *= b;
        }
        return r;
    }

    // p(s*var)
    DensePoly scale_argument(const C& s) const
    {
        std::vector<C> r(c_);
        C p(1);
        for (auto& v : r) {
            v *= p;
            p *= s;
        }
        return DensePoly(std::move(r));
    }

    // p(var + s)
    DensePoly shift(const C& s) const
    {
        std::vector<C> r(c_);
        const std::size_t n = r.size();
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = n - 1; k >= i; --k)
                r[k - 1] += s * r[k];
        return DensePoly(std::move(r));
    }

    // p(a + b*var)
    DensePoly compose_linear(const C& a, const C& b) const { return shift(a).scale_argument(b); }

    DensePoly derivative() const
    {
        if (c_.size() <= 1)
            return {};
        std::vector<C> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * C(static_cast<long>(i));
        return DensePoly(std::move(r));
    }

    // drop the first k coefficients: p / var^k (caller guarantees divisibility)
    DensePoly divide_by_var_power(std::size_t k) const
    {
        if (k >= c_.size())
            return {};
        return DensePoly(std::vector<C>(c_.begin() + static_cast<long>(k), c_.end()));
    }

    DensePoly truncated(std::size_t order) const
    {
        if (c_.size() <= order + 1)
            return *this;
        return DensePoly(std::vector<C>(c_.begin(), c_.begin() + static_cast<long>(order + 1)));
    }

    // Horner at an element of the coefficient ring (or anything C multiplies with)
    template <class V>
    V eval(const V& x) const
    {
        V acc{};
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + V(c_[i]);
        return acc;
    }

    // synthetic division by the monic (var - r); returns {quotient, remainder}
    std::pair<DensePoly, C> divide_linear(const C& r) const
    {
        if (c_.empty())
            return {DensePoly(), C()};
        std::vector<C> q(c_.size() - 1);
        C carry = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) {
            q[i] = carry;
            carry = c_[i] + carry * r;
        }
        return {DensePoly(std::move(q)), carry};
    }

    friend DensePoly operator*(DensePoly a, const C& s)
    {
        for (auto& v : a.c_)
            v *= s;
        a.trim();
        return a;
    }

    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

private:
    static bool coeff_is_zero(const C& v) { return is_zero_value(v); }

    void trim()
    {
        while (!c_.empty() && coeff_is_zero(c_.back()))
            c_.pop_back();
    }

    std::vector<C> c_;
};

template <class C, class Tag>
bool is_zero_value(const DensePoly<C, Tag>& p)
{
    return p.is_zero();
}

using PiPoly = DensePoly<Rational, PiTag>;
using UniPoly = DensePoly<PiPoly, XTag>;
using RatPoly = DensePoly<Rational, XTag>;

}  // namespace trigprove
