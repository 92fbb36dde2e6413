#include "doctest.h"
#include "gen.hpp"
#include "oracle.hpp"

#include "trigprove/interval.hpp"
#include "trigprove/parser.hpp"

using namespace trigprove;

TEST_SUITE("core")
{
    TEST_CASE("rationals stay reduced and add like integer fractions")
    {
        gen::Rng rng(11);
        for (int i = 0; i < 1000; ++i) {
            const long a = gen::integer(rng, -100000, 100000), b = gen::integer(rng, 1, 100000);
            const long c = gen::integer(rng, -100000, 100000), d = gen::integer(rng, 1, 100000);
            Rational s = make_rational(a, b) + make_rational(c, d);
            // a/b + c/d = (ad + cb)/bd, reduced by hand
            Integer num = Integer(a) * d + Integer(c) * b, den = Integer(b) * d;
            Integer g;
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (num == 0)
                g = den;
            CHECK(s.get_num() == num / g);
            CHECK(s.get_den() == den / g);
            Integer h;
            mpz_gcd(h.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
            CHECK(h == 1);
            CHECK(sgn(s.get_den()) > 0);
            CHECK(rational_from_string(to_string(s)) == s);
            CHECK(is_canonical_rational_string(to_string(s)));
        }
        CHECK(to_string(make_rational(0, 7)) == "0/1");
        CHECK(to_string(make_rational(6, -4)) == "-3/2");
        CHECK_FALSE(is_canonical_rational_string("6/4"));
        CHECK_FALSE(is_canonical_rational_string("3"));
        CHECK_FALSE(is_canonical_rational_string("-0/1"));
        CHECK_FALSE(is_canonical_rational_string("3/-2"));
        CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
        CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
    }

    TEST_CASE("pi polynomials satisfy the ring laws exactly")
    {
        gen::Rng rng(12);
        for (int i = 0; i < 300; ++i) {
            PiPoly p = gen::pipoly(rng, 8), q = gen::pipoly(rng, 8), r = gen::pipoly(rng, 8);
            CHECK((p + q) * r == p * r + q * r);
            CHECK(p * q == q * p);
            CHECK(p + q == q + p);
            CHECK((p * q) * r == p * (q * r));
            CHECK(p - p == PiPoly());
            CHECK((p * q).degree() == (p.is_zero() || q.is_zero() ? -1 : p.degree() + q.degree()));
        }
        PiPoly z(std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
        CHECK(z.size() == 1);
        CHECK(PiPoly().degree() == -1);
    }

    TEST_CASE("polynomial evaluation agrees with the oracle")
    {
        gen::Rng rng(13);
        for (int i = 0; i < 200; ++i) {
            UniPoly p = gen::unipoly(rng, 6, 3);
            Rational x = gen::rational(rng, 30, 17);
            PiPoly v = p.eval(PiPoly::constant(x));
            oracle::Big want = oracle::eval(p, oracle::Big(x));
            CHECK(oracle::abs(oracle::eval(v) - want) <= oracle::Big(1e-40) * (oracle::Big(1.0) + oracle::abs(want)));
            // exact endpoints may coincide with the value; allow the oracle's rounding
            RatInterval e = pipoly_enclose(v, 128);
            const oracle::Big slack = oracle::Big(1e-100) * (oracle::Big(1.0) + oracle::abs(want));
            CHECK(oracle::Big(e.lo) <= want + slack);
            CHECK(want - slack <= oracle::Big(e.hi));
        }
    }

    TEST_CASE("shift, scale and synthetic division are exact")
    {
        gen::Rng rng(14);
        for (int i = 0; i < 100; ++i) {
            UniPoly p = gen::unipoly(rng, 6, 2);
            PiPoly s = gen::pipoly(rng, 2);
            PiPoly x = PiPoly::constant(gen::rational(rng));
            CHECK(p.shift(s).eval(x) == p.eval(x + s));
            CHECK(p.scale_argument(s).eval(x) == p.eval(x * s));
            auto [q, rem] = p.divide_linear(s);
            CHECK(q * UniPoly({-s, PiPoly::constant(Rational(1))}) + UniPoly::constant(rem) == p);
            CHECK(rem == p.eval(s));
        }
    }

    TEST_CASE("pi enclosure")
    {
        RatInterval e8 = pi_enclosure(8);
        CHECK(e8.width() <= Rational(1, 256));
        CHECK(e8.lo >= Rational(314159, 100000));
        CHECK(e8.hi <= Rational(314160, 100000));
        RatInterval e30 = pi_enclosure(30);
        CHECK(e30.width() <= make_rational(Integer(1), Integer(1) << 30));
        CHECK(e30.lo <= Rational(31415926536, 10000000000));
        CHECK(e30.hi >= Rational(31415926535, 10000000000));
        CHECK(pi_enclosure(16).contains(pi_enclosure(32)));

        const Rational digits = rational_from_string("314159265358979323846264338327950288419716939937510") /
                                Rational(Integer("100000000000000000000000000000000000000000000000000"));
        const Rational tail = make_rational(Integer(1), Integer("100000000000000000000000000000000000000000000000000"));
        RatInterval prev = pi_enclosure(8);
        for (unsigned bits = 8; bits <= 1024; bits += 8) {
            RatInterval e = pi_enclosure(bits);
            CHECK(e.width() <= make_rational(Integer(1), Integer(1) << bits));
            // the true value lies in [digits, digits + 1e-50]
            CHECK(e.lo <= digits + tail);
            CHECK(e.hi >= digits);
            CHECK(prev.contains(e));
            prev = e;
        }
    }

    TEST_CASE("pi polynomial enclosure and sign")
    {
        CHECK(pipoly_enclose(PiPoly(), 30) == RatInterval(Rational(0)));
        const PiPoly a = parse_constant("pi^2 - 9");
        CHECK(pipoly_enclose(a, 30).positive());
        const PiPoly b = parse_constant("-12*pi^4 + 120*pi^2 - 80");
        CHECK(pipoly_enclose(b, 30).negative());
        CHECK(pipoly_sign(b, 8, 1024) < 0);
        CHECK(pipoly_sign(PiPoly(), 8, 1024) == 0);
        CHECK(pipoly_compare(parse_constant("pi/2"), parse_constant("1.5707963"), 8, 1024) > 0);
        CHECK(pipoly_compare(parse_constant("pi/2"), parse_constant("1.5707964"), 8, 1024) < 0);

        gen::Rng rng(15);
        for (int i = 0; i < 200; ++i) {
            PiPoly p = gen::pipoly(rng, 6);
            oracle::Big v = oracle::eval(p);
            RatInterval lo = pipoly_enclose(p, 40), hi = pipoly_enclose(p, 200);
            CHECK(lo.contains(hi));
            CHECK(oracle::Big(hi.lo) <= v);
            CHECK(v <= oracle::Big(hi.hi));
            if (!p.is_zero())
                CHECK(pipoly_sign(p, 16, 4096) == (v > oracle::Big(0.0) ? 1 : -1));
        }
    }

    TEST_CASE("interval arithmetic is inclusion monotone")
    {
        gen::Rng rng(16);
        auto random_interval = [&] {
            Rational a = gen::rational(rng, 30, 7), b = gen::rational(rng, 30, 7);
            return a <= b ? RatInterval(a, b) : RatInterval(b, a);
        };
        auto inside = [&](const RatInterval& x) {
            Rational t = gen::unit(rng, 97);
            return RatInterval(x.lo + t * x.width(), x.lo + (t + (1 - t) * gen::unit(rng, 89)) * x.width());
        };
        for (int i = 0; i < 500; ++i) {
            RatInterval x = random_interval(), y = random_interval();
            RatInterval xs = inside(x), ys = inside(y);
            REQUIRE(x.contains(xs));
            CHECK((x + y).contains(xs + ys));
            CHECK((x - y).contains(xs - ys));
            CHECK((x * y).contains(xs * ys));
            CHECK((-x).contains(-xs));
            const unsigned n = static_cast<unsigned>(gen::integer(rng, 0, 5));
            CHECK(ipow(x, n).contains(ipow(xs, n)));
            // point values land inside
            Rational s = xs.lo, t = ys.hi;
            CHECK((x * y).contains(s * t));
            CHECK(ipow(x, n).contains(power(s, n)));

            UniPoly p = gen::unipoly(rng, 5, 2);
            RatInterval wide = unipoly_eval_interval(p, x, 64);
            RatInterval narrow = unipoly_eval_interval(p, xs, 64);
            oracle::Big v = oracle::eval(p, oracle::Big(s));
            const oracle::Big slack = oracle::Big(1e-100) * (oracle::Big(1.0) + oracle::abs(v));
            CHECK(oracle::Big(wide.lo) <= v + slack);
            CHECK(v - slack <= oracle::Big(wide.hi));
            CHECK(oracle::Big(narrow.lo) <= v + slack);
            CHECK(v - slack <= oracle::Big(narrow.hi));
        }
    }

    TEST_CASE("interval polynomial evaluation examples")
    {
        UniPoly sq({PiPoly(), PiPoly(), PiPoly::constant(Rational(1))});
        RatInterval r = unipoly_eval_interval(sq, RatInterval(Rational(-1), Rational(2)), 32);
        CHECK(r.lo <= 0);
        CHECK(r.hi >= 4);
        UniPoly five = UniPoly::constant(PiPoly::constant(Rational(5)));
        CHECK(unipoly_eval_interval(five, RatInterval(Rational(-3), Rational(7)), 32) == RatInterval(Rational(5)));
        UniPoly lin({PiPoly::constant(Rational(-1)), PiPoly::constant(Rational(1))});
        CHECK(unipoly_eval_interval(lin, RatInterval(Rational(2), Rational(3)), 32) ==
              RatInterval(Rational(1), Rational(2)));
    }

    TEST_CASE("taylor form range encloses the sampled range")
    {
        gen::Rng rng(17);
        for (int i = 0; i < 200; ++i) {
            UniPoly p = gen::unipoly(rng, 8, 3);
            Rational lo = gen::unit(rng, 1009) * 3, w = gen::unit(rng, 1013) / 4;
            auto c = enclose_coefficients(p, 96);
            RatInterval r = taylor_form_range(c, lo, lo + w);
            for (int k = 0; k <= 8; ++k) {
                oracle::Big v = oracle::eval(p, oracle::Big(lo + w * Rational(k, 8)));
                CHECK(oracle::Big(r.lo) <= v);
                CHECK(v <= oracle::Big(r.hi));
            }
        }
    }
}
