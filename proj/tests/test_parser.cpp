#include "doctest.h"
#include "gen.hpp"

#include "trigprove/parser.hpp"

using namespace trigprove;

namespace {

const char* const kEq57 =
    "2*cos(x)*sin(x)^2 + (2/45)*x^3*sin(x)^3 - x*cos(x)^2*sin(x) - x^2*cos(x) > 0 on (0, pi/2)";

UniPoly rat_poly(std::initializer_list<Rational> c)
{
    std::vector<PiPoly> v;
    for (const auto& r : c)
        v.push_back(PiPoly::constant(r));
    return UniPoly(std::move(v));
}

}  // namespace

TEST_SUITE("parser")
{
    TEST_CASE("four-term problem")
    {
        ProblemSpec p = parse_problem(kEq57);
        REQUIRE(p.f.terms().size() == 4);
        // sorted by (cos power, sin power)
        CHECK(p.f.terms()[0] == MixedTrigTerm{rat_poly({0, 0, 0, Rational(2, 45)}), 0, 3});
        CHECK(p.f.terms()[1] == MixedTrigTerm{rat_poly({0, 0, -1}), 1, 0});
        CHECK(p.f.terms()[2] == MixedTrigTerm{rat_poly({2}), 1, 2});
        CHECK(p.f.terms()[3] == MixedTrigTerm{rat_poly({0, -1}), 2, 1});
        CHECK(p.lo == PiPoly());
        CHECK(p.hi == PiPoly({Rational(0), Rational(1, 2)}));
        CHECK(parse_problem(print_problem(p)) == p);
    }

    TEST_CASE("cancellation, no identities, merging")
    {
        CHECK(parse_problem("x - x > 0 on (0, 1)").f.is_zero());
        ProblemSpec p = parse_problem("sin(x)^2 + cos(x)^2 - 1 > 0 on (0, 1)");
        CHECK(p.f.terms().size() == 3);
        MixedTrigPoly m = parse_expression("cos(x) + cos(x)");
        REQUIRE(m.terms().size() == 1);
        CHECK(m.terms()[0].factor == rat_poly({2}));
    }

    TEST_CASE("printing")
    {
        CHECK(print_problem(parse_problem("x - x > 0 on (0, 1)")) == "0 > 0 on (0, 1)");
        ProblemSpec p = parse_problem("pi^2*x^3*sin(x) > 0 on (0, 1)");
        std::string s = print_problem(p);
        CHECK(s.find("pi^2*x^3") != std::string::npos);
        CHECK(parse_problem(s) == p);
    }

    TEST_CASE("decimals and rationals are exact")
    {
        CHECK(parse_constant("0.1") == PiPoly::constant(Rational(1, 10)));
        CHECK(parse_constant("1.136") == PiPoly::constant(Rational(142, 125)));
        CHECK(parse_constant("pi/2 - 142/125") == PiPoly({Rational(-142, 125), Rational(1, 2)}));
        auto [lo, hi] = parse_interval("(0, pi/2)");
        CHECK(lo.is_zero());
        CHECK(hi == PiPoly({Rational(0), Rational(1, 2)}));
    }

    TEST_CASE("lhs > rhs is moved to one side and < swaps")
    {
        CHECK(parse_problem("sin(x) > x^2 on (0, 1)").f == parse_problem("sin(x) - x^2 > 0 on (0, 1)").f);
        CHECK(parse_problem("x^2 < sin(x) on (0, 1)").f == parse_problem("sin(x) - x^2 > 0 on (0, 1)").f);
    }

    TEST_CASE("negative pi powers are cleared")
    {
        ProblemSpec a = parse_problem("x/pi^2 + 1 > 0 on (0, 1)");
        ProblemSpec b = parse_problem("x + pi^2 > 0 on (0, 1)");
        CHECK(a.f == b.f);
    }

    TEST_CASE("errors")
    {
        CHECK_THROWS_AS(parse_problem("tan(x) > 0 on (0, 1)"), ParseError);
        CHECK_THROWS_AS(parse_problem("sec(x) > 0 on (0, 1)"), ParseError);
        CHECK_THROWS_AS(parse_problem("x^(1/2) > 0 on (0, 1)"), ParseError);
        CHECK_THROWS_AS(parse_problem("sin(2*x) > 0 on (0, 1)"), ParseError);
        CHECK_THROWS_AS(parse_problem("x > 0 on (1, 0)"), ParseError);
        CHECK_THROWS_AS(parse_problem("x > 0 on (0, x)"), ParseError);
        CHECK_THROWS_AS(parse_problem("x >= 0 on (0, 1)"), ParseError);
        CHECK_THROWS_AS(parse_problem("x + > 0 on (0, 1)"), ParseError);
        CHECK_THROWS_AS(parse_expression("x/x"), ParseError);
        try {
            parse_problem("tan(x) > 0 on (0, 1)");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("denominator") != std::string::npos);
        }
        try {
            parse_problem("x + y > 0 on (0, 1)");
            FAIL("accepted an unknown variable");
        } catch (const ParseError& e) {
            CHECK(e.position() == 4);
        }
    }

    TEST_CASE("round trip on random problems")
    {
        gen::Rng rng(21);
        for (int i = 0; i < 500; ++i) {
            ProblemSpec p;
            p.f = gen::mixed(rng, 4, 5, 6, 3);
            Rational a = gen::unit(rng, 997);
            p.lo = PiPoly::constant(a);
            p.hi = gen::integer(rng, 0, 1) ? PiPoly({a + 1}) : PiPoly({Rational(0), make_rational(gen::integer(rng, 1, 4), 2)});
            if (gen::integer(rng, 0, 3) == 0)
                p.lo = PiPoly();
            const std::string s = print_problem(p);
            ProblemSpec q = parse_problem(s);
            CHECK_MESSAGE(q == p, s);
            CHECK(print_problem(q) == s);
        }
    }

    TEST_CASE("expression printing round trip")
    {
        gen::Rng rng(22);
        for (int i = 0; i < 200; ++i) {
            MixedTrigPoly f = gen::mixed(rng, 5, 4, 5, 4);
            CHECK(parse_expression(print_expression(f)) == f);
            UniPoly u = gen::unipoly(rng, 5, 3);
            MixedTrigPoly fu = u.is_zero() ? MixedTrigPoly() : MixedTrigPoly::polynomial(u);
            CHECK(parse_expression(print_unipoly(u)) == fu);
            PiPoly c = gen::pipoly(rng, 4);
            CHECK(parse_constant(print_pipoly(c)) == c);
        }
    }
}
