#include "doctest.h"
#include "gen.hpp"
#include "oracle.hpp"

#include "trigprove/parser.hpp"
#include "trigprove/positivity.hpp"
#include "trigprove/sturm.hpp"

#include <algorithm>

using namespace trigprove;

namespace {

UniPoly poly(const char* s)
{
    MixedTrigPoly f = parse_expression(s);
    if (f.is_zero())
        return UniPoly();
    REQUIRE(f.terms().size() == 1);
    return f.terms()[0].factor;
}

const char* const kP4 = "-531440*x^4 - 2746332*x^3 - 8885955*x^2 - 118584180*x + 1183782600";
const char* const kP16 =
    "x^8/186810624000*(-531440*x^8 - 2746332*x^6 - 8885955*x^4 - 118584180*x^2 + 1183782600)";
const char* const kQ11 =
    "(1/2700)*x^2*((64*pi^4-640*pi^2)*x^9 + (-160*pi^5+1600*pi^3)*x^8 + (160*pi^6-2000*pi^4+4800*pi^2-5760)*x^7 + "
    "(-80*pi^7+1880*pi^5-12000*pi^3+11520*pi)*x^6 + (20*pi^8-1340*pi^6+12840*pi^4-20160*pi^2+28800)*x^5 + "
    "(-2*pi^9+610*pi^7-8700*pi^5+36000*pi^3-57600*pi)*x^4 + (-150*pi^8+4650*pi^6-34200*pi^4+28800*pi^2-86400)*x^3 + "
    "(15*pi^9-1875*pi^7+15300*pi^5+194400*pi)*x^2 + (450*pi^8-3150*pi^6-129600*pi^2)*x - 45*pi^9+225*pi^7+21600*pi^3)";

bool contains_value(const RootEnclosure& r, const Rational& v, const Rational& w)
{
    // the published value is truncated, so the true root lies in [v, v + w]
    return r.lo <= v + w && r.hi >= v;
}

RatPoly from_roots(const std::vector<Rational>& roots, const Rational& lead)
{
    RatPoly p = RatPoly::constant(lead);
    for (const auto& r : roots)
        p = p * RatPoly({Rational(-r), Rational(1)});
    return p;
}

int scan_sign_changes(const RatPoly& p, double a, double b)
{
    int changes = 0;
    double prev = 0;
    const long steps = static_cast<long>((b - a) / 1e-4) + 1;
    for (long i = 0; i <= steps; ++i) {
        double x = a + (b - a) * static_cast<double>(i) / static_cast<double>(steps);
        double v = 0;
        for (std::size_t k = p.size(); k-- > 0;)
            v = v * x + p.coeff(k).get_d();
        if (v != 0 && prev != 0 && (v > 0) != (prev > 0))
            ++changes;
        if (v != 0)
            prev = v;
    }
    return changes;
}

}  // namespace

TEST_SUITE("positivity")
{
    TEST_CASE("sturm counts")
    {
        CHECK(sturm_count(to_rational_poly(poly("x^2 - 2")), Rational(0), Rational(2)) == 1);
        CHECK(sturm_count(to_rational_poly(poly("(x - 1)^2")), Rational(0), Rational(2)) == 1);
        CHECK(sturm_count(to_rational_poly(poly(kP4)), Rational(0), Rational(10)) == 1);
        CHECK_THROWS(sturm_count(RatPoly(), Rational(0), Rational(1)));
    }

    TEST_CASE("sturm against a constructed-root and sign-scan oracle")
    {
        gen::Rng rng(51);
        for (int i = 0; i < 300; ++i) {
            // distinct roots k/2 in [-5, 5], some doubled, times an optional positive quadratic
            std::vector<long> halves;
            const long n = gen::integer(rng, 1, 5);
            while (static_cast<long>(halves.size()) < n) {
                long h = gen::integer(rng, -10, 10);
                if (std::find(halves.begin(), halves.end(), h) == halves.end())
                    halves.push_back(h);
            }
            std::vector<Rational> roots;
            bool doubled = false;
            for (long h : halves) {
                roots.push_back(make_rational(h, 2));
                if (gen::integer(rng, 0, 4) == 0 && roots.size() < 8) {
                    roots.push_back(make_rational(h, 2));
                    doubled = true;
                }
            }
            RatPoly p = from_roots(roots, Rational(gen::integer(rng, 1, 20) * (gen::integer(rng, 0, 1) ? 1 : -1)));
            if (p.degree() <= 6 && gen::integer(rng, 0, 1))
                p = p * RatPoly({Rational(gen::integer(rng, 1, 5)), Rational(0), Rational(1)});
            // endpoints never coincide with a root
            Rational a = make_rational(gen::integer(rng, -42, 20), 7) + Rational(1, 101), b = a + make_rational(gen::integer(rng, 1, 60), 7);
            unsigned want = 0;
            for (long h : halves) {
                Rational r = make_rational(h, 2);
                if (a < r && r <= b)
                    ++want;
            }
            unsigned got = sturm_count(p, a, b);
            CHECK(got == want);
            if (!doubled)
                CHECK(scan_sign_changes(p, a.get_d(), b.get_d()) == static_cast<int>(want));
            auto iso = isolate_roots(p, a, b);
            CHECK(iso.size() == want);
        }
    }

    TEST_CASE("least positive roots")
    {
        const Rational w(1, 100000), digit(1, 1000000);
        RootSearch z = least_positive_root(poly(kP4), w, 128);
        REQUIRE(z.root);
        CHECK(z.root->width() <= w);
        CHECK(contains_value(*z.root, Rational(4503628, 1000000), digit));
        RootSearch x = least_positive_root(poly(kP16), w, 128);
        REQUIRE(x.root);
        CHECK(contains_value(*x.root, Rational(2122175, 1000000), digit));
        RootSearch none = least_positive_root(poly("x^2 + 1"), w, 128, Rational(1000));
        CHECK_FALSE(none.root);
        CHECK(none.bound > 0);
        CHECK(none.bound <= 1000);
        RootSearch none2 = least_positive_root(poly("x^2 + 1"), w, 128);
        CHECK_FALSE(none2.root);
        CHECK(none2.bound > 0);
        RootSearch q = least_positive_root(poly(kQ11), w, 128);
        REQUIRE(q.root);
        CHECK(contains_value(*q.root, Rational(630862, 1000000), digit));
        CHECK(q.root->sign_left == -q.root->sign_right);
    }

    TEST_CASE("positivity examples")
    {
        PositivityResult a = prove_positive(poly(kP16), parse_constant("pi/2"));
        REQUIRE(a.status == PositivityStatus::proved);
        CHECK(a.proof->mode == PositivityMode::sturm);
        CHECK(a.proof->multiplicity_at_zero == 8);
        CHECK(verify_positivity(poly(kP16), *a.proof) == std::nullopt);

        PositivityResult b = prove_positive(poly("x^2"), parse_constant("1"));
        REQUIRE(b.status == PositivityStatus::proved);
        CHECK(b.proof->multiplicity_at_zero == 2);

        PositivityResult c = prove_positive(poly(kQ11), parse_constant("pi/2 - 142/125"));
        REQUIRE(c.status == PositivityStatus::proved);
        CHECK(c.proof->mode == PositivityMode::bisection);
        CHECK(verify_positivity(poly(kQ11), *c.proof) == std::nullopt);

        PositivityResult d = prove_positive(poly("x^2 - 1"), parse_constant("2"));
        CHECK(d.status == PositivityStatus::disproved);
        REQUIRE(d.witness);
        CHECK(*d.witness * *d.witness <= 1);
    }

    TEST_CASE("proofs are sound and witnesses negative")
    {
        gen::Rng rng(52);
        int proved = 0, disproved = 0;
        PositivityOptions opt;
        opt.max_cells = 20000;
        for (int i = 0; i < 80; ++i) {
            UniPoly p = gen::unipoly(rng, 6, 2);
            if (p.is_zero())
                continue;
            // push the constant up so that roughly half succeed
            p += UniPoly::constant(PiPoly::constant(Rational(gen::integer(rng, 0, 40))));
            const PiPoly delta = gen::integer(rng, 0, 1) ? parse_constant("pi/4") : PiPoly::constant(Rational(3, 4));
            const Rational lo = gen::integer(rng, 0, 2) == 0 ? Rational(1, 8) : Rational(0);
            PositivityResult r = prove_positive(p, lo, delta, opt);
            if (r.status == PositivityStatus::proved) {
                ++proved;
                CHECK(verify_positivity(p, *r.proof) == std::nullopt);
                for (int k = 0; k < 1000; ++k) {
                    Rational x = lo + gen::unit(rng) * (r.proof->hi - lo);
                    if (sgn(x) == 0)
                        continue;
                    CHECK(oracle::eval(p, oracle::Big(x)) > oracle::Big(0.0));
                }
            } else if (r.status == PositivityStatus::disproved) {
                ++disproved;
                REQUIRE(r.witness);
                CHECK(*r.witness >= lo);
                CHECK(oracle::eval(p, oracle::Big(*r.witness)) <= oracle::Big(0.0));
            }
        }
        CHECK(proved > 5);
        CHECK(disproved > 5);
    }

    TEST_CASE("raising leaf precision never loses a proof")
    {
        UniPoly q = poly(kQ11).divide_by_var_power(2);
        PositivityResult r = prove_positive(poly(kQ11), parse_constant("pi/2 - 142/125"));
        REQUIRE(r.status == PositivityStatus::proved);
        CoefficientTables tables(q);
        std::vector<Cell> cells;
        for (const auto& l : r.proof->leaves)
            cells.push_back({l.lo, l.hi, l.precision * 2});
        auto ranges = enclose_cells(tables, cells, Exec::serial);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            CHECK(ranges[i].positive());
            CHECK(ranges[i].lo >= r.proof->leaves[i].lower_bound);
        }
    }

    TEST_CASE("serial and parallel kernels agree")
    {
        gen::Rng rng(53);
        for (int i = 0; i < 20; ++i) {
            UniPoly p = gen::unipoly(rng, 10, 4);
            std::vector<Cell> cells;
            for (int k = 0; k < 64; ++k) {
                Rational lo = gen::unit(rng, 4093) * 2;
                cells.push_back({lo, lo + gen::unit(rng, 4091) / 16 + Rational(1, 1 << 20),
                                 static_cast<unsigned>(gen::integer(rng, 3, 9)) * 32});
            }
            CoefficientTables a(p), b(p);
            CHECK(enclose_cells_serial(a, cells) == enclose_cells_parallel(b, cells));
        }
    }

    TEST_CASE("tampered evidence is refused")
    {
        const UniPoly p = poly(kQ11);
        PositivityResult r = prove_positive(p, parse_constant("pi/2 - 142/125"));
        REQUIRE(r.status == PositivityStatus::proved);
        PositivityProof t = *r.proof;
        t.leaves[0].lower_bound += Rational(1, 1000000);
        CHECK(verify_positivity(p, t));
        t = *r.proof;
        t.leaves.back().hi += Rational(1, 1000);
        CHECK(verify_positivity(p, t));
        t = *r.proof;
        t.leaves[0].precision += 1;
        CHECK(verify_positivity(p, t));
        t = *r.proof;
        t.multiplicity_at_zero = 1;
        CHECK(verify_positivity(p, t));
        t = *r.proof;
        t.mode = PositivityMode::sturm;
        CHECK(verify_positivity(p, t));
    }
}
