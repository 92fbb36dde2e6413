#include "doctest.h"
#include "gen.hpp"

#include "trigprove/driver.hpp"
#include "trigprove/parser.hpp"

#include "json.hpp"

using namespace trigprove;
using nlohmann::json;

namespace {

const char* const kF57 = "2*cos(x)*sin(x)^2 + (2/45)*x^3*sin(x)^3 - x*cos(x)^2*sin(x) - x^2*cos(x) > 0 on (0, pi/2)";
const char* const kF66 = "x*(pi^2-4*x^2)^2 - (pi^2-4*x^2)^2*cos(x)*sin(x) - ((2/3)*pi^4*x^3 + "
                         "((8/15)*pi^4 - (16/3)*pi^2)*x^5)*cos(x)^2 > 0 on (0, pi/2)";

const std::string& certificate_f66()
{
    static const std::string bytes = emit(prove(parse_problem(kF66)));
    return bytes;
}

json mutate_leaf(const json& v, gen::Rng& rng)
{
    if (v.is_number_integer())
        return v.get<long>() + (gen::integer(rng, 0, 1) ? 1 : -1);
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (is_canonical_rational_string(s)) {
            Rational d = make_rational(gen::integer(rng, 1, 9), gen::integer(rng, 1, 9) * 1000);
            return to_string(rational_from_string(s) + (gen::integer(rng, 0, 1) ? d : Rational(-d)));
        }
        if (s == "cos")
            return "sin";
        if (s == "sin")
            return "cos";
        if (s == "lower")
            return "upper";
        if (s == "upper")
            return "lower";
        if (s == "sturm")
            return "bisection";
        if (s == "bisection")
            return "sturm";
        if (s == "none")
            return "shift";
        if (s == "reflect" || s == "shift")
            return "none";
        return s + "+x";
    }
    return json::array();
}

}  // namespace

TEST_SUITE("certificate")
{
    TEST_CASE("emit and parse are inverse")
    {
        for (const char* text : {kF57, kF66, "cos(x) > 0 on (-pi/2, pi/2)"}) {
            ProofOutcome o = prove(parse_problem(text));
            REQUIRE(o.verdict == Verdict::proved);
            const std::string bytes = emit(o);
            Certificate c = parse_certificate(bytes);
            CHECK(c == *o.certificate);
            CHECK(emit_certificate(c) == bytes);
            CHECK(c.problem == print_problem(parse_problem(text)));
        }
    }

    TEST_CASE("only proved outcomes are emitted")
    {
        ProofOutcome o = prove(parse_problem("-sin(x) > 0 on (0, 1)"));
        CHECK(o.verdict == Verdict::refuted);
        CHECK_THROWS_AS(emit(o), std::logic_error);
        ProofOutcome none;
        CHECK_THROWS_AS(emit(none), std::logic_error);
    }

    TEST_CASE("untampered certificates are accepted")
    {
        CheckResult r = check(certificate_f66());
        CHECK_MESSAGE(r.accepted, r.step << ": " << r.reason);
        CHECK(check(certificate_f66(), Exec::serial).accepted);
    }

    TEST_CASE("format errors")
    {
        CHECK_THROWS_AS(parse_certificate("{}"), CertificateFormatError);
        CHECK_THROWS_AS(parse_certificate("not json"), CertificateFormatError);
        json j = json::parse(certificate_f66());
        j["extra"] = 1;
        CHECK_THROWS_AS(parse_certificate(j.dump()), CertificateFormatError);
        // non-canonical spacing is refused even though the content is equal
        CHECK_THROWS_AS(parse_certificate(json::parse(certificate_f66()).dump(1)), CertificateFormatError);
        CheckResult r = check("[]");
        CHECK_FALSE(r.accepted);
        CHECK(r.step == "parse");
    }

    TEST_CASE("targeted tampering names the failing step")
    {
        json base = json::parse(certificate_f66());

        json j = base;
        auto& poly = j["polynomial"][0];
        REQUIRE(poly.size() > 8);
        std::string c = poly[7][0];
        poly[7][0] = to_string(rational_from_string(c) + Rational(1, 1000000));
        CheckResult r = check(j.dump());
        CHECK_FALSE(r.accepted);
        CHECK(r.step == "polynomial");

        j = base;
        auto& entry = j["degrees"][0][0];
        entry["direction"] = entry["direction"] == "lower" ? "upper" : "lower";
        r = check(j.dump());
        CHECK_FALSE(r.accepted);
        CHECK(r.step == "classification");

        j = base;
        j["reflection"][0]["hi"] = j["reflection"][1]["hi"];
        r = check(j.dump());
        CHECK_FALSE(r.accepted);

        j = base;
        for (const char* k : {"reflection", "expansion", "degrees", "polynomial", "positivity"})
            j[k].erase(1);
        r = check(j.dump());
        CHECK_FALSE(r.accepted);
        CHECK(r.step == "coverage");

        j = base;
        j["problem"] = "x > 0 on (0, 1)";
        r = check(j.dump());
        CHECK_FALSE(r.accepted);
    }

    TEST_CASE("every single-field mutation is rejected")
    {
        const json base = json::parse(certificate_f66());
        std::vector<std::string> paths;
        const auto flat = base.flatten();
    for (const auto& [ptr, value] : flat.items())
            if (!value.is_null())
                paths.push_back(ptr);
        REQUIRE(paths.size() > 100);
        gen::Rng rng(81);
        for (int i = 0; i < 200; ++i) {
            const std::string& path = paths[static_cast<std::size_t>(gen::integer(rng, 0, static_cast<long>(paths.size()) - 1))];
            json j = base;
            const json::json_pointer ptr(path);
            j[ptr] = mutate_leaf(j[ptr], rng);
            CheckResult r = check(j.dump());
            CHECK_MESSAGE(!r.accepted, path);
        }
    }
}
