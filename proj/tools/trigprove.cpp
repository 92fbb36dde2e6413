#include "trigprove/driver.hpp"
#include "trigprove/parser.hpp"
#include "trigprove/series.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace trigprove;

namespace {

constexpr int kUsage = 3;

struct Options {
    std::string input;
    std::string interval;
    std::string out;
    unsigned k_max = 16;
    unsigned split_depth = 4;
    unsigned precision_bits = 256;
    std::string width = "1/100000";
    unsigned order = 16;
    bool approx = false;
    bool verbose = false;
    bool serial = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// the argument itself, or the contents of the file it names
std::string input_text(const std::string& arg)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::string s = slurp(arg);
        while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
            s.pop_back();
        return s;
    }
    return arg;
}

std::string show(const Rational& r, bool approx)
{
    if (!approx)
        return to_string(r);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", to_double(r));
    return buf;
}

std::string show(const PiPoly& p, bool approx)
{
    if (p.degree() <= 0)
        return show(p.coeff(0), approx);
    if (!approx)
        return print_pipoly(p);
    RatInterval e = pipoly_enclose(p, 128);
    return show(e.lo, true);
}

Rational parse_width(const std::string& s)
{
    PiPoly p = parse_constant(s);
    if (p.degree() > 0 || sgn(p.coeff(0)) <= 0)
        throw UsageError("--width must be a positive rational");
    return p.coeff(0);
}

ProblemSpec read_problem(const Options& o)
{
    std::string text = input_text(o.input);
    if (!o.interval.empty()) {
        if (text.find('>') == std::string::npos && text.find('<') == std::string::npos)
            text += " > 0";
        text += " on " + o.interval;
    }
    return parse_problem(text);
}

int run_prove(const Options& o)
{
    ProblemSpec spec = read_problem(o);
    SearchConfig cfg;
    cfg.K_max = o.k_max;
    cfg.split_depth_max = o.split_depth;
    cfg.precision_bits = o.precision_bits;
    if (cfg.precision_cap < o.precision_bits)
        cfg.precision_cap = std::min(o.precision_bits * 16, 1u << 16);
    cfg.width_target = parse_width(o.width);
    cfg.exec = o.serial ? Exec::serial : Exec::parallel;
    ProofOutcome out = prove(spec, cfg);
    if (o.verbose)
        for (const auto& d : out.diagnostics)
            std::cerr << d << "\n";
    std::cout << to_string(out.verdict);
    switch (out.verdict) {
    case Verdict::proved: {
        const std::string bytes = emit(out);
        std::cout << " (" << out.certificate->pieces.size() << " piece(s))\n";
        if (!o.out.empty()) {
            std::ofstream f(o.out, std::ios::binary);
            if (!(f << bytes << "\n"))
                throw UsageError("cannot write " + o.out);
        }
        return 0;
    }
    case Verdict::refuted:
        // outward rounding keeps the printed enclosure short
        std::cout << ": f(" << show(*out.witness, o.approx) << ") in ["
                  << show(floor_dyadic(out.witness_value->lo, 64), o.approx) << ", "
                  << show(ceil_dyadic(out.witness_value->hi, 64), o.approx) << "]\n";
        return 1;
    default:
        std::cout << "\n";
        return 2;
    }
}

int run_check(const Options& o)
{
    std::string bytes = slurp(o.input);
    while (!bytes.empty() && bytes.back() == '\n')
        bytes.pop_back();
    CheckResult r = check(bytes, o.serial ? Exec::serial : Exec::parallel);
    if (r.accepted) {
        std::cout << "accepted\n";
        return 0;
    }
    std::cout << "rejected at " << r.step << ": " << r.reason << "\n";
    return 1;
}

int run_expand(const Options& o)
{
    std::cout << print_multiangle(expand_poly(parse_expression(input_text(o.input)))) << "\n";
    return 0;
}

int run_series(const Options& o)
{
    MixedTrigPoly f = parse_expression(input_text(o.input));
    auto c = series_coeffs(f, o.order);
    for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero())
            std::cout << "x^" << k << ": " << show(c[k], o.approx) << "\n";
    if (auto ls = local_sign(f, o.order))
        std::cout << "order " << ls->order << ", sign " << (ls->sign > 0 ? "+" : "-") << "\n";
    else
        std::cout << "vanishes through order " << o.order << "\n";
    return 0;
}

int run_root(const Options& o)
{
    MixedTrigPoly f = parse_expression(input_text(o.input));
    if (f.terms().size() > 1 || (!f.is_zero() && (f.terms()[0].cos_pow || f.terms()[0].sin_pow)))
        throw UsageError("root needs a polynomial in x without trigonometric terms");
    UniPoly p = f.is_zero() ? UniPoly() : f.terms()[0].factor;
    if (p.is_zero())
        throw UsageError("root of the zero polynomial");
    std::optional<Rational> limit;
    if (!o.interval.empty()) {
        auto [lo, hi] = parse_interval(o.interval);
        if (!lo.is_zero())
            throw UsageError("root searches an interval (0, b]");
        limit = domain_upper(hi, o.precision_bits);
    }
    RootSearch rs = least_positive_root(p, parse_width(o.width), o.precision_bits, limit);
    if (!rs.root) {
        std::cout << "no root in (0, " << show(rs.bound, o.approx) << "]\n";
        return 0;
    }
    std::cout << "[" << show(rs.root->lo, o.approx) << ", " << show(rs.root->hi, o.approx) << "]\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Prover for mixed trigonometric polynomial inequalities"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--precision-bits", o.precision_bits, "working precision")->check(CLI::Validator(
            [](std::string& s) {
                if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6)
                    return std::string("must be a power of two in [8, 65536]");
                unsigned long v = std::stoul(s);
                return v <= (1u << 16) && valid_precision(static_cast<unsigned>(v))
                           ? std::string()
                           : std::string("must be a power of two in [8, 65536]");
            },
            "POW2"));
        sub->add_option("--width", o.width, "root enclosure width");
        sub->add_flag("--approx", o.approx, "print decimals instead of exact rationals");
        sub->add_flag("--verbose", o.verbose, "print diagnostics to stderr");
        sub->add_flag("--serial", o.serial, "use the serial leaf kernels");
    };

    auto* prove_cmd = app.add_subcommand("prove", "prove f > 0 on an interval");
    prove_cmd->add_option("problem", o.input, "problem text or a file containing it")->required();
    prove_cmd->add_option("--interval", o.interval, "domain, e.g. \"(0, pi/2)\"");
    prove_cmd->add_option("--out", o.out, "certificate path");
    prove_cmd->add_option("--k-max", o.k_max, "largest escalation index");
    prove_cmd->add_option("--split-depth", o.split_depth, "largest number of splits");
    add_common(prove_cmd);

    auto* check_cmd = app.add_subcommand("check", "verify a certificate");
    check_cmd->add_option("certificate", o.input, "certificate file")->required();
    add_common(check_cmd);

    auto* expand_cmd = app.add_subcommand("expand", "print the multiple-angle form");
    expand_cmd->add_option("expression", o.input)->required();
    add_common(expand_cmd);

    auto* series_cmd = app.add_subcommand("series", "print Maclaurin coefficients");
    series_cmd->add_option("expression", o.input)->required();
    series_cmd->add_option("--order", o.order, "highest power");
    add_common(series_cmd);

    auto* root_cmd = app.add_subcommand("root", "enclose the least positive root of a polynomial");
    root_cmd->add_option("polynomial", o.input)->required();
    root_cmd->add_option("--interval", o.interval, "search (0, b]");
    add_common(root_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*prove_cmd)
            return run_prove(o);
        if (*check_cmd)
            return run_check(o);
        if (*expand_cmd)
            return run_expand(o);
        if (*series_cmd)
            return run_series(o);
        return run_root(o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kUsage;
}
