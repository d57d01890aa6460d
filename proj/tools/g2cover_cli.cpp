// g2cover: invariants, degree-4 elliptic subcover families, locus membership,
// locus sampling and the reproduction checks.
//
// Exit codes: 0 success, 1 verification failures, 2 invalid input or
// environment (bad arguments, excluded parameters, damaged equation bank).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "g2cover/covers/degenerate.hpp"
#include "g2cover/covers/generic.hpp"
#include "g2cover/covers/io.hpp"
#include "g2cover/invariants/io.hpp"
#include "g2cover/loci/bank.hpp"
#include "g2cover/loci/membership.hpp"
#include "g2cover/verify/checks.hpp"

using namespace g2cover;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitInvalid = 2;

struct CurveInput {
    std::string sextic;
    std::string curve;
};

void add_curve_options(CLI::App* cmd, CurveInput& in) {
    auto* s = cmd->add_option("--sextic", in.sextic, "coefficients a6,a5,...,a0 (leading first), rational literals");
    auto* c = cmd->add_option("--curve", in.curve, "curve JSON {\"a0\": ..., \"a6\": ...}, or @path to a JSON file");
    s->excludes(c);
}

GenusTwoCurve<Rational> read_curve(const CurveInput& in) {
    if (!in.sextic.empty()) return curve_from_list(in.sextic);
    if (in.curve.empty()) throw ParseError("give the curve with --sextic or --curve");
    std::string text = in.curve;
    if (text.front() == '@') {
        std::ifstream f(text.substr(1));
        if (!f) throw ParseError("cannot read " + text.substr(1));
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("curve is not valid JSON: ") + e.what());
    }
    return curve_from_json(j);
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

json ratfunc_json(const RatFunc& f) { return {{"numerator", to_json(f.numerator())}, {"denominator", to_json(f.denominator())}}; }

int cmd_inv(const CurveInput& in) {
    const auto c = read_curve(in);
    json out = invariants_json(igusa(c));
    out["curve"] = to_json(c);
    print(out);
    return kExitOk;
}

int cmd_locus(const CurveInput& in, const EquationBank& bank) {
    print(to_json(membership(read_curve(in), bank)));
    return kExitOk;
}

int cmd_family_generic(const std::string& p_text, const std::string& b_text) {
    const Rational p = Rational::parse(p_text), b = Rational::parse(b_text);
    const auto cover = make_cover_generic(p, b);
    const auto bd = branch_discriminant(p, b);
    json mismatched = json::array();
    for (int i : cover.mismatched_coefficients) mismatched.push_back("a" + std::to_string(i));
    print({{"kind", "generic"},
           {"p", p.str()},
           {"b", b.str()},
           {"phi", ratfunc_json(cover.phi)},
           {"branch_cubic", to_json(cover.branch_cubic)},
           {"closed", to_json(cover.sextic_closed)},
           {"derived", to_json(cover.sextic_derived)},
           {"iso_equivalent", cover.iso_equivalent},
           {"mismatched_coefficients", mismatched},
           {"branch_discriminant_divisible", bd.divisible},
           {"branch_discriminant_quotient", to_json(bd.quotient)},
           {"invariants", invariants_json(igusa(cover.sextic_closed))}});
    return kExitOk;
}

int cmd_family_degenerate(const std::string& b_text, const EquationBank& bank) {
    const Rational b = Rational::parse(b_text);
    // Construction verifies the fiber identities exactly and throws otherwise.
    const auto cd = degenerate_family(b);
    json out = to_json(cd);
    out["kind"] = "degenerate";
    out["j"] = legendre_j(cd.lambda).str();
    out["identities"] = {{"phi_minus_one", true}, {"phi_minus_lambda", true}, {"sextic_from_fibers", true}};
    const auto inv = igusa(cd.curve());
    out["invariants"] = invariants_json(inv);
    out["j_relation_residual"] = j_relation_residual(inv.J2, inv.J4, legendre_j(cd.lambda), bank).str();
    out["membership"] = to_json(membership(inv, bank));
    print(out);
    return kExitOk;
}

int cmd_sample(const std::string& from_text, const std::string& to_text, int count, const EquationBank& bank) {
    if (count < 1) throw ParseError("--count must be at least 1");
    const Rational from = Rational::parse(from_text), to = Rational::parse(to_text);
    const Rational step = count == 1 ? Rational(0) : (to - from) / Rational(count - 1);
    const auto& e12 = bank.at("L4deg_i12");
    const auto& e13 = bank.at("L4deg_i13");
    std::ostringstream rows;
    int emitted = 0, rejected = 0;
    for (int k = 0; k < count; ++k) {
        const Rational b = from + step * Rational(k);
        if (delta_c(b).is_zero()) continue;
        const auto inv = igusa(degenerate_family(b).curve());
        if (inv.J2.is_zero()) continue;
        const auto i = absolute(inv);
        const auto point = bindings(i);
        if (!eval_locus(e12, point).is_zero() || !eval_locus(e13, point).is_zero()) {
            std::cerr << "self-check failed at b = " << b << "; row withheld\n";
            ++rejected;
            continue;
        }
        rows << b << "," << i.i1 << "," << i.i2 << "," << i.i3 << "\r\n";
        ++emitted;
    }
    if (emitted == 0 && rejected == 0) throw DegenerateParameters("no admissible b in the requested range");
    std::cout << "b,i1,i2,i3\r\n" << rows.str();
    return rejected ? kExitFailures : kExitOk;
}

int cmd_verify(bool advanced, const std::string& report_path, bool as_json, const EquationBank& bank) {
    VerifyOptions opts;
    opts.include_advanced = advanced;
    const auto report = run_verification(bank, opts);
    if (!report_path.empty()) {
        std::ofstream f(report_path);
        if (!f) throw ParseError("cannot write report to " + report_path);
        f << report.to_json().dump(2) << "\n";
    }
    if (as_json) print(report.to_json());
    else std::cout << report.text();
    return report.has_failures() ? kExitFailures : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genus-2 curves with degree-4 elliptic subcovers: invariants, families, loci"};
    app.require_subcommand(1);
    std::string bank_path = default_bank_path();
    app.add_option("--bank", bank_path, "equation bank JSON")->capture_default_str();

    CurveInput inv_in, locus_in;
    auto* inv = app.add_subcommand("inv", "Igusa, absolute and a-invariants of y^2 = sextic");
    add_curve_options(inv, inv_in);
    auto* locus = app.add_subcommand("locus", "membership in the L2, D8, D12 and degenerate degree-4 loci");
    add_curve_options(locus, locus_in);

    auto* family = app.add_subcommand("family", "build a degree-4 cover and its genus-2 curve");
    family->require_subcommand(1);
    std::string gp, gb, db;
    auto* generic = family->add_subcommand("generic", "phi = (x-1)^2 (x^2+b) / (x-p)^2");
    generic->add_option("--p", gp, "parameter p")->required();
    generic->add_option("--b", gb, "parameter b")->required();
    auto* degenerate = family->add_subcommand("degenerate", "phi = c x^2 (x^2 + a x + b)");
    degenerate->add_option("--b", db, "parameter b")->required();

    std::string from, to;
    int count = 1;
    auto* sample = app.add_subcommand("sample", "CSV of (b, i1, i2, i3) along the degenerate family");
    sample->add_option("--from", from, "first b")->required();
    sample->add_option("--to", to, "last b")->required();
    sample->add_option("--count", count, "number of equally spaced values of b")->capture_default_str();

    bool advanced = false, as_json = false;
    for (auto* cmd : {inv, locus, generic, degenerate})
        cmd->add_flag("--json", as_json, "JSON output (the only format of this command)");
    std::string report_path;
    auto* verify = app.add_subcommand("verify-paper", "run the reproduction checks");
    verify->add_flag("--include-advanced,--include_advanced", advanced, "also run the elimination check");
    verify->add_option("--report", report_path, "write the JSON report here");
    verify->add_flag("--json", as_json, "print the JSON report instead of the summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvalid;
    }

    try {
        const auto bank = [&] { return EquationBank::load(bank_path); };
        if (inv->parsed()) return cmd_inv(inv_in);
        if (locus->parsed()) return cmd_locus(locus_in, bank());
        if (generic->parsed()) return cmd_family_generic(gp, gb);
        if (degenerate->parsed()) return cmd_family_degenerate(db, bank());
        if (sample->parsed()) return cmd_sample(from, to, count, bank());
        if (verify->parsed()) return cmd_verify(advanced, report_path, as_json, bank());
    } catch (const Error& e) {
        std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
