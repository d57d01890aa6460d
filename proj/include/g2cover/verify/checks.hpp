#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "g2cover/covers/degenerate.hpp"
#include "g2cover/covers/generic.hpp"
#include "g2cover/covers/ramification.hpp"
#include "g2cover/loci/audit.hpp"
#include "g2cover/loci/bank.hpp"
#include "g2cover/loci/d12.hpp"
#include "g2cover/loci/eliminate.hpp"
#include "g2cover/loci/known.hpp"
#include "g2cover/loci/membership.hpp"
#include "g2cover/symcore/roots.hpp"
#include "g2cover/symcore/squarefree.hpp"
#include "g2cover/verify/report.hpp"

// Reproduction checks for the published identities, constants and points.
// Each check works from the stored (displayed) data and an independent
// route, and reports a displayed formula that disagrees with its oracle as a
// discrepancy rather than a pass.

namespace g2cover {

struct VerifyOptions {
    bool include_advanced = false;
    std::uint64_t seed = 20240607;
};

class Verifier {
public:
    Verifier(const EquationBank& bank, VerifyOptions opts) : bank_(bank), opts_(opts) {}

    VerificationReport run() {
        const auto start = std::chrono::steady_clock::now();
        VerificationReport rep;
        rep.bank_checksum = bank_.checksum();
        add(rep, "C01", "symbolic J2(b), J4(b) of the degenerate family equal the displayed polynomials",
            "J2 = -5/486 (256 - 384 b ...), J4 = (65536 - 196608 b ...)/5184", 10, [&](CheckResult& c) { calibration(c); });
        add(rep, "C02", "Res_b(J2(b), J4(b)) equals the stated constant",
            "11784978051522395707646672896000000000000/42391158275216203514294433201", 10,
            [&](CheckResult& c) { resultant_constant(c); });
        add(rep, "C03", "degenerate-locus equations vanish identically on the degenerate family",
            "i-form pair in (i1, i2), (i1, i3) and J-form pair of weights 12, 20", 30,
            [&](CheckResult& c) { identity_on_family(c); });
        add(rep, "C04", "four rational points: degenerate locus and L2 vanish, D12 only at the first, D8 nowhere",
            "(i1, i2, i3) = (102789/12005, ...), (66357/9245, ...), (235629/1156805, ...), (1078818669/383775605, ...)", 5,
            [&](CheckResult& c) { rational_points(c); });
        add(rep, "C05", "D12 t-polynomials at the first point share exactly the root t = 27/100",
            "86670000 t^2 - 23781600 t + 102789 and the two longer specializations", 1,
            [&](CheckResult& c) { d12_extraction(c); });
        add(rep, "C06", "named curves have the stated absolute invariants and locus memberships",
            "y^2 = 100x^6 + 100x^3 + 27 and the three V4 sextics", 30, [&](CheckResult& c) { named_curves(c); });
        add(rep, "C07", "generic family: closed-form and derived sextics agree; branch cubic divides the discriminant",
            "a6 = p^2 + b, ..., a0 = (-b^2 + 1 - 11b) p^4 + ...", 60, [&](CheckResult& c) { generic_cross_oracle(c); });
        add(rep, "C08", "degenerate cover identities and discriminant vanishing loci",
            "phi - 1 = c (x-1)^2 (x^2+px+q), phi - lambda = c (x-r)^2 (x^2+sx+t), Delta_C, Delta_E", 5,
            [&](CheckResult& c) { degenerate_identities(c); });
        add(rep, "C09", "j-invariant relation vanishes along the degenerate family",
            "quadratic in j with coefficients in J2, J4", 10, [&](CheckResult& c) { j_relation(c); });
        add(rep, "C10", "J2 = 0 members: a-invariants and closed form of b",
            "a1 = 55476394831/20, a2 = 522665/1022825924657928", 10, [&](CheckResult& c) { j2_zero(c); });
        add(rep, "C11", "degree-4 ramification menu", "(2),(2),(2),(2)^2,(2) and (2),(2),(2),(4)", 1,
            [&](CheckResult& c) { ramification(c); });
        if (opts_.include_advanced) {
            add(rep, "C12", "eliminating b: resultants are divisible by the degenerate-locus equations",
                "Res_b of the numerators of i_j - i_j(b)", 60, [&](CheckResult& c) { elimination(c); });
        } else {
            CheckResult c{"C12", "eliminating b: resultants are divisible by the degenerate-locus equations",
                          "Res_b of the numerators of i_j - i_j(b)", Status::skipped, {"opt-in; run with --include-advanced"}};
            c.budget_seconds = 60;
            rep.checks.push_back(std::move(c));
        }
        rep.wall_time = seconds_since(start);
        return rep;
    }

private:
    const EquationBank& bank_;
    VerifyOptions opts_;
    std::map<std::string, RelationAudit> audits_;

    static double seconds_since(std::chrono::steady_clock::time_point t) {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
    }

    void add(VerificationReport& rep, std::string id, std::string description, std::string anchor, double budget,
             const std::function<void(CheckResult&)>& body) {
        CheckResult c{std::move(id), std::move(description), std::move(anchor)};
        c.budget_seconds = budget;
        const auto start = std::chrono::steady_clock::now();
        try {
            body(c);
        } catch (const std::exception& e) {
            c.note(Status::fail, std::string("unexpected error: ") + e.what());
        }
        c.seconds = seconds_since(start);
        if (c.seconds > budget) c.details.push_back("took " + std::to_string(c.seconds) + " s, over the " +
                                                    std::to_string(budget) + " s budget");
        rep.checks.push_back(std::move(c));
    }

    const RelationAudit& audit(const std::string& name) {
        auto it = audits_.find(name);
        if (it == audits_.end()) it = audits_.emplace(name, audit_relation(bank_.at(name), opts_.seed)).first;
        return it->second;
    }

    // Outcome for a displayed equation that should vanish: pass if it does;
    // discrepancy if only the corrected reading does and the audit confirms
    // the recorded errata; fail otherwise.
    void expect_vanishing(CheckResult& c, const std::string& name, const std::string& where,
                          const std::function<bool(Reading)>& vanishes) {
        if (vanishes(Reading::displayed)) {
            c.note(Status::pass, name + " vanishes " + where);
            return;
        }
        const auto& eq = bank_.at(name);
        if (eq.has_errata() && vanishes(Reading::corrected)) {
            const auto& a = audit(name);
            if (a.explained_by_errata) {
                c.note(Status::discrepancy, name + " as displayed does not vanish " + where +
                                                "; with the recorded correction it does, and the relation derived from "
                                                "family samples confirms it: " + a.describe());
                return;
            }
            c.note(Status::fail, name + " corrected reading vanishes " + where +
                                     " but the derived relation does not confirm the errata: " + a.describe());
            return;
        }
        c.note(Status::fail, name + " does not vanish " + where);
    }

    void expect_nonvanishing(CheckResult& c, const std::string& name, const std::string& where,
                             const std::function<bool(Reading)>& vanishes) {
        const bool shown = vanishes(Reading::displayed), fixed = vanishes(Reading::corrected);
        if (!shown && !fixed) c.note(Status::pass, name + " is nonzero " + where);
        else c.note(Status::fail, name + " unexpectedly vanishes " + where);
    }

    std::function<bool(Reading)> vanishes_at(const std::string& name, const Point& p) {
        return [this, name, p](Reading r) { return eval_locus(bank_.at(name), p, r).is_zero(); };
    }

    template <class Map>
    std::function<bool(Reading)> vanishes_on_family(const std::string& name, const Map& p) {
        return [this, name, p](Reading r) { return eval_locus(bank_.at(name), p, r).numerator().is_zero(); };
    }

    Rational random_admissible_b(std::mt19937_64& rng) {
        std::uniform_int_distribution<int> num(-60, 60), den(1, 30);
        while (true) {
            const Rational b = Rational(num(rng)) / Rational(den(rng));
            if (!delta_c(b).is_zero()) return b;
        }
    }

    void calibration(CheckResult& c) {
        const auto inv = igusa(degenerate_family(RatFunc::variable("b")).curve());
        const bool j2 = inv.J2.is_polynomial() && inv.J2.as_polynomial() == j2_displayed();
        const bool j4 = inv.J4.is_polynomial() && inv.J4.as_polynomial() == j4_displayed();
        c.note(j2 ? Status::pass : Status::fail, j2 ? "J2(b) matches exactly" : "J2(b) differs: " + inv.J2.str());
        c.note(j4 ? Status::pass : Status::fail, j4 ? "J4(b) matches exactly" : "J4(b) differs: " + inv.J4.str());
    }

    void resultant_constant(CheckResult& c) {
        const auto inv = igusa(degenerate_family(RatFunc::variable("b")).curve());
        const Rational r = resultant(inv.J2.as_polynomial(), inv.J4.as_polynomial());
        const Rational stated = degenerate_resultant_constant();
        if (r == stated) {
            c.note(Status::pass, "Res_b(J2, J4) = " + r.str());
            return;
        }
        const Rational factor = r / stated;
        const QPoly f = inv.J2.as_polynomial(), g = inv.J4.as_polynomial();
        // lc conventions: a monic normalization changes Res by lc(f)^deg g lc(g)^deg f.
        const Rational lc_factor = f.leading().pow(static_cast<unsigned>(g.deg())) * g.leading().pow(static_cast<unsigned>(f.deg()));
        const bool conventional = factor == lc_factor || factor == lc_factor.inverse() || factor == Rational(-1);
        c.note(conventional ? Status::discrepancy : Status::fail,
               "Res_b(J2, J4) = " + r.str() + ", stated/computed factor " + factor.str());
    }

    void identity_on_family(CheckResult& c) {
        const auto& i = degenerate_absolute_family();
        const std::map<std::string, RatFunc> ib{{"i1", i[0]}, {"i2", i[1]}, {"i3", i[2]}};
        expect_vanishing(c, "L4deg_i12", "on (i1(b), i2(b))", vanishes_on_family("L4deg_i12", ib));
        expect_vanishing(c, "L4deg_i13", "on (i1(b), i3(b))", vanishes_on_family("L4deg_i13", ib));
        const auto jb = bindings(igusa(degenerate_family(RatFunc::variable("b")).curve()));
        expect_vanishing(c, "L4deg_J12", "on (J2(b), ..., J10(b))", vanishes_on_family("L4deg_J12", jb));
        expect_vanishing(c, "L4deg_J20", "on (J2(b), ..., J10(b))", vanishes_on_family("L4deg_J20", jb));
    }

    void rational_points(CheckResult& c) {
        for (const auto& kp : known_points()) {
            const Point ip = bindings(kp.i), jp = bindings(from_absolute(kp.i));
            const std::string at = "at " + kp.label;
            expect_vanishing(c, "L4deg_i12", at, vanishes_at("L4deg_i12", ip));
            expect_vanishing(c, "L4deg_i13", at, vanishes_at("L4deg_i13", ip));
            expect_vanishing(c, "L2", at, vanishes_at("L2", jp));
            for (const char* d12 : {"D12_1", "D12_2"}) {
                if (kp.on_D12) expect_vanishing(c, d12, at, vanishes_at(d12, jp));
                else expect_nonvanishing(c, d12, at, vanishes_at(d12, jp));
            }
            expect_nonvanishing(c, "D8", at, vanishes_at("D8", jp));
        }
    }

    void d12_extraction(CheckResult& c) {
        const auto& p1 = known_points()[0].i;
        const auto corrected = d12_t_polynomials(p1, Reading::corrected);
        const auto shown = d12_t_polynomials(p1, Reading::displayed);

        const bool first_ok = corrected[0].scale(Rational(12005)) == qpoly({102789, -23781600, 86670000}, kT);
        c.note(first_ok ? Status::pass : Status::fail,
               first_ok ? "12005 * first polynomial = 86670000 t^2 - 23781600 t + 102789" : "first polynomial differs");

        // The displayed specializations, read on their own.
        const std::vector<QPoly> specialized{
            qpoly({102789, -23781600, 86670000}, kT),
            QPoly({Rational(73594737), Rational::parse("-43137816840"), Rational::parse("1245222396000"),
                   Rational::parse("-4023934200000")},
                  kT),
            QPoly({Rational(-531441), Rational(106288200), Rational::parse("1287019350200250"),
                   Rational::parse("-15443994116835000"), Rational::parse("61770534511500000"),
                   Rational::parse("-82315363050000000")},
                  kT)};
        const auto from_display = shared_root(specialized);
        c.note(from_display == Rational(27, 100) ? Status::pass : Status::fail,
               "gcd of the displayed specializations: t - " + (from_display ? from_display->str() : std::string("none")));

        // Independent route: numerators of i_k - i_k(t) on y^2 = x^6 + x^3 + t.
        const auto fam = absolute(igusa(d12_family_curve(RatFunc::variable(kT))));
        const std::array<RatFunc, 3> ik{fam.i1, fam.i2, fam.i3};
        const std::array<Rational, 3> iv{p1.i1, p1.i2, p1.i3};
        bool family_ok = true;
        for (std::size_t k = 0; k < 3; ++k) {
            const QPoly n = (RatFunc(QPoly::constant(iv[k], kT)) - ik[k]).numerator();
            family_ok = family_ok && monic(n.with_var(kT)) == monic(corrected[k]) &&
                        monic(specialized[k]) == monic(corrected[k]);
        }
        const auto root = shared_root({corrected[0], corrected[1], corrected[2]});
        const bool corrected_ok = family_ok && root == Rational(27, 100);
        std::optional<Rational> shown_root;
        try {
            shown_root = shared_root({shown[0], shown[1], shown[2]});
        } catch (const MultipleRoots&) {
        }
        if (shown_root == Rational(27, 100) && corrected_ok) {
            c.note(Status::pass, "shared root t = 27/100");
        } else if (corrected_ok) {
            c.note(Status::discrepancy,
                   "the third t-polynomial as displayed has 34992 t^2; the family numerator and the displayed "
                   "specialization both require 34992 t^4; with it the shared root is t = 27/100");
        } else {
            c.note(Status::fail, "t-polynomials do not match the family numerators or share no root 27/100");
        }
    }

    void named_curves(CheckResult& c) {
        for (const auto& kc : known_curves()) {
            const auto inv = igusa(kc.curve);
            const bool abs_ok = absolute(inv) == kc.expected;
            c.note(abs_ok ? Status::pass : Status::fail,
                   kc.label + (abs_ok ? ": absolute invariants match" : ": absolute invariants differ"));
            const bool want_d12 = kc.label == "d12";
            const auto flags_ok = [&](const MembershipReport& m) {
                return m.L2 && m.L4deg.value_or(false) && m.D12 == want_d12 && !m.D8;
            };
            const auto fixed = membership(inv, bank_, Reading::corrected);
            const auto shown = membership(inv, bank_, Reading::displayed);
            if (flags_ok(shown)) {
                c.note(Status::pass, kc.label + ": memberships as stated");
            } else if (flags_ok(fixed)) {
                bool confirmed = true;
                std::string which;
                for (const auto& [name, eq] : bank_.equations()) {
                    if (!eq.has_errata() || !shown.residuals.count(name)) continue;
                    if (shown.residuals.at(name) == fixed.residuals.at(name)) continue;
                    which += (which.empty() ? "" : ", ") + name;
                    confirmed = confirmed && audit(name).explained_by_errata;
                }
                c.note(confirmed ? Status::discrepancy : Status::fail,
                       kc.label + ": memberships as stated only with the corrected " + which);
            } else {
                c.note(Status::fail, kc.label + ": memberships differ from the stated ones");
            }
        }
    }

    void generic_cross_oracle(CheckResult& c) {
        std::mt19937_64 rng(opts_.seed + 7);
        std::uniform_int_distribution<int> num(-40, 40), den(1, 20);
        int done = 0, attempts = 0;
        while (done < 20 && attempts < 2000) {
            ++attempts;
            const Rational p = Rational(num(rng)) / Rational(den(rng)), b = Rational(num(rng)) / Rational(den(rng));
            std::optional<CoverGeneric> made;
            try {
                made = make_cover_generic(p, b);
            } catch (const Error&) {
                continue;  // excluded or non-generic parameters
            }
            const CoverGeneric& cover = *made;
            ++done;
            const std::string at = "(p, b) = (" + p.str() + ", " + b.str() + ")";
            if (!cover.mismatched_coefficients.empty()) {
                std::string idx;
                for (int i : cover.mismatched_coefficients) idx += " a" + std::to_string(i);
                c.note(cover.iso_equivalent ? Status::discrepancy : Status::fail,
                       at + ": displayed coefficients differ from the derived sextic at" + idx);
            } else if (!cover.iso_equivalent) {
                c.note(Status::fail, at + ": closed and derived curves are not isomorphic");
            }
            const auto bd = branch_discriminant(p, b);
            if (!bd.divisible) c.note(Status::fail, at + ": branch cubic does not divide disc_x(phi - lambda)");
        }
        c.note(done == 20 ? Status::pass : Status::fail,
               std::to_string(done) + " admissible parameter pairs checked (" + std::to_string(attempts) + " drawn)");
    }

    void degenerate_identities(CheckResult& c) {
        const RatFunc b = RatFunc::variable("b");
        try {
            const auto cd = degenerate_family(b);
            c.note(Status::pass, "phi - 1, phi - lambda and the sextic factor exactly over Q(b)");
            const RatFunc disc_c = discriminant(cd.sextic);
            const bool dc = disc_c.is_polynomial() &&
                            squarefree_part(disc_c.numerator()) == squarefree_part(delta_c(b).numerator());
            c.note(dc ? Status::pass : Status::fail,
                   dc ? "disc of the sextic vanishes exactly where Delta_C does" : "Delta_C vanishing locus differs");
            const RatFunc one(1, "b"), zero(0, "b");
            const UniPoly<RatFunc> u({zero, one}, "u");
            const auto legendre = u * UniPoly<RatFunc>({-one, one}, "u") * UniPoly<RatFunc>({-cd.lambda, one}, "u");
            const RatFunc disc_e = discriminant(legendre), shown = delta_e_displayed();
            const bool de = squarefree_part(disc_e.numerator()) == squarefree_part(shown.numerator()) &&
                            squarefree_part(disc_e.denominator()) == squarefree_part(shown.denominator());
            c.note(de ? Status::pass : Status::fail,
                   de ? "disc of the Legendre cubic has the zeros and poles of Delta_E" : "Delta_E vanishing locus differs");
        } catch (const StructureError& e) {
            c.note(Status::fail, std::string("identity fails: ") + e.what());
        }
    }

    void j_relation(CheckResult& c) {
        std::mt19937_64 rng(opts_.seed + 9);
        const auto& eq = bank_.at("j_relation");
        int zero = 0;
        for (int trial = 0; trial < 20; ++trial) {
            const Rational b = random_admissible_b(rng);
            const auto cd = degenerate_family(b);
            const auto inv = igusa(cd.curve());
            const Point p{{"J2", inv.J2}, {"J4", inv.J4}, {"j", legendre_j(cd.lambda)}};
            if (eval_locus(eq, p, Reading::displayed).is_zero()) ++zero;
            else c.note(Status::fail, "nonzero residual at b = " + b.str());
        }
        c.note(zero == 20 ? Status::pass : Status::fail, std::to_string(zero) + "/20 random b give residual 0");
    }

    void j2_zero(CheckResult& c) {
        const Rational tol = Rational(1) / Rational(10).pow(12);
        const auto roots = b_for_j2_zero();
        const auto ref = j2_zero_a_invariants();
        const Complex a1(ref.a1), a2(ref.a2);
        int matching = 0;
        for (const auto& b : roots) {
            const auto inv = igusa(degenerate_family(b).curve());
            if (is_zero(inv.J4) || is_zero(inv.J10)) continue;
            const auto a = a_invariants(inv);
            if (approx_equal(a.a1, a1, tol) && approx_equal(a.a2, a2, tol)) ++matching;
        }
        c.note(matching > 0 ? Status::pass : Status::fail,
               std::to_string(matching) + " of " + std::to_string(roots.size()) + " roots give the stated (a1, a2)");
        int branch = 0;
        for (const auto& cand : j2_zero_closed_form_branches())
            for (const auto& r : roots)
                if (approx_equal(cand, r, tol)) ++branch;
        c.note(branch > 0 ? Status::pass : Status::fail,
               std::to_string(branch) + " closed-form branches coincide with a root");
        const bool irrational = rational_roots(j2_zero_polynomial()).empty();
        c.note(irrational ? Status::pass : Status::fail,
               irrational ? "the sextic in b has no rational roots" : "the sextic in b has a rational root");
    }

    void ramification(CheckResult& c) {
        const auto cases = ramification_cases(4);
        bool generic = false, degenerate = false;
        int extra = 0;
        for (const auto& rc : cases) {
            const auto s = rc.signature.str();
            if (s == "(2),(2),(2),(2)^2,(2)") generic = true;
            else if (s == "(2),(2),(2),(4)") degenerate = true;
            if (!rc.listed_for_degree_four.value_or(false)) {
                ++extra;
                c.details.push_back(rc.label + " " + s + ": not listed for degree 4");
            }
        }
        c.note(generic && degenerate ? Status::pass : Status::fail,
               std::string("generic case ") + (generic ? "present" : "missing") + ", degenerate case " +
                   (degenerate ? "present" : "missing") + ", " + std::to_string(extra) + " further instantiations");
    }

    void elimination(CheckResult& c) {
        std::mt19937_64 rng(opts_.seed + 11);
        std::vector<Rational> points;
        while (points.size() < 5) points.push_back(random_admissible_b(rng));
        for (const auto& [second, name] : {std::pair{2, "L4deg_i12"}, std::pair{3, "L4deg_i13"}}) {
            const MultiPoly r = eliminate_b(1, second);
            const auto& eq = bank_.at(name);
            expect_vanishing(c, name, "as a divisor of Res_b at 5 specializations", [&](Reading reading) {
                for (const auto& b0 : points)
                    if (!specialized_division(r, eq, 1, second, b0, reading).divisible()) return false;
                return true;
            });
        }
    }
};

inline VerificationReport run_verification(const EquationBank& bank, const VerifyOptions& opts = {}) {
    return Verifier(bank, opts).run();
}

}  // namespace g2cover
