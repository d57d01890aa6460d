#include <gtest/gtest.h>

#include <chrono>
#include <fstream>
#include <random>

#include "g2cover/covers/degenerate.hpp"
#include "g2cover/loci/audit.hpp"
#include "g2cover/loci/bank.hpp"
#include "g2cover/loci/d12.hpp"
#include "g2cover/loci/eliminate.hpp"
#include "g2cover/loci/known.hpp"
#include "g2cover/loci/membership.hpp"

using namespace g2cover;

namespace {

using Q = Rational;

const EquationBank& bank() { return default_bank(); }

Q eval(const char* name, const Point& p, Reading r = Reading::corrected) { return eval_locus(bank().at(name), p, r); }

Q random_admissible_b(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-60, 60), den(1, 30);
    while (true) {
        const Q b = Q(num(rng)) / Q(den(rng));
        if (!delta_c(b).is_zero()) return b;
    }
}

// Zero polynomial check for a rational function in b.
bool vanishes_identically(const RatFunc& f) { return f.numerator().is_zero(); }

}  // namespace

TEST(Bank, LoadsAndIsHomogeneous) {
    EXPECT_EQ(bank().equations().size(), 9u);
    EXPECT_EQ(bank().at("L2").terms.size(), 34u);
    EXPECT_EQ(*bank().at("L2").weight, 30);
    EXPECT_EQ(*bank().at("D12_2").weight, 20);
    EXPECT_EQ(*bank().at("L4deg_J12").weight, 12);
    EXPECT_FALSE(bank().at("L4deg_i12").weight.has_value());
    EXPECT_THROW(bank().at("nope"), BankIntegrityError);
}

TEST(Bank, ChecksumAndIntegrityGuards) {
    std::ifstream in(default_bank_path());
    const auto j = nlohmann::json::parse(in);
    EXPECT_NO_THROW(EquationBank::from_json(j));

    auto tampered = j;
    tampered["equations"][0]["terms"][0]["coeff"] = "1";
    EXPECT_THROW(EquationBank::from_json(tampered), BankIntegrityError);

    auto bad_sum = j;
    bad_sum["checksum"] = "sha256:00";
    EXPECT_THROW(EquationBank::from_json(bad_sum), BankIntegrityError);

    // A non-homogeneous term with a matching checksum is still rejected.
    auto skewed = j;
    for (auto& eq : skewed["equations"])
        if (eq["name"] == "D8") eq["terms"][0]["exp"][0] = 7;
    skewed["checksum"] = "sha256:" + detail::sha256_hex(skewed["equations"].dump());
    EXPECT_THROW(EquationBank::from_json(skewed), BankIntegrityError);

    EXPECT_THROW(EquationBank::load("/nonexistent/bank.json"), BankIntegrityError);
}

TEST(Bank, DisplayedCoefficientsSpotCheck) {
    EXPECT_EQ(bank().at("L2").polynomial(Reading::displayed).coefficient({{"J10", 1}, {"J2", 4}, {"J6", 2}}), Q(8748));
    EXPECT_EQ(bank().at("L2").polynomial(Reading::displayed).coefficient({{"J10", 2}, {"J4", 2}, {"J2", 1}}), Q(-507384000));
    EXPECT_EQ(bank().at("D8").polynomial().coefficient({{"J4", 2}, {"J2", 2}}), Q(1706));
    EXPECT_EQ(bank().at("D12_1").polynomial().coefficient({{"J4", 1}, {"J2", 4}}), Q(-1));
    EXPECT_EQ(bank().at("D12_2").polynomial(Reading::displayed).coefficient({{"J10", 1}, {"J2", 5}}), Q(-864));
    EXPECT_EQ(bank().at("L4deg_J20").polynomial().coefficient({{"J2", 10}}), Q(282429536481));
    EXPECT_EQ(bank().at("L4deg_J12").polynomial().coefficient({{"J2", 2}, {"J4", 2}}), Q::parse("1541086152812576000"));
    EXPECT_EQ(bank().at("j_relation").polynomial().coefficient({{"j", 2}, {"J4", 4}}), Q::parse("2621440000000000"));
}

TEST(EvalLocus, ConstantTermAndArity) {
    const Point origin{{"i1", Q(0)}, {"i2", Q(0)}, {"i3", Q(0)}};
    EXPECT_EQ(eval("L4deg_i12", origin), Q::parse("3652054494822999"));
    EXPECT_THROW(eval("L4deg_i12", Point{{"i1", Q(0)}}), ArityError);
    EXPECT_THROW(eval("L2", origin), ArityError);
}

TEST(EvalLocus, FourRationalPoints) {
    for (const auto& kp : known_points()) {
        const auto ip = bindings(kp.i);
        const auto jp = bindings(from_absolute(kp.i));
        EXPECT_TRUE(eval("L4deg_i12", ip).is_zero()) << kp.label;
        EXPECT_TRUE(eval("L4deg_i13", ip).is_zero()) << kp.label;
        // The displayed sign of the i3^2 term does not vanish here.
        EXPECT_FALSE(eval("L4deg_i13", ip, Reading::displayed).is_zero()) << kp.label;
        EXPECT_TRUE(eval("L2", jp).is_zero()) << kp.label;
        EXPECT_TRUE(eval("L4deg_J12", jp).is_zero()) << kp.label;
        EXPECT_TRUE(eval("L4deg_J20", jp).is_zero()) << kp.label;
        EXPECT_FALSE(eval("D8", jp).is_zero()) << kp.label;
        const bool d12 = eval("D12_1", jp).is_zero() && eval("D12_2", jp).is_zero();
        EXPECT_EQ(d12, kp.on_D12) << kp.label;
    }
}

TEST(IdentityOnFamily, IFormAndJForm) {
    const auto& i = degenerate_absolute_family();
    const std::map<std::string, RatFunc> ib{{"i1", i[0]}, {"i2", i[1]}, {"i3", i[2]}};
    EXPECT_TRUE(vanishes_identically(eval_locus(bank().at("L4deg_i12"), ib)));
    EXPECT_TRUE(vanishes_identically(eval_locus(bank().at("L4deg_i13"), ib)));
    EXPECT_FALSE(vanishes_identically(eval_locus(bank().at("L4deg_i13"), ib, Reading::displayed)));

    const auto inv = igusa(degenerate_family(RatFunc::variable("b")).curve());
    const auto jb = bindings(inv);
    EXPECT_TRUE(vanishes_identically(eval_locus(bank().at("L4deg_J12"), jb)));
    EXPECT_TRUE(vanishes_identically(eval_locus(bank().at("L4deg_J20"), jb)));
}

TEST(IdentityOnFamily, D12AndD8Families) {
    const RatFunc t = RatFunc::variable("t");
    const auto d12 = bindings(igusa(d12_family_curve(t)));
    EXPECT_TRUE(vanishes_identically(eval_locus(bank().at("D12_1"), d12)));
    EXPECT_TRUE(vanishes_identically(eval_locus(bank().at("D12_2"), d12)));
    EXPECT_FALSE(vanishes_identically(eval_locus(bank().at("D12_2"), d12, Reading::displayed)));
    const auto d8 = bindings(igusa(d8_family_curve(t)));
    EXPECT_TRUE(vanishes_identically(eval_locus(bank().at("D8"), d8)));
    EXPECT_TRUE(vanishes_identically(eval_locus(bank().at("L2"), d8)));
}

TEST(IdentityOnFamily, FormsAgreeOnSamples) {
    std::mt19937_64 rng(301);
    for (int trial = 0; trial < 20; ++trial) {
        const Q b = random_admissible_b(rng);
        const auto inv = igusa(degenerate_family(b).curve());
        if (inv.J2.is_zero()) continue;
        const auto abs_i = absolute(inv);
        const auto normalized = from_absolute(abs_i);
        EXPECT_TRUE(eval("L4deg_i12", bindings(abs_i)).is_zero());
        EXPECT_TRUE(eval("L4deg_i13", bindings(abs_i)).is_zero());
        EXPECT_TRUE(eval("L4deg_J12", bindings(normalized)).is_zero());
        EXPECT_TRUE(eval("L4deg_J20", bindings(normalized)).is_zero());
    }
}

TEST(Audit, ErrataAreExactlyTheDerivedCorrections) {
    for (const auto& [name, eq] : bank().equations()) {
        const auto a = audit_relation(eq, 5);
        EXPECT_EQ(a.kernel_dimension, 1u) << name;
        EXPECT_TRUE(a.corrected_vanishes) << name;
        EXPECT_TRUE(a.explained_by_errata) << name << ": " << a.describe();
        EXPECT_EQ(a.displayed_vanishes, eq.errata.empty()) << name;
        EXPECT_EQ(a.mismatches.size(), eq.errata.size()) << name;
    }
}

TEST(Audit, KernelOfSmallMatrix) {
    // Rows (1, x, x^2) at x = 1, 2: kernel spanned by (2, -3, 1).
    const auto basis = detail::kernel_basis({{Q(1), Q(1), Q(1)}, {Q(1), Q(2), Q(4)}}, 3);
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(basis[0], (std::vector<Q>{Q(2), Q(-3), Q(1)}));
}

TEST(Membership, NamedCurves) {
    for (const auto& kc : known_curves()) {
        EXPECT_EQ(absolute(igusa(kc.curve)), kc.expected) << kc.label;
        const auto m = membership(kc.curve);
        EXPECT_TRUE(m.L2) << kc.label;
        ASSERT_TRUE(m.L4deg.has_value());
        EXPECT_TRUE(*m.L4deg) << kc.label;
        EXPECT_EQ(m.D12, kc.label == "d12") << kc.label;
        EXPECT_FALSE(m.D8) << kc.label;
    }
    const auto j = to_json(membership(known_curves()[0].curve));
    EXPECT_EQ(j.at("L4deg"), true);
    EXPECT_TRUE(j.at("L4deg_by_a_invariants").is_null());
    EXPECT_TRUE(j.at("residuals").contains("L4deg_J20"));
}

TEST(Membership, RandomCurvesAreGeneric) {
    std::mt19937_64 rng(303);
    std::uniform_int_distribution<int> c(-9, 9);
    int checked = 0;
    while (checked < 5) {
        std::vector<Q> a;
        for (int k = 0; k < 7; ++k) a.push_back(Q(c(rng)));
        if (a[0].is_zero()) continue;
        try {
            const auto m = membership(GenusTwoCurve<Q>::from_leading_first(a));
            bool all_nonzero = true;
            for (const auto& [name, r] : m.residuals) all_nonzero = all_nonzero && !r.is_zero();
            if (!all_nonzero) continue;
            EXPECT_FALSE(m.L2 || m.D8 || m.D12);
            EXPECT_FALSE(m.L4deg.value_or(true));
            ++checked;
        } catch (const NotGenusTwo&) {
        }
    }
}

TEST(Membership, JTwoZeroIsUndeterminedByIForm) {
    // y^2 = x^5 - 1 has J2 = J4 = J6 = 0, so neither the i-form nor the
    // a-invariants apply.
    const auto m = membership(GenusTwoCurve<Q>(qpoly({-1, 0, 0, 0, 0, 1})));
    EXPECT_FALSE(m.L4deg_by_a_invariants.has_value());
    EXPECT_FALSE(m.L4deg.has_value());
    EXPECT_EQ(to_json(m).at("L4deg"), "undetermined-by-i-form");
}

TEST(Membership, JTwoZeroDegeneratePointByAInvariants) {
    const auto eq12 = bank().at("L4deg_J12"), eq20 = bank().at("L4deg_J20");
    const Q tol = Q::parse("1/1000000000000");
    for (const auto& b : b_for_j2_zero()) {
        const auto inv = igusa(degenerate_family(b).curve());
        const auto jb = bindings(inv);
        EXPECT_TRUE(eval_locus_scaled(eq12, jb).vanishes(tol));
        EXPECT_TRUE(eval_locus_scaled(eq20, jb).vanishes(tol));
    }
}

TEST(D12, TPolynomialsAtFirstPoint) {
    const auto& p1 = known_points()[0].i;
    const auto polys = d12_t_polynomials(p1);
    EXPECT_EQ(polys[0].scale(Q(12005)), qpoly({102789, -23781600, 86670000}, kT));
    EXPECT_EQ(shared_root({polys[0], polys[1], polys[2]}), Q(27, 100));
    // 2941225 clears the second denominator; for the third the display also
    // removes a common factor 16 after clearing 28247524900000.
    EXPECT_EQ(polys[1].scale(Q(2941225)),
              QPoly({Q(73594737), Q::parse("-43137816840"), Q::parse("1245222396000"), Q::parse("-4023934200000")}, kT));
    EXPECT_EQ(polys[2].scale(Q::parse("28247524900000") / Q(16)),
              QPoly({Q(-531441), Q(106288200), Q::parse("1287019350200250"), Q::parse("-15443994116835000"),
                     Q::parse("61770534511500000"), Q::parse("-82315363050000000")},
                    kT));
    const auto shown = d12_t_polynomials(p1, Reading::displayed);
    EXPECT_FALSE(shown[2](Q(27, 100)).is_zero());
}

TEST(D12, TPolynomialsMatchFamilyNumerators) {
    // Independent route: numerators of i_k - i_k(t) for y^2 = x^6 + x^3 + t.
    const auto fam = absolute(igusa(d12_family_curve(RatFunc::variable("t"))));
    const std::array<RatFunc, 3> ik{fam.i1, fam.i2, fam.i3};
    std::mt19937_64 rng(307);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 50);
    for (int trial = 0; trial < 3; ++trial) {
        const AbsoluteInvariants<Q> at{Q(num(rng)) / Q(den(rng)), Q(num(rng)) / Q(den(rng)), Q(num(rng)) / Q(den(rng))};
        const auto polys = d12_t_polynomials(at);
        const std::array<Q, 3> iv{at.i1, at.i2, at.i3};
        for (std::size_t k = 0; k < 3; ++k) {
            const RatFunc diff = RatFunc(QPoly::constant(iv[k], "t")) - ik[k];
            const QPoly n = diff.numerator();
            EXPECT_EQ(monic(n), monic(polys[k].with_var("t"))) << k;
        }
    }
    EXPECT_EQ(d12_t_polynomials({Q(0), Q(0), Q(0)})[0], qpoly({0, -1296, -6480}, kT));
}

TEST(D12, SharedRootContract) {
    const QPoly tm1 = qpoly({-1, 1}, kT), tm2 = qpoly({-2, 1}, kT), tm3 = qpoly({-3, 1}, kT);
    EXPECT_EQ(shared_root({tm1 * tm2, tm1 * tm3}), Q(1));
    EXPECT_FALSE(shared_root({tm1, tm2}).has_value());
    EXPECT_THROW(shared_root({tm1 * tm2, tm1 * tm2 * tm3}), MultipleRoots);
    EXPECT_THROW(shared_root({QPoly(kT), QPoly(kT)}), UndefinedGcd);
}

TEST(JRelation, VanishesAlongFamily) {
    for (long bv : {3L, 5L}) {
        const auto cd = degenerate_family(Q(bv));
        const auto inv = igusa(cd.curve());
        EXPECT_TRUE(j_relation_residual(inv.J2, inv.J4, legendre_j(cd.lambda)).is_zero()) << bv;
    }
    std::mt19937_64 rng(311);
    for (int trial = 0; trial < 10; ++trial) {
        const Q b = random_admissible_b(rng);
        const auto cd = degenerate_family(b);
        const auto inv = igusa(cd.curve());
        EXPECT_TRUE(j_relation_residual(inv.J2, inv.J4, legendre_j(cd.lambda)).is_zero()) << b;
    }
    const Q constant_sum = Q::parse("2589491458659766450406400000000") - Q::parse("203482361042468209670400000000") +
                           Q::parse("39862710766802552045625") - Q::parse("19433806326190741141800000") +
                           Q::parse("3259543004362746907416000000");
    EXPECT_EQ(j_relation_residual(Q(1), Q(1), Q(0)), constant_sum);
    EXPECT_FALSE(constant_sum.is_zero());
}

TEST(Eliminate, ArityGuards) {
    EXPECT_THROW(eliminate_b(1, 1), ArityError);
    EXPECT_THROW(eliminate_b(0, 2), ArityError);
}

TEST(Eliminate, InterpolationMatchesDirectResultant) {
    for (int second : {2, 3}) {
        const MultiPoly r = eliminate_b(1, second);
        EXPECT_EQ(r.degree_in("i1"), b_numerator(second).degree_in("b"));
        const Q v(7, 3);
        EXPECT_EQ(substitute(r, {{i_name(second), MultiPoly(v)}}).to_qpoly("i1"), eliminate_b_specialized(1, second, v));
    }
}

TEST(Eliminate, DivisibleByDegenerateLocusEquations) {
    std::mt19937_64 rng(313);
    std::vector<Q> points{Q(3)};
    while (points.size() < 5) points.push_back(random_admissible_b(rng));
    const MultiPoly r12 = eliminate_b(1, 2), r13 = eliminate_b(1, 3);
    for (const auto& b0 : points) {
        const auto d12 = specialized_division(r12, bank().at("L4deg_i12"), 1, 2, b0);
        EXPECT_TRUE(d12.divisible()) << b0;
        EXPECT_GT(d12.eliminant.deg(), d12.divisor.deg());
        EXPECT_TRUE(specialized_division(r13, bank().at("L4deg_i13"), 1, 3, b0).divisible()) << b0;
        EXPECT_FALSE(specialized_division(r13, bank().at("L4deg_i13"), 1, 3, b0, Reading::displayed).divisible()) << b0;
    }
    // The first equation vanishes on the symbolic family.
    const auto& i = degenerate_absolute_family();
    EXPECT_TRUE(eval_locus(bank().at("L4deg_i12"), std::map<std::string, RatFunc>{{"i1", i[0]}, {"i2", i[1]}}).numerator().is_zero());
}
