#include <gtest/gtest.h>

#include <random>

#include "g2cover/covers/degenerate.hpp"
#include "g2cover/covers/generic.hpp"
#include "g2cover/covers/io.hpp"
#include "g2cover/covers/ramification.hpp"
#include "g2cover/symcore/roots.hpp"

using namespace g2cover;

namespace {

using Q = Rational;

// Small random (p, b) passing every guard of the generic construction.
std::pair<Q, Q> random_generic_params(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-50, 50), den(1, 50);
    while (true) {
        const Q p(num(rng), den(rng)), b(num(rng), den(rng));
        try {
            const QPoly cubic = branch_cubic(p, b);
            if (discriminant(cubic).is_zero()) continue;
            genus2_generic_closed(p, b);
            return {p, b};
        } catch (const Error&) {
        }
    }
}

Q random_admissible_b(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-50, 50), den(1, 50);
    while (true) {
        const Q b(num(rng), den(rng));
        if (!delta_c(b).is_zero()) return b;
    }
}

}  // namespace

TEST(GenericCover, PhiShape) {
    std::mt19937_64 rng(201);
    for (int trial = 0; trial < 10; ++trial) {
        const auto [p, b] = random_generic_params(rng);
        const RatFunc phi = phi_generic(p, b, Q(3));
        EXPECT_TRUE(phi(Q(1)).is_zero());
        EXPECT_EQ(phi.denominator(), qpoly({p * p, -Q(2) * p, 1}));
    }
    EXPECT_THROW(phi_generic(Q(1), Q(3)), DegenerateParameters);
    EXPECT_THROW(phi_generic(Q(2), Q(-4)), DegenerateParameters);
    // The fiber over 0 contains x = 1 twice.
    const auto n = fiber_numerator(Q(2), Q(3));
    const QPoly at_zero = n.map([](const MultiPoly& c) { return substitute(c, {{kLambda, MultiPoly(0)}}).constant_value(); });
    EXPECT_TRUE(at_zero(Q(1)).is_zero());
    EXPECT_TRUE(at_zero.derivative()(Q(1)).is_zero());
}

TEST(GenericCover, BranchCubicValues) {
    EXPECT_EQ(branch_cubic(Q(2), Q(3)), qpoly({192, -397, 304, -7}, kLambda));
    std::mt19937_64 rng(203);
    for (int trial = 0; trial < 10; ++trial) {
        const auto [p, b] = random_generic_params(rng);
        EXPECT_EQ(branch_cubic(p, b)[0], b * (Q(1) + b).pow(3));
    }
}

TEST(GenericCover, BranchCubicKGrading) {
    const auto c = branch_cubic_coefficients(var("p"), var("b"), var("k"));
    for (int m = 0; m <= 3; ++m) {
        const MultiPoly& coeff = c[static_cast<std::size_t>(3 - m)];
        ASSERT_FALSE(coeff.is_zero());
        for (const auto& [e, q] : coeff.terms()) {
            (void)q;
            unsigned k_degree = 0;
            for (std::size_t i = 0; i < coeff.vars().size(); ++i)
                if (coeff.vars()[i] == "k") k_degree = e[i];
            EXPECT_EQ(k_degree, static_cast<unsigned>(m));
        }
    }
}

TEST(GenericCover, ClosedFormCoefficients) {
    const QPoly f = generic_closed_sextic(Q(2), Q(3));
    EXPECT_EQ(f[6], Q(7));
    EXPECT_EQ(f[5], Q(14));
    // At (p, b) = (0, 1) the coefficient map gives x^3 (x-2)^3 + (1-2x)^3,
    // which has a repeated root, so no curve is built there.
    const QPoly x = qpoly({0, 1}), xm2 = qpoly({-2, 1}), l = qpoly({1, -2});
    EXPECT_EQ(generic_closed_sextic(Q(0), Q(1)), x * x * x * xm2 * xm2 * xm2 + l * l * l);
    EXPECT_THROW(genus2_generic_closed(Q(0), Q(1)), DegenerateParameters);
    EXPECT_THROW(genus2_generic_closed(Q(1), Q(3)), DegenerateParameters);
}

TEST(GenericCover, DerivedSplitsAsCubicSquaredTimesSextic) {
    const auto d = derive_generic(Q(2), Q(3));
    EXPECT_EQ(d.f12.deg(), 12);
    EXPECT_EQ(d.sextic.deg(), 6);
    EXPECT_EQ(d.doubled, qpoly({-3, 2, -4, 1}));
    EXPECT_EQ(d.decomposition.reassemble("x"), d.f12);
    const auto cover = make_cover_generic(Q(2), Q(3));
    EXPECT_TRUE(cover.iso_equivalent);
    EXPECT_TRUE(cover.mismatched_coefficients.empty());
}

TEST(GenericCover, RepeatedBranchPointIsRejected) {
    // Search a small grid for parameters whose cubic has a repeated root.
    bool found = false;
    for (int pn = -12; pn <= 12 && !found; ++pn)
        for (int bn = -12; bn <= 12 && !found; ++bn) {
            const Q p(pn, 2), b(bn, 2);
            try {
                if (!discriminant(branch_cubic(p, b)).is_zero()) continue;
            } catch (const DegenerateParameters&) {
                continue;
            }
            found = true;
            EXPECT_THROW(derive_generic(p, b), NonGenericParameters);
        }
    EXPECT_TRUE(found);
}

TEST(GenericCover, RoutesAgreeOnRandomParameters) {
    std::mt19937_64 rng(207);
    for (int trial = 0; trial < 8; ++trial) {
        const auto [p, b] = random_generic_params(rng);
        const auto cover = make_cover_generic(p, b);
        EXPECT_TRUE(cover.iso_equivalent) << p << ", " << b;
        EXPECT_TRUE(cover.mismatched_coefficients.empty()) << p << ", " << b;
        const auto bd = branch_discriminant(p, b);
        EXPECT_TRUE(bd.divisible) << p << ", " << b;
    }
}

TEST(GenericCover, BranchDiscriminantAtTwoThree) {
    const auto bd = branch_discriminant(Q(2), Q(3));
    EXPECT_TRUE(bd.divisible);
    EXPECT_EQ(bd.quotient, qpoly({0, -16}, kLambda));
}

TEST(DegenerateCover, ValuesAtThree) {
    const auto cd = degenerate_family(Q(3));
    EXPECT_EQ(cd.lambda, Q(27, 32));
    EXPECT_EQ(cd.p, Q(-4, 3));
    EXPECT_EQ(cd.q, Q(-2, 3));
    EXPECT_EQ(cd.r, Q(3, 2));
    EXPECT_EQ(cd.s, Q(-1, 3));
    EXPECT_EQ(cd.t, Q(-1, 4));
    EXPECT_EQ(cd.c, Q(3, 2));
    EXPECT_EQ(to_json(cd).at("lambda"), "27/32");
    for (long bad : {0L, 1L, 2L, 4L, -2L}) EXPECT_THROW(degenerate_family(Q(bad)), DegenerateParameters);
}

TEST(DegenerateCover, SymbolicIdentitiesHold) {
    // Construction checks all three identities exactly over Q(b).
    const auto cd = degenerate_family(RatFunc::variable("b"));
    EXPECT_EQ(cd.lambda, degenerate_lambda(RatFunc::variable("b")));
    EXPECT_EQ(cd.sextic.deg(), 6);
}

TEST(DegenerateCover, DiscriminantVanishingLoci) {
    const RatFunc b = RatFunc::variable("b");
    const auto cd = degenerate_family(b);
    const RatFunc disc_c = discriminant(cd.sextic);
    EXPECT_EQ(squarefree_part(disc_c.numerator()), squarefree_part(delta_c(b).numerator()));
    EXPECT_TRUE(disc_c.denominator().is_constant());

    const RatFunc one(1), zero(0);
    const UniPoly<RatFunc> u({zero, one}, "u");
    const UniPoly<RatFunc> legendre = u * UniPoly<RatFunc>({-one, one}, "u") * UniPoly<RatFunc>({-cd.lambda, one}, "u");
    const RatFunc disc_e = discriminant(legendre);
    const RatFunc shown = delta_e_displayed();
    EXPECT_EQ(squarefree_part(disc_e.numerator()), squarefree_part(shown.numerator()));
    EXPECT_EQ(squarefree_part(disc_e.denominator()), squarefree_part(shown.denominator()));
}

TEST(DegenerateCover, InvariantsAgreeWithSymbolicFamily) {
    std::mt19937_64 rng(209);
    const auto symbolic = igusa(degenerate_family(RatFunc::variable("b")).curve());
    for (int trial = 0; trial < 5; ++trial) {
        const Q b = random_admissible_b(rng);
        const auto inv = igusa(degenerate_family(b).curve());
        EXPECT_EQ(inv.J2, symbolic.J2(b));
        EXPECT_EQ(inv.J10, symbolic.J10(b));
    }
}

TEST(Legendre, JInvariant) {
    EXPECT_EQ(legendre_j(Q(-1)), Q(1728));
    EXPECT_EQ(legendre_j(Q(1, 2)), Q(1728));
    EXPECT_THROW(legendre_j(Q(0)), SingularCurve);
    EXPECT_THROW(legendre_j(Q(1)), SingularCurve);
    std::mt19937_64 rng(211);
    for (int trial = 0; trial < 20; ++trial) {
        const Q l = random_admissible_b(rng) + Q(1, 7);
        if (l.is_zero() || l.is_one()) continue;
        EXPECT_EQ(legendre_j(l), legendre_j(Q(1) - l));
        EXPECT_EQ(legendre_j(l), legendre_j(l.inverse()));
    }
}

TEST(JTwoZero, RootsClosedFormAndAInvariants) {
    const auto roots = b_for_j2_zero();
    ASSERT_EQ(roots.size(), 6u);
    const Q tol = Q::parse("1/1000000000000");
    const Complex a1_ref(Q::parse("55476394831/20")), a2_ref(Q::parse("522665/1022825924657928"));
    bool a_match = false;
    for (const auto& b : roots) {
        // J2 recomputed from the curve, not from the displayed polynomial.
        const auto inv = igusa(degenerate_family(b).curve());
        EXPECT_TRUE(abs(inv.J2) < BigFloat(Q(1) / Q(10).pow(30)));
        const auto a = a_invariants(inv);
        if (approx_equal(a.a1, a1_ref, tol) && approx_equal(a.a2, a2_ref, tol)) a_match = true;
    }
    EXPECT_TRUE(a_match);

    int matched = 0;
    for (const auto& cand : j2_zero_closed_form_branches())
        for (const auto& r : roots)
            if (approx_equal(cand, r, tol)) ++matched;
    EXPECT_GE(matched, 1);
    EXPECT_TRUE(rational_roots(j2_zero_polynomial()).empty());
}

TEST(Ramification, DegreeFourMenu) {
    const auto cases = ramification_cases(4);
    int listed = 0;
    bool generic_found = false, degenerate_found = false;
    for (const auto& c : cases) {
        EXPECT_EQ(c.signature.ramification_total(), 6) << c.signature.str();
        ASSERT_TRUE(c.listed_for_degree_four.has_value());
        if (*c.listed_for_degree_four) ++listed;
        if (c.signature.str() == "(2),(2),(2),(2)^2,(2)") generic_found = c.generic;
        if (c.signature.str() == "(2),(2),(2),(4)") degenerate_found = c.label == "I.3";
    }
    EXPECT_EQ(listed, 2);
    EXPECT_TRUE(generic_found);
    EXPECT_TRUE(degenerate_found);
}

TEST(Ramification, FiltersAndGuards) {
    for (int n : {6, 8, 10, 12}) {
        for (const auto& c : ramification_cases(n)) {
            EXPECT_EQ(c.signature.ramification_total(), 2 * n - 2);
            EXPECT_FALSE(c.listed_for_degree_four.has_value());
        }
    }
    for (const auto& c : ramification_cases(6)) EXPECT_NE(c.label, "III.3");
    EXPECT_THROW(ramification_cases(5), UnsupportedDegree);
    EXPECT_THROW(ramification_cases(2), UnsupportedDegree);
}
