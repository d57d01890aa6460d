#include <gtest/gtest.h>

#include <random>

#include "g2cover/invariants/igusa.hpp"
#include "g2cover/invariants/io.hpp"
#include "g2cover/symcore/multipoly.hpp"

using namespace g2cover;

namespace {

using Q = Rational;

MultiPoly mq(long n, long d = 1) { return MultiPoly(Q(n, d)); }

MultiPoly poly_in(const std::string& v, std::initializer_list<long> low_to_high) {
    MultiPoly acc, power(1);
    const MultiPoly x = var(v);
    for (long c : low_to_high) {
        acc += mq(c) * power;
        power *= x;
    }
    return acc;
}

// The degenerate-family sextic as a polynomial in x over Q[b], multiplied
// out from its three quadratic factors.
std::array<MultiPoly, 7> degenerate_sextic_in_b() {
    const MultiPoly b = var("b");
    const auto quad = [](MultiPoly c0, MultiPoly c1) { return UniPoly<MultiPoly>({std::move(c0), std::move(c1), mq(1)}, "x"); };
    const auto f = quad(mq(1, 3) * (mq(1) - b), mq(2, 3) * (mq(1) - b)) *
                   quad(mq(1, 12) * (b - mq(4)) * b, mq(1, 3) * (b - mq(4))) *
                   quad(b, mq(-2, 3) * (b + mq(2)));
    std::array<MultiPoly, 7> a;
    for (std::size_t i = 0; i < 7; ++i) a[i] = f[i];
    return a;
}

QPoly random_sextic(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    while (true) {
        std::vector<Q> c;
        for (int i = 0; i < 7; ++i) c.emplace_back(num(rng), den(rng));
        if (c[6].is_zero()) c[6] = Q(1);
        QPoly f(c, "x");
        if (!discriminant(f).is_zero()) return f;
    }
}

Q random_nonzero(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-50, 50), den(1, 50);
    while (true) {
        Q q(num(rng), den(rng));
        if (!q.is_zero()) return q;
    }
}

}  // namespace

TEST(Igusa, DegenerateFamilyMatchesDisplayedJ2AndJ4) {
    const auto inv = igusa_from_coefficients(degenerate_sextic_in_b());
    const MultiPoly j2 = mq(-5, 486) * poly_in("b", {256, -384, -4908, 5068, -1227, -24, 4});
    const MultiPoly j4 = mq(1, 5184) * poly_in("b", {65536, -196608, -307200, 1218560, -834288, -294432, 456600, -73608,
                                                     -52143, 19040, -1200, -192, 16});
    EXPECT_EQ(inv.J2, j2);
    EXPECT_EQ(inv.J4, j4);
    EXPECT_EQ(substitute(inv.J2, {{"b", mq(3)}}).constant_value(), Q(52675, 486));
}

TEST(Igusa, FirstRationalPointCurve) {
    const auto c = GenusTwoCurve<Q>::from_leading_first({100, 0, 0, 100, 0, 0, 27});
    const auto i = absolute(igusa(c));
    EXPECT_EQ(i.i1, Q(102789, 12005));
    EXPECT_EQ(i.i2, Q(-73594737, 2941225));
    EXPECT_EQ(i.i3, Q::parse("531441/28247524900000"));
}

TEST(Igusa, RejectsSingularAndLowDegree) {
    EXPECT_THROW(GenusTwoCurve<Q>::from_leading_first({1, 0, 0, 0, 0, 0, 0}), NotGenusTwo);
    EXPECT_THROW(GenusTwoCurve<Q>(qpoly({1, 0, 0, 0, 1})), NotGenusTwo);
    EXPECT_THROW(GenusTwoCurve<Q>(qpoly({1, -2, 1}) * qpoly({1, 2, 3, 4, 5})), NotGenusTwo);
    EXPECT_NO_THROW(GenusTwoCurve<Q>(qpoly({1, 0, 0, 0, 0, 1})));
}

TEST(Igusa, ScalingGivesWeightedProjectiveEquality) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        const QPoly f = random_sextic(rng);
        const Q c = random_nonzero(rng);
        const auto a = igusa(GenusTwoCurve<Q>(f));
        const auto b = igusa(GenusTwoCurve<Q>(f.scale(c)));
        EXPECT_TRUE(weighted_projective_equal(a, b));
        if (!a.J2.is_zero()) EXPECT_EQ(absolute(a), absolute(b));
    }
}

TEST(Igusa, ShiftAndReversalPreserveIsomorphismClass) {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 25; ++trial) {
        const QPoly f = random_sextic(rng);
        const Q shift = random_nonzero(rng);
        const GenusTwoCurve<Q> c(f);
        const GenusTwoCurve<Q> shifted(f.compose(qpoly({shift, 1})));
        EXPECT_TRUE(iso_equivalent(c, shifted));
        if (!f[0].is_zero()) EXPECT_TRUE(iso_equivalent(c, GenusTwoCurve<Q>(f.reversed(6))));
    }
}

TEST(Igusa, J10IsProportionalToDiscriminant) {
    // f_e = (x - 1)(x - 1 - e)(x^4 + 2x + 3): J10 and disc_x vanish together at e = 0.
    const MultiPoly e = var("e");
    const UniPoly<MultiPoly> f = UniPoly<MultiPoly>({mq(-1), mq(1)}, "x") * UniPoly<MultiPoly>({mq(-1) - e, mq(1)}, "x") *
                                 UniPoly<MultiPoly>({mq(3), mq(2), mq(0), mq(0), mq(1)}, "x");
    std::array<MultiPoly, 7> a;
    for (std::size_t i = 0; i < 7; ++i) a[i] = f[i];
    const auto inv = igusa_from_coefficients(a);
    const MultiPoly disc = discriminant(f);
    ASSERT_FALSE(disc.is_zero());
    const MultiPoly ratio = exact_divide(inv.J10, disc);
    EXPECT_TRUE(ratio.is_constant());
    EXPECT_EQ(ratio * disc, inv.J10);
    EXPECT_TRUE(substitute(inv.J10, {{"e", mq(0)}}).is_zero());
}

TEST(Absolute, DefinitionsAndGuards) {
    const IgusaInvariants<Q> j{Q(1), Q(1, 144), Q(1, 432), Q(1, 486)};
    EXPECT_EQ(absolute(j), (AbsoluteInvariants<Q>{Q(1), Q(0), Q(1)}));
    EXPECT_EQ(from_absolute(AbsoluteInvariants<Q>{Q(1), Q(0), Q(1)}), j);
    EXPECT_THROW(absolute(IgusaInvariants<Q>{Q(0), Q(1), Q(1), Q(1)}), AbsoluteUndefined);
    EXPECT_EQ(a_invariants(IgusaInvariants<Q>{Q(0), Q(1), Q(1), Q(1)}), (AInvariants<Q>{Q(1), Q(1)}));
    EXPECT_THROW(a_invariants(IgusaInvariants<Q>{Q(0), Q(0), Q(1), Q(1)}), AUndefined);
}

TEST(Absolute, FromAbsoluteRoundTrips) {
    std::mt19937_64 rng(107);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 50);
    for (int trial = 0; trial < 100; ++trial) {
        const AbsoluteInvariants<Q> v{Q(num(rng), den(rng)), Q(num(rng), den(rng)), Q(num(rng), den(rng))};
        EXPECT_EQ(absolute(from_absolute(v)), v);
    }
}

TEST(Absolute, InvariantUnderRescaling) {
    const IgusaInvariants<Q> j{Q(3), Q(-7, 2), Q(5), Q(11, 13)};
    EXPECT_EQ(absolute(rescale(j, Q(-5, 3))), absolute(j));
    EXPECT_EQ(a_invariants(rescale(j, Q(7))), a_invariants(j));
    EXPECT_TRUE(weighted_projective_equal(rescale(j, Q(2, 9)), j));
    EXPECT_FALSE(weighted_projective_equal(IgusaInvariants<Q>{Q(3), Q(1), Q(5), Q(1)}, j));
}

TEST(IsoEquivalent, ScaledAndNormalizedForms) {
    const auto c = GenusTwoCurve<Q>::from_leading_first({100, 0, 0, 100, 0, 0, 27});
    EXPECT_TRUE(iso_equivalent(c, GenusTwoCurve<Q>::from_leading_first({1, 0, 0, 1, 0, 0, Q(27, 100)})));
    EXPECT_TRUE(iso_equivalent(c, GenusTwoCurve<Q>(c.sextic().scale(Q(4)))));
    EXPECT_FALSE(iso_equivalent(c, GenusTwoCurve<Q>::from_leading_first({1, 0, 0, 0, 0, 0, 1})));
}

TEST(IsoEquivalent, JTwoZeroBoundaryIsNeverCrossed) {
    const IgusaInvariants<Q> zero{Q(0), Q(1), Q(2), Q(3)};
    const IgusaInvariants<Q> nonzero{Q(1), Q(1), Q(2), Q(3)};
    EXPECT_FALSE(compare_invariants(zero, nonzero).equivalent);
    const auto same = compare_invariants(zero, rescale(zero, Q(5)));
    EXPECT_TRUE(same.equivalent);
    EXPECT_EQ(same.method, IsoMethod::a_invariants);
    const auto flagged = compare_invariants(IgusaInvariants<Q>{Q(0), Q(0), Q(2), Q(3)}, IgusaInvariants<Q>{Q(0), Q(0), Q(2), Q(3)});
    EXPECT_TRUE(flagged.fallback_flagged);
    EXPECT_EQ(flagged.method, IsoMethod::weighted_projective);
}

TEST(InvariantsIo, CurveJsonAndList) {
    const auto c = curve_from_list("100,0,0,100,0,0,27");
    EXPECT_EQ(to_json(c).dump(), R"({"a0":"27","a1":"0","a2":"0","a3":"100","a4":"0","a5":"0","a6":"100"})");
    EXPECT_EQ(curve_from_json(to_json(c)).sextic(), c.sextic());
    EXPECT_THROW(curve_from_list("1,2,3"), ParseError);
    EXPECT_THROW(curve_from_json(nlohmann::json::parse(R"({"a7":"1"})")), ParseError);
    const auto j = invariants_json(igusa(c));
    EXPECT_EQ(j.at("i").at(0), "102789/12005");
    EXPECT_TRUE(invariants_json(IgusaInvariants<Q>{Q(0), Q(1), Q(1), Q(1)}).at("i").is_null());
}
