#pragma once

#include <string>
#include <vector>

#include "g2cover/invariants/igusa.hpp"
#include "g2cover/symcore/rational.hpp"

// Rational points of the degenerate degree-4 locus and the curves realizing
// them, plus one-parameter families on the D12, D8 and two-parameter family
// on the V4 automorphism loci.

namespace g2cover {

struct KnownPoint {
    std::string label;
    AbsoluteInvariants<Rational> i;
    bool on_L2, on_D12, on_D8, on_L4deg;
};

struct KnownCurve {
    std::string label;
    GenusTwoCurve<Rational> curve;
    AbsoluteInvariants<Rational> expected;
};

namespace detail {

inline AbsoluteInvariants<Rational> triple(const char* i1, const char* i2, const char* i3) {
    return {Rational::parse(i1), Rational::parse(i2), Rational::parse(i3)};
}

inline GenusTwoCurve<Rational> sextic_from_strings(const std::vector<const char*>& a6_to_a0) {
    std::vector<Rational> c;
    for (const char* s : a6_to_a0) c.push_back(Rational::parse(s));
    return GenusTwoCurve<Rational>::from_leading_first(c);
}

}  // namespace detail

/// The four rational points solving the degenerate-locus system; only the
/// first has automorphism group containing D12.
inline const std::vector<KnownPoint>& known_points() {
    static const std::vector<KnownPoint> points = {
        {"point1", detail::triple("102789/12005", "-73594737/2941225", "531441/28247524900000"), true, true, false, true},
        {"point2", detail::triple("66357/9245", "-892323/46225", "7776/459401384375"), true, false, false, true},
        {"point3", detail::triple("235629/1156805", "-28488591/214008925", "53747712/80459143207503125"), true, false,
         false, true},
        {"point4",
         detail::triple("1078818669/383775605", "-77466710644803/16811290377025",
                        "1356226634181762/161294078381836186878125"),
         true, false, false, true},
    };
    return points;
}

/// Curves over Q for the four points: the D12 curve and three with V4.
inline const std::vector<KnownCurve>& known_curves() {
    static const std::vector<KnownCurve> curves = {
        {"d12", detail::sextic_from_strings({"100", "0", "0", "100", "0", "0", "27"}), known_points()[0].i},
        {"v4_case1",
         detail::sextic_from_strings({"1432139730944", "34271993769359360", "267643983706245216000",
                                      "1267919172426862313120000", "23945558970224886213835350000",
                                      "274330666162649153793599380475000",
                                      "1025623291911204380755800513010015625"}),
         known_points()[1].i},
        {"v4_case2",
         detail::sextic_from_strings({"41871441565158964373437321767075023159296",
                                      "156000358914872008908017177004915818496000",
                                      "8994429753268252328699175313122263040000000",
                                      "17857537403821561579480053574533120000000000",
                                      "775018151562516781352226536816640000000000000",
                                      "1158249382368691011679236899376000000000000000",
                                      "26787527679468514273175655200959888458251953125"}),
         known_points()[2].i},
        {"v4_case3",
         detail::sextic_from_strings({"9224408124038149308993379217084884661375653227720704",
                                      "3730758767668984877725129604888152322035364826481920000",
                                      "1138523283803439912403861944281998092255345913017540000000",
                                      "189425049047781784623261895238590658674841204883457500000000",
                                      "76212520567614919095032412154382218443932939483817128906250000",
                                      "16717294192073070547056921515101088692898208834624180908203125000",
                                      "2766888989045448736067444316860942956954296161559210811614990234375"}),
         known_points()[3].i},
    };
    return curves;
}

/// a-invariants shared by the degenerate covers with J2 = 0.
inline AInvariants<Rational> j2_zero_a_invariants() {
    return {Rational::parse("55476394831/20"), Rational::parse("522665/1022825924657928")};
}

/// Res_b(J2(b), J4(b)) over the degenerate family, as stated.
inline Rational degenerate_resultant_constant() {
    return Rational::parse("11784978051522395707646672896000000000000/42391158275216203514294433201");
}

/// y^2 = x^6 + x^3 + t: automorphism group contains D12.
template <CoefficientField F>
GenusTwoCurve<F> d12_family_curve(const F& t) {
    const F one = lift(Rational(1), t), zero = lift(Rational(0), t);
    return GenusTwoCurve<F>(UniPoly<F>({t, zero, zero, one, zero, zero, one}, "x"));
}

/// y^2 = x^5 + x^3 + t x: automorphism group contains D8.
template <CoefficientField F>
GenusTwoCurve<F> d8_family_curve(const F& t) {
    const F one = lift(Rational(1), t), zero = lift(Rational(0), t);
    return GenusTwoCurve<F>(UniPoly<F>({zero, t, zero, one, zero, one}, "x"));
}

/// y^2 = x^6 + a x^4 + c x^2 + 1: automorphism group contains V4.
template <CoefficientField F>
GenusTwoCurve<F> v4_family_curve(const F& a, const F& c) {
    const F one = lift(Rational(1), a), zero = lift(Rational(0), a);
    return GenusTwoCurve<F>(UniPoly<F>({one, zero, c, zero, a, zero, one}, "x"));
}

}  // namespace g2cover
