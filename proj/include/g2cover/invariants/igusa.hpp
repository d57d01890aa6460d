#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2cover/errors.hpp"
#include "g2cover/invariants/transvectant.hpp"
#include "g2cover/symcore/resultant.hpp"
#include "g2cover/symcore/unipoly.hpp"

namespace g2cover {

/// (J2, J4, J6, J10) with weights 2, 4, 6, 10.
template <CoefficientRing R>
struct IgusaInvariants {
    R J2, J4, J6, J10;

    std::array<R, 4> as_array() const { return {J2, J4, J6, J10}; }
    friend bool operator==(const IgusaInvariants&, const IgusaInvariants&) = default;
};

inline constexpr std::array<int, 4> kIgusaWeights{2, 4, 6, 10};

/// Igusa invariants of the binary sextic sum a[i] x^i z^(6-i), as fixed
/// integer combinations of the Clebsch invariants. Works over any ring in
/// which the rational constants embed, including polynomial rings, so the
/// same code yields numbers and symbolic families.
template <CoefficientRing R>
IgusaInvariants<R> igusa_from_coefficients(const std::array<R, 7>& a) {
    const auto [A, B, C, D] = clebsch_invariants(BinaryForm<R>(6, std::vector<R>(a.begin(), a.end())));
    const auto k = [&](long v) { return lift(Rational(v), A); };
    const R A2 = A * A;
    const R A3 = A2 * A;
    return {
        k(-120) * A,
        k(-720) * A2 + k(6750) * B,
        k(8640) * A3 - k(108000) * A * B + k(202500) * C,
        k(-62208) * A3 * A2 + k(972000) * A3 * B + k(1620000) * A2 * C - k(3037500) * A * B * B -
            k(6075000) * B * C - k(4556250) * D,
    };
}

/// y^2 = f(x) with f of degree 5 or 6 and no repeated roots. A quintic is
/// read as a sextic with a simple root at infinity.
template <CoefficientField F>
class GenusTwoCurve {
public:
    explicit GenusTwoCurve(UniPoly<F> sextic) : f_(std::move(sextic)) {
        if (f_.is_zero() || f_.deg() < 5 || f_.deg() > 6)
            throw NotGenusTwo("sextic must have degree 5 or 6, got " + (f_.is_zero() ? std::string("-inf") : std::to_string(f_.deg())));
        if (is_zero(discriminant(f_))) throw NotGenusTwo("sextic has a repeated root: " + f_.str());
    }

    /// Coefficients listed from a6 down to a0, as written on the command line.
    static GenusTwoCurve from_leading_first(const std::vector<F>& a6_to_a0) {
        if (a6_to_a0.size() != 7) throw ArityError("a sextic needs 7 coefficients a6..a0");
        return GenusTwoCurve(UniPoly<F>(std::vector<F>(a6_to_a0.rbegin(), a6_to_a0.rend()), "x"));
    }

    const UniPoly<F>& sextic() const { return f_; }

    std::array<F, 7> coefficients() const {
        const F zero = lift(Rational(0), f_.leading());
        return {f_.coeff(0, zero), f_.coeff(1, zero), f_.coeff(2, zero), f_.coeff(3, zero),
                f_.coeff(4, zero), f_.coeff(5, zero), f_.coeff(6, zero)};
    }

private:
    UniPoly<F> f_;
};

template <CoefficientField F>
IgusaInvariants<F> igusa(const GenusTwoCurve<F>& c) {
    return igusa_from_coefficients(c.coefficients());
}

template <CoefficientRing R>
struct AbsoluteInvariants {
    R i1, i2, i3;
    std::array<R, 3> as_array() const { return {i1, i2, i3}; }
    friend bool operator==(const AbsoluteInvariants&, const AbsoluteInvariants&) = default;
};

template <CoefficientRing R>
struct AInvariants {
    R a1, a2;
    friend bool operator==(const AInvariants&, const AInvariants&) = default;
};

/// i1 = 144 J4/J2^2, i2 = -1728 (J2 J4 - 3 J6)/J2^3, i3 = 486 J10/J2^5.
template <CoefficientField F>
AbsoluteInvariants<F> absolute(const IgusaInvariants<F>& j) {
    if (is_zero(j.J2)) throw AbsoluteUndefined("absolute invariants need J2 != 0");
    const auto k = [&](long v) { return lift(Rational(v), j.J2); };
    const F J2sq = j.J2 * j.J2;
    const F J2cu = J2sq * j.J2;
    return {k(144) * j.J4 / J2sq, k(-1728) * (j.J2 * j.J4 - k(3) * j.J6) / J2cu, k(486) * j.J10 / (J2cu * J2sq)};
}

/// a1 = J4 J6 / J10, a2 = J10 J6 / J4^4; the J2 = 0 substitute for absolute().
template <CoefficientField F>
AInvariants<F> a_invariants(const IgusaInvariants<F>& j) {
    if (is_zero(j.J4) || is_zero(j.J10)) throw AUndefined("a-invariants need J4 != 0 and J10 != 0");
    const F J4sq = j.J4 * j.J4;
    return {j.J4 * j.J6 / j.J10, j.J10 * j.J6 / (J4sq * J4sq)};
}

/// The representative with J2 = 1 of the class with absolute invariants i.
template <CoefficientField F>
IgusaInvariants<F> from_absolute(const AbsoluteInvariants<F>& i) {
    const auto k = [&](long v) { return lift(Rational(v), i.i1); };
    const F J4 = i.i1 / k(144);
    return {k(1), J4, (i.i2 / k(1728) + J4) / k(3), i.i3 / k(486)};
}

/// J_w -> c^w J_w.
template <CoefficientRing R>
IgusaInvariants<R> rescale(const IgusaInvariants<R>& j, const R& c) {
    const R c2 = c * c;
    const R c4 = c2 * c2;
    const R c6 = c4 * c2;
    return {c2 * j.J2, c4 * j.J4, c6 * j.J6, c6 * c4 * j.J10};
}

/// Equality in weighted projective space with weights (2, 4, 6, 10). All
/// weights are even, so it suffices to find u = c^2 for weights (1, 2, 3, 5);
/// that happens exactly when the zero patterns agree and
/// J'_a^(w_b) J_b^(w_a) = J'_b^(w_a) J_a^(w_b) for every pair of nonzero slots.
template <CoefficientRing R>
bool weighted_projective_equal(const IgusaInvariants<R>& x, const IgusaInvariants<R>& y) {
    const auto a = x.as_array();
    const auto b = y.as_array();
    constexpr std::array<unsigned, 4> w{1, 2, 3, 5};
    bool any = false;
    for (std::size_t s = 0; s < 4; ++s) {
        if (is_zero(a[s]) != is_zero(b[s])) return false;
        any = any || !is_zero(a[s]);
    }
    if (!any) return true;
    for (std::size_t s = 0; s < 4; ++s) {
        if (is_zero(a[s])) continue;
        for (std::size_t t = s + 1; t < 4; ++t) {
            if (is_zero(a[t])) continue;
            if (!(pow(b[s], w[t]) * pow(a[t], w[s]) == pow(b[t], w[s]) * pow(a[s], w[t]))) return false;
        }
    }
    return true;
}

enum class IsoMethod { absolute, a_invariants, weighted_projective };

inline const char* to_string(IsoMethod m) {
    switch (m) {
        case IsoMethod::absolute: return "absolute";
        case IsoMethod::a_invariants: return "a-invariants";
        case IsoMethod::weighted_projective: return "weighted-projective";
    }
    return "?";
}

struct IsoComparison {
    bool equivalent;
    IsoMethod method;
    // Set when both curves have J2 = 0 and J4 or J10 vanishes, where the
    // a-invariant criterion says nothing and the J-tuples are compared instead.
    bool fallback_flagged = false;
};

/// Compares two curves' isomorphism classes through their invariants.
/// Curves on opposite sides of J2 = 0 are never equivalent.
template <CoefficientField F>
IsoComparison compare_invariants(const IgusaInvariants<F>& x, const IgusaInvariants<F>& y) {
    const bool zx = is_zero(x.J2), zy = is_zero(y.J2);
    if (zx != zy) return {false, IsoMethod::absolute};
    if (!zx) return {absolute(x) == absolute(y), IsoMethod::absolute};
    const bool a_defined = !is_zero(x.J4) && !is_zero(x.J10) && !is_zero(y.J4) && !is_zero(y.J10);
    if (a_defined) return {a_invariants(x) == a_invariants(y), IsoMethod::a_invariants};
    return {weighted_projective_equal(x, y), IsoMethod::weighted_projective, true};
}

template <CoefficientField F>
IsoComparison compare_curves(const GenusTwoCurve<F>& c1, const GenusTwoCurve<F>& c2) {
    return compare_invariants(igusa(c1), igusa(c2));
}

template <CoefficientField F>
bool iso_equivalent(const GenusTwoCurve<F>& c1, const GenusTwoCurve<F>& c2) {
    return compare_curves(c1, c2).equivalent;
}

}  // namespace g2cover
