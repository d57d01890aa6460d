#pragma once

#include <array>
#include <string>
#include <vector>

#include "g2cover/errors.hpp"
#include "g2cover/invariants/igusa.hpp"
#include "g2cover/symcore/gcd.hpp"
#include "g2cover/symcore/multipoly.hpp"
#include "g2cover/symcore/ratfunc.hpp"
#include "g2cover/symcore/resultant.hpp"
#include "g2cover/symcore/squarefree.hpp"

// Degree-4 covers phi(x) = k (x-1)^2 (x^2+b) / (x-p)^2 of the projective line
// with ramification (2),(2),(2),(2)^2,(2), and the genus-2 curves they induce.

namespace g2cover {

inline const std::string kLambda = "lambda";

/// Coefficients (lambda^0 .. lambda^3) of the cubic whose roots are the three
/// branch points other than 0 and infinity.
template <CoefficientRing R>
std::array<R, 4> branch_cubic_coefficients(const R& p, const R& b, const R& k) {
    const auto n = [&](long v) { return lift(Rational(v), p); };
    const R p2 = p * p, p3 = p2 * p, p4 = p2 * p2;
    const R b2 = b * b, b3 = b2 * b, b4 = b2 * b2;
    const R k2 = k * k, k3 = k2 * k;
    return {
        k3 * b + k3 * b4 + n(3) * k3 * b2 + n(3) * k3 * b3,
        n(-3) * k2 * b + n(21) * k2 * b2 - n(36) * k2 * b2 * p - n(3) * k2 * b3 - n(20) * k2 * b * p2 +
            n(8) * k2 * b2 * p2 + n(18) * k2 * b * p - k2 * p2,
        n(2) * k * p2 - n(18) * k * b * p + n(16) * k * p4 - n(16) * k * p3 + n(3) * k * b2 + n(3) * k * b +
            n(20) * k * b * p2,
        -b - p2,
    };
}

/// Closed-form coefficients a0..a6 of the genus-2 curve of the (p, b) cover.
template <CoefficientRing R>
std::array<R, 7> generic_closed_coefficients(const R& p, const R& b) {
    const auto n = [&](long v) { return lift(Rational(v), p); };
    const R p2 = p * p, p3 = p2 * p, p4 = p2 * p2;
    const R b2 = b * b;
    return {
        (-b2 + n(1) - n(11) * b) * p4 + (n(14) * b - n(2) * b2) * p3 - n(2) * b * p2 + n(2) * b2 * p + b2,
        (n(14) * b + n(2)) * p4 + (n(6) * b2 - n(4) + n(4) * b) * p3 + (n(-24) * b + n(6) * b2) * p2 +
            (n(-6) * b2 + n(4) * b) * p - n(6) * b2,
        (n(-11) - n(4) * b) * p4 + (n(-20) * b + n(6)) * p3 + (n(4) + n(13) * b - n(12) * b2) * p2 + n(10) * p * b +
            n(12) * b2,
        n(12) * p4 + (n(4) + n(6) * b) * p3 + (n(-12) + n(12) * b) * p2 + (n(8) * b2 - n(6) * b) * p - n(8) * b -
            n(8) * b2,
        n(-4) * p4 - n(10) * p3 + (n(-5) * b + n(13)) * p2 - n(8) * p * b + n(12) * b,
        n(4) * p3 - n(6) * p2 + n(4) * p * b - n(6) * b,
        p2 + b,
    };
}

namespace detail {

inline void require_generic_params(const Rational& p, const Rational& b, const Rational& k) {
    if (p.is_one()) throw DegenerateParameters("p = 1 puts the double pole on the double zero");
    if (k.is_zero()) throw DegenerateParameters("k = 0 makes the cover constant");
    // x^2 + b must be square-free and prime to (x-1), or the fiber over 0 has
    // a point of index >= 3 and 0 becomes a root of the branch cubic.
    if (b.is_zero()) throw DegenerateParameters("b = 0 makes x^2 + b a square");
    if (b == Rational(-1)) throw DegenerateParameters("b = -1 puts a root of x^2 + b at the double zero x = 1");
    const QPoly num = qpoly({b, 0, 1});  // x^2 + b; (x-1)^2 is coprime to (x-p)^2 once p != 1
    if (!gcd(num, qpoly({-p, 1})).is_constant())
        throw DegenerateParameters("numerator and denominator of phi share the root x = p (p^2 + b = 0)");
}

// k (x-1)^2 (x^2+b) - lambda (x-p)^2 over Q[x, lambda].
inline MultiPoly fiber_numerator(const Rational& p, const Rational& b, const Rational& k) {
    const MultiPoly x = var("x"), l = var(kLambda);
    const MultiPoly xm1 = x - MultiPoly(1), xmp = x - MultiPoly(p);
    return MultiPoly(k) * xm1 * xm1 * (x * x + MultiPoly(b)) - l * xmp * xmp;
}

}  // namespace detail

inline RatFunc phi_generic(const Rational& p, const Rational& b, const Rational& k = Rational(1)) {
    detail::require_generic_params(p, b, k);
    const QPoly xm1 = qpoly({-1, 1});
    const QPoly xmp = qpoly({-p, 1});
    return RatFunc(QPoly::constant(k) * xm1 * xm1 * qpoly({b, 0, 1}), xmp * xmp);
}

/// Numerator of phi(x) - lambda as a polynomial in x over Q[lambda].
inline UniPoly<MultiPoly> fiber_numerator(const Rational& p, const Rational& b, const Rational& k = Rational(1)) {
    detail::require_generic_params(p, b, k);
    return to_univariate(detail::fiber_numerator(p, b, k), "x");
}

inline QPoly branch_cubic(const Rational& p, const Rational& b, const Rational& k = Rational(1)) {
    detail::require_generic_params(p, b, k);
    const auto c = branch_cubic_coefficients(p, b, k);
    if (c[3].is_zero()) throw DegenerateParameters("leading coefficient -b - p^2 of the branch cubic vanishes");
    return QPoly({c[0], c[1], c[2], c[3]}, kLambda);
}

inline QPoly generic_closed_sextic(const Rational& p, const Rational& b) {
    if (p.is_one()) throw DegenerateParameters("p = 1 is excluded");
    const auto a = generic_closed_coefficients(p, b);
    return QPoly(std::vector<Rational>(a.begin(), a.end()), "x");
}

inline GenusTwoCurve<Rational> genus2_generic_closed(const Rational& p, const Rational& b) {
    const QPoly f = generic_closed_sextic(p, b);
    try {
        return GenusTwoCurve<Rational>(f);
    } catch (const NotGenusTwo& e) {
        throw DegenerateParameters(std::string("closed-form sextic is not a genus-2 curve: ") + e.what());
    }
}

struct GenericDerivation {
    QPoly f12;       // Res_lambda(branch cubic, numerator of phi - lambda)
    QPoly sextic;    // multiplicity-1 part, with the leading coefficient of f12 folded in
    QPoly doubled;   // monic part of multiplicity 2
    SquarefreeDecomposition<Rational> decomposition;
};

/// Eliminates lambda between the branch cubic and phi(x) = lambda (k = 1) and
/// splits the degree-12 result into (cubic)^2 * (sextic).
inline GenericDerivation derive_generic(const Rational& p, const Rational& b) {
    const QPoly cubic = branch_cubic(p, b);
    if (discriminant(cubic).is_zero()) throw NonGenericParameters("branch cubic has a repeated root");
    const MultiPoly n = detail::fiber_numerator(p, b, Rational(1));
    const QPoly f12 = resultant(from_univariate(cubic.with_var(kLambda)), n, kLambda).to_qpoly("x");
    auto dec = squarefree_decompose(f12);
    // A point of multiplicity >= 3 means some fiber over a root of the cubic
    // contains a point of index >= 3: a degeneration, not the generic cover.
    for (const auto& part : dec.parts)
        if (part.multiplicity >= 3)
            throw NonGenericParameters("a fiber over a branch point has a point of ramification index >= 3");
    const bool shape_ok = dec.parts.size() == 2 && dec.parts[0].multiplicity == 1 && dec.parts[0].factor.deg() == 6 &&
                          dec.parts[1].multiplicity == 2 && dec.parts[1].factor.deg() == 3;
    if (!shape_ok) {
        std::string shape;
        for (const auto& part : dec.parts)
            shape += "(deg " + std::to_string(part.factor.deg()) + ")^" + std::to_string(part.multiplicity) + " ";
        throw StructureError("degree-12 eliminant does not split as (cubic)^2 (sextic): " + shape);
    }
    const QPoly sextic = dec.parts[0].factor.scale(dec.leading);
    const QPoly doubled = dec.parts[1].factor;
    return {f12, sextic, doubled, std::move(dec)};
}

inline GenusTwoCurve<Rational> genus2_generic_derived(const Rational& p, const Rational& b) {
    return GenusTwoCurve<Rational>(derive_generic(p, b).sextic);
}

/// disc_x(numerator of phi - lambda) divided by the branch cubic.
struct BranchDiscriminant {
    QPoly discriminant;
    QPoly cubic;
    QPoly quotient;   // meaningful only when divisible
    QPoly remainder;
    bool divisible;
};

inline BranchDiscriminant branch_discriminant(const Rational& p, const Rational& b, const Rational& k = Rational(1)) {
    const QPoly cubic = branch_cubic(p, b, k);
    const QPoly disc = discriminant(detail::fiber_numerator(p, b, k), "x").to_qpoly(kLambda).with_var(kLambda);
    auto [q, r] = divmod(disc, cubic);
    const bool ok = r.is_zero();
    return {disc, cubic, q, r, ok};
}

/// Both construction routes for the (p, b) cover and their comparison.
struct CoverGeneric {
    Rational p, b, k;
    RatFunc phi;
    QPoly branch_cubic;
    GenusTwoCurve<Rational> sextic_closed;
    GenusTwoCurve<Rational> sextic_derived;
    bool iso_equivalent;
    // Indices i for which the displayed a_i disagrees with the derived
    // sextic after both are scaled to the same leading coefficient.
    std::vector<int> mismatched_coefficients;
};

inline std::vector<int> mismatched_closed_coefficients(const QPoly& closed, const QPoly& derived) {
    std::vector<int> bad;
    const Rational scale = closed.leading() / derived.leading();
    for (std::size_t i = 0; i < 7; ++i) {
        const Rational c = i < closed.size() ? closed[i] : Rational(0);
        const Rational d = i < derived.size() ? derived[i] * scale : Rational(0);
        if (!(c == d)) bad.push_back(static_cast<int>(i));
    }
    return bad;
}

inline CoverGeneric make_cover_generic(const Rational& p, const Rational& b, const Rational& k = Rational(1)) {
    RatFunc phi = phi_generic(p, b, k);
    QPoly cubic = branch_cubic(p, b, k);
    auto closed = genus2_generic_closed(p, b);
    auto derived = genus2_generic_derived(p, b);
    const bool iso = iso_equivalent(closed, derived);
    auto bad = mismatched_closed_coefficients(closed.sextic(), derived.sextic());
    return {p, b, k, std::move(phi), std::move(cubic), std::move(closed), std::move(derived), iso, std::move(bad)};
}

}  // namespace g2cover
