#pragma once

#include <array>
#include <string>
#include <vector>

#include "g2cover/errors.hpp"
#include "g2cover/invariants/igusa.hpp"
#include "g2cover/symcore/complex.hpp"
#include "g2cover/symcore/ratfunc.hpp"
#include "g2cover/symcore/roots.hpp"
#include "g2cover/symcore/unipoly.hpp"

// The degenerate degree-4 cover phi(x) = c x^2 (x^2 + a x + b), totally
// ramified over infinity, with fibers over 0, 1, lambda each holding two
// Weierstrass points. Everything is a function of the single parameter b.

namespace g2cover {

/// b (b-4) (b-2) (b-1) (b+2); the family is defined where this is nonzero.
template <CoefficientRing F>
F delta_c(const F& b) {
    const auto n = [&](long v) { return lift(Rational(v), b); };
    return b * (b - n(4)) * (b - n(2)) * (b - n(1)) * (b + n(2));
}

/// (b-4)^2 (b-2)^6 b^6 (b+2)^2 / (65536 (b-1)^4), as displayed.
inline RatFunc delta_e_displayed() {
    const QPoly b = qpoly({0, 1}, "b");
    const auto pw = [](const QPoly& f, int e) {
        QPoly r = QPoly::constant(Rational(1), f.var());
        for (int i = 0; i < e; ++i) r = r * f;
        return r;
    };
    const QPoly num = pw(qpoly({-4, 1}, "b"), 2) * pw(qpoly({-2, 1}, "b"), 6) * pw(b, 6) * pw(qpoly({2, 1}, "b"), 2);
    const QPoly den = QPoly::constant(Rational(65536), "b") * pw(qpoly({-1, 1}, "b"), 4);
    return RatFunc(num, den);
}

/// lambda(b) = b^3 (4 - b) / (16 (b - 1)).
template <CoefficientField F>
F degenerate_lambda(const F& b) {
    const auto n = [&](long v) { return lift(Rational(v), b); };
    return b * b * b * (n(4) - b) / (n(16) * (b - n(1)));
}

template <CoefficientField F>
struct CoverDegenerate {
    F b, a, c, p, q, r, s, t, lambda;
    UniPoly<F> sextic;  // product of the three displayed quadratic factors
    UniPoly<F> phi;     // c x^2 (x^2 + a x + b)

    GenusTwoCurve<F> curve() const { return GenusTwoCurve<F>(sextic); }
};

namespace detail {

template <CoefficientField F>
UniPoly<F> quadratic(const F& c0, const F& c1) {
    return UniPoly<F>({c0, c1, lift(Rational(1), c0)}, "x");
}

template <CoefficientField F>
void require_admissible_b(const F& b) {
    if (is_zero(delta_c(b))) {
        throw DegenerateParameters("Δ_C vanishes: b(b-4)(b-2)(b-1)(b+2) = 0");
    }
}

}  // namespace detail

/// Sextic of the degenerate family exactly as displayed, factor by factor:
/// ((1-b)/3 + 2(1-b)/3 x + x^2)(b(b-4)/12 + (b-4)/3 x + x^2)(b - 2(b+2)/3 x + x^2).
template <CoefficientField F>
UniPoly<F> degenerate_sextic_displayed(const F& b) {
    const auto n = [&](long v, long d = 1) { return lift(Rational(v, d), b); };
    const F one_minus_b = n(1) - b;
    return detail::quadratic(one_minus_b / n(3), n(2, 3) * one_minus_b) *
           detail::quadratic(n(1, 12) * (b - n(4)) * b, n(1, 3) * (b - n(4))) *
           detail::quadratic(b, n(-2, 3) * (b + n(2)));
}

/// Builds the cover for parameter b and checks, in exact arithmetic, that
///   phi - 1      = c (x-1)^2 (x^2 + p x + q),
///   phi - lambda = c (x-r)^2 (x^2 + s x + t),
///   displayed sextic = (x^2+px+q)(x^2+sx+t)(x^2+ax+b).
/// A failed identity raises StructureError. Over inexact fields the checks
/// are left to the caller, who can compare residuals against a tolerance.
template <CoefficientField F>
CoverDegenerate<F> degenerate_family(const F& b) {
    detail::require_admissible_b(b);
    const auto n = [&](long v, long d = 1) { return lift(Rational(v, d), b); };
    CoverDegenerate<F> cd{b,
                          n(-2, 3) * (b + n(2)),
                          n(3) / (b - n(1)),
                          n(2, 3) * (n(1) - b),
                          (n(1) - b) / n(3),
                          b / n(2),
                          (b - n(4)) / n(3),
                          b * (b - n(4)) / n(12),
                          degenerate_lambda(b),
                          degenerate_sextic_displayed(b),
                          UniPoly<F>("x")};
    const UniPoly<F> x2 = UniPoly<F>::monomial(n(1), 2, "x");
    cd.phi = x2 * detail::quadratic(cd.b, cd.a).scale(cd.c);
    if constexpr (ring_traits<F>::is_exact) {
        const UniPoly<F> one = UniPoly<F>::constant(n(1), "x");
        const UniPoly<F> xm1 = UniPoly<F>({n(-1), n(1)}, "x");
        const UniPoly<F> xmr = UniPoly<F>({-cd.r, n(1)}, "x");
        if (!(cd.phi - one == (xm1 * xm1 * detail::quadratic(cd.q, cd.p)).scale(cd.c)))
            throw StructureError("phi - 1 != c (x-1)^2 (x^2+px+q)");
        if (!(cd.phi - UniPoly<F>::constant(cd.lambda, "x") == (xmr * xmr * detail::quadratic(cd.t, cd.s)).scale(cd.c)))
            throw StructureError("phi - lambda != c (x-r)^2 (x^2+sx+t)");
        const UniPoly<F> product =
            detail::quadratic(cd.q, cd.p) * detail::quadratic(cd.t, cd.s) * detail::quadratic(cd.b, cd.a);
        if (!(product == cd.sextic)) throw StructureError("displayed sextic differs from the product of the fiber quadratics");
    }
    return cd;
}

/// j = 256 (lambda^2 - lambda + 1)^3 / (lambda^2 (lambda - 1)^2).
template <CoefficientField F>
F legendre_j(const F& lambda) {
    const auto n = [&](long v) { return lift(Rational(v), lambda); };
    const F lm1 = lambda - n(1);
    if (is_zero(lambda) || is_zero(lm1)) throw SingularCurve("Legendre curve is singular for lambda in {0, 1}");
    const F u = lambda * lambda - lambda + n(1);
    return n(256) * u * u * u / (lambda * lambda * lm1 * lm1);
}

template <CoefficientField F>
struct EllipticLegendre {
    F lambda;
    F j;
    explicit EllipticLegendre(F l) : lambda(std::move(l)), j(legendre_j(lambda)) {}
};

/// The integer sextic 4b^6 - 24b^5 - 1227b^4 + 5068b^3 - 4908b^2 - 384b + 256
/// whose roots are the parameters with J2 = 0 (J2 is -5/486 times it).
inline QPoly j2_zero_polynomial() { return qpoly({256, -384, -4908, 5068, -1227, -24, 4}, "b"); }

/// J2 of the degenerate family as displayed: -5/486 times j2_zero_polynomial.
inline QPoly j2_displayed() { return j2_zero_polynomial().scale(Rational(-5) / Rational(486)); }

/// J4 of the degenerate family as displayed.
inline QPoly j4_displayed() {
    return qpoly({65536, -196608, -307200, 1218560, -834288, -294432, 456600, -73608, -52143, 19040, -1200, -192, 16}, "b")
        .scale(Rational(1) / Rational(5184));
}

/// Displayed candidate b = (2 alpha + sqrt(429 alpha^2 + 60123 alpha + beta)) / (2 alpha)
/// with alpha^3 = 2837051 + 9408 i sqrt 5 and beta = 8511153 + 28224 i sqrt 5,
/// for each of the three cube roots and both square roots.
inline std::vector<Complex> j2_zero_closed_form_branches(mpfr_prec_t bits = kDefaultPrecisionBits) {
    const BigFloat sqrt5 = sqrt(BigFloat(5L, bits));
    const Complex alpha_cubed(BigFloat(2837051L, bits), BigFloat(9408L, bits) * sqrt5);
    const Complex beta(BigFloat(8511153L, bits), BigFloat(28224L, bits) * sqrt5);
    const Complex w = Complex::omega(bits);
    std::vector<Complex> out;
    Complex alpha = cbrt(alpha_cubed);
    for (int k = 0; k < 3; ++k) {
        const Complex radicand = Complex(Rational(429), bits) * alpha * alpha + Complex(Rational(60123), bits) * alpha + beta;
        const Complex root = sqrt(radicand);
        const Complex two_alpha = Complex(Rational(2), bits) * alpha;
        out.push_back((two_alpha + root) / two_alpha);
        out.push_back((two_alpha - root) / two_alpha);
        alpha = alpha * w;
    }
    return out;
}

/// Numerical roots of j2_zero_polynomial at the given precision.
inline std::vector<Complex> b_for_j2_zero(mpfr_prec_t bits = kDefaultPrecisionBits) {
    return complex_roots(j2_zero_polynomial(), bits);
}

}  // namespace g2cover
