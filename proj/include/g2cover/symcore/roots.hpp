#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <set>
#include <vector>

#include "g2cover/errors.hpp"
#include "g2cover/symcore/complex.hpp"
#include "g2cover/symcore/unipoly.hpp"

namespace g2cover {

inline UniPoly<Complex> to_complex(const QPoly& f, mpfr_prec_t bits = kDefaultPrecisionBits) {
    return f.map([bits](const Rational& c) { return Complex(c, bits); });
}

/// All complex roots of a square-free rational polynomial, by simultaneous
/// Aberth–Ehrlich iteration followed by Newton polishing at `bits` precision.
inline std::vector<Complex> complex_roots(const QPoly& f, mpfr_prec_t bits = kDefaultPrecisionBits) {
    if (f.is_zero() || f.deg() < 1) throw UndefinedDecomposition("roots of a constant polynomial");
    const int n = f.deg();
    const auto p = to_complex(f, bits);
    const auto dp = p.derivative();

    // Cauchy bound 1 + max |a_i / a_n| for the starting circle.
    Rational bound(0);
    for (int i = 0; i < n; ++i) bound = std::max(bound, (f[static_cast<std::size_t>(i)] / f.leading()).abs());
    const BigFloat radius = BigFloat(bound + Rational(1), bits) / BigFloat(2L, bits);
    const BigFloat two_pi = BigFloat(2L, bits) * atan2(BigFloat(0L, bits), BigFloat(-1L, bits));

    std::vector<Complex> z;
    for (int k = 0; k < n; ++k) {
        // Offset angle breaks symmetry with real-axis roots.
        const BigFloat theta = two_pi * BigFloat(Rational(4 * k + 1, 4 * n), bits) + BigFloat(Rational(1, 7), bits);
        z.push_back(Complex::polar(radius, theta));
    }

    const BigFloat tol = BigFloat::exp2(-static_cast<long>(bits) + 16, bits);
    for (int iter = 0; iter < 2000; ++iter) {
        BigFloat worst(bits);
        for (int k = 0; k < n; ++k) {
            const Complex pk = p(z[static_cast<std::size_t>(k)]);
            const Complex dk = dp(z[static_cast<std::size_t>(k)]);
            if (pk.is_zero()) continue;
            const Complex w = pk / dk;
            Complex s(bits);
            for (int j = 0; j < n; ++j)
                if (j != k) s += Complex(1) / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
            const Complex step = w / (Complex(1) - w * s);
            z[static_cast<std::size_t>(k)] -= step;
            const BigFloat mag = abs(z[static_cast<std::size_t>(k)]);
            const BigFloat rel = abs(step) / (mag.is_zero() ? BigFloat(1L, bits) : mag);
            if (rel > worst) worst = rel;
        }
        if (!(worst > tol)) break;
    }
    for (auto& r : z) {
        for (int i = 0; i < 4; ++i) {
            const Complex d = dp(r);
            if (d.is_zero()) break;
            r -= p(r) / d;
        }
    }
    return z;
}

/// Rational roots of a rational polynomial (rational-root theorem on the
/// primitive integer multiple). Returned sorted and without repetition.
inline std::vector<Rational> rational_roots(const QPoly& f) {
    if (f.is_zero()) throw UndefinedDecomposition("rational roots of the zero polynomial");
    mpz_class lcm_den = 1;
    for (const auto& c : f.coeffs()) lcm_den = lcm(lcm_den, c.den());
    std::vector<mpz_class> ints;
    for (const auto& c : f.coeffs()) ints.push_back(c.num() * (lcm_den / c.den()));

    std::set<Rational> found;
    std::size_t low = 0;
    while (low < ints.size() && ints[low] == 0) ++low;
    if (low > 0) found.insert(Rational(0));
    if (ints.size() - low <= 1) return {found.begin(), found.end()};

    auto divisors = [](mpz_class v) {
        v = abs(v);
        std::vector<mpz_class> ds;
        for (mpz_class d = 1; d * d <= v; ++d) {
            if (v % d == 0) {
                ds.push_back(d);
                if (d * d != v) ds.push_back(v / d);
            }
        }
        return ds;
    };
    const auto ps = divisors(ints[low]);
    const auto qs = divisors(ints.back());
    const QPoly g(std::vector<Rational>(f.coeffs().begin() + static_cast<long>(low), f.coeffs().end()), f.var());
    for (const auto& pn : ps)
        for (const auto& qd : qs)
            for (int s : {1, -1}) {
                const Rational cand(mpz_class(s * pn), qd);
                if (g(cand).is_zero()) found.insert(cand);
            }
    return {found.begin(), found.end()};
}

}  // namespace g2cover
