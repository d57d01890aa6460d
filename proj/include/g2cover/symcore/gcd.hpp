#pragma once

#include <vector>

#include "g2cover/errors.hpp"
#include "g2cover/symcore/unipoly.hpp"

namespace g2cover {

/// Monic gcd over a coefficient field; gcd(f, 0) is monic(f).
template <CoefficientField F>
UniPoly<F> gcd(UniPoly<F> f, UniPoly<F> g) {
    if (f.is_zero() && g.is_zero()) throw UndefinedGcd("gcd of two zero polynomials");
    while (!g.is_zero()) {
        auto r = divmod(f, g).second;
        f = std::move(g);
        g = monic(r);
    }
    return monic(f);
}

/// gcd of a list; zero entries are skipped, an all-zero list is undefined.
template <CoefficientField F>
UniPoly<F> gcd(const std::vector<UniPoly<F>>& polys) {
    std::optional<UniPoly<F>> acc;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        acc = acc ? gcd(*acc, p) : monic(p);
    }
    if (!acc) throw UndefinedGcd("gcd of an all-zero list");
    return *acc;
}

/// Quotient f / g that must be exact; a nonzero remainder is a DivisionError.
template <CoefficientField F>
UniPoly<F> divide_exact(const UniPoly<F>& f, const UniPoly<F>& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) throw DivisionError("polynomial division leaves remainder " + r.str());
    return q;
}

template <CoefficientField F>
bool divides(const UniPoly<F>& d, const UniPoly<F>& f) {
    return divmod(f, d).second.is_zero();
}

}  // namespace g2cover
