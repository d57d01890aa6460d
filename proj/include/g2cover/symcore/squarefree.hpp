#pragma once

#include <utility>
#include <vector>

#include "g2cover/errors.hpp"
#include "g2cover/symcore/gcd.hpp"
#include "g2cover/symcore/unipoly.hpp"

namespace g2cover {

template <CoefficientField F>
struct SquarefreePart {
    UniPoly<F> factor;  // monic, square-free
    int multiplicity;
};

/// f = leading * prod factor_i^multiplicity_i, factors pairwise coprime and
/// square-free, multiplicities strictly increasing.
template <CoefficientField F>
struct SquarefreeDecomposition {
    F leading;
    std::vector<SquarefreePart<F>> parts;

    UniPoly<F> reassemble(const std::string& var) const {
        UniPoly<F> acc = UniPoly<F>::constant(leading, var);
        for (const auto& p : parts)
            for (int i = 0; i < p.multiplicity; ++i) acc = acc * p.factor;
        return acc;
    }
};

/// Yun's square-free decomposition (characteristic zero).
template <CoefficientField F>
SquarefreeDecomposition<F> squarefree_decompose(const UniPoly<F>& f) {
    if (f.is_zero()) throw UndefinedDecomposition("square-free decomposition of the zero polynomial");
    SquarefreeDecomposition<F> out{f.leading(), {}};
    if (f.deg() == 0) return out;
    const UniPoly<F> g = monic(f);
    const UniPoly<F> dg = g.derivative();
    UniPoly<F> a = gcd(g, dg);
    UniPoly<F> b = divide_exact(g, a);
    UniPoly<F> c = divide_exact(dg, a);
    UniPoly<F> d = c - b.derivative();
    for (int i = 1; b.deg() > 0; ++i) {
        a = gcd(b, d);
        if (a.deg() > 0) out.parts.push_back({a, i});
        b = divide_exact(b, a);
        c = divide_exact(d, a);
        d = c - b.derivative();
    }
    return out;
}

/// Product of the distinct monic irreducible-power-free parts (the radical).
template <CoefficientField F>
UniPoly<F> squarefree_part(const UniPoly<F>& f) {
    auto dec = squarefree_decompose(f);
    UniPoly<F> acc = UniPoly<F>::constant(lift(Rational(1), f.leading()), f.var());
    for (const auto& p : dec.parts) acc = acc * p.factor;
    return acc;
}

}  // namespace g2cover
