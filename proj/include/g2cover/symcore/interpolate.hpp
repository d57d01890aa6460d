#pragma once

#include <vector>

#include "g2cover/errors.hpp"
#include "g2cover/symcore/unipoly.hpp"

namespace g2cover {

/// The polynomial of degree < n through n points with distinct abscissae,
/// by Newton divided differences.
template <CoefficientField F>
UniPoly<F> interpolate(const std::vector<F>& xs, const std::vector<F>& ys, const std::string& var = "x") {
    if (xs.size() != ys.size() || xs.empty()) throw ArityError("interpolate needs matching nonempty point lists");
    const std::size_t n = xs.size();
    std::vector<F> c = ys;
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n - 1; i >= k; --i) {
            const F dx = xs[i] - xs[i - k];
            if (is_zero(dx)) throw DivisionError("interpolate needs distinct abscissae");
            c[i] = (c[i] - c[i - 1]) / dx;
        }
    const F one = lift(Rational(1), xs.front());
    UniPoly<F> p = UniPoly<F>::constant(c[n - 1], var);
    for (std::size_t i = n - 1; i-- > 0;) p = p * UniPoly<F>({-xs[i], one}, var) + UniPoly<F>::constant(c[i], var);
    return p;
}

}  // namespace g2cover
