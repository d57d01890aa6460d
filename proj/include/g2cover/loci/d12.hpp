#pragma once

#include <array>
#include <optional>
#include <vector>

#include "g2cover/errors.hpp"
#include "g2cover/invariants/igusa.hpp"
#include "g2cover/loci/bank.hpp"
#include "g2cover/symcore/gcd.hpp"
#include "g2cover/symcore/unipoly.hpp"

// Locating a point of the D12 locus on the family y^2 = x^6 + x^3 + t:
// clear denominators in i_k = i_k(t) and look for a common root in t.

namespace g2cover {

inline const std::string kT = "t";

/// The three polynomials in t whose common roots give the members of
/// y^2 = x^6 + x^3 + t with absolute invariants i. The displayed reading of
/// the third has 34992 t^2 where the family requires 34992 t^4.
inline std::array<QPoly, 3> d12_t_polynomials(const AbsoluteInvariants<Rational>& i, Reading r = Reading::corrected) {
    const auto& [i1, i2, i3] = i;
    const auto q = [](std::vector<Rational> c) { return QPoly(std::move(c), kT); };
    QPoly p1 = q({i1, -80 * i1 - 1296, 1600 * i1 - 6480});
    QPoly p2 = q({-i2, 120 * i2 - 11664, -4800 * i2 + 303264, 64000 * i2 + 233280});
    std::vector<Rational> c3{-16 * i3, 3200 * i3, -256000 * i3 + 729, 10240000 * i3 - 8748, -204800000 * i3,
                             1638400000 * i3 - 46656};
    if (r == Reading::corrected) c3[4] += 34992;
    else c3[2] += 34992;
    return {std::move(p1), std::move(p2), q(std::move(c3))};
}

/// The unique common root of the polynomials, nullopt if they are coprime.
/// Zero polynomials impose no condition and are skipped.
inline std::optional<Rational> shared_root(const std::vector<QPoly>& polys) {
    std::vector<QPoly> nonzero;
    for (const auto& p : polys)
        if (!p.is_zero()) nonzero.push_back(p);
    if (nonzero.empty()) throw UndefinedGcd("shared_root needs at least one nonzero polynomial");
    const QPoly g = gcd(nonzero);
    if (g.is_constant()) return std::nullopt;
    if (g.deg() > 1) throw MultipleRoots("common factor of degree " + std::to_string(g.deg()) + ": " + g.str());
    return -g[0] / g[1];
}

}  // namespace g2cover
