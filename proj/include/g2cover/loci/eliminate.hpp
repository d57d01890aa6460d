#pragma once

#include <array>
#include <string>
#include <vector>

#include "g2cover/covers/degenerate.hpp"
#include "g2cover/loci/bank.hpp"
#include "g2cover/symcore/gcd.hpp"
#include "g2cover/symcore/interpolate.hpp"
#include "g2cover/symcore/multipoly.hpp"
#include "g2cover/symcore/ratfunc.hpp"
#include "g2cover/symcore/resultant.hpp"

// Elimination of b from the absolute invariants of the degenerate family.

namespace g2cover {

/// (i1(b), i2(b), i3(b)) of the degenerate family, reduced.
inline const std::array<RatFunc, 3>& degenerate_absolute_family() {
    static const std::array<RatFunc, 3> family = [] {
        const auto i = absolute(igusa(degenerate_family(RatFunc::variable("b")).curve()));
        return std::array<RatFunc, 3>{i.i1, i.i2, i.i3};
    }();
    return family;
}

inline std::string i_name(int k) { return "i" + std::to_string(k); }

namespace detail {

inline void require_index(int k) {
    if (k < 1 || k > 3) throw ArityError("absolute invariant index must be 1, 2 or 3, got " + std::to_string(k));
}

inline MultiPoly qpoly_to_multi(const QPoly& p) { return from_univariate(p.with_var("b")); }

}  // namespace detail

/// Numerator of i_k - i_k(b): den(b) i_k - num(b), over Q[b, i_k].
inline MultiPoly b_numerator(int k) {
    detail::require_index(k);
    const RatFunc& f = degenerate_absolute_family()[static_cast<std::size_t>(k - 1)];
    return var(i_name(k)) * detail::qpoly_to_multi(f.denominator()) - detail::qpoly_to_multi(f.numerator());
}

namespace detail {

// i_k - i_k(b) = (i_k D(b) - M(b)) / D(b).
struct BNumerator {
    QPoly D, M;
    int formal_degree() const { return std::max(D.deg(), M.deg()); }
    QPoly at(const Rational& ik) const { return (D.scale(ik) - M).with_var("b"); }
    bool keeps_degree(const Rational& ik) const { return at(ik).deg() == formal_degree(); }
};

inline BNumerator b_numerator_parts(int k) {
    require_index(k);
    const RatFunc& f = degenerate_absolute_family()[static_cast<std::size_t>(k - 1)];
    return {f.denominator().with_var("b"), f.numerator().with_var("b")};
}

// Distinct small integers at which the numerator keeps its degree in b.
inline std::vector<Rational> sample_nodes(const BNumerator& n, std::size_t count) {
    std::vector<Rational> out;
    for (long v = 0; out.size() < count; ++v)
        if (n.keeps_degree(Rational(v))) out.emplace_back(v);
    return out;
}

}  // namespace detail

/// Res_b of the two numerators: a polynomial in i_first and i_second that
/// vanishes on the image of the degenerate family. Its degree in i_first is
/// at most deg_b of the second numerator and vice versa, so it is recovered
/// by interpolation from exact univariate resultants on a grid of nodes
/// where neither numerator drops degree in b.
inline MultiPoly eliminate_b(int first, int second) {
    detail::require_index(first);
    detail::require_index(second);
    if (first == second) throw ArityError("eliminate_b needs two distinct indices");
    const auto nf = detail::b_numerator_parts(first), ns = detail::b_numerator_parts(second);
    const auto xs = detail::sample_nodes(nf, static_cast<std::size_t>(ns.formal_degree()) + 1);
    const auto ys = detail::sample_nodes(ns, static_cast<std::size_t>(nf.formal_degree()) + 1);
    const std::string x = i_name(first), y = i_name(second);

    // rows[s] = R(x, ys[s]) as a polynomial in x.
    std::vector<QPoly> rows;
    for (const auto& yv : ys) {
        const QPoly g = ns.at(yv);
        std::vector<Rational> vals;
        for (const auto& xv : xs) vals.push_back(resultant_subresultant(nf.at(xv), g));
        rows.push_back(interpolate(xs, vals, x));
    }
    std::vector<std::pair<MultiPoly::Exponents, Rational>> terms;
    for (std::size_t a = 0; a < xs.size(); ++a) {
        std::vector<Rational> col;
        for (const auto& r : rows) col.push_back(a < r.size() ? r[a] : Rational(0));
        const QPoly in_y = interpolate(ys, col, y);
        for (std::size_t e = 0; e < in_y.size(); ++e)
            if (!in_y[e].is_zero()) terms.push_back({{static_cast<unsigned>(a), static_cast<unsigned>(e)}, in_y[e]});
    }
    return MultiPoly::from_terms({x, y}, terms);
}

/// Res_b computed directly after fixing i_second := value, as a polynomial
/// in i_first; a check on eliminate_b that avoids interpolation.
inline QPoly eliminate_b_specialized(int first, int second, const Rational& value) {
    detail::require_index(first);
    detail::require_index(second);
    if (first == second) throw ArityError("eliminate_b needs two distinct indices");
    const MultiPoly g = detail::qpoly_to_multi(detail::b_numerator_parts(second).at(value));
    return resultant_subresultant(to_univariate(b_numerator(first), "b"), to_univariate(g, "b")).to_qpoly(i_name(first));
}

struct SpecializedDivision {
    Rational b0;
    QPoly eliminant;  // resultant with i_second := i_second(b0), in i_first
    QPoly divisor;    // the equation with the same substitution
    QPoly remainder;
    bool divisible() const { return remainder.is_zero(); }
};

/// Substitutes i_second := i_second(b0) in both the eliminant and the
/// equation (variables i_first, i_second) and divides in Q[i_first].
inline SpecializedDivision specialized_division(const MultiPoly& eliminant, const LocusEquation& eq, int first, int second,
                                                const Rational& b0, Reading r = Reading::corrected) {
    const std::string x = i_name(first), y = i_name(second);
    const Rational at = degenerate_absolute_family()[static_cast<std::size_t>(second - 1)](b0);
    const std::map<std::string, Binding> sub{{y, MultiPoly(at)}};
    const QPoly e = substitute(eliminant, sub).to_qpoly(x);
    const QPoly d = substitute(eq.polynomial(r), sub).to_qpoly(x);
    if (d.is_zero()) throw DivisionError("equation vanishes identically after substitution");
    auto [q, rem] = divmod(e, d);
    return {b0, e, d, rem};
}

}  // namespace g2cover
