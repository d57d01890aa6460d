#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "g2cover/covers/degenerate.hpp"
#include "g2cover/invariants/igusa.hpp"
#include "g2cover/loci/bank.hpp"
#include "g2cover/loci/known.hpp"

// Independent check of a stored equation: sample points of a family known to
// lie on the locus, find the linear relations among the equation's monomials
// on those points, and compare the derived coefficients with the stored ones.

namespace g2cover {

using Point = std::map<std::string, Rational>;

struct CoefficientMismatch {
    MultiPoly::Exponents exp;  // declared variable order
    Rational displayed;
    Rational derived;
};

struct RelationAudit {
    std::string equation;
    std::size_t samples = 0;
    bool displayed_vanishes = false;
    bool corrected_vanishes = false;
    std::size_t kernel_dimension = 0;
    // Against the unique relation (kernel_dimension == 1), scaled to agree
    // with the displayed coefficients on as many monomials as possible.
    std::vector<CoefficientMismatch> mismatches;
    // Every mismatch is a recorded erratum with the derived value as its
    // correction, and every erratum is such a mismatch.
    bool explained_by_errata = false;

    std::string describe() const {
        std::string s;
        for (const auto& m : mismatches) {
            s += s.empty() ? "" : "; ";
            s += "exponent [";
            for (std::size_t i = 0; i < m.exp.size(); ++i) s += (i ? "," : "") + std::to_string(m.exp[i]);
            s += "]: displayed " + m.displayed.str() + ", derived " + m.derived.str();
        }
        return s.empty() ? "displayed coefficients agree with the derived relation" : s;
    }
};

namespace detail {

/// Basis of the right kernel of a rational matrix, by reduction to row
/// echelon form.
inline std::vector<std::vector<Rational>> kernel_basis(std::vector<std::vector<Rational>> m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        const Rational inv = m[row][c].inverse();
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c].is_zero()) continue;
            const Rational f = m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Rational monomial_value(const std::vector<std::string>& vars, const MultiPoly::Exponents& e, const Point& p) {
    Rational v(1);
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (e[i]) v *= p.at(vars[i]).pow(e[i]);
    return v;
}

}  // namespace detail

inline RelationAudit audit_relation(const LocusEquation& eq, const std::vector<Point>& samples) {
    RelationAudit a;
    a.equation = eq.name;
    a.samples = samples.size();
    a.displayed_vanishes = a.corrected_vanishes = true;
    for (const auto& p : samples) {
        if (!eval_locus(eq, p, Reading::displayed).is_zero()) a.displayed_vanishes = false;
        if (!eval_locus(eq, p, Reading::corrected).is_zero()) a.corrected_vanishes = false;
    }
    const std::size_t cols = eq.terms.size();
    std::vector<std::vector<Rational>> m;
    for (const auto& p : samples) {
        std::vector<Rational> row;
        for (const auto& [e, c] : eq.terms) row.push_back(detail::monomial_value(eq.variables, e, p));
        m.push_back(std::move(row));
    }
    const auto basis = detail::kernel_basis(std::move(m), cols);
    a.kernel_dimension = basis.size();
    if (basis.size() != 1) return a;

    // Most frequent ratio displayed / derived fixes the scale.
    const auto& v = basis.front();
    std::map<Rational, int> votes;
    for (std::size_t k = 0; k < cols; ++k)
        if (!v[k].is_zero()) ++votes[eq.terms[k].second / v[k]];
    Rational scale(1);
    int best = 0;
    for (const auto& [r, n] : votes)
        if (n > best) best = n, scale = r;
    for (std::size_t k = 0; k < cols; ++k) {
        const Rational derived = v[k] * scale;
        if (!(derived == eq.terms[k].second)) a.mismatches.push_back({eq.terms[k].first, eq.terms[k].second, derived});
    }
    bool explained = a.mismatches.size() == eq.errata.size();
    for (const auto& mm : a.mismatches) {
        bool hit = false;
        for (const auto& e : eq.errata) hit = hit || (e.exp == mm.exp && e.corrected == mm.derived);
        explained = explained && hit;
    }
    a.explained_by_errata = explained;
    return a;
}

/// Rational points of a family known to lie on the locus the named
/// equation describes, drawn from small random parameters.
inline std::vector<Point> oracle_samples(const LocusEquation& eq, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 25);
    const auto draw = [&] { return Rational(num(rng)) / Rational(den(rng)); };
    std::vector<Point> out;
    const std::string& n = eq.name;
    while (out.size() < count) {
        try {
            if (n == "L2") {
                out.push_back(bindings(igusa(v4_family_curve(draw(), draw()))));
            } else if (n == "D8") {
                out.push_back(bindings(igusa(d8_family_curve(draw()))));
            } else if (n == "D12_1" || n == "D12_2") {
                out.push_back(bindings(igusa(d12_family_curve(draw()))));
            } else {
                const Rational b = draw();
                const auto cd = degenerate_family(b);
                const auto inv = igusa(cd.curve());
                if (eq.form == "i") {
                    out.push_back(bindings(absolute(inv)));
                } else if (eq.form == "j") {
                    out.push_back({{"J2", inv.J2}, {"J4", inv.J4}, {"j", legendre_j(cd.lambda)}});
                } else {
                    out.push_back(bindings(inv));
                }
            }
        } catch (const Error&) {
            // inadmissible parameter draw; try again
        }
    }
    return out;
}

/// Audit with enough samples to pin down a relation among the monomials.
inline RelationAudit audit_relation(const LocusEquation& eq, std::uint64_t seed = 1) {
    return audit_relation(eq, oracle_samples(eq, eq.terms.size() + 6, seed));
}

}  // namespace g2cover
