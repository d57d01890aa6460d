#pragma once

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "g2cover/errors.hpp"
#include "g2cover/symcore/rational.hpp"
#include "g2cover/symcore/ring.hpp"
#include "g2cover/symcore/unipoly.hpp"

namespace g2cover {

/// Sparse multivariate polynomial with rational coefficients.
///
/// Variables are kept sorted by name; an exponent vector is indexed by that
/// order and terms are stored in lexicographic order of exponent vectors.
/// Zero coefficients are never stored, so equality is structural once both
/// operands are brought to a common variable list.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;
    using Terms = std::map<Exponents, Rational>;

    MultiPoly() = default;
    MultiPoly(const Rational& c) {
        if (!c.is_zero()) terms_.emplace(Exponents{}, c);
    }
    MultiPoly(int c) : MultiPoly(Rational(c)) {}

    static MultiPoly variable(const std::string& name) {
        MultiPoly p;
        p.vars_ = {name};
        p.terms_.emplace(Exponents{1}, Rational(1));
        return p;
    }

    /// Builds a polynomial from (exponent vector, coefficient) pairs over the
    /// given variable names (any order; they are sorted internally).
    static MultiPoly from_terms(const std::vector<std::string>& vars,
                                const std::vector<std::pair<Exponents, Rational>>& terms) {
        std::vector<std::size_t> order(vars.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return vars[a] < vars[b]; });
        MultiPoly p;
        for (auto i : order) p.vars_.push_back(vars[i]);
        if (std::adjacent_find(p.vars_.begin(), p.vars_.end()) != p.vars_.end())
            throw ArityError("duplicate variable name");
        for (const auto& [e, c] : terms) {
            if (e.size() != vars.size()) throw ArityError("exponent vector length does not match variable list");
            Exponents sorted(vars.size());
            for (std::size_t k = 0; k < order.size(); ++k) sorted[k] = e[order[k]];
            p.add_term(sorted, c);
        }
        p.compact();
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && is_zero_exp(terms_.begin()->first)); }
    std::size_t term_count() const { return terms_.size(); }

    Rational constant_value() const {
        if (!is_constant()) throw ArityError("polynomial is not constant");
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }

    /// Degree in one variable (0 if absent; zero polynomial also reports 0).
    unsigned degree_in(const std::string& var) const {
        const auto idx = index_of(var);
        if (!idx) return 0;
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[*idx]);
        return d;
    }

    /// Weighted degree set of all monomials under the given variable weights.
    std::vector<long> weighted_degrees(const std::map<std::string, long>& weights) const {
        std::vector<long> out;
        for (const auto& [e, c] : terms_) {
            long w = 0;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                auto it = weights.find(vars_[i]);
                if (it == weights.end()) throw ArityError("no weight for variable '" + vars_[i] + "'");
                w += it->second * static_cast<long>(e[i]);
            }
            out.push_back(w);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    Rational coefficient(const std::vector<std::pair<std::string, unsigned>>& monomial) const {
        Exponents e(vars_.size(), 0);
        for (const auto& [v, k] : monomial) {
            auto idx = index_of(v);
            if (!idx) {
                if (k != 0) return Rational(0);
                continue;
            }
            e[*idx] = k;
        }
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        auto [x, y] = align(a, b);
        for (const auto& [e, c] : y.terms_) x.add_term(e, c);
        x.compact();
        return x;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        if (a.is_zero() || b.is_zero()) return MultiPoly();
        auto [x, y] = align(a, b);
        MultiPoly r;
        r.vars_ = x.vars_;
        Exponents e(x.vars_.size());
        for (const auto& [ea, ca] : x.terms_) {
            for (const auto& [eb, cb] : y.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        r.compact();
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        auto [x, y] = align(a, b);
        return x.terms_ == y.terms_;
    }

    /// Exact division; a nonzero remainder raises DivisionError.
    friend MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
        if (g.is_zero()) throw DivisionError("multivariate division by zero");
        if (f.is_zero()) return MultiPoly();
        auto [rem, div] = align(f, g);
        const auto& [lead_e, lead_c] = *div.terms_.rbegin();
        MultiPoly quo;
        quo.vars_ = rem.vars_;
        Exponents shift(rem.vars_.size());
        while (!rem.is_zero()) {
            const auto& [re, rc] = *rem.terms_.rbegin();
            for (std::size_t i = 0; i < shift.size(); ++i) {
                if (re[i] < lead_e[i]) throw DivisionError("exact multivariate division with nonzero remainder");
                shift[i] = re[i] - lead_e[i];
            }
            const Rational factor = rc / lead_c;
            quo.add_term(shift, factor);
            Exponents e(shift.size());
            for (const auto& [ge, gc] : div.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ge[i] + shift[i];
                rem.add_term(e, -(factor * gc));
            }
        }
        quo.compact();
        return quo;
    }

    /// Converts to a dense univariate polynomial; every variable other than
    /// `var` must be absent.
    QPoly to_qpoly(const std::string& var) const {
        for (const auto& v : vars_)
            if (v != var) throw ArityError("polynomial still depends on '" + v + "'");
        const auto idx = index_of(var);
        std::vector<Rational> c(idx ? degree_in(var) + 1 : 1, Rational(0));
        for (const auto& [e, k] : terms_) c[idx ? e[*idx] : 0] = k;
        return QPoly(std::move(c), var);
    }

    /// Evaluates the polynomial in any coefficient ring S. Every variable must
    /// be bound; `proto` supplies the ring context for constants.
    template <CoefficientRing S>
    S evaluate(const std::map<std::string, S>& bindings, const S& proto) const {
        std::vector<const S*> vals;
        for (const auto& v : vars_) {
            auto it = bindings.find(v);
            if (it == bindings.end()) throw ArityError("no value bound for variable '" + v + "'");
            vals.push_back(&it->second);
        }
        // Cache powers per variable; loci equations reuse the same few powers.
        std::vector<std::vector<S>> powers(vars_.size());
        auto power_of = [&](std::size_t i, unsigned k) -> const S& {
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(lift(Rational(1), proto));
            while (cache.size() <= k) cache.push_back(cache.back() * *vals[i]);
            return cache[k];
        };
        S acc = lift(Rational(0), proto);
        for (const auto& [e, c] : terms_) {
            S term = lift(c, proto);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i]) term = term * power_of(i, e[i]);
            acc = acc + term;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!first) os << (c.sign() < 0 ? " - " : " + ");
            else if (c.sign() < 0) os << "-";
            first = false;
            const Rational a = c.abs();
            const bool unit = a.is_one() && !is_zero_exp(e);
            if (!unit) os << a;
            bool need_star = !unit;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i]) continue;
                os << (need_star ? "*" : "") << vars_[i];
                if (e[i] > 1) os << "^" << e[i];
                need_star = true;
            }
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

private:
    static bool is_zero_exp(const Exponents& e) {
        return std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
    }

    std::optional<std::size_t> index_of(const std::string& var) const {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
        if (it == vars_.end() || *it != var) return std::nullopt;
        return static_cast<std::size_t>(it - vars_.begin());
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Drops variables that no longer occur so the representation is canonical.
    void compact() {
        std::vector<bool> used(vars_.size(), false);
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] != 0;
        if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
        MultiPoly r;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) r.vars_.push_back(vars_[i]);
        for (const auto& [e, c] : terms_) {
            Exponents sub;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (used[i]) sub.push_back(e[i]);
            r.terms_.emplace(std::move(sub), c);
        }
        *this = std::move(r);
    }

    MultiPoly remapped(const std::vector<std::string>& target) const {
        if (target == vars_) return *this;
        std::vector<std::size_t> pos(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i)
            pos[i] = static_cast<std::size_t>(std::lower_bound(target.begin(), target.end(), vars_[i]) - target.begin());
        MultiPoly r;
        r.vars_ = target;
        for (const auto& [e, c] : terms_) {
            Exponents ne(target.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
            r.terms_.emplace(std::move(ne), c);
        }
        return r;
    }

    static std::pair<MultiPoly, MultiPoly> align(const MultiPoly& a, const MultiPoly& b) {
        if (a.vars_ == b.vars_) return {a, b};
        std::vector<std::string> u;
        std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(), std::back_inserter(u));
        return {a.remapped(u), b.remapped(u)};
    }

    std::vector<std::string> vars_;
    Terms terms_;
};

template <>
struct ring_traits<MultiPoly> {
    static constexpr bool is_exact = true;
    static bool is_zero(const MultiPoly& a) { return a.is_zero(); }
    static MultiPoly from_rational(const Rational& q, const MultiPoly&) { return MultiPoly(q); }
    static MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) { return exact_divide(a, b); }
};

/// View of f as a polynomial in `var` whose coefficients are polynomials in
/// the remaining variables.
inline UniPoly<MultiPoly> to_univariate(const MultiPoly& f, const std::string& var) {
    const auto& vars = f.vars();
    const auto it = std::find(vars.begin(), vars.end(), var);
    if (it == vars.end()) return UniPoly<MultiPoly>::constant(f, var);
    const auto idx = static_cast<std::size_t>(it - vars.begin());
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (i != idx) rest.push_back(vars[i]);
    std::vector<std::vector<std::pair<MultiPoly::Exponents, Rational>>> buckets(f.degree_in(var) + 1);
    for (const auto& [e, c] : f.terms()) {
        MultiPoly::Exponents sub;
        sub.reserve(rest.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != idx) sub.push_back(e[i]);
        buckets[e[idx]].emplace_back(std::move(sub), c);
    }
    std::vector<MultiPoly> coeffs;
    coeffs.reserve(buckets.size());
    for (const auto& b : buckets) coeffs.push_back(MultiPoly::from_terms(rest, b));
    return UniPoly<MultiPoly>(std::move(coeffs), var);
}

inline MultiPoly from_univariate(const UniPoly<MultiPoly>& p) {
    MultiPoly r;
    const MultiPoly v = MultiPoly::variable(p.var());
    MultiPoly power(1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        r += p[i] * power;
        power *= v;
    }
    return r;
}

inline MultiPoly from_univariate(const QPoly& p) {
    return from_univariate(p.map([](const Rational& c) { return MultiPoly(c); }));
}

/// Binding value for substitution: either a rational or a polynomial.
using Binding = MultiPoly;

/// Substitutes the given variables; unbound variables survive. A fully bound
/// polynomial comes back as a constant MultiPoly (see constant_value()).
inline MultiPoly substitute(const MultiPoly& f, const std::map<std::string, Binding>& bindings) {
    if (bindings.empty()) return f;
    std::map<std::string, MultiPoly> all;
    for (const auto& v : f.vars()) {
        auto it = bindings.find(v);
        all.emplace(v, it == bindings.end() ? MultiPoly::variable(v) : it->second);
    }
    return f.evaluate(all, MultiPoly());
}

inline MultiPoly var(const std::string& name) { return MultiPoly::variable(name); }

}  // namespace g2cover
