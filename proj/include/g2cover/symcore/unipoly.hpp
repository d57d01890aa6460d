#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "g2cover/errors.hpp"
#include "g2cover/symcore/ring.hpp"

namespace g2cover {

/// Polynomial degree with a distinguished value for the zero polynomial.
/// The zero polynomial's degree compares below every finite degree and has
/// no numeric value.
class Degree {
public:
    static constexpr Degree minus_infinity() { return Degree(); }
    constexpr explicit Degree(int d) : d_(d) {}

    constexpr bool is_minus_infinity() const { return !d_.has_value(); }
    int value() const {
        if (!d_) throw UndefinedDecomposition("degree of the zero polynomial has no numeric value");
        return *d_;
    }

    friend constexpr bool operator==(const Degree&, const Degree&) = default;
    friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
        if (!a.d_ || !b.d_) return a.d_.has_value() <=> b.d_.has_value();
        return *a.d_ <=> *b.d_;
    }
    friend constexpr bool operator==(const Degree& a, int b) { return a.d_ && *a.d_ == b; }

    friend std::ostream& operator<<(std::ostream& os, const Degree& d) {
        return d.d_ ? os << *d.d_ : os << "-inf";
    }

private:
    constexpr Degree() = default;
    std::optional<int> d_;
};

/// Dense univariate polynomial over a coefficient ring R; coefficient i is
/// the coefficient of var^i. Trailing zeros are never stored, so the zero
/// polynomial has no coefficients and equality is structural.
template <CoefficientRing R>
class UniPoly {
public:
    using coefficient_type = R;

    explicit UniPoly(std::string var = "x") : var_(std::move(var)) {}
    UniPoly(std::vector<R> coeffs, std::string var = "x") : var_(std::move(var)), c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<R> coeffs, std::string var = "x")
        : UniPoly(std::vector<R>(coeffs), std::move(var)) {}

    static UniPoly constant(const R& c, std::string var = "x") { return UniPoly(std::vector<R>{c}, std::move(var)); }
    static UniPoly monomial(const R& c, int degree, const std::string& var = "x") {
        std::vector<R> v(static_cast<std::size_t>(degree) + 1, lift(Rational(0), c));
        v.back() = c;
        return UniPoly(std::move(v), var);
    }
    /// The polynomial `var` itself, with coefficients shaped like `proto`.
    static UniPoly variable(const std::string& var, const R& proto) {
        return monomial(lift(Rational(1), proto), 1, var);
    }

    const std::string& var() const { return var_; }
    UniPoly with_var(std::string v) const { UniPoly r = *this; r.var_ = std::move(v); return r; }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Degree degree() const { return c_.empty() ? Degree::minus_infinity() : Degree(static_cast<int>(c_.size()) - 1); }
    /// Numeric degree for nonzero polynomials; callers must rule out zero first.
    int deg() const { return degree().value(); }
    std::size_t size() const { return c_.size(); }

    const std::vector<R>& coeffs() const { return c_; }
    const R& operator[](std::size_t i) const { return c_[i]; }
    R coeff(std::size_t i, const R& proto) const { return i < c_.size() ? c_[i] : lift(Rational(0), proto); }
    const R& leading() const {
        if (c_.empty()) throw UndefinedDecomposition("leading coefficient of the zero polynomial");
        return c_.back();
    }

    UniPoly operator-() const {
        UniPoly r(var_);
        r.c_.reserve(c_.size());
        for (const auto& a : c_) r.c_.push_back(-a);
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) { return combine(a, b, false); }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return combine(a, b, true); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        UniPoly r(merged_var(a, b));
        if (a.is_zero() || b.is_zero()) return r;
        std::vector<R> out(a.c_.size() + b.c_.size() - 1, lift(Rational(0), a.c_.front()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (ring_traits<R>::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        }
        r.c_ = std::move(out);
        r.trim();
        return r;
    }

    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    UniPoly scale(const R& s) const {
        UniPoly r(var_);
        for (const auto& a : c_) r.c_.push_back(a * s);
        r.trim();
        return r;
    }

    /// Structural equality; a constant polynomial equals its counterpart in
    /// any variable.
    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        if (a.c_.size() > 1 && a.var_ != b.var_) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    /// Horner evaluation in any ring S that R embeds into via `embed`.
    template <class S, class Embed>
    S evaluate(const S& at, Embed embed) const {
        if (c_.empty()) return lift(Rational(0), at);
        S acc = embed(c_.back());
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * at + embed(c_[i]);
        return acc;
    }
    R operator()(const R& at) const {
        return evaluate(at, [](const R& c) { return c; });
    }

    UniPoly derivative() const {
        UniPoly r(var_);
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * lift(Rational(static_cast<long>(i)), c_[i]));
        r.trim();
        return r;
    }

    /// f(g): substitutes another polynomial for the variable.
    UniPoly compose(const UniPoly& g) const {
        if (c_.empty()) return UniPoly(g.var_);
        UniPoly acc = constant(c_.back(), g.var_);
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * g + constant(c_[i], g.var_);
        return acc;
    }

    /// x^d f(1/x) for d = declared degree (defaults to deg f).
    UniPoly reversed(std::optional<int> declared = std::nullopt) const {
        const int d = declared.value_or(is_zero() ? 0 : deg());
        std::vector<R> v(static_cast<std::size_t>(d) + 1, c_.empty() ? R{} : lift(Rational(0), c_.front()));
        for (std::size_t i = 0; i < c_.size(); ++i) v[static_cast<std::size_t>(d) - i] = c_[i];
        return UniPoly(std::move(v), var_);
    }

    /// Maps every coefficient through `f`, producing a polynomial over another ring.
    template <class F>
    auto map(F f) const {
        using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
        std::vector<S> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(f(a));
        return UniPoly<S>(std::move(v), var_);
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (ring_traits<R>::is_zero(c_[i])) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << c_[i] << ")";
            if (i >= 1) os << "*" << var_;
            if (i >= 2) os << "^" << i;
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

private:
    static std::string merged_var(const UniPoly& a, const UniPoly& b) {
        if (a.c_.size() > 1 && b.c_.size() > 1 && a.var_ != b.var_)
            throw VariableMismatch("polynomials in '" + a.var_ + "' and '" + b.var_ + "'");
        return a.c_.size() > 1 ? a.var_ : b.var_;
    }

    static UniPoly combine(const UniPoly& a, const UniPoly& b, bool subtract) {
        UniPoly r(merged_var(a, b));
        const std::size_t n = std::max(a.c_.size(), b.c_.size());
        r.c_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (i < a.c_.size() && i < b.c_.size())
                r.c_.push_back(subtract ? a.c_[i] - b.c_[i] : a.c_[i] + b.c_[i]);
            else if (i < a.c_.size())
                r.c_.push_back(a.c_[i]);
            else
                r.c_.push_back(subtract ? -b.c_[i] : b.c_[i]);
        }
        r.trim();
        return r;
    }

    void trim() {
        while (!c_.empty() && ring_traits<R>::is_zero(c_.back())) c_.pop_back();
    }

    std::string var_;
    std::vector<R> c_;
};

template <CoefficientRing R>
struct ring_traits<UniPoly<R>> {
    static constexpr bool is_exact = ring_traits<R>::is_exact;
    static bool is_zero(const UniPoly<R>& a) { return a.is_zero(); }
    static UniPoly<R> from_rational(const Rational& q, const UniPoly<R>& proto) {
        // An empty proto carries no inner context; fall back to a default
        // inner element (default variable / default precision).
        R inner = proto.is_zero() ? lift(q, R{}) : lift(q, proto.leading());
        return UniPoly<R>::constant(inner, proto.var());
    }
    static UniPoly<R> exact_div(const UniPoly<R>& a, const UniPoly<R>& b);
};

/// Quotient and remainder over a coefficient field.
template <CoefficientField F>
std::pair<UniPoly<F>, UniPoly<F>> divmod(const UniPoly<F>& f, const UniPoly<F>& g) {
    if (g.is_zero()) throw DivisionError("polynomial division by zero");
    const std::string var = f.is_constant() ? g.var() : f.var();
    if (f.is_zero() || f.deg() < g.deg()) return {UniPoly<F>(var), f};
    std::vector<F> rem = f.coeffs();
    const std::size_t gs = g.size();
    std::vector<F> quo(rem.size() - gs + 1, lift(Rational(0), g.leading()));
    const F& lc = g.leading();
    for (std::size_t k = quo.size(); k-- > 0;) {
        const F factor = rem[k + gs - 1] / lc;
        quo[k] = factor;
        if (is_zero(factor)) continue;
        for (std::size_t j = 0; j < gs; ++j) rem[k + j] = rem[k + j] - factor * g[j];
    }
    rem.resize(gs - 1, lift(Rational(0), lc));
    return {UniPoly<F>(std::move(quo), var), UniPoly<F>(std::move(rem), var)};
}

/// Division that must be exact over an integral domain R. Leading
/// coefficients are divided with R's own exact division, so this also works
/// for polynomial rings over polynomial rings. A nonzero remainder raises
/// DivisionError.
template <CoefficientRing R>
UniPoly<R> exact_quotient(const UniPoly<R>& f, const UniPoly<R>& g) {
    if (g.is_zero()) throw DivisionError("polynomial division by zero");
    const std::string var = f.is_constant() ? g.var() : f.var();
    if (f.is_zero()) return UniPoly<R>(var);
    if (f.deg() < g.deg()) throw DivisionError("exact division with nonzero remainder (degree)");
    std::vector<R> rem = f.coeffs();
    const std::size_t gs = g.size();
    std::vector<R> quo(rem.size() - gs + 1, lift(Rational(0), g.leading()));
    for (std::size_t k = quo.size(); k-- > 0;) {
        if (is_zero(rem[k + gs - 1])) {
            quo[k] = lift(Rational(0), g.leading());
            continue;
        }
        const R factor = exact_div(rem[k + gs - 1], g.leading());
        quo[k] = factor;
        for (std::size_t j = 0; j < gs; ++j) rem[k + j] = rem[k + j] - factor * g[j];
    }
    for (std::size_t j = 0; j + 1 < gs; ++j)
        if (!is_zero(rem[j])) throw DivisionError("exact division with nonzero remainder");
    return UniPoly<R>(std::move(quo), var);
}

template <CoefficientRing R>
UniPoly<R> ring_traits<UniPoly<R>>::exact_div(const UniPoly<R>& a, const UniPoly<R>& b) {
    return exact_quotient(a, b);
}

template <CoefficientField F>
UniPoly<F> monic(const UniPoly<F>& f) {
    if (f.is_zero()) return f;
    const F inv = lift(Rational(1), f.leading()) / f.leading();
    return f.scale(inv);
}

using QPoly = UniPoly<Rational>;

/// Builds a rational polynomial from integer/rational literals, low degree first.
inline QPoly qpoly(std::initializer_list<Rational> low_to_high, std::string var = "x") {
    return QPoly(std::vector<Rational>(low_to_high), std::move(var));
}

}  // namespace g2cover
