#pragma once

#include <string>
#include <utility>
#include <vector>

#include "g2cover/errors.hpp"
#include "g2cover/symcore/multipoly.hpp"
#include "g2cover/symcore/unipoly.hpp"

namespace g2cover {

template <CoefficientRing R>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const R& fill) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    R& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }

private:
    std::size_t rows_, cols_;
    std::vector<R> a_;
};

/// Determinant by fraction-free (Bareiss) elimination. Every division is an
/// exact division in R, so entries stay in R (no rational-function blowup).
template <CoefficientRing R>
R determinant_bareiss(Matrix<R> m, const R& proto) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw ArityError("determinant of a non-square matrix");
    if (n == 0) return lift(Rational(1), proto);
    bool negate = false;
    R previous = lift(Rational(1), proto);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(m(p, k))) ++p;
            if (p == n) return lift(Rational(0), proto);
            m.swap_rows(k, p);
            negate = !negate;
        }
        const R pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const R lead = m(i, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                R num = m(i, j) * pivot - lead * m(k, j);
                m(i, j) = is_zero(num) ? std::move(num) : exact_div(num, previous);
            }
        }
        previous = pivot;
    }
    R det = m(n - 1, n - 1);
    return negate ? -det : det;
}

/// Sylvester matrix of f (degree m) and g (degree n): n shifted rows of f
/// followed by m shifted rows of g, highest coefficient first.
template <CoefficientRing R>
Matrix<R> sylvester_matrix(const UniPoly<R>& f, const UniPoly<R>& g) {
    const std::size_t m = static_cast<std::size_t>(f.deg());
    const std::size_t n = static_cast<std::size_t>(g.deg());
    const R zero = lift(Rational(0), f.leading());
    Matrix<R> s(m + n, m + n, zero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) s(i, i + k) = f[m - k];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k) s(n + i, i + k) = g[n - k];
    return s;
}

namespace detail {

template <CoefficientRing R>
void check_resultant_inputs(const UniPoly<R>& f, const UniPoly<R>& g) {
    if (f.is_zero() || g.is_zero()) throw UndefinedResultant("resultant with a zero polynomial");
}

}  // namespace detail

/// Res(f, g) = det Sylvester(f, g) = lc(f)^deg g * prod g(roots of f).
/// Computed by Bareiss elimination; R may itself be a polynomial ring.
template <CoefficientRing R>
R resultant(const UniPoly<R>& f, const UniPoly<R>& g) {
    detail::check_resultant_inputs(f, g);
    if (f.deg() == 0) return pow(f.leading(), static_cast<unsigned>(g.deg()));
    if (g.deg() == 0) return pow(g.leading(), static_cast<unsigned>(f.deg()));
    return determinant_bareiss(sylvester_matrix(f, g), f.leading());
}

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = q*g + r.
template <CoefficientRing R>
UniPoly<R> pseudo_remainder(const UniPoly<R>& f, const UniPoly<R>& g) {
    if (g.is_zero()) throw DivisionError("pseudo-remainder by zero");
    if (f.is_zero() || f.deg() < g.deg()) return f;
    std::vector<R> r = f.coeffs();
    const R& lc = g.leading();
    const int n = g.deg();
    for (int k = f.deg(); k >= n; --k) {
        const R lead = r[static_cast<std::size_t>(k)];
        for (int i = 0; i <= k; ++i) r[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)] * lc;
        for (int j = 0; j <= n; ++j) {
            auto& slot = r[static_cast<std::size_t>(k - n + j)];
            slot = slot - lead * g[static_cast<std::size_t>(j)];
        }
    }
    r.resize(static_cast<std::size_t>(n), lift(Rational(0), lc));
    return UniPoly<R>(std::move(r), f.var());
}

/// Resultant by the subresultant pseudo-remainder sequence. Agrees with
/// resultant() (the Sylvester determinant) including sign.
template <CoefficientRing R>
R resultant_subresultant(UniPoly<R> a, UniPoly<R> b) {
    detail::check_resultant_inputs(a, b);
    const R proto = a.leading();
    const R one = lift(Rational(1), proto);
    if (a.deg() == 0) return pow(a.leading(), static_cast<unsigned>(b.deg()));
    if (b.deg() == 0) return pow(b.leading(), static_cast<unsigned>(a.deg()));
    bool negate = false;
    if (a.deg() < b.deg()) {
        if ((a.deg() % 2 == 1) && (b.deg() % 2 == 1)) negate = true;
        std::swap(a, b);
    }
    R g = one;
    R h = one;
    while (true) {
        const int delta = a.deg() - b.deg();
        if ((a.deg() % 2 == 1) && (b.deg() % 2 == 1)) negate = !negate;
        UniPoly<R> r = pseudo_remainder(a, b);
        if (r.is_zero()) return lift(Rational(0), proto);
        a = std::move(b);
        b = UniPoly<R>(r.coeffs(), r.var());
        {
            const R divisor = g * pow(h, static_cast<unsigned>(delta));
            std::vector<R> c;
            for (const auto& x : b.coeffs()) c.push_back(exact_div(x, divisor));
            b = UniPoly<R>(std::move(c), a.var());
        }
        g = a.leading();
        if (delta == 0) {
            // h stays the same.
        } else {
            h = exact_div(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
        }
        if (b.deg() == 0) break;
    }
    const int da = a.deg();
    R result = da == 1 ? b.leading()
                       : exact_div(pow(b.leading(), static_cast<unsigned>(da)), pow(h, static_cast<unsigned>(da - 1)));
    return negate ? -result : result;
}

/// disc(f) = (-1)^(d(d-1)/2) * Res(f, f') / lc(f), d = deg f >= 1.
template <CoefficientRing R>
R discriminant(const UniPoly<R>& f) {
    if (f.is_zero() || f.deg() < 1) throw UndefinedDiscriminant("discriminant of a constant polynomial");
    const int d = f.deg();
    R res = resultant(f, f.derivative());
    R disc = exact_div(res, f.leading());
    return ((d * (d - 1) / 2) % 2 == 1) ? -disc : disc;
}

/// Resultant of two multivariate polynomials with respect to `var`; the
/// result is a polynomial in the remaining variables.
inline MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
    if (f.is_zero() || g.is_zero()) throw UndefinedResultant("resultant with a zero polynomial");
    return resultant(to_univariate(f, var), to_univariate(g, var));
}

inline MultiPoly discriminant(const MultiPoly& f, const std::string& var) {
    return discriminant(to_univariate(f, var));
}

}  // namespace g2cover
