#pragma once

#include <array>
#include <utility>
#include <vector>

#include "g2cover/errors.hpp"
#include "g2cover/symcore/ring.hpp"

namespace g2cover {

/// Binary form of degree n in (x, z); coeff(j) multiplies x^j z^(n-j).
template <CoefficientRing R>
class BinaryForm {
public:
    BinaryForm(int degree, std::vector<R> coeffs) : n_(degree), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != n_ + 1) throw ArityError("binary form needs degree+1 coefficients");
    }

    int degree() const { return n_; }
    const R& coeff(int j) const { return c_[static_cast<std::size_t>(j)]; }

    BinaryForm d_dx() const {
        if (n_ == 0) return zero_form(0);
        std::vector<R> out;
        for (int j = 1; j <= n_; ++j) out.push_back(scaled(coeff(j), j));
        return BinaryForm(n_ - 1, std::move(out));
    }

    BinaryForm d_dz() const {
        if (n_ == 0) return zero_form(0);
        std::vector<R> out;
        for (int j = 0; j < n_; ++j) out.push_back(scaled(coeff(j), n_ - j));
        return BinaryForm(n_ - 1, std::move(out));
    }

    friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
        BinaryForm r = f.zero_form(f.n_ + g.n_);
        for (int i = 0; i <= f.n_; ++i) {
            if (is_zero(f.coeff(i))) continue;
            for (int j = 0; j <= g.n_; ++j) r.c_[static_cast<std::size_t>(i + j)] += f.coeff(i) * g.coeff(j);
        }
        return r;
    }

    friend BinaryForm operator+(BinaryForm f, const BinaryForm& g) {
        if (f.n_ != g.n_) throw ArityError("adding binary forms of different degree");
        for (int j = 0; j <= f.n_; ++j) f.c_[static_cast<std::size_t>(j)] += g.coeff(j);
        return f;
    }

    BinaryForm scale(const Rational& q) const {
        BinaryForm r = *this;
        for (auto& v : r.c_) v = v * lift(q, v);
        return r;
    }

    /// The constant of a degree-0 form.
    const R& value() const {
        if (n_ != 0) throw ArityError("binary form is not a constant");
        return c_.front();
    }

    BinaryForm zero_form(int degree) const {
        return BinaryForm(degree, std::vector<R>(static_cast<std::size_t>(degree + 1), lift(Rational(0), c_.front())));
    }

private:
    static R scaled(const R& v, int k) { return v * lift(Rational(k), v); }

    int n_;
    std::vector<R> c_;
};

namespace detail {

inline Rational factorial(int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i) r *= Rational(i);
    return r;
}

inline Rational binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

template <CoefficientRing R>
BinaryForm<R> partials(const BinaryForm<R>& f, int dx, int dz) {
    BinaryForm<R> r = f;
    for (int i = 0; i < dx; ++i) r = r.d_dx();
    for (int i = 0; i < dz; ++i) r = r.d_dz();
    return r;
}

}  // namespace detail

/// k-th transvectant (f, g)_k of forms of degrees m and n, normalized by
/// (m-k)!(n-k)!/(m! n!).
template <CoefficientRing R>
BinaryForm<R> transvectant(const BinaryForm<R>& f, const BinaryForm<R>& g, int k) {
    const int m = f.degree(), n = g.degree();
    if (k > m || k > n) throw ArityError("transvectant order exceeds form degree");
    BinaryForm<R> acc = f.zero_form(m + n - 2 * k);
    for (int i = 0; i <= k; ++i) {
        const Rational sign = (i % 2 ? Rational(-1) : Rational(1)) * detail::binomial(k, i);
        acc = acc + (detail::partials(f, k - i, i) * detail::partials(g, i, k - i)).scale(sign);
    }
    using detail::factorial;
    return acc.scale(factorial(m - k) * factorial(n - k) / (factorial(m) * factorial(n)));
}

/// Clebsch invariants A, B, C, D of a binary sextic.
template <CoefficientRing R>
std::array<R, 4> clebsch_invariants(const BinaryForm<R>& f) {
    if (f.degree() != 6) throw ArityError("Clebsch invariants need a sextic");
    const auto i = transvectant(f, f, 4);
    const auto delta = transvectant(i, i, 2);
    const auto y1 = transvectant(f, i, 4);
    const auto y2 = transvectant(i, y1, 2);
    const auto y3 = transvectant(i, y2, 2);
    return {transvectant(f, f, 6).value(), transvectant(i, i, 4).value(), transvectant(i, delta, 4).value(),
            transvectant(y3, y1, 2).value()};
}

}  // namespace g2cover
