#pragma once

#include <concepts>

#include "g2cover/errors.hpp"
#include "g2cover/symcore/complex.hpp"
#include "g2cover/symcore/rational.hpp"

namespace g2cover {

// Coefficient rings are described by a traits class rather than by member
// functions so that plain scalars (Rational, Complex) and the polynomial
// types can be nested inside each other uniformly. A `proto` argument carries
// whatever context a fresh element needs (variable name, precision).
template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static constexpr bool is_exact = true;
    static bool is_zero(const Rational& a) { return a.is_zero(); }
    static Rational from_rational(const Rational& q, const Rational&) { return q; }
    static Rational exact_div(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionError("exact division by zero");
        return a / b;
    }
};

template <>
struct ring_traits<Complex> {
    static constexpr bool is_exact = false;
    static bool is_zero(const Complex& a) { return a.is_zero(); }
    static Complex from_rational(const Rational& q, const Complex& proto) { return Complex(q, proto.precision_bits()); }
    static Complex exact_div(const Complex& a, const Complex& b) { return a / b; }
};

template <class R>
concept CoefficientRing = requires(const R& a, const R& b, const Rational& q) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { ring_traits<R>::is_zero(a) } -> std::convertible_to<bool>;
    { ring_traits<R>::from_rational(q, a) } -> std::convertible_to<R>;
    { ring_traits<R>::exact_div(a, b) } -> std::convertible_to<R>;
};

template <class R>
concept CoefficientField = CoefficientRing<R> && requires(const R& a, const R& b) {
    { a / b } -> std::convertible_to<R>;
};

template <CoefficientRing R>
bool is_zero(const R& a) { return ring_traits<R>::is_zero(a); }

/// The rational q as an element of the same ring as `proto`.
template <CoefficientRing R>
R lift(const Rational& q, const R& proto) { return ring_traits<R>::from_rational(q, proto); }

template <CoefficientRing R>
R exact_div(const R& a, const R& b) { return ring_traits<R>::exact_div(a, b); }

template <CoefficientRing R>
R pow(const R& base, unsigned e) {
    R result = lift(Rational(1), base);
    R b = base;
    while (e) {
        if (e & 1u) result = result * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return result;
}

}  // namespace g2cover
