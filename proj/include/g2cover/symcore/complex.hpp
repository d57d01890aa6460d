#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>

#include "g2cover/errors.hpp"
#include "g2cover/symcore/rational.hpp"

namespace g2cover {

inline constexpr mpfr_prec_t kDefaultPrecisionBits = 256;
inline constexpr mpfr_prec_t kMinPrecisionBits = 128;

/// Binary floating-point number with an explicit precision (bits).
/// Binary operations round to the larger of the two operand precisions, so
/// a result is never less precise than its inputs.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits = kDefaultPrecisionBits) {
        mpfr_init2(v_, std::max(bits, kMinPrecisionBits));
        mpfr_set_zero(v_, 1);
    }
    BigFloat(long v, mpfr_prec_t bits) : BigFloat(bits) { mpfr_set_si(v_, v, MPFR_RNDN); }
    BigFloat(const Rational& q, mpfr_prec_t bits = kDefaultPrecisionBits) : BigFloat(bits) {
        mpfr_set_q(v_, q.raw().get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) : BigFloat(o.precision()) { mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept : BigFloat(o.precision()) { mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.precision());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    std::string str(int digits = 30) const {
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rg", digits, v_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }

    template <class Op>
    static BigFloat apply(const BigFloat& a, const BigFloat& b, Op op) {
        BigFloat r(std::max(a.precision(), b.precision()));
        op(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    template <class Op>
    static BigFloat apply(const BigFloat& a, Op op) {
        BigFloat r(a.precision());
        op(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return apply(a, b, mpfr_add); }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return apply(a, b, mpfr_sub); }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return apply(a, b, mpfr_mul); }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return apply(a, b, mpfr_div); }
    BigFloat operator-() const { return apply(*this, mpfr_neg); }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }

    friend BigFloat abs(const BigFloat& a) { return apply(a, mpfr_abs); }
    friend BigFloat sqrt(const BigFloat& a) { return apply(a, mpfr_sqrt); }
    friend BigFloat cbrt(const BigFloat& a) { return apply(a, mpfr_cbrt); }
    friend BigFloat cos(const BigFloat& a) { return apply(a, mpfr_cos); }
    friend BigFloat sin(const BigFloat& a) { return apply(a, mpfr_sin); }
    friend BigFloat atan2(const BigFloat& y, const BigFloat& x) { return apply(y, x, mpfr_atan2); }
    friend BigFloat hypot(const BigFloat& a, const BigFloat& b) { return apply(a, b, mpfr_hypot); }

    /// 2^e at the given precision.
    static BigFloat exp2(long e, mpfr_prec_t bits = kDefaultPrecisionBits) {
        BigFloat r(bits);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

private:
    mpfr_t v_;
};

/// High-precision complex scalar. The precision is carried by both parts
/// and propagated through arithmetic (max of the operands).
class Complex {
public:
    explicit Complex(mpfr_prec_t bits = kDefaultPrecisionBits) : re_(bits), im_(bits) {}
    Complex(int v) : re_(static_cast<long>(v), kDefaultPrecisionBits), im_(kDefaultPrecisionBits) {}
    Complex(const Rational& q, mpfr_prec_t bits = kDefaultPrecisionBits) : re_(q, bits), im_(bits) {}
    Complex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
        const auto bits = std::max(re_.precision(), im_.precision());
        if (re_.precision() != bits) re_ = BigFloat(re_) * BigFloat(1L, bits);
        if (im_.precision() != bits) im_ = BigFloat(im_) * BigFloat(1L, bits);
    }

    const BigFloat& real() const { return re_; }
    const BigFloat& imag() const { return im_; }
    mpfr_prec_t precision_bits() const { return std::max(re_.precision(), im_.precision()); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        if (b.is_zero()) throw DivisionError("complex division by zero");
        const BigFloat d = b.re_ * b.re_ + b.im_ * b.im_;
        return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
    }
    Complex operator-() const { return {-re_, -im_}; }
    Complex& operator+=(const Complex& o) { return *this = *this + o; }
    Complex& operator-=(const Complex& o) { return *this = *this - o; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }
    Complex& operator/=(const Complex& o) { return *this = *this / o; }

    // Bitwise equality; tolerance comparisons go through approx_equal.
    friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    friend BigFloat abs(const Complex& z) { return hypot(z.re_, z.im_); }
    BigFloat arg() const { return atan2(im_, re_); }

    static Complex polar(const BigFloat& r, const BigFloat& theta) { return {r * cos(theta), r * sin(theta)}; }

    /// Principal square root (branch cut on the negative real axis).
    friend Complex sqrt(const Complex& z) {
        if (z.is_zero()) return Complex(z.precision_bits());
        const BigFloat two(2L, z.precision_bits());
        const BigFloat m = abs(z);
        BigFloat re = sqrt((m + abs(z.re_)) / two);
        BigFloat im = z.im_ / (two * re);
        if (z.re_.sign() >= 0) return {re, im};
        // For Re z < 0 swap roles so the imaginary part carries the sign of Im z.
        BigFloat a = abs(im);
        BigFloat b = z.im_.sign() < 0 ? -re : re;
        return {a, b};
    }

    /// Principal cube root: |z|^(1/3) * exp(i*arg(z)/3).
    friend Complex cbrt(const Complex& z) {
        if (z.is_zero()) return Complex(z.precision_bits());
        const BigFloat three(3L, z.precision_bits());
        return polar(cbrt(abs(z)), z.arg() / three);
    }

    /// Primitive cube root of unity exp(2*pi*i/3) at the given precision.
    static Complex omega(mpfr_prec_t bits = kDefaultPrecisionBits) {
        const BigFloat half = BigFloat(1L, bits) / BigFloat(2L, bits);
        return {-half, sqrt(BigFloat(3L, bits)) * half};
    }

    std::string str(int digits = 30) const { return re_.str(digits) + (im_.sign() < 0 ? " - " : " + ") + abs(im_).str(digits) + "i"; }
    friend std::ostream& operator<<(std::ostream& os, const Complex& z) { return os << z.str(); }

private:
    BigFloat re_;
    BigFloat im_;
};

/// |a-b| <= rel * max(|a|, |b|), or both exactly zero.
inline bool approx_equal(const Complex& a, const Complex& b, const Rational& rel) {
    const BigFloat scale = std::max(abs(a), abs(b), [](const BigFloat& x, const BigFloat& y) { return x < y; });
    if (scale.is_zero()) return true;
    return !(abs(a - b) > scale * BigFloat(rel, a.precision_bits()));
}

inline BigFloat relative_error(const Complex& value, const Complex& reference) {
    const BigFloat ref = abs(reference);
    if (ref.is_zero()) return abs(value);
    return abs(value - reference) / ref;
}

}  // namespace g2cover
