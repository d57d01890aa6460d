#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "g2cover/errors.hpp"
#include "g2cover/symcore/gcd.hpp"
#include "g2cover/symcore/unipoly.hpp"

namespace g2cover {

/// Quotient of two rational polynomials in one variable, kept reduced:
/// gcd(numerator, denominator) = 1 and the denominator is monic.
class RatFunc {
public:
    RatFunc() : num_("x"), den_(QPoly::constant(Rational(1), "x")) {}
    RatFunc(const Rational& c, std::string var = "x")
        : num_(QPoly::constant(c, var)), den_(QPoly::constant(Rational(1), var)) {}
    RatFunc(int c) : RatFunc(Rational(c)) {}
    explicit RatFunc(QPoly num) : RatFunc(std::move(num), QPoly::constant(Rational(1), "x")) {}
    RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc variable(const std::string& var) { return RatFunc(QPoly({Rational(0), Rational(1)}, var)); }

    const QPoly& numerator() const { return num_; }
    const QPoly& denominator() const { return den_; }
    const std::string& var() const { return num_.is_constant() ? den_.var() : num_.var(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    QPoly as_polynomial() const {
        if (!is_polynomial()) throw DivisionError("rational function has a nonconstant denominator");
        return num_.scale(Rational(1) / den_.leading()).with_var(var());
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionError("rational function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    Rational operator()(const Rational& at) const {
        const Rational d = den_(at);
        if (d.is_zero()) throw DivisionError("rational function evaluated at a pole");
        return num_(at) / d;
    }

    std::string str() const {
        if (is_polynomial()) return as_polynomial().str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.str(); }

private:
    void normalize() {
        if (den_.is_zero()) throw DivisionError("rational function with zero denominator");
        const std::string v = num_.is_constant() ? den_.var() : num_.var();
        if (num_.is_zero()) {
            num_ = QPoly(v);
            den_ = QPoly::constant(Rational(1), v);
            return;
        }
        if (!den_.is_constant()) {
            const QPoly g = gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = divide_exact(num_, g);
                den_ = divide_exact(den_, g);
            }
        }
        const Rational lc = den_.leading();
        num_ = num_.scale(Rational(1) / lc).with_var(v);
        den_ = den_.scale(Rational(1) / lc).with_var(v);
    }

    QPoly num_;
    QPoly den_;
};

template <>
struct ring_traits<RatFunc> {
    static constexpr bool is_exact = true;
    static bool is_zero(const RatFunc& a) { return a.is_zero(); }
    static RatFunc from_rational(const Rational& q, const RatFunc& proto) { return RatFunc(q, proto.var()); }
    static RatFunc exact_div(const RatFunc& a, const RatFunc& b) { return a / b; }
};

}  // namespace g2cover
