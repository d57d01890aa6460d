#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "g2cover/errors.hpp"

namespace g2cover {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Backed by GMP's mpq_class; every constructor canonicalizes so equality is
/// structural. The textual form is `[-]digits[/digits]`.
class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(static_cast<long>(v)) {}
    Rational(unsigned v) : q_(v) {}
    Rational(unsigned long v) : q_(v) {}
    explicit Rational(const mpz_class& num) : q_(num) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DivisionError("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses the literal grammar `[-]digits[/digits]`; anything else throws
    /// ParseError (no whitespace, no leading '+', no empty parts).
    static Rational parse(std::string_view text) {
        auto digits = [](std::string_view s) {
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        std::string_view body = text;
        bool negative = false;
        if (!body.empty() && body.front() == '-') {
            negative = true;
            body.remove_prefix(1);
        }
        const auto slash = body.find('/');
        std::string_view num = body.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
        if (!digits(num) || (slash != std::string_view::npos && !digits(den)))
            throw ParseError("malformed rational literal '" + std::string(text) + "'");
        mpz_class n(std::string(num), 10);
        mpz_class d = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        if (negative) n = -n;
        return Rational(n, d);
    }

    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str(10);
        return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
    }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionError("rational division by zero");
        q_ /= o.q_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational inverse() const { return Rational(1) / *this; }

    Rational pow(unsigned e) const {
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
        mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
        return Rational(n, d);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

inline Rational operator""_q(const char* text, std::size_t len) { return Rational::parse({text, len}); }

}  // namespace g2cover

template <>
struct std::hash<g2cover::Rational> {
    std::size_t operator()(const g2cover::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};
