#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "hyperell/errors.hpp"

namespace hyperell {

using Integer = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Serializes as "num/den", or "num" when the denominator is one.
class Rational {
public:
    Rational() = default;
    Rational(long n) : value_(n) {}                                   // NOLINT
    Rational(int n) : value_(static_cast<long>(n)) {}                 // NOLINT
    Rational(const Integer& n) : value_(n) {}                         // NOLINT
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw error("Rational: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    static Rational parse(std::string_view text) {
        std::string s(text);
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(Integer(s));
            return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw error("Rational: cannot parse '" + s + "'");
        }
    }

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    int sign() const { return sgn(value_); }
    double to_double() const { return value_.get_d(); }

    std::string str() const {
        if (value_.get_den() == 1) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational operator-() const { return from_raw(-value_); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational inverse() const {
        if (is_zero()) throw error("Rational: inverse of zero");
        return from_raw(1 / value_);
    }

    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return Rational(n, d);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static Rational from_raw(mpq_class q) {
        Rational r;
        r.value_ = std::move(q);
        return r;
    }
    mpq_class value_{0};
};

} // namespace hyperell
