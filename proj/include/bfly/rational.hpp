#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "bfly/errors.hpp"

namespace bfly {

using BigInt = mpz_class;

/// Exact rational number, always stored reduced with a positive denominator.
///
/// Zero is 0/1. Two Rationals compare equal iff their stored numerator and
/// denominator are identical.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT: implicit from integers is intended
    Rational(int value) : q_(static_cast<long>(value)) {}
    explicit Rational(const BigInt& value) : q_(value) {}

    /// Throws ZeroDenominator if den == 0.
    Rational(const BigInt& num, const BigInt& den);

    static Rational from_parts(const BigInt& num, const BigInt& den) { return {num, den}; }

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational inverse() const { return Rational(1) / *this; }
    Rational pow(unsigned exponent) const;

    double to_double() const { return q_.get_d(); }

    /// Canonical "p/q", or "p" when q == 1.
    std::string to_string() const;

    const mpq_class& raw() const { return q_; }
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

private:
    mpq_class q_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace bfly
