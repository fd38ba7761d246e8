#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bfly/rational.hpp"

namespace bfly {

/// The five indeterminates of the coordinate gauge, in variable order
/// a < b < c < d < k.
enum class Var : std::uint8_t { a, b, c, d, k };

inline constexpr int kVarCount = 5;
inline constexpr std::array<Var, kVarCount> kAllVars = {Var::a, Var::b, Var::c, Var::d, Var::k};

const char* var_name(Var v);
/// Returns false if `name` is not one of a, b, c, d, k.
bool parse_var(std::string_view name, Var& out);

using Assignment = std::array<Rational, kVarCount>;

/// Power product a^i b^j c^l d^m k^n, packed as 12-bit fields with k in the
/// most significant field. Ordering is graded lex: total degree first, then
/// the exponents of k, d, c, b, a in turn.
class Monomial {
public:
    static constexpr unsigned kFieldBits = 12;
    static constexpr unsigned kMaxExponent = (1u << kFieldBits) - 1;

    constexpr Monomial() = default;
    static Monomial variable(Var v, unsigned exponent = 1);

    unsigned exponent(Var v) const {
        return static_cast<unsigned>((bits_ >> shift(v)) & kMaxExponent);
    }
    unsigned degree() const { return degree_; }
    bool is_one() const { return bits_ == 0; }

    friend Monomial operator*(const Monomial& x, const Monomial& y);
    /// Componentwise minimum.
    friend Monomial gcd(const Monomial& x, const Monomial& y);
    /// Requires y | x.
    friend Monomial operator/(const Monomial& x, const Monomial& y);
    bool divides(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
        if (auto c = x.degree_ <=> y.degree_; c != 0)
            return c;
        return x.bits_ <=> y.bits_;
    }

    std::uint64_t bits() const { return bits_; }
    std::string to_string() const;

private:
    static unsigned shift(Var v) { return static_cast<unsigned>(v) * kFieldBits; }

    std::uint64_t bits_ = 0;
    std::uint32_t degree_ = 0;
};

struct Term {
    Monomial monomial;
    Rational coefficient;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q in a, b, c, d, k. Terms are kept strictly
/// descending in the monomial order with no zero coefficients, so structural
/// equality is mathematical equality.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& constant);  // NOLINT: constants promote
    Polynomial(long constant) : Polynomial(Rational(constant)) {}
    Polynomial(int constant) : Polynomial(Rational(constant)) {}
    static Polynomial variable(Var v);
    static Polynomial monomial(const Monomial& m, const Rational& coefficient);
    /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
    static Polynomial from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading_term() const { return terms_.front(); }
    unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().monomial.degree(); }
    /// Constant term value (0 if absent).
    Rational constant_term() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
    friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
    friend Polynomial operator*(const Polynomial& x, const Polynomial& y);

    Polynomial scaled(const Rational& factor) const;
    Polynomial pow(unsigned exponent) const;

    /// gcd of all monomials (1 for the zero polynomial).
    Monomial monomial_content() const;
    Polynomial divided_by(const Monomial& m) const;
    /// Positive rational c such that this / c has coprime integer coefficients.
    Rational content() const;

    Rational evaluate(const Assignment& at) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Stable human-readable rendering, e.g. "2*a*b*k^2 - c^2".
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

/// Element of Q(a, b, c, d, k) held as numerator / denominator.
///
/// The denominator is nonzero, has coprime integer coefficients and a positive
/// leading coefficient; common monomial factors are cancelled. No full gcd
/// reduction is attempted, so equality is decided by cross-multiplication.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Rational& constant) : num_(constant), den_(1) {}  // NOLINT
    RationalFunction(long constant) : RationalFunction(Rational(constant)) {}
    RationalFunction(int constant) : RationalFunction(Rational(constant)) {}
    RationalFunction(Polynomial numerator) : num_(std::move(numerator)), den_(1) { normalize(); }  // NOLINT
    /// Throws DivisionByZero if denominator is the zero polynomial.
    RationalFunction(Polynomial numerator, Polynomial denominator);

    static RationalFunction variable(Var v) { return RationalFunction(Polynomial::variable(v)); }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction x, const RationalFunction& y) { return x += y; }
    friend RationalFunction operator-(RationalFunction x, const RationalFunction& y) { return x -= y; }
    friend RationalFunction operator*(RationalFunction x, const RationalFunction& y) { return x *= y; }
    friend RationalFunction operator/(RationalFunction x, const RationalFunction& y) { return x /= y; }

    /// Mathematical equality: x.num * y.den == y.num * x.den.
    friend bool operator==(const RationalFunction& x, const RationalFunction& y);

    /// Throws DenominatorVanishes if the denominator is zero at `at`.
    Rational evaluate(const Assignment& at) const;

    std::string to_string() const;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

inline bool is_zero(const RationalFunction& f) { return f.numerator().is_zero(); }
inline bool ratfun_eq(const RationalFunction& f, const RationalFunction& g) { return f == g; }

/// Parses an expression over integers and a..k with + - * / ^ and parentheses,
/// e.g. "(b*d*k^2 + b*d + c^2)/(2*c)". Throws std::invalid_argument.
RationalFunction parse_rational_function(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

} // namespace bfly
