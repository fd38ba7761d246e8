#include "bfly/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace bfly {

const char* var_name(Var v) {
    static constexpr const char* names[] = {"a", "b", "c", "d", "k"};
    return names[static_cast<int>(v)];
}

bool parse_var(std::string_view name, Var& out) {
    for (Var v : kAllVars) {
        if (name == var_name(v)) {
            out = v;
            return true;
        }
    }
    return false;
}

// -- Monomial ----------------------------------------------------------------

Monomial Monomial::variable(Var v, unsigned exponent) {
    if (exponent > kMaxExponent)
        throw std::overflow_error("monomial exponent overflow");
    Monomial m;
    m.bits_ = static_cast<std::uint64_t>(exponent) << shift(v);
    m.degree_ = exponent;
    return m;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
    Monomial m;
    for (Var v : kAllVars)
        if (x.exponent(v) + y.exponent(v) > Monomial::kMaxExponent)
            throw std::overflow_error("monomial exponent overflow");
    m.bits_ = x.bits_ + y.bits_;
    m.degree_ = x.degree_ + y.degree_;
    return m;
}

Monomial gcd(const Monomial& x, const Monomial& y) {
    Monomial m;
    for (Var v : kAllVars) {
        unsigned e = std::min(x.exponent(v), y.exponent(v));
        m.bits_ |= static_cast<std::uint64_t>(e) << Monomial::shift(v);
        m.degree_ += e;
    }
    return m;
}

Monomial operator/(const Monomial& x, const Monomial& y) {
    Monomial m;
    m.bits_ = x.bits_ - y.bits_;
    m.degree_ = x.degree_ - y.degree_;
    return m;
}

bool Monomial::divides(const Monomial& other) const {
    for (Var v : kAllVars)
        if (exponent(v) > other.exponent(v))
            return false;
    return true;
}

std::string Monomial::to_string() const {
    std::string out;
    for (Var v : kAllVars) {
        unsigned e = exponent(v);
        if (e == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += var_name(v);
        if (e > 1)
            out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

// -- Polynomial --------------------------------------------------------------

namespace {

bool descending(const Term& x, const Term& y) { return x.monomial > y.monomial; }

} // namespace

Polynomial::Polynomial(const Rational& constant) {
    if (!constant.is_zero())
        terms_.push_back({Monomial(), constant});
}

Polynomial Polynomial::variable(Var v) {
    return monomial(Monomial::variable(v), Rational(1));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& coefficient) {
    Polynomial p;
    if (!coefficient.is_zero())
        p.terms_.push_back({m, coefficient});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), descending);
    Polynomial p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
            p.terms_.back().coefficient += t.coefficient;
            if (p.terms_.back().coefficient.is_zero())
                p.terms_.pop_back();
        } else if (!t.coefficient.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Rational Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.back().monomial.is_one())
        return terms_.back().coefficient;
    return Rational(0);
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_)
        t.coefficient = -t.coefficient;
    return p;
}

namespace {

// Merge of two descending term lists; `sign` is +1 or -1 applied to y.
std::vector<Term> merge(const std::vector<Term>& x, const std::vector<Term>& y, int sign) {
    std::vector<Term> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].monomial > y[j].monomial)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].monomial > x[i].monomial) {
            out.push_back({y[j].monomial, sign > 0 ? y[j].coefficient : -y[j].coefficient});
            ++j;
        } else {
            Rational c = sign > 0 ? x[i].coefficient + y[j].coefficient
                                  : x[i].coefficient - y[j].coefficient;
            if (!c.is_zero())
                out.push_back({x[i].monomial, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    terms_ = merge(terms_, o.terms_, +1);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    terms_ = merge(terms_, o.terms_, -1);
    return *this;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
    if (x.is_zero() || y.is_zero())
        return {};
    if (x.size() == 1 && x.terms_[0].monomial.is_one())
        return y.scaled(x.terms_[0].coefficient);
    if (y.size() == 1 && y.terms_[0].monomial.is_one())
        return x.scaled(y.terms_[0].coefficient);

    std::unordered_map<std::uint64_t, std::pair<Monomial, mpq_class>> acc;
    acc.reserve(x.size() * y.size());
    mpq_class product;
    for (const auto& s : x.terms_) {
        for (const auto& t : y.terms_) {
            Monomial m = s.monomial * t.monomial;
            mpq_mul(product.get_mpq_t(), s.coefficient.raw().get_mpq_t(), t.coefficient.raw().get_mpq_t());
            auto [it, inserted] = acc.try_emplace(m.bits(), m, mpq_class());
            it->second.second += product;
        }
    }
    Polynomial p;
    p.terms_.reserve(acc.size());
    for (auto& [bits, entry] : acc)
        if (sgn(entry.second) != 0)
            p.terms_.push_back({entry.first, Rational(std::move(entry.second))});
    std::sort(p.terms_.begin(), p.terms_.end(), descending);
    return p;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
    if (factor.is_zero())
        return {};
    Polynomial p = *this;
    for (auto& t : p.terms_)
        t.coefficient *= factor;
    return p;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result(Rational(1));
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u)
            result = result * base;
        exponent >>= 1;
        if (exponent > 0)
            base = base * base;
    }
    return result;
}

Monomial Polynomial::monomial_content() const {
    if (terms_.empty())
        return {};
    Monomial g = terms_.front().monomial;
    for (const auto& t : terms_) {
        g = gcd(g, t.monomial);
        if (g.is_one())
            break;
    }
    return g;
}

Polynomial Polynomial::divided_by(const Monomial& m) const {
    if (m.is_one())
        return *this;
    Polynomial p = *this;
    for (auto& t : p.terms_)
        t.monomial = t.monomial / m;
    return p;
}

Rational Polynomial::content() const {
    if (terms_.empty())
        return Rational(1);
    BigInt num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        BigInt n = t.coefficient.numerator();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        BigInt d = t.coefficient.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    return Rational(num_gcd, den_lcm);
}

Rational Polynomial::evaluate(const Assignment& at) const {
    // Powers are cached per variable; degrees stay small.
    std::array<std::vector<mpq_class>, kVarCount> powers;
    for (int v = 0; v < kVarCount; ++v)
        powers[v].push_back(mpq_class(1));
    mpq_class sum, term;
    for (const auto& t : terms_) {
        term = t.coefficient.raw();
        for (int v = 0; v < kVarCount; ++v) {
            unsigned e = t.monomial.exponent(static_cast<Var>(v));
            auto& cache = powers[v];
            while (cache.size() <= e)
                cache.push_back(cache.back() * at[v].raw());
            if (e > 0)
                term *= cache[e];
        }
        sum += term;
    }
    return Rational(std::move(sum));
}

std::string Polynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coefficient;
        bool negative = c.sign() < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        Rational magnitude = c.abs();
        if (t.monomial.is_one()) {
            out += magnitude.to_string();
        } else {
            if (!magnitude.is_one())
                out += magnitude.to_string() + "*";
            out += t.monomial.to_string();
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
}

// -- RationalFunction --------------------------------------------------------

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero())
        throw DivisionByZero("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    if (den_.is_constant()) {
        Rational c = den_.constant_term();
        if (!c.is_one()) {
            num_ = num_.scaled(c.inverse());
            den_ = Polynomial(Rational(1));
        }
        return;
    }
    Monomial common = gcd(num_.monomial_content(), den_.monomial_content());
    if (!common.is_one()) {
        num_ = num_.divided_by(common);
        den_ = den_.divided_by(common);
    }
    Rational scale = den_.content();
    if (den_.leading_term().coefficient.sign() < 0)
        scale = -scale;
    if (!scale.is_one()) {
        Rational inv = scale.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
    // num = c * den for a constant c: same support and proportional coefficients.
    if (num_.size() == den_.size()) {
        Rational ratio = num_.leading_term().coefficient / den_.leading_term().coefficient;
        bool proportional = true;
        for (std::size_t i = 0; i < num_.size() && proportional; ++i) {
            const auto& s = num_.terms()[i];
            const auto& t = den_.terms()[i];
            proportional = s.monomial == t.monomial && s.coefficient == ratio * t.coefficient;
        }
        if (proportional) {
            num_ = Polynomial(ratio);
            den_ = Polynomial(Rational(1));
        }
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction f = *this;
    f.num_ = -f.num_;
    return f;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    if (den_ == o.den_) {
        num_ -= o.num_;
    } else {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (num_ == o.den_ && !num_.is_constant()) {
        num_ = o.num_;
    } else if (den_ == o.num_ && !den_.is_constant()) {
        den_ = o.den_;
    } else {
        num_ = num_ * o.num_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.num_.is_zero())
        throw DivisionByZero("division by the zero rational function");
    if (den_ == o.den_) {
        den_ = o.num_;
    } else if (num_ == o.num_) {
        num_ = o.den_;
    } else {
        num_ = num_ * o.den_;
        den_ = den_ * o.num_;
    }
    normalize();
    return *this;
}

bool operator==(const RationalFunction& x, const RationalFunction& y) {
    if (x.den_ == y.den_)
        return x.num_ == y.num_;
    return x.num_ * y.den_ == y.num_ * x.den_;
}

Rational RationalFunction::evaluate(const Assignment& at) const {
    Rational d = den_.evaluate(at);
    if (d.is_zero())
        throw DenominatorVanishes("denominator " + den_.to_string() + " vanishes");
    return num_.evaluate(at) / d;
}

std::string RationalFunction::to_string() const {
    if (den_.is_constant())
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << f.to_string();
}

// -- parser ------------------------------------------------------------------

namespace {

class FormulaParser {
public:
    explicit FormulaParser(std::string_view text) : text_(text) {}

    RationalFunction parse() {
        RationalFunction f = expr();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected character");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("formula parse error at offset " + std::to_string(pos_) +
                                    ": " + what + " in '" + std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction expr() {
        RationalFunction f = term();
        for (;;) {
            if (accept('+'))
                f += term();
            else if (accept('-'))
                f -= term();
            else
                return f;
        }
    }

    RationalFunction term() {
        RationalFunction f = unary();
        for (;;) {
            if (accept('*'))
                f *= unary();
            else if (accept('/'))
                f /= unary();
            else
                return f;
        }
    }

    RationalFunction unary() {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        RationalFunction base = primary();
        if (accept('^')) {
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected exponent");
            unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
            RationalFunction result(1);
            for (unsigned i = 0; i < e; ++i)
                result *= base;
            return result;
        }
        return base;
    }

    RationalFunction primary() {
        skip_space();
        if (accept('(')) {
            RationalFunction f = expr();
            if (!accept(')'))
                fail("expected ')'");
            return f;
        }
        if (pos_ >= text_.size())
            fail("unexpected end");
        char ch = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return RationalFunction(Rational(BigInt(std::string(text_.substr(start, pos_ - start)), 10)));
        }
        Var v;
        if (parse_var(text_.substr(pos_, 1), v)) {
            ++pos_;
            return RationalFunction::variable(v);
        }
        fail("unexpected character");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

RationalFunction parse_rational_function(std::string_view text) {
    return FormulaParser(text).parse();
}

} // namespace bfly
