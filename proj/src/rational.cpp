#include "bfly/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace bfly {

const char* to_string(GeometryErrorKind kind) {
    switch (kind) {
    case GeometryErrorKind::coincident_points: return "CoincidentPoints";
    case GeometryErrorKind::parallel_lines: return "ParallelLines";
    case GeometryErrorKind::coincident_lines: return "CoincidentLines";
    case GeometryErrorKind::collinear_points: return "CollinearPoints";
    case GeometryErrorKind::not_collinear: return "NotCollinear";
    case GeometryErrorKind::point_not_on_circle: return "PointNotOnCircle";
    case GeometryErrorKind::point_not_on_line: return "PointNotOnLine";
    case GeometryErrorKind::degenerate_newton_line: return "DegenerateNewtonLine";
    case GeometryErrorKind::coincident_circles: return "CoincidentCircles";
    case GeometryErrorKind::invalid_line: return "InvalidLine";
    }
    return "GeometryError";
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0)
        throw ZeroDenominator();
    q_.get_num() = num;
    q_.get_den() = den;
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) {
        if (s.empty())
            throw std::invalid_argument("empty integer");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size())
            throw std::invalid_argument("bad integer '" + std::string(s) + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("bad integer '" + std::string(s) + "'");
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return BigInt(digits, 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw DivisionByZero();
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(unsigned exponent) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), exponent);
    return Rational(n, d);
}

std::string Rational::to_string() const {
    if (q_.get_den() == 1)
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

} // namespace bfly

