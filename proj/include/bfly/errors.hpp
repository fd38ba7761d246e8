#pragma once

#include <stdexcept>
#include <string>

namespace bfly {

// Base for every failure that means "this configuration is degenerate".
// Trial runners catch it and count a skip; nothing else is swallowed.
class Degeneracy : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DivisionByZero : public Degeneracy {
public:
    explicit DivisionByZero(const std::string& context = "division by zero")
        : Degeneracy(context) {}
};

// A rational function's denominator evaluated to zero at an assignment.
class DenominatorVanishes : public Degeneracy {
public:
    explicit DenominatorVanishes(const std::string& what)
        : Degeneracy(what) {}
};

enum class GeometryErrorKind {
    coincident_points,
    parallel_lines,
    coincident_lines,
    collinear_points,
    not_collinear,
    point_not_on_circle,
    point_not_on_line,
    degenerate_newton_line,
    coincident_circles,
    invalid_line,
};

const char* to_string(GeometryErrorKind kind);

class GeometryError : public Degeneracy {
public:
    GeometryError(GeometryErrorKind kind, const std::string& detail)
        : Degeneracy(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    GeometryErrorKind kind() const noexcept { return kind_; }

private:
    GeometryErrorKind kind_;
};

// Constructing p/0 is a programming error, not a degenerate configuration.
class ZeroDenominator : public std::invalid_argument {
public:
    ZeroDenominator() : std::invalid_argument("zero denominator") {}
};

} // namespace bfly

namespace bfly {

// A sampled configuration violates the theorem's hypotheses (zero coordinate,
// coincident vertices, excluded parameter).
class DegenerateConfig : public Degeneracy {
public:
    explicit DegenerateConfig(const std::string& what) : Degeneracy("DegenerateConfig: " + what) {}
};

} // namespace bfly
