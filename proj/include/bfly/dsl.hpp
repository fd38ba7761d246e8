#pragma once

// The .geo construction language.
//
//   program    := (param_decl | def | assert)* ;
//   param_decl := "param" ident ("," ident)* ";" ;
//   def        := type ident "=" expr ";"          type ∈ {point, line, circle, scalar}
//   assert     := "assert" predicate "(" expr ("," expr)* ")" ";" ;
//   expr       := term (("+" | "-") term)* ;
//   term       := unary (("*" | "/") unary)* ;
//   unary      := "-" unary | primary ;
//   primary    := integer | ident | ident "(" expr ("," expr)* ")"
//               | "(" expr ")" | "(" expr "," expr ")" ;
//
// "#" starts a comment running to end of line. See docs/dsl.md.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bfly/geometry.hpp"
#include "bfly/polynomial.hpp"
#include "bfly/report.hpp"
#include "bfly/theorems.hpp"
#include "bfly/trials.hpp"

namespace bfly::dsl {

struct Span {
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t offset = 0;
    std::size_t length = 0;
};

enum class Type { scalar, point, line, circle };

const char* type_name(Type type);

struct Expr {
    enum class Kind { number, identifier, negate, binary, point_literal, call };

    Kind kind = Kind::number;
    std::string text;  // digits, identifier, operator or function name
    std::vector<Expr> args;
    Span span;
    Type type = Type::scalar;
};

/// Structural equality, ignoring source spans.
bool same_structure(const Expr& x, const Expr& y);

struct ParamDecl {
    std::vector<std::string> names;
    std::vector<Span> name_spans;
    Span span;
};

struct Definition {
    Type type = Type::scalar;
    std::string name;
    Expr value;
    Span span;
    Span name_span;
};

enum class Predicate { midpoint, perpendicular, parallel, collinear, concyclic, harmonic, coaxial, on };

const char* predicate_name(Predicate p);

struct Assertion {
    Predicate predicate = Predicate::midpoint;
    std::vector<Expr> args;
    Span span;
};

using Statement = std::variant<ParamDecl, Definition, Assertion>;

struct Construction {
    std::vector<Statement> statements;

    /// Parameter names in declaration order.
    std::vector<std::string> params() const;
    std::vector<const Assertion*> assertions() const;
};

bool same_structure(const Construction& x, const Construction& y);

enum class DiagnosticKind { syntax, name, type };

class ParseError : public std::runtime_error {
public:
    ParseError(DiagnosticKind kind, Span span, std::string message, std::vector<std::string> expected = {});

    DiagnosticKind kind() const noexcept { return kind_; }
    const Span& span() const noexcept { return span_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }
    const std::string& message() const noexcept { return message_; }

    /// "file:line:col: SyntaxError: message (expected ...)".
    std::string format(const std::string& filename) const;

private:
    DiagnosticKind kind_;
    Span span_;
    std::string message_;
    std::vector<std::string> expected_;
};

/// Parses and type-checks. Throws ParseError.
Construction parse(std::string_view source);

/// Canonical source text; parse(print(c)) is structurally identical to c.
std::string print(const Construction& c);
std::string print(const Expr& e);
std::string print(const Assertion& a);

// -- evaluation ----------------------------------------------------------------

template <Field T>
using Value = std::variant<T, Point<T>, Line<T>, Circle<T>>;

template <Field T>
using Environment = std::map<std::string, Value<T>>;

/// Evaluates every definition in order, starting from the parameter bindings.
/// Throws Degeneracy from the kernel, std::invalid_argument for unbound params.
template <Field T>
Environment<T> evaluate_definitions(const Construction& c, const std::map<std::string, T>& params);

template <Field T>
Value<T> evaluate_expr(const Expr& e, const Environment<T>& env);

template <Field T>
bool evaluate_assertion(const Assertion& a, const Environment<T>& env);

/// Outcome of one evaluation with fixed parameters.
struct Instance {
    Environment<Rational> env;
    std::vector<bool> holds;  // per assertion
};

Instance evaluate_instance(const Construction& c, const std::map<std::string, Rational>& params);

/// Trial function sampling every parameter (declaration order) with `bound`.
TrialFn construction_trial(const Construction& c, std::int64_t bound);

VerificationReport evaluate_numeric(const Construction& c, const std::string& id, const NumericOptions& options);

/// Requires every parameter to be one of a, b, c, d, k (std::invalid_argument).
VerificationReport evaluate_symbolic(const Construction& c, const std::string& id);

} // namespace bfly::dsl
