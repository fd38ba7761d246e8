#include "bfly/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace bfly::dsl {

const char* type_name(Type type) {
    switch (type) {
    case Type::scalar: return "scalar";
    case Type::point: return "point";
    case Type::line: return "line";
    case Type::circle: return "circle";
    }
    return "?";
}

const char* predicate_name(Predicate p) {
    switch (p) {
    case Predicate::midpoint: return "midpoint";
    case Predicate::perpendicular: return "perpendicular";
    case Predicate::parallel: return "parallel";
    case Predicate::collinear: return "collinear";
    case Predicate::concyclic: return "concyclic";
    case Predicate::harmonic: return "harmonic";
    case Predicate::coaxial: return "coaxial";
    case Predicate::on: return "on";
    }
    return "?";
}

bool same_structure(const Expr& x, const Expr& y) {
    if (x.kind != y.kind || x.text != y.text || x.type != y.type || x.args.size() != y.args.size())
        return false;
    for (std::size_t i = 0; i < x.args.size(); ++i)
        if (!same_structure(x.args[i], y.args[i]))
            return false;
    return true;
}

namespace {

bool same_args(const std::vector<Expr>& x, const std::vector<Expr>& y) {
    if (x.size() != y.size())
        return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!same_structure(x[i], y[i]))
            return false;
    return true;
}

struct SameStatement {
    bool operator()(const ParamDecl& x, const ParamDecl& y) const { return x.names == y.names; }
    bool operator()(const Definition& x, const Definition& y) const {
        return x.type == y.type && x.name == y.name && same_structure(x.value, y.value);
    }
    bool operator()(const Assertion& x, const Assertion& y) const {
        return x.predicate == y.predicate && same_args(x.args, y.args);
    }
    template <class X, class Y>
    bool operator()(const X&, const Y&) const { return false; }
};

} // namespace

bool same_structure(const Construction& x, const Construction& y) {
    if (x.statements.size() != y.statements.size())
        return false;
    for (std::size_t i = 0; i < x.statements.size(); ++i)
        if (!std::visit(SameStatement{}, x.statements[i], y.statements[i]))
            return false;
    return true;
}

std::vector<std::string> Construction::params() const {
    std::vector<std::string> names;
    for (const auto& s : statements)
        if (const auto* p = std::get_if<ParamDecl>(&s))
            names.insert(names.end(), p->names.begin(), p->names.end());
    return names;
}

std::vector<const Assertion*> Construction::assertions() const {
    std::vector<const Assertion*> out;
    for (const auto& s : statements)
        if (const auto* a = std::get_if<Assertion>(&s))
            out.push_back(a);
    return out;
}

// -- diagnostics ----------------------------------------------------------------

ParseError::ParseError(DiagnosticKind kind, Span span, std::string message, std::vector<std::string> expected)
    : std::runtime_error(message), kind_(kind), span_(span), message_(std::move(message)),
      expected_(std::move(expected)) {}

std::string ParseError::format(const std::string& filename) const {
    static constexpr const char* names[] = {"SyntaxError", "NameError", "TypeError"};
    std::string out = filename + ":" + std::to_string(span_.line) + ":" + std::to_string(span_.column) +
                      ": " + names[static_cast<int>(kind_)] + ": " + message_;
    if (!expected_.empty()) {
        out += " (expected ";
        for (std::size_t i = 0; i < expected_.size(); ++i)
            out += (i == 0 ? "" : i + 1 == expected_.size() ? " or " : ", ") + expected_[i];
        out += ")";
    }
    return out;
}

// -- lexer --------------------------------------------------------------------------

namespace {

enum class Tok { identifier, integer, punct, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    Span span;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> tokens;
    std::size_t i = 0, line = 1, col = 1;
    auto advance = [&](std::size_t n) {
        for (std::size_t j = 0; j < n; ++j, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        const char ch = src[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        if (ch == '#') {
            while (i < src.size() && src[i] != '\n')
                advance(1);
            continue;
        }
        Token t;
        t.span = {line, col, i, 1};
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            t.kind = Tok::identifier;
            t.text = std::string(src.substr(i, j - i));
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            if (j < src.size() && (std::isalpha(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                throw ParseError(DiagnosticKind::syntax, {line, col + (j - i), j, 1},
                                 "identifier may not start with a digit");
            t.kind = Tok::integer;
            t.text = std::string(src.substr(i, j - i));
        } else if (std::string_view("(),;=+-*/").find(ch) != std::string_view::npos) {
            t.kind = Tok::punct;
            t.text = std::string(1, ch);
        } else {
            throw ParseError(DiagnosticKind::syntax, t.span,
                             std::string("unexpected character '") + ch + "'");
        }
        t.span.length = t.text.size();
        advance(t.text.size());
        tokens.push_back(std::move(t));
    }
    Token end;
    end.span = {line, col, src.size(), 0};
    tokens.push_back(end);
    return tokens;
}

// -- signatures ----------------------------------------------------------------------

struct Signature {
    std::vector<std::vector<Type>> params;  // alternatives per position
    Type result;
};

const std::map<std::string, Signature>& functions() {
    using enum Type;
    static const std::map<std::string, Signature> table = {
        {"midpoint", {{{point}, {point}}, point}},
        {"circumcenter", {{{point}, {point}, {point}}, point}},
        {"perp_bisector", {{{point}, {point}}, line}},
        {"perp_through", {{{point}, {line}}, line}},
        {"line", {{{point}, {point}}, line}},
        {"intersect", {{{line}, {line}}, point}},
        {"second_intersection", {{{circle}, {line}, {point}}, point}},
        {"circle_on_diameter", {{{point}, {point}}, circle}},
        {"circumcircle", {{{point}, {point}, {point}}, circle}},
        {"parallelogram_fourth", {{{point}, {point}, {point}}, point}},
        {"newton_line", {{{point}, {point}, {point}, {point}}, line}},
        {"on_unit_circle", {{{scalar}}, point}},
        {"power", {{{point}, {circle}}, scalar}},
        {"cross_ratio", {{{point}, {point}, {point}, {point}}, scalar}},
    };
    return table;
}

const std::map<std::string, std::pair<Predicate, Signature>>& predicates() {
    using enum Type;
    static const std::map<std::string, std::pair<Predicate, Signature>> table = {
        {"midpoint", {Predicate::midpoint, {{{point}, {point}, {point}}, scalar}}},
        {"perpendicular", {Predicate::perpendicular, {{{line}, {line}}, scalar}}},
        {"parallel", {Predicate::parallel, {{{line}, {line}}, scalar}}},
        {"collinear", {Predicate::collinear, {{{point}, {point}, {point}}, scalar}}},
        {"concyclic", {Predicate::concyclic, {{{point}, {point}, {point}, {point}}, scalar}}},
        {"harmonic", {Predicate::harmonic, {{{point}, {point}, {point}, {point}}, scalar}}},
        {"coaxial", {Predicate::coaxial, {{{circle}, {circle}, {circle}}, scalar}}},
        {"on", {Predicate::on, {{{point}, {line, circle}}, scalar}}},
    };
    return table;
}

std::optional<Type> type_keyword(const std::string& word) {
    if (word == "point") return Type::point;
    if (word == "line") return Type::line;
    if (word == "circle") return Type::circle;
    if (word == "scalar") return Type::scalar;
    return std::nullopt;
}

bool is_reserved(const std::string& word) {
    return word == "param" || word == "assert" || type_keyword(word).has_value();
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

// -- parser -----------------------------------------------------------------------------

class Parser {
public:
    explicit Parser(std::string_view source) : tokens_(tokenize(source)) {}

    Construction parse_program() {
        Construction c;
        while (peek().kind != Tok::end) {
            const Token& t = peek();
            if (t.kind == Tok::identifier && t.text == "param")
                c.statements.emplace_back(param_decl());
            else if (t.kind == Tok::identifier && t.text == "assert")
                c.statements.emplace_back(assertion());
            else if (t.kind == Tok::identifier && type_keyword(t.text))
                c.statements.emplace_back(definition());
            else
                throw ParseError(DiagnosticKind::syntax, t.span, "unexpected " + describe(t),
                                 {"'param'", "'assert'", "a type (point, line, circle, scalar)"});
        }
        return c;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    static std::string describe(const Token& t) {
        switch (t.kind) {
        case Tok::identifier: return "identifier " + quoted(t.text);
        case Tok::integer: return "integer " + t.text;
        case Tok::punct: return quoted(t.text);
        case Tok::end: return "end of input";
        }
        return "token";
    }

    bool at_punct(char ch) const { return peek().kind == Tok::punct && peek().text[0] == ch; }

    const Token& expect_punct(char ch, std::vector<std::string> also = {}) {
        if (!at_punct(ch)) {
            also.insert(also.begin(), quoted(std::string(1, ch)));
            throw ParseError(DiagnosticKind::syntax, peek().span, "unexpected " + describe(peek()),
                             std::move(also));
        }
        return next();
    }

    const Token& expect_identifier() {
        if (peek().kind != Tok::identifier)
            throw ParseError(DiagnosticKind::syntax, peek().span, "unexpected " + describe(peek()),
                             {"identifier"});
        return next();
    }

    void declare(const Token& name, Type type) {
        if (is_reserved(name.text))
            throw ParseError(DiagnosticKind::syntax, name.span,
                             quoted(name.text) + " is a reserved word", {"identifier"});
        if (symbols_.count(name.text))
            throw ParseError(DiagnosticKind::name, name.span, quoted(name.text) + " is already defined");
        symbols_[name.text] = type;
    }

    ParamDecl param_decl() {
        ParamDecl d;
        d.span = next().span;
        do {
            const Token& name = expect_identifier();
            declare(name, Type::scalar);
            d.names.push_back(name.text);
            d.name_spans.push_back(name.span);
        } while (at_punct(',') && (next(), true));
        expect_punct(';', {"','"});
        return d;
    }

    Definition definition() {
        Definition d;
        const Token& kw = next();
        d.span = kw.span;
        d.type = *type_keyword(kw.text);
        const Token& name = expect_identifier();
        d.name = name.text;
        d.name_span = name.span;
        if (is_reserved(name.text))
            throw ParseError(DiagnosticKind::syntax, name.span,
                             quoted(name.text) + " is a reserved word", {"identifier"});
        if (symbols_.count(name.text))
            throw ParseError(DiagnosticKind::name, name.span, quoted(name.text) + " is already defined");
        expect_punct('=');
        d.value = expr();
        if (d.value.type != d.type)
            throw ParseError(DiagnosticKind::type, d.value.span,
                             std::string("cannot bind a ") + type_name(d.value.type) + " to " +
                                 type_name(d.type) + " " + quoted(d.name));
        expect_punct(';', {"an operator"});
        symbols_[d.name] = d.type;  // defined only after its own expression
        return d;
    }

    Assertion assertion() {
        Assertion a;
        a.span = next().span;
        const Token& name = expect_identifier();
        auto it = predicates().find(name.text);
        if (it == predicates().end())
            throw ParseError(DiagnosticKind::syntax, name.span, "unknown predicate " + quoted(name.text),
                             {"midpoint, perpendicular, parallel, collinear, concyclic, harmonic, coaxial, on"});
        a.predicate = it->second.first;
        a.args = arguments();
        check_signature(name, it->second.second, a.args);
        expect_punct(';');
        return a;
    }

    std::vector<Expr> arguments() {
        std::vector<Expr> args;
        expect_punct('(');
        args.push_back(expr());
        while (at_punct(',')) {
            next();
            args.push_back(expr());
        }
        expect_punct(')', {"','", "an operator"});
        return args;
    }

    void check_signature(const Token& name, const Signature& sig, const std::vector<Expr>& args) {
        if (args.size() != sig.params.size())
            throw ParseError(DiagnosticKind::type, name.span,
                             quoted(name.text) + " takes " + std::to_string(sig.params.size()) +
                                 " arguments, got " + std::to_string(args.size()));
        for (std::size_t i = 0; i < args.size(); ++i) {
            const auto& allowed = sig.params[i];
            if (std::find(allowed.begin(), allowed.end(), args[i].type) == allowed.end()) {
                std::string want;
                for (std::size_t j = 0; j < allowed.size(); ++j)
                    want += (j ? " or " : "") + std::string(type_name(allowed[j]));
                throw ParseError(DiagnosticKind::type, args[i].span,
                                 "argument " + std::to_string(i + 1) + " of " + quoted(name.text) +
                                     " must be a " + want + ", got " + type_name(args[i].type));
            }
        }
    }

    static Span cover(const Span& from, const Span& to) {
        Span s = from;
        s.length = to.offset + to.length - from.offset;
        return s;
    }

    void require_scalar(const Expr& e, const std::string& context) {
        if (e.type != Type::scalar)
            throw ParseError(DiagnosticKind::type, e.span,
                             context + " needs a scalar, got " + type_name(e.type));
    }

    Expr expr() {
        Expr lhs = term();
        while (at_punct('+') || at_punct('-')) {
            const Token& op = next();
            Expr rhs = term();
            lhs = binary(op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Expr term() {
        Expr lhs = unary();
        while (at_punct('*') || at_punct('/')) {
            const Token& op = next();
            Expr rhs = unary();
            lhs = binary(op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Expr binary(const Token& op, Expr lhs, Expr rhs) {
        require_scalar(lhs, "operator " + quoted(op.text));
        require_scalar(rhs, "operator " + quoted(op.text));
        Expr e;
        e.kind = Expr::Kind::binary;
        e.text = op.text;
        e.span = cover(lhs.span, rhs.span);
        e.args.push_back(std::move(lhs));
        e.args.push_back(std::move(rhs));
        return e;
    }

    Expr unary() {
        if (at_punct('-')) {
            const Token& op = next();
            Expr operand = unary();
            require_scalar(operand, "unary '-'");
            Expr e;
            e.kind = Expr::Kind::negate;
            e.text = "-";
            e.span = cover(op.span, operand.span);
            e.args.push_back(std::move(operand));
            return e;
        }
        return primary();
    }

    Expr primary() {
        const Token& t = peek();
        if (t.kind == Tok::integer) {
            next();
            Expr e;
            e.kind = Expr::Kind::number;
            e.text = t.text;
            e.span = t.span;
            return e;
        }
        if (t.kind == Tok::identifier) {
            const Token& name = next();
            if (at_punct('('))
                return call(name);
            if (is_reserved(name.text))
                throw ParseError(DiagnosticKind::syntax, name.span,
                                 "unexpected reserved word " + quoted(name.text), {"an expression"});
            auto it = symbols_.find(name.text);
            if (it == symbols_.end())
                throw ParseError(DiagnosticKind::name, name.span, quoted(name.text) + " is not defined");
            Expr e;
            e.kind = Expr::Kind::identifier;
            e.text = name.text;
            e.span = name.span;
            e.type = it->second;
            return e;
        }
        if (at_punct('(')) {
            const Token& open = next();
            Expr first = expr();
            if (at_punct(',')) {
                next();
                Expr second = expr();
                const Token& close = expect_punct(')', {"an operator"});
                require_scalar(first, "point coordinate");
                require_scalar(second, "point coordinate");
                Expr e;
                e.kind = Expr::Kind::point_literal;
                e.span = cover(open.span, close.span);
                e.type = Type::point;
                e.args.push_back(std::move(first));
                e.args.push_back(std::move(second));
                return e;
            }
            expect_punct(')', {"','", "an operator"});
            return first;
        }
        throw ParseError(DiagnosticKind::syntax, t.span, "unexpected " + describe(t),
                         {"an integer", "identifier", "'('", "'-'"});
    }

    Expr call(const Token& name) {
        auto it = functions().find(name.text);
        if (it == functions().end())
            throw ParseError(DiagnosticKind::name, name.span, "unknown function " + quoted(name.text));
        Expr e;
        e.kind = Expr::Kind::call;
        e.text = name.text;
        e.args = arguments();
        check_signature(name, it->second, e.args);
        e.type = it->second.result;
        e.span = cover(name.span, tokens_[pos_ - 1].span);
        return e;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::map<std::string, Type> symbols_;
};

} // namespace

Construction parse(std::string_view source) {
    return Parser(source).parse_program();
}

} // namespace bfly::dsl
