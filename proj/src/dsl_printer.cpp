#include "bfly/dsl.hpp"

namespace bfly::dsl {

namespace {

// Binding strength: atoms 4, unary minus 3, * and / 2, + and - 1.
int precedence(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::negate: return 3;
    case Expr::Kind::binary: return e.text == "*" || e.text == "/" ? 2 : 1;
    default: return 4;
    }
}

std::string print_at(const Expr& e, int min_prec);

std::string print_list(const std::vector<Expr>& args) {
    std::string out;
    for (std::size_t i = 0; i < args.size(); ++i)
        out += (i ? ", " : "") + print_at(args[i], 0);
    return out;
}

std::string print_at(const Expr& e, int min_prec) {
    std::string out;
    switch (e.kind) {
    case Expr::Kind::number:
    case Expr::Kind::identifier:
        out = e.text;
        break;
    case Expr::Kind::negate:
        out = "-" + print_at(e.args[0], 3);
        break;
    case Expr::Kind::binary: {
        const int p = precedence(e);
        // Left-associative: the right operand needs parentheses at equal strength.
        out = print_at(e.args[0], p) + " " + e.text + " " + print_at(e.args[1], p + 1);
        break;
    }
    case Expr::Kind::point_literal:
        out = "(" + print_list(e.args) + ")";
        break;
    case Expr::Kind::call:
        out = e.text + "(" + print_list(e.args) + ")";
        break;
    }
    return precedence(e) < min_prec ? "(" + out + ")" : out;
}

} // namespace

std::string print(const Expr& e) { return print_at(e, 0); }

std::string print(const Assertion& a) {
    return std::string(predicate_name(a.predicate)) + "(" + print_list(a.args) + ")";
}

std::string print(const Construction& c) {
    std::string out;
    for (const auto& s : c.statements) {
        if (const auto* p = std::get_if<ParamDecl>(&s)) {
            out += "param ";
            for (std::size_t i = 0; i < p->names.size(); ++i)
                out += (i ? ", " : "") + p->names[i];
            out += ";\n";
        } else if (const auto* d = std::get_if<Definition>(&s)) {
            out += std::string(type_name(d->type)) + " " + d->name + " = " + print(d->value) + ";\n";
        } else {
            out += "assert " + print(std::get<Assertion>(s)) + ";\n";
        }
    }
    return out;
}

} // namespace bfly::dsl
