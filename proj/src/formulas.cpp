#include "bfly/formulas.hpp"

namespace bfly {

namespace {

RF f(const char* text) { return parse_rational_function(text); }

Point<RF> pt(const char* x, const char* y) { return {f(x), f(y)}; }

ClosedForms build_table() {
    ClosedForms t;
    t.o_a = pt("(b*d*k^2 + b*d + c^2)/(2*c)",
               "(b*c*k^2 + b*c - b*d*k^2 - b*d - c^2 + c*d*k^2 + c*d)/(2*c*k)");
    t.o_b = pt("(a + c)/2",
               "(a*c - a*d - c*d + d^2*k^2 + d^2)/(2*d*k)");
    t.o_c = pt("(a^2 + b*d*k^2 + b*d)/(2*a)",
               "(-a^2 + a*b*k^2 + a*b + a*d*k^2 + a*d - b*d*k^2 - b*d)/(2*a*k)");
    t.o_d = pt("(a + c)/2",
               "(-a*b + a*c + b^2*k^2 + b^2 - b*c)/(2*b*k)");

    t.m = pt("(a^2*c + a*b*d*k^2 + a*b*d + a*c^2 + b*c*d*k^2 + b*c*d)/(4*a*c)",
             "(-a^2*c + 2*a*b*c*k^2 + 2*a*b*c - a*b*d*k^2 - a*b*d"
             " - a*c^2 + 2*a*c*d*k^2 + 2*a*c*d - b*c*d*k^2 - b*c*d)/(4*a*c*k)");
    t.n = pt("(a + c)/2",
             "(a*b*c - 2*a*b*d + a*c*d + b^2*d*k^2 + b^2*d - 2*b*c*d + b*d^2*k^2 + b*d^2)/(4*b*d*k)");

    t.perp_slope = f("(-a*b*d*k - b*c*d*k)/(a*b*c - a*b*d + a*c*d - b*c*d)");
    t.ab_intercept = f("a*b*k/(a - b)");
    t.ab_slope = f("-b*k/(a - b)");
    t.cd_intercept = f("c*d*k/(c - d)");
    t.cd_slope = f("-d*k/(c - d)");

    t.q1 = pt("(-a*b*c + a*b*d - a*c*d + b*c*d)/(a*d - b*c)",
              "(a*b*d*k + b*c*d*k)/(a*d - b*c)");
    t.r1 = pt("(a*b*c - a*b*d + a*c*d - b*c*d)/(a*d - b*c)",
              "(-a*b*d*k - b*c*d*k)/(a*d - b*c)");

    t.x = pt("(a + c)/2",
             "(-a + b*k^2 + b - c + d*k^2 + d)/(2*k)");
    t.y = pt("(a^2*d - b^2*d*k^2 - b^2*d - b*c^2 + b*d^2*k^2 + b*d^2)/(2*a*d - 2*b*c)",
             "(a^2*c - a^2*d - a*c^2 + a*d^2*k^2 + a*d^2 - b^2*c*k^2"
             " - b^2*c + b^2*d*k^2 + b^2*d + b*c^2 - b*d^2*k^2 - b*d^2)/(2*a*d*k - 2*b*c*k)");
    t.z = pt("(a^2*b + b^2*d*k^2 + b^2*d - b*d^2*k^2 - b*d^2 - c^2*d)/(2*a*b - 2*c*d)",
             "(-a^2*b + a^2*c + a*b^2*k^2 + a*b^2 - a*c^2 - b^2*d*k^2"
             " - b^2*d + b*d^2*k^2 + b*d^2 + c^2*d - c*d^2*k^2 - c*d^2)/(2*a*b*k - 2*c*d*k)");

    t.w_x = f("(a^3*b*d - a^2*b*c*d - a*b^3*d*k^2 - a*b^3*d + 2*a*b^2*d^2*k^2 + 2*a*b^2*d^2"
              " - a*b*c^2*d - a*b*d^3*k^2 - a*b*d^3 - b^3*c*d*k^2 - b^3*c*d + 2*b^2*c*d^2*k^2"
              " + 2*b^2*c*d^2 + b*c^3*d - b*c*d^3*k^2 - b*c*d^3)"
              "/(2*a^2*b*d - 2*a*b^2*c - 2*a*c*d^2 + 2*b*c^2*d)");
    t.w_y = f("(a^3*b*c - a^3*b*d + a^3*c*d - 2*a^2*b*c^2 + a^2*b*c*d - 2*a^2*c^2*d"
              " - a*b^3*c*k^2 - a*b^3*c + a*b^3*d*k^2 + a*b^3*d + a*b^2*c*d*k^2 + a*b^2*c*d"
              " - 2*a*b^2*d^2*k^2 - 2*a*b^2*d^2 + a*b*c^3 + a*b*c^2*d + a*b*c*d^2*k^2"
              " + a*b*c*d^2 + a*b*d^3*k^2 + a*b*d^3 + a*c^3*d - a*c*d^3*k^2 - a*c*d^3"
              " + b^3*c*d*k^2 + b^3*c*d - 2*b^2*c*d^2*k^2 - 2*b^2*c*d^2 - b*c^3*d"
              " + b*c*d^3*k^2 + b*c*d^3)"
              "/(2*a^2*b*d*k - 2*a*b^2*c*k - 2*a*c*d^2*k + 2*b*c^2*d*k)");

    t.perp_pw_slope = f("(-a*b*d*k - b*c*d*k)/(a*b*c - a*b*d + a*c*d - b*c*d)");
    t.q2 = pt("(-a*b*c + a*b*d - a*c*d + b*c*d)/(a*b - c*d)",
              "(a*b*d*k + b*c*d*k)/(a*b - c*d)");
    t.r2 = pt("(a*b*c - a*b*d + a*c*d - b*c*d)/(a*b - c*d)",
              "(-a*b*d*k - b*c*d*k)/(a*b - c*d)");

    t.power_ratio = f("(k^2 + 1)*b*d/(a*c)");
    return t;
}

} // namespace

const ClosedForms& closed_forms() {
    static const ClosedForms table = build_table();
    return table;
}

Gauge<RF> symbolic_gauge() {
    return {RF::variable(Var::a), RF::variable(Var::b), RF::variable(Var::c), RF::variable(Var::d),
            RF::variable(Var::k)};
}

Point<Rational> evaluate(const Point<RF>& p, const Assignment& at) {
    return {p.x.evaluate(at), p.y.evaluate(at)};
}

Line<Rational> evaluate(const Line<RF>& l, const Assignment& at) {
    return {l.u.evaluate(at), l.v.evaluate(at), l.w.evaluate(at)};
}

} // namespace bfly
