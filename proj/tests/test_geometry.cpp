#include <doctest.h>

#include "bfly/proofs.hpp"
#include "bfly/geometry.hpp"
#include "bfly/theorems.hpp"

using namespace bfly;

namespace {

using R = Rational;
using Pt = Point<Rational>;
using Ln = Line<Rational>;
using Cc = Circle<Rational>;

R q(long n, long d = 1) { return R(BigInt(n), BigInt(d)); }
Pt pt(R x, R y) { return {x, y}; }

R dist2(const Pt& p, const Pt& r) { return dot(p - r, p - r); }

template <class E>
GeometryErrorKind kind_of(E&& body) {
    try {
        body();
    } catch (const GeometryError& e) {
        return e.kind();
    }
    FAIL("no GeometryError thrown");
    return GeometryErrorKind::invalid_line;
}

Pt random_point(Rng& rng) { return {sample_rational(rng, 15), sample_rational(rng, 15)}; }

} // namespace

TEST_CASE("midpoint") {
    CHECK(midpoint(pt(0, 0), pt(2, 4)) == pt(1, 2));
    CHECK(midpoint(pt(q(1, 3), 5), pt(q(1, 3), 5)) == pt(q(1, 3), 5));
    // N from the closed-form O_b and O_d has x = (a + c)/2.
    const auto& t = closed_forms();
    CHECK(midpoint(t.o_b, t.o_d).x == parse_rational_function("(a + c)/2"));
    CHECK(midpoint(t.o_b, t.o_d) == t.n);
    CHECK(midpoint(t.o_a, t.o_c) == t.m);
}

TEST_CASE("line_through") {
    CHECK(same_line(line_through(pt(0, 0), pt(1, 1)), Ln{1, -1, 0}));
    CHECK(same_line(line_through(pt(2, 0), pt(1, 1)), Ln{1, 1, -2}));
    CHECK(kind_of([] { line_through(pt(1, 1), pt(1, 1)); }) == GeometryErrorKind::coincident_points);

    const auto quad = symbolic_gauge().quad();
    const auto& t = closed_forms();
    CHECK(same_line(line_through(quad.a, quad.b), slope_form(t.ab_slope, t.ab_intercept)));
    CHECK(same_line(line_through(quad.c, quad.d), slope_form(t.cd_slope, t.cd_intercept)));
}

TEST_CASE("intersect_lines") {
    CHECK(intersect_lines(Ln{1, 0, 0}, Ln{0, 1, 0}) == pt(0, 0));
    CHECK(kind_of([] { intersect_lines(Ln{1, 1, 0}, Ln{1, 1, 5}); }) == GeometryErrorKind::parallel_lines);
    CHECK(kind_of([] { intersect_lines(Ln{1, 1, 1}, Ln{2, 2, 2}); }) == GeometryErrorKind::coincident_lines);
    try {
        intersect_lines(Ln{1, 1, 0}, Ln{1, 1, 5});
    } catch (const GeometryError& e) {
        CHECK(std::string(e.what()).find("ParallelLines") != std::string::npos);
    }

    // Perpendicular of the first generalization with line AB at the instance.
    const Assignment at{R(2), R(1), R(-3), R(-2), R(1)};
    const auto& t = closed_forms();
    const Pt got = intersect_lines(evaluate(slope_form(t.perp_slope), at),
                                   evaluate(slope_form(t.ab_slope, t.ab_intercept), at));
    CHECK(got == pt(4, -2));
    // Symbolic: the perpendicular meets AB at the closed-form Q.
    const Point<RF> sym = intersect_lines(slope_form(t.perp_slope), slope_form(t.ab_slope, t.ab_intercept));
    CHECK(sym == t.q1);
}

TEST_CASE("perp_bisector") {
    CHECK(same_line(perp_bisector(pt(0, 0), pt(2, 0)), Ln{1, 0, -1}));
    CHECK(same_line(perp_bisector(pt(0, 0), pt(0, 2)), Ln{0, 1, -1}));
    CHECK(kind_of([] { perp_bisector(pt(3, 3), pt(3, 3)); }) == GeometryErrorKind::coincident_points);

    const auto quad = symbolic_gauge().quad();
    CHECK(intersect_lines(perp_bisector(quad.a, quad.c), perp_bisector(quad.b, quad.d)) == closed_forms().x);

    Rng rng(1);
    for (int i = 0; i < 200; ++i) {
        const Pt p = random_point(rng), r = random_point(rng);
        if (p == r)
            continue;
        const Ln l = perp_bisector(p, r);
        CHECK(is_perpendicular(l, line_through(p, r)));
        CHECK(point_on(midpoint(p, r), l));
    }
}

TEST_CASE("perp_through") {
    CHECK(same_line(perp_through(pt(0, 0), Ln{0, 1, 0}), Ln{1, 0, 0}));
    CHECK(kind_of([] { perp_through(pt(0, 0), Ln{0, 0, 1}); }) == GeometryErrorKind::invalid_line);

    const auto quad = symbolic_gauge().quad();
    const auto& t = closed_forms();
    const auto first = build_thm1(quad);
    CHECK(same_line(perp_through(first.p, line_through(first.m, first.n)), slope_form(t.perp_slope)));
    const auto second = build_thm2(quad);
    CHECK(same_line(perp_through(second.p, line_through(second.p, second.w)), slope_form(t.perp_pw_slope)));
}

TEST_CASE("circumcenter") {
    CHECK(circumcenter(pt(0, 0), pt(2, 0), pt(0, 2)) == pt(1, 1));
    // C(-3,0), D(-2,-2), A(2,0): all at squared distance 25/4 from (-1/2, 0).
    const Pt o = circumcenter(pt(-3, 0), pt(-2, -2), pt(2, 0));
    CHECK(o == pt(q(-1, 2), 0));
    for (const Pt& v : {pt(-3, 0), pt(-2, -2), pt(2, 0)})
        CHECK(dist2(o, v) == q(25, 4));
    CHECK(kind_of([] { circumcenter(pt(0, 0), pt(1, 1), pt(2, 2)); }) == GeometryErrorKind::collinear_points);

    const auto quad = symbolic_gauge().quad();
    CHECK(circumcenter(quad.b, quad.c, quad.d) == closed_forms().o_a);

    Rng rng(2);
    for (int i = 0; i < 200; ++i) {
        const Pt p = random_point(rng), r = random_point(rng), s = random_point(rng);
        if (is_collinear(p, r, s))
            continue;
        const Pt c = circumcenter(p, r, s);
        CHECK(dist2(c, p) == dist2(c, r));
        CHECK(dist2(c, p) == dist2(c, s));
    }
}

TEST_CASE("parallelogram_fourth") {
    const auto w = parallelogram_fourth(pt(0, 0), pt(1, 0), pt(0, 1));
    CHECK(w.point == pt(1, 1));
    CHECK_FALSE(w.degenerate);
    const auto same = parallelogram_fourth(pt(2, 3), pt(2, 3), pt(5, 7));
    CHECK(same.point == pt(5, 7));
    CHECK(same.degenerate);

    const auto& t = closed_forms();
    CHECK(parallelogram_fourth(t.x, t.y, t.z).point == Point<RF>{t.w_x, t.w_y});

    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const Pt x = random_point(rng), y = random_point(rng), z = random_point(rng);
        const auto r = parallelogram_fourth(x, y, z);
        if (r.degenerate)
            continue;
        CHECK(is_parallel(line_through(x, y), line_through(z, r.point)));
        CHECK(is_parallel(line_through(y, r.point), line_through(x, z)));
    }
}

TEST_CASE("circles") {
    CHECK(circle_on_diameter(pt(-1, 0), pt(1, 0)) == Cc{0, 0, -1});
    CHECK(circle_on_diameter(pt(0, 0), pt(0, 2)) == Cc{0, -2, 0});
    CHECK(power_of_point(pt(0, 0), circle_on_diameter(pt(1, 0), pt(0, 1))) == R(0));
    CHECK(kind_of([] { circle_on_diameter(pt(1, 2), pt(1, 2)); }) == GeometryErrorKind::coincident_points);

    CHECK(circumcircle(pt(1, 0), pt(0, 1), pt(-1, 0)) == Cc{0, 0, -1});
    CHECK(circumcircle(pt(0, 0), pt(2, 0), pt(0, 2)) == Cc{-2, -2, 0});
    CHECK(kind_of([] { circumcircle(pt(0, 0), pt(1, 0), pt(2, 0)); }) == GeometryErrorKind::collinear_points);

    CHECK(power_of_point(pt(0, 0), Cc{0, 0, -1}) == R(-1));
    CHECK(power_of_point(pt(q(3, 5), q(4, 5)), Cc{0, 0, -1}) == R(0));

    Rng rng(4);
    for (int i = 0; i < 200; ++i) {
        const Pt u = random_point(rng), v = random_point(rng), p = random_point(rng);
        if (u == v)
            continue;
        CHECK(power_of_point(p, circle_on_diameter(u, v)) == dot(u - p, v - p));
    }
    // Symbolically as well.
    const auto quad = symbolic_gauge().quad();
    CHECK(power_of_point(quad.b, circle_on_diameter(quad.a, quad.c)) == dot(quad.a - quad.b, quad.c - quad.b));

    // Ratio of powers at P for the gauge.
    const auto& t = closed_forms();
    const Point<RF> origin{RF(0), RF(0)};
    CHECK(power_of_point(origin, circle_on_diameter(t.o_a, t.o_c)) /
              power_of_point(origin, circle_on_diameter(t.o_b, t.o_d)) ==
          parse_rational_function("(k^2 + 1)*b*d/(a*c)"));
}

TEST_CASE("second_intersection") {
    const Cc unit{0, 0, -1};
    CHECK(second_intersection(unit, line_through(pt(1, 0), pt(0, -1)), pt(1, 0)) == pt(0, -1));
    CHECK(second_intersection(unit, Ln{1, 0, -1}, pt(1, 0)) == pt(1, 0));

    const Pt e = second_intersection(unit, line_through(pt(q(3, 5), q(4, 5)), pt(0, q(1, 2))), pt(q(3, 5), q(4, 5)));
    CHECK(point_on(e, unit));
    CHECK(point_on(e, line_through(pt(q(3, 5), q(4, 5)), pt(0, q(1, 2)))));
    CHECK(e != pt(q(3, 5), q(4, 5)));

    CHECK(kind_of([&] { second_intersection(unit, Ln{1, 0, 0}, pt(0, 0)); }) ==
          GeometryErrorKind::point_not_on_circle);
    CHECK(kind_of([&] { second_intersection(unit, Ln{1, 0, 0}, pt(1, 0)); }) ==
          GeometryErrorKind::point_not_on_line);

    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const Pt k = on_unit_circle(sample_rational(rng, 20));
        const Pt inner = random_point(rng);
        if (k == inner)
            continue;
        const Ln l = line_through(k, inner);
        const Pt other = second_intersection(unit, l, k);
        CHECK(point_on(other, unit));
        CHECK(point_on(other, l));
    }
}

TEST_CASE("relations") {
    CHECK(is_midpoint(pt(0, 0), pt(4, -2), pt(-4, 2)));
    CHECK_FALSE(is_midpoint(pt(0, 1), pt(4, -2), pt(-4, 2)));
    CHECK(is_perpendicular(Ln{1, 0, 0}, Ln{0, 1, 0}));
    CHECK(is_parallel(Ln{1, 1, 0}, Ln{1, 1, -5}));
    CHECK(is_collinear(pt(0, 0), pt(1, 2), pt(3, 6)));
    CHECK(point_on(pt(1, 1), Ln{1, -1, 0}));

    Rng rng(6);
    for (int i = 0; i < 200; ++i) {
        const Ln l1{sample_rational(rng, 9), sample_rational(rng, 9), sample_rational(rng, 9)};
        const Ln l2{sample_rational(rng, 9), sample_rational(rng, 9), sample_rational(rng, 9)};
        if (!is_valid(l1) || !is_valid(l2) || is_parallel(l1, l2))
            continue;
        const Pt x = intersect_lines(l1, l2);
        CHECK(point_on(x, l1));
        CHECK(point_on(x, l2));
    }
}

TEST_CASE("cross_ratio") {
    const Pt p0 = pt(0, 0), p1 = pt(1, 0), p2 = pt(2, 0), p3 = pt(q(2, 3), 0);
    CHECK(cross_ratio(p0, p1, p2, p3) == R(-1));
    CHECK(cross_ratio(p1, p0, p2, p3) == R(-1));
    CHECK(kind_of([&] { cross_ratio(p0, p1, p2, pt(1, 1)); }) == GeometryErrorKind::not_collinear);
    CHECK(kind_of([&] { cross_ratio(p0, p1, p2, p2); }) == GeometryErrorKind::coincident_points);

    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        // Four points on a random line; the value must not depend on how the
        // line is parametrized.
        const Pt base = random_point(rng), dir = random_point(rng);
        if (dir == pt(0, 0))
            continue;
        std::array<R, 4> t;
        for (auto& x : t)
            x = sample_rational(rng, 20);
        if (t[0] == t[1] || t[0] == t[2] || t[0] == t[3] || t[1] == t[2] || t[1] == t[3] || t[2] == t[3])
            continue;
        auto at = [&](const R& s) { return pt(base.x + s * dir.x, base.y + s * dir.y); };
        const R expected = ((t[0] - t[2]) * (t[1] - t[3])) / ((t[0] - t[3]) * (t[1] - t[2]));
        CHECK(cross_ratio(at(t[0]), at(t[1]), at(t[2]), at(t[3])) == expected);
        // Affine reparametrization s -> alpha s + beta.
        const R alpha = sample_rational(rng, 7) + R(8), beta = sample_rational(rng, 7);
        auto at2 = [&](const R& s) { return at(alpha * s + beta); };
        CHECK(cross_ratio(at2(t[0]), at2(t[1]), at2(t[2]), at2(t[3])) == expected);
        // A pencil through any center off the line cuts the same value.
        const Pt center = pt(base.x - dir.y, base.y + dir.x);
        CHECK(pencil_cross_ratio(center, at(t[0]), at(t[1]), at(t[2]), at(t[3])) == expected);
    }
}

TEST_CASE("newton_line") {
    CHECK(kind_of([] { newton_line(pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)); }) ==
          GeometryErrorKind::degenerate_newton_line);
    CHECK(same_line(newton_line(pt(0, 0), pt(4, 0), pt(5, 3), pt(1, 2)), Ln{1, 0, q(-5, 2)}));

    Rng rng(8);
    for (int i = 0; i < 200; ++i) {
        const Pt a = random_point(rng), b = random_point(rng), c = random_point(rng), d = random_point(rng);
        if (midpoint(a, c) == midpoint(b, d))
            continue;
        const Ln l = newton_line(a, b, c, d);
        CHECK(point_on(midpoint(a, c), l));
        CHECK(point_on(midpoint(b, d), l));
    }
}

TEST_CASE("are_coaxial") {
    const Cc c1{0, 0, -1}, c2{-2, 0, 0}, c3{-4, 0, 1};
    // Pencil membership: c3 = -1*c1 + 2*c2 coefficientwise.
    CHECK(c3.d == R(-1) * c1.d + R(2) * c2.d);
    CHECK(c3.e == R(-1) * c1.e + R(2) * c2.e);
    CHECK(c3.f == R(-1) * c1.f + R(2) * c2.f);
    CHECK(are_coaxial(c1, c2, c3));
    CHECK_FALSE(are_coaxial(c1, c2, Cc{0, -2, 0}));

    // Concentric circles: a pencil with its radical axis at infinity.
    const Cc r1{0, 0, -1}, r2{0, 0, -4}, r3{0, 0, -9};
    CHECK(are_coaxial(r1, r2, r3));
    CHECK(is_concentric(r1, r2, r3));
    CHECK_FALSE(is_concentric(c1, c2, c3));

    CHECK(kind_of([&] { are_coaxial(c1, c1, c2); }) == GeometryErrorKind::coincident_circles);
}

TEST_CASE("symbolic constructions commute with evaluation") {
    const auto quad = symbolic_gauge().quad();
    const auto sym1 = build_thm1(quad);
    const auto sym2 = build_thm2(quad);
    const auto sym3 = build_lemma3(quad);
    Rng rng(9);
    int compared = 0;
    for (int i = 0; i < 40; ++i) {
        const Gauge<Rational> g = sample_gauge(rng, 20, SignPolicy::opposite_signs);
        const Assignment at = to_assignment(g);
        try {
            validate(g);
            const auto num1 = build_thm1(g.quad());
            const auto num2 = build_thm2(g.quad());
            const auto num3 = build_lemma3(g.quad());
            CHECK(bridge_mismatches(named_points(sym1), named_points(num1), at).empty());
            CHECK(bridge_mismatches(named_points(sym2), named_points(num2), at).empty());
            CHECK(evaluate(sym3.m, at) == num3.m);
            CHECK(sym3.pmn.d.evaluate(at) == num3.pmn.d);
            CHECK(sym3.pmn.f.evaluate(at) == num3.pmn.f);
            CHECK(evaluate(sym1.perp, at) == num1.perp);
            ++compared;
        } catch (const Degeneracy&) {
        }
    }
    CHECK(compared > 30);
}
