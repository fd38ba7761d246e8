#pragma once

// Plane geometry over any exact field. Every construction either returns an
// exact result or throws GeometryError; nothing is approximated.

#include <string>

#include "bfly/errors.hpp"
#include "bfly/field.hpp"

namespace bfly {

template <Field T>
struct Point {
    T x{0};
    T y{0};

    friend bool operator==(const Point&, const Point&) = default;
};

/// u*x + v*y + w = 0 with (u, v) != (0, 0). Scalar multiples are the same line;
/// use same_line() for that comparison, operator== is structural.
template <Field T>
struct Line {
    T u{0};
    T v{0};
    T w{0};

    friend bool operator==(const Line&, const Line&) = default;
};

/// x^2 + y^2 + d*x + e*y + f = 0. Monic, so structural equality is identity of
/// circles. Imaginary members (d^2 + e^2 - 4f <= 0) are allowed.
template <Field T>
struct Circle {
    T d{0};
    T e{0};
    T f{0};

    friend bool operator==(const Circle&, const Circle&) = default;
};

template <Field T>
struct ParallelogramVertex {
    Point<T> point;
    bool degenerate = false;  // X, Y, Z collinear
};

// -- helpers -----------------------------------------------------------------

template <Field T>
Point<T> operator+(const Point<T>& p, const Point<T>& q) { return {p.x + q.x, p.y + q.y}; }

template <Field T>
Point<T> operator-(const Point<T>& p, const Point<T>& q) { return {p.x - q.x, p.y - q.y}; }

template <Field T>
T dot(const Point<T>& p, const Point<T>& q) { return p.x * q.x + p.y * q.y; }

template <Field T>
T cross(const Point<T>& p, const Point<T>& q) { return p.x * q.y - p.y * q.x; }

template <Field T>
bool is_valid(const Line<T>& l) { return !(is_zero(l.u) && is_zero(l.v)); }

template <Field T>
T evaluate_at(const Line<T>& l, const Point<T>& p) { return l.u * p.x + l.v * p.y + l.w; }

template <Field T>
bool same_line(const Line<T>& l1, const Line<T>& l2) {
    return is_zero(l1.u * l2.v - l1.v * l2.u) && is_zero(l1.u * l2.w - l1.w * l2.u) &&
           is_zero(l1.v * l2.w - l1.w * l2.v);
}

// -- constructions -----------------------------------------------------------

template <Field T>
Point<T> midpoint(const Point<T>& p, const Point<T>& q) {
    const T half = T(1) / T(2);
    return {(p.x + q.x) * half, (p.y + q.y) * half};
}

template <Field T>
Line<T> line_through(const Point<T>& p, const Point<T>& q) {
    if (p == q)
        throw GeometryError(GeometryErrorKind::coincident_points, "line through a single point");
    return {p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y};
}

template <Field T>
Point<T> intersect_lines(const Line<T>& l1, const Line<T>& l2) {
    const T det = l1.u * l2.v - l2.u * l1.v;
    if (is_zero(det)) {
        if (same_line(l1, l2))
            throw GeometryError(GeometryErrorKind::coincident_lines, "lines coincide");
        throw GeometryError(GeometryErrorKind::parallel_lines, "lines are parallel");
    }
    return {(l1.v * l2.w - l2.v * l1.w) / det, (l1.w * l2.u - l2.w * l1.u) / det};
}

template <Field T>
Line<T> perp_bisector(const Point<T>& p, const Point<T>& q) {
    if (p == q)
        throw GeometryError(GeometryErrorKind::coincident_points, "perpendicular bisector of a point");
    const T u = q.x - p.x;
    const T v = q.y - p.y;
    // |X - p|^2 = |X - q|^2  <=>  2u*x + 2v*y + (|p|^2 - |q|^2) = 0
    return {u, v, (dot(p, p) - dot(q, q)) / T(2)};
}

template <Field T>
Line<T> perp_through(const Point<T>& p, const Line<T>& l) {
    if (!is_valid(l))
        throw GeometryError(GeometryErrorKind::invalid_line, "line with zero normal");
    return {-l.v, l.u, l.v * p.x - l.u * p.y};
}

template <Field T>
bool is_collinear(const Point<T>& p, const Point<T>& q, const Point<T>& r) {
    return is_zero(cross(q - p, r - p));
}

template <Field T>
Point<T> circumcenter(const Point<T>& p, const Point<T>& q, const Point<T>& r) {
    if (is_collinear(p, q, r))
        throw GeometryError(GeometryErrorKind::collinear_points, "circumcenter of collinear points");
    return intersect_lines(perp_bisector(p, q), perp_bisector(p, r));
}

/// W = Y + Z - X, so that X, Y, W, Z in order form a parallelogram.
template <Field T>
ParallelogramVertex<T> parallelogram_fourth(const Point<T>& x, const Point<T>& y, const Point<T>& z) {
    return {y + z - x, is_collinear(x, y, z)};
}

template <Field T>
Circle<T> circle_on_diameter(const Point<T>& p, const Point<T>& q) {
    if (p == q)
        throw GeometryError(GeometryErrorKind::coincident_points, "circle on a zero diameter");
    // (x - px)(x - qx) + (y - py)(y - qy) = 0
    return {-(p.x + q.x), -(p.y + q.y), dot(p, q)};
}

template <Field T>
Circle<T> circumcircle(const Point<T>& p, const Point<T>& q, const Point<T>& r) {
    const Point<T> o = circumcenter(p, q, r);
    const T d = T(-2) * o.x;
    const T e = T(-2) * o.y;
    return {d, e, -(dot(p, p) + d * p.x + e * p.y)};
}

template <Field T>
T power_of_point(const Point<T>& p, const Circle<T>& c) {
    return dot(p, p) + c.d * p.x + c.e * p.y + c.f;
}

template <Field T>
bool point_on(const Point<T>& p, const Line<T>& l) { return is_zero(evaluate_at(l, p)); }

template <Field T>
bool point_on(const Point<T>& p, const Circle<T>& c) { return is_zero(power_of_point(p, c)); }

/// The other intersection of `l` with `c`, given one intersection `known`.
/// Returns `known` itself when `l` is tangent.
template <Field T>
Point<T> second_intersection(const Circle<T>& c, const Line<T>& l, const Point<T>& known) {
    if (!is_valid(l))
        throw GeometryError(GeometryErrorKind::invalid_line, "line with zero normal");
    if (!point_on(known, c))
        throw GeometryError(GeometryErrorKind::point_not_on_circle, "known point is not on the circle");
    if (!point_on(known, l))
        throw GeometryError(GeometryErrorKind::point_not_on_line, "known point is not on the line");
    // known + t*dir with dir = (-v, u): the quadratic in t has root 0, the other
    // root is -(2 known.dir + d*dir.x + e*dir.y) / |dir|^2.
    const Point<T> dir{-l.v, l.u};
    const T t = -(T(2) * dot(known, dir) + c.d * dir.x + c.e * dir.y) / dot(dir, dir);
    return {known.x + t * dir.x, known.y + t * dir.y};
}

// -- relations ---------------------------------------------------------------

template <Field T>
bool is_parallel(const Line<T>& l1, const Line<T>& l2) { return is_zero(l1.u * l2.v - l2.u * l1.v); }

template <Field T>
bool is_perpendicular(const Line<T>& l1, const Line<T>& l2) { return is_zero(l1.u * l2.u + l1.v * l2.v); }

template <Field T>
bool is_midpoint(const Point<T>& m, const Point<T>& p, const Point<T>& q) {
    return is_zero(T(2) * m.x - p.x - q.x) && is_zero(T(2) * m.y - p.y - q.y);
}

/// Cross ratio ((t1-t3)(t2-t4)) / ((t1-t4)(t2-t3)) of four distinct collinear
/// points, t_i being an affine parameter along their common line.
template <Field T>
T cross_ratio(const Point<T>& p1, const Point<T>& p2, const Point<T>& p3, const Point<T>& p4) {
    if (p1 == p2 || p1 == p3 || p1 == p4 || p2 == p3 || p2 == p4 || p3 == p4)
        throw GeometryError(GeometryErrorKind::coincident_points, "cross ratio needs four distinct points");
    if (!is_collinear(p1, p2, p3) || !is_collinear(p1, p2, p4))
        throw GeometryError(GeometryErrorKind::not_collinear, "cross ratio of non-collinear points");
    const Point<T> dir = p2 - p1;
    const T t1{0};
    const T t2 = dot(dir, dir);
    const T t3 = dot(p3 - p1, dir);
    const T t4 = dot(p4 - p1, dir);
    return ((t1 - t3) * (t2 - t4)) / ((t1 - t4) * (t2 - t3));
}

/// Cross ratio of the pencil of lines joining `center` to p1..p4, computed from
/// the directions alone (no transversal). Equals cross_ratio of the points
/// where any transversal meets the four lines.
template <Field T>
T pencil_cross_ratio(const Point<T>& center, const Point<T>& p1, const Point<T>& p2,
                     const Point<T>& p3, const Point<T>& p4) {
    const Point<T> d1 = p1 - center, d2 = p2 - center, d3 = p3 - center, d4 = p4 - center;
    const T den = cross(d1, d4) * cross(d2, d3);
    if (is_zero(den) || is_zero(cross(d1, d2)) || is_zero(cross(d1, d3)) || is_zero(cross(d2, d4)) ||
        is_zero(cross(d3, d4)))
        throw GeometryError(GeometryErrorKind::coincident_lines, "pencil has coincident rays");
    return (cross(d1, d3) * cross(d2, d4)) / den;
}

template <Field T>
Line<T> newton_line(const Point<T>& a, const Point<T>& b, const Point<T>& c, const Point<T>& d) {
    const Point<T> m = midpoint(a, c);
    const Point<T> n = midpoint(b, d);
    if (m == n)
        throw GeometryError(GeometryErrorKind::degenerate_newton_line, "diagonal midpoints coincide");
    return line_through(m, n);
}

/// True iff the three circles lie in one linear pencil: the coefficient
/// differences c1 - c3 and c2 - c3 are proportional. Concentric triples count
/// (their radical axis is at infinity); see is_concentric().
template <Field T>
bool are_coaxial(const Circle<T>& c1, const Circle<T>& c2, const Circle<T>& c3) {
    if (c1 == c2 || c1 == c3 || c2 == c3)
        throw GeometryError(GeometryErrorKind::coincident_circles, "coaxiality of coincident circles");
    const T d1 = c1.d - c3.d, e1 = c1.e - c3.e, f1 = c1.f - c3.f;
    const T d2 = c2.d - c3.d, e2 = c2.e - c3.e, f2 = c2.f - c3.f;
    return is_zero(d1 * e2 - e1 * d2) && is_zero(d1 * f2 - f1 * d2) && is_zero(e1 * f2 - f1 * e2);
}

template <Field T>
bool is_concentric(const Circle<T>& c1, const Circle<T>& c2, const Circle<T>& c3) {
    return c1.d == c2.d && c2.d == c3.d && c1.e == c2.e && c2.e == c3.e;
}

/// s lies on the circle through p, q, r (throws if p, q, r are collinear).
template <Field T>
bool is_concyclic(const Point<T>& p, const Point<T>& q, const Point<T>& r, const Point<T>& s) {
    return point_on(s, circumcircle(p, q, r));
}

} // namespace bfly
