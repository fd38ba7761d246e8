#pragma once

// Closed-form coordinates for the gauge P = (0,0), A = (a,0), B = (b,kb),
// C = (c,0), D = (d,kd), transcribed as rational functions of a, b, c, d, k.
// The symbolic proofs compare the constructed objects against these.

#include "bfly/geometry.hpp"
#include "bfly/polynomial.hpp"
#include "bfly/theorems.hpp"

namespace bfly {

using RF = RationalFunction;

struct ClosedForms {
    // circumcenters of BCD, CDA, DAB, ABC
    Point<RF> o_a, o_b, o_c, o_d;
    // midpoints of O_aO_c and O_bO_d
    Point<RF> m, n;
    // perpendicular from P to MN: y = perp_slope * x
    RF perp_slope;
    // y = slope * x + intercept
    RF ab_slope, ab_intercept;
    RF cd_slope, cd_intercept;
    // perpendicular meets AB, CD
    Point<RF> q1, r1;

    // bisector meets of (AC, BD), (AB, CD), (AD, BC)
    Point<RF> x, y, z;
    // fourth parallelogram vertex W = (w_x, w_y)
    RF w_x, w_y;
    // perpendicular from P to PW: y = perp_pw_slope * x
    RF perp_pw_slope;
    // perpendicular meets AD, BC
    Point<RF> q2, r2;

    // common ratio of powers with respect to the circles on O_aO_c and O_bO_d
    RF power_ratio;
};

/// The transcribed table. Parsed once; thread-safe after first call.
const ClosedForms& closed_forms();

/// Line y = slope*x + intercept as (slope, -1, intercept).
inline Line<RF> slope_form(const RF& slope, const RF& intercept = RF(0)) {
    return {slope, RF(-1), intercept};
}

/// The gauge as symbolic parameters.
Gauge<RF> symbolic_gauge();

Point<Rational> evaluate(const Point<RF>& p, const Assignment& at);
Line<Rational> evaluate(const Line<RF>& l, const Assignment& at);

} // namespace bfly
