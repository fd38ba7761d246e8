#pragma once

// Executable statements of the Butterfly Theorem, its cyclic-quadrilateral
// form, the two quadrilateral generalizations and the three supporting lemmas.
//
// Each result has a field-generic construction (build_*), a numeric checker
// (check_*) that throws Degeneracy for degenerate input, and a trial function
// that samples a configuration and classifies the outcome.

#include <array>
#include <string>
#include <vector>

#include "bfly/field.hpp"
#include "bfly/geometry.hpp"
#include "bfly/polynomial.hpp"
#include "bfly/trials.hpp"

namespace bfly {

/// Which statement to check. `perturbed` swaps in a deliberately wrong
/// construction so tests can confirm the checkers are able to fail.
enum class Claim { stated, perturbed };

/// Whether gauge sampling forces a*c < 0 and b*d < 0 (P inside both diagonals).
enum class SignPolicy { opposite_signs, unconstrained };

template <Field T>
struct Quad {
    Point<T> a, b, c, d;
};

/// Coordinate gauge P = (0,0), A = (a,0), B = (b,kb), C = (c,0), D = (d,kd).
template <Field T>
struct Gauge {
    T a{0}, b{0}, c{0}, d{0}, k{0};

    Quad<T> quad() const {
        return {{a, T(0)}, {b, k * b}, {c, T(0)}, {d, k * d}};
    }
};

using Thm1Config = Gauge<Rational>;
using Thm2Config = Gauge<Rational>;

/// Throws DegenerateConfig unless a, b, c, d, k are nonzero, a != c, b != d.
void validate(const Gauge<Rational>& g);
NamedValues named_values(const Gauge<Rational>& g);
Assignment to_assignment(const Gauge<Rational>& g);
Gauge<Rational> sample_gauge(Rng& rng, std::int64_t bound, SignPolicy policy);

/// Tangent half-angle map t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)) onto the unit circle.
template <Field T>
Point<T> on_unit_circle(const T& t) {
    const T den = T(1) + t * t;
    return {(T(1) - t * t) / den, T(2) * t / den};
}

inline Circle<Rational> unit_circle() { return {Rational(0), Rational(0), Rational(-1)}; }

// -- Butterfly Theorem, chord form --------------------------------------------

struct ChordButterflyConfig {
    Rational t_a, t_b, t_c, t_e;
};

template <Field T>
struct ChordFigure {
    Point<T> a, b, m, c, d, e, f, g, h;
};

void validate(const ChordButterflyConfig& cfg);
NamedValues named_values(const ChordButterflyConfig& cfg);
ChordButterflyConfig sample_chord(Rng& rng, std::int64_t bound);

ChordFigure<Rational> build_chord(const ChordButterflyConfig& cfg, Claim claim = Claim::stated);
bool check_butterfly_chord(const ChordButterflyConfig& cfg, Claim claim = Claim::stated);
/// True when C and F lie on the same side of AB (the "crossed" drawing).
bool is_crossed(const ChordFigure<Rational>& fig);

// -- Butterfly Theorem for a cyclic quadrilateral -------------------------------

struct CyclicConfig {
    Rational t_a, t_b, t_c, t_d;
};

template <Field T>
struct CyclicFigure {
    Point<T> a, b, c, d, o, p;
    Line<T> perp;
    Point<T> q, r;
};

void validate(const CyclicConfig& cfg);
NamedValues named_values(const CyclicConfig& cfg);
CyclicConfig sample_cyclic(Rng& rng, std::int64_t bound);

CyclicFigure<Rational> build_thm0(const CyclicConfig& cfg, Claim claim = Claim::stated);
bool check_thm0(const CyclicConfig& cfg, Claim claim = Claim::stated);

// -- first generalization ---------------------------------------------------------

template <Field T>
struct Thm1Figure {
    Point<T> a, b, c, d, p;
    Point<T> o_a, o_b, o_c, o_d;  // circumcenters of BCD, CDA, DAB, ABC
    Point<T> m, n;                // midpoints of O_aO_c and O_bO_d
    Line<T> perp;                 // through P, perpendicular to MN
    Point<T> q, r;                // perp meets AB and CD
};

template <Field T>
Thm1Figure<T> build_thm1(const Quad<T>& quad, Claim claim = Claim::stated) {
    Thm1Figure<T> fig;
    fig.a = quad.a;
    fig.b = quad.b;
    fig.c = quad.c;
    fig.d = quad.d;
    fig.p = intersect_lines(line_through(fig.a, fig.c), line_through(fig.b, fig.d));
    fig.o_a = circumcenter(fig.b, fig.c, fig.d);
    fig.o_b = circumcenter(fig.c, fig.d, fig.a);
    fig.o_c = circumcenter(fig.d, fig.a, fig.b);
    fig.o_d = circumcenter(fig.a, fig.b, fig.c);
    fig.m = midpoint(fig.o_a, fig.o_c);
    fig.n = claim == Claim::stated ? midpoint(fig.o_b, fig.o_d) : fig.o_b;
    fig.perp = perp_through(fig.p, line_through(fig.m, fig.n));
    fig.q = intersect_lines(fig.perp, line_through(fig.a, fig.b));
    fig.r = intersect_lines(fig.perp, line_through(fig.c, fig.d));
    return fig;
}

template <Field T>
std::vector<std::pair<std::string, Point<T>>> named_points(const Thm1Figure<T>& f) {
    return {{"A", f.a}, {"B", f.b}, {"C", f.c}, {"D", f.d}, {"P", f.p}, {"O_a", f.o_a},
            {"O_b", f.o_b}, {"O_c", f.o_c}, {"O_d", f.o_d}, {"M", f.m}, {"N", f.n},
            {"Q", f.q}, {"R", f.r}};
}

bool check_thm1(const Thm1Config& cfg, Claim claim = Claim::stated);

// -- second generalization --------------------------------------------------------

template <Field T>
struct Thm2Figure {
    Point<T> a, b, c, d, p;
    Point<T> x, y, z;  // bisector meets of (AC, BD), (AB, CD), (AD, BC)
    Point<T> w;        // fourth vertex of parallelogram XYWZ
    Line<T> perp;      // through P, perpendicular to PW
    Point<T> q, r;     // perp meets AD and BC
};

template <Field T>
Thm2Figure<T> build_thm2(const Quad<T>& quad, Claim claim = Claim::stated) {
    Thm2Figure<T> fig;
    fig.a = quad.a;
    fig.b = quad.b;
    fig.c = quad.c;
    fig.d = quad.d;
    fig.p = intersect_lines(line_through(fig.a, fig.c), line_through(fig.b, fig.d));
    fig.x = intersect_lines(perp_bisector(fig.a, fig.c), perp_bisector(fig.b, fig.d));
    fig.y = intersect_lines(perp_bisector(fig.a, fig.b), perp_bisector(fig.c, fig.d));
    fig.z = intersect_lines(perp_bisector(fig.a, fig.d), perp_bisector(fig.b, fig.c));
    if (claim == Claim::stated)
        fig.w = parallelogram_fourth(fig.x, fig.y, fig.z).point;
    else
        fig.w = fig.y + fig.z - fig.x - fig.x;
    fig.perp = perp_through(fig.p, line_through(fig.p, fig.w));
    fig.q = intersect_lines(fig.perp, line_through(fig.a, fig.d));
    fig.r = intersect_lines(fig.perp, line_through(fig.b, fig.c));
    return fig;
}

template <Field T>
std::vector<std::pair<std::string, Point<T>>> named_points(const Thm2Figure<T>& f) {
    return {{"A", f.a}, {"B", f.b}, {"C", f.c}, {"D", f.d}, {"P", f.p}, {"X", f.x},
            {"Y", f.y}, {"Z", f.z}, {"W", f.w}, {"Q", f.q}, {"R", f.r}};
}

bool check_thm2(const Thm2Config& cfg, Claim claim = Claim::stated);

// -- Lemma: bisector meets and the Newton line --------------------------------------

template <Field T>
struct Lemma1Figure {
    Point<T> x, y;  // bisector meets of (AB, CD) and (BC, DA)
    Line<T> newton;
};

Lemma1Figure<Rational> build_lemma1(const Quad<Rational>& q, Claim claim = Claim::stated);
bool check_lemma1(const Quad<Rational>& q, Claim claim = Claim::stated);
Quad<Rational> sample_quad(Rng& rng, std::int64_t bound);
/// Any four points are accepted; degeneracies surface during construction.
void validate(const Quad<Rational>& q);
NamedValues named_values(const Quad<Rational>& q);

// -- Lemma: perpendicular-sided quadrilaterals ---------------------------------------

/// PQ ⊥ AB, QR ⊥ BC, RS ⊥ CD, SP ⊥ DA, PR ⊥ BD, SQ ⊥ AC.
struct Lemma2Config {
    Quad<Rational> abcd;
    Quad<Rational> pqrs;
};

/// Which of the six perpendicularity hypotheses hold, in the order above.
std::array<bool, 6> lemma2_constraints(const Lemma2Config& cfg);

/// Circumcenter route: the quadrilateral O_cO_dO_aO_b of `quad` together with
/// `quad` itself satisfies all six constraints. With `circumcenters_first` the
/// circumcenter quadrilateral plays ABCD (as in the harmonic proof of the first
/// generalization); otherwise `quad` plays ABCD.
Lemma2Config lemma2_from_circumcenters(const Quad<Rational>& quad, bool circumcenters_first = true);

struct Lemma2Figure {
    Point<Rational> j, k;  // PQ ∩ RS, QR ∩ SP
    Line<Rational> newton;
};

Lemma2Figure build_lemma2(const Lemma2Config& cfg, Claim claim = Claim::stated);
bool check_lemma2(const Lemma2Config& cfg, Claim claim = Claim::stated);

// -- Lemma: coaxial circles ------------------------------------------------------------

template <Field T>
struct Lemma3Figure {
    Point<T> a, b, c, d, p;
    Point<T> o_a, o_b, o_c, o_d;
    Point<T> m, n;  // midpoints of AC and BD
    Circle<T> on_ac, on_bd, pmn;
};

template <Field T>
Lemma3Figure<T> build_lemma3(const Quad<T>& quad, Claim claim = Claim::stated) {
    Lemma3Figure<T> fig;
    fig.a = quad.a;
    fig.b = quad.b;
    fig.c = quad.c;
    fig.d = quad.d;
    fig.p = intersect_lines(line_through(fig.a, fig.c), line_through(fig.b, fig.d));
    fig.o_a = circumcenter(fig.b, fig.c, fig.d);
    fig.o_b = circumcenter(fig.c, fig.d, fig.a);
    fig.o_c = circumcenter(fig.d, fig.a, fig.b);
    fig.o_d = circumcenter(fig.a, fig.b, fig.c);
    fig.m = midpoint(fig.a, fig.c);
    fig.n = midpoint(fig.b, fig.d);
    fig.on_ac = circle_on_diameter(fig.o_a, fig.o_c);
    fig.on_bd = circle_on_diameter(fig.o_b, fig.o_d);
    fig.pmn = circumcircle(fig.p, fig.m, claim == Claim::stated ? fig.n : fig.d);
    return fig;
}

bool check_lemma3(const Thm1Config& cfg, Claim claim = Claim::stated);

/// Power of p with respect to the circle on diameter O_aO_c divided by its
/// power with respect to the circle on diameter O_bO_d.
template <Field T>
T power_ratio(const Lemma3Figure<T>& fig, const Point<T>& p) {
    return power_of_point(p, fig.on_ac) / power_of_point(p, fig.on_bd);
}

// -- suite ------------------------------------------------------------------------------

enum class TheoremId { butterfly_chord, thm0, thm1, thm2, lemma1, lemma2, lemma3 };

inline constexpr std::array<TheoremId, 7> kAllTheorems = {
    TheoremId::butterfly_chord, TheoremId::thm0,   TheoremId::thm1,  TheoremId::thm2,
    TheoremId::lemma1,          TheoremId::lemma2, TheoremId::lemma3};

const char* theorem_name(TheoremId id);

struct NumericOptions {
    std::uint64_t seed = 0;
    std::uint64_t trials = 1000;
    std::int64_t bound = 20;
    Claim claim = Claim::stated;
    SignPolicy sign_policy = SignPolicy::opposite_signs;
    Execution execution = Execution::parallel;
    double skip_ceiling = kDefaultSkipCeiling;
};

TrialFn theorem_trial(TheoremId id, std::int64_t bound, Claim claim, SignPolicy policy);
VerificationReport numeric_report(TheoremId id, const NumericOptions& options);
std::vector<VerificationReport> numeric_suite(const NumericOptions& options);

} // namespace bfly
