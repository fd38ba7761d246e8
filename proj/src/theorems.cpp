#include "bfly/theorems.hpp"

#include <chrono>

namespace bfly {

namespace {

void require_distinct(const std::vector<std::pair<const char*, const Rational*>>& params) {
    for (std::size_t i = 0; i < params.size(); ++i) {
        const Rational& t = *params[i].second;
        if (t == Rational(1) || t == Rational(-1))
            throw DegenerateConfig(std::string(params[i].first) + " = +-1 is excluded");
        for (std::size_t j = i + 1; j < params.size(); ++j)
            if (t == *params[j].second)
                throw DegenerateConfig(std::string(params[i].first) + " = " + params[j].first);
    }
}

template <class Config, class Sample, class Check>
TrialFn make_trial(Sample sample, Check check) {
    return [sample, check](Rng& rng) {
        Config cfg = sample(rng);
        TrialResult result;
        result.values = named_values(cfg);
        try {
            validate(cfg);
            result.status = check(cfg, result) ? TrialStatus::pass : TrialStatus::fail;
        } catch (const Degeneracy& e) {
            result.status = TrialStatus::skip;
            result.detail = e.what();
        }
        return result;
    };
}

} // namespace

// -- gauge ---------------------------------------------------------------------

void validate(const Gauge<Rational>& g) {
    if (g.a.is_zero() || g.b.is_zero() || g.c.is_zero() || g.d.is_zero() || g.k.is_zero())
        throw DegenerateConfig("a zero gauge parameter");
    if (g.a == g.c)
        throw DegenerateConfig("a = c");
    if (g.b == g.d)
        throw DegenerateConfig("b = d");
}

NamedValues named_values(const Gauge<Rational>& g) {
    return {{"a", g.a}, {"b", g.b}, {"c", g.c}, {"d", g.d}, {"k", g.k}};
}

Assignment to_assignment(const Gauge<Rational>& g) { return {g.a, g.b, g.c, g.d, g.k}; }

Gauge<Rational> sample_gauge(Rng& rng, std::int64_t bound, SignPolicy policy) {
    Gauge<Rational> g;
    g.a = sample_rational(rng, bound);
    g.b = sample_rational(rng, bound);
    g.c = sample_rational(rng, bound);
    g.d = sample_rational(rng, bound);
    g.k = sample_rational(rng, bound);
    if (policy == SignPolicy::opposite_signs) {
        // Flip signs so P lies strictly inside both diagonals.
        if (g.a.sign() * g.c.sign() > 0)
            g.c = -g.c;
        if (g.b.sign() * g.d.sign() > 0)
            g.d = -g.d;
    }
    return g;
}

// -- chord butterfly ----------------------------------------------------------------

void validate(const ChordButterflyConfig& cfg) {
    require_distinct({{"t_a", &cfg.t_a}, {"t_b", &cfg.t_b}, {"t_c", &cfg.t_c}, {"t_e", &cfg.t_e}});
}

NamedValues named_values(const ChordButterflyConfig& cfg) {
    return {{"t_a", cfg.t_a}, {"t_b", cfg.t_b}, {"t_c", cfg.t_c}, {"t_e", cfg.t_e}};
}

ChordButterflyConfig sample_chord(Rng& rng, std::int64_t bound) {
    ChordButterflyConfig cfg;
    cfg.t_a = sample_rational(rng, bound);
    cfg.t_b = sample_rational(rng, bound);
    cfg.t_c = sample_rational(rng, bound);
    cfg.t_e = sample_rational(rng, bound);
    return cfg;
}

ChordFigure<Rational> build_chord(const ChordButterflyConfig& cfg, Claim claim) {
    const Circle<Rational> omega = unit_circle();
    ChordFigure<Rational> fig;
    fig.a = on_unit_circle(cfg.t_a);
    fig.b = on_unit_circle(cfg.t_b);
    if (claim == Claim::stated) {
        fig.m = midpoint(fig.a, fig.b);
    } else {
        const Rational third(BigInt(1), BigInt(3));
        fig.m = {(Rational(2) * fig.a.x + fig.b.x) * third, (Rational(2) * fig.a.y + fig.b.y) * third};
    }
    fig.c = on_unit_circle(cfg.t_c);
    fig.e = on_unit_circle(cfg.t_e);
    fig.d = second_intersection(omega, line_through(fig.c, fig.m), fig.c);
    fig.f = second_intersection(omega, line_through(fig.e, fig.m), fig.e);
    const Line<Rational> ab = line_through(fig.a, fig.b);
    fig.g = intersect_lines(line_through(fig.c, fig.f), ab);
    fig.h = intersect_lines(line_through(fig.d, fig.e), ab);
    return fig;
}

bool check_butterfly_chord(const ChordButterflyConfig& cfg, Claim claim) {
    const auto fig = build_chord(cfg, claim);
    return is_midpoint(fig.m, fig.g, fig.h);
}

bool is_crossed(const ChordFigure<Rational>& fig) {
    const Line<Rational> ab = line_through(fig.a, fig.b);
    return (evaluate_at(ab, fig.c) * evaluate_at(ab, fig.f)).sign() > 0;
}

// -- cyclic quadrilateral --------------------------------------------------------------

void validate(const CyclicConfig& cfg) {
    require_distinct({{"t_a", &cfg.t_a}, {"t_b", &cfg.t_b}, {"t_c", &cfg.t_c}, {"t_d", &cfg.t_d}});
}

NamedValues named_values(const CyclicConfig& cfg) {
    return {{"t_a", cfg.t_a}, {"t_b", cfg.t_b}, {"t_c", cfg.t_c}, {"t_d", cfg.t_d}};
}

CyclicConfig sample_cyclic(Rng& rng, std::int64_t bound) {
    CyclicConfig cfg;
    cfg.t_a = sample_rational(rng, bound);
    cfg.t_b = sample_rational(rng, bound);
    cfg.t_c = sample_rational(rng, bound);
    cfg.t_d = sample_rational(rng, bound);
    return cfg;
}

CyclicFigure<Rational> build_thm0(const CyclicConfig& cfg, Claim claim) {
    CyclicFigure<Rational> fig;
    fig.a = on_unit_circle(cfg.t_a);
    fig.b = on_unit_circle(cfg.t_b);
    fig.c = on_unit_circle(cfg.t_c);
    fig.d = on_unit_circle(cfg.t_d);
    fig.o = claim == Claim::stated
                ? Point<Rational>{}
                : Point<Rational>{Rational(BigInt(1), BigInt(3)), Rational(BigInt(1), BigInt(5))};
    fig.p = intersect_lines(line_through(fig.a, fig.c), line_through(fig.b, fig.d));
    fig.perp = perp_through(fig.p, line_through(fig.o, fig.p));
    fig.q = intersect_lines(fig.perp, line_through(fig.a, fig.b));
    fig.r = intersect_lines(fig.perp, line_through(fig.c, fig.d));
    return fig;
}

bool check_thm0(const CyclicConfig& cfg, Claim claim) {
    const auto fig = build_thm0(cfg, claim);
    return is_midpoint(fig.p, fig.q, fig.r);
}

// -- generalizations -----------------------------------------------------------------------

bool check_thm1(const Thm1Config& cfg, Claim claim) {
    const auto fig = build_thm1(cfg.quad(), claim);
    return is_midpoint(fig.p, fig.q, fig.r);
}

bool check_thm2(const Thm2Config& cfg, Claim claim) {
    const auto fig = build_thm2(cfg.quad(), claim);
    return is_midpoint(fig.p, fig.q, fig.r);
}

// -- lemmas ------------------------------------------------------------------------------

Lemma1Figure<Rational> build_lemma1(const Quad<Rational>& q, Claim claim) {
    Lemma1Figure<Rational> fig;
    fig.x = claim == Claim::stated
                ? intersect_lines(perp_bisector(q.a, q.b), perp_bisector(q.c, q.d))
                : intersect_lines(perp_bisector(q.a, q.b), perp_bisector(q.b, q.c));
    fig.y = intersect_lines(perp_bisector(q.b, q.c), perp_bisector(q.d, q.a));
    fig.newton = newton_line(q.a, q.b, q.c, q.d);
    return fig;
}

bool check_lemma1(const Quad<Rational>& q, Claim claim) {
    const auto fig = build_lemma1(q, claim);
    return is_perpendicular(line_through(fig.x, fig.y), fig.newton);
}

Quad<Rational> sample_quad(Rng& rng, std::int64_t bound) {
    Quad<Rational> q;
    for (Point<Rational>* p : {&q.a, &q.b, &q.c, &q.d}) {
        p->x = sample_rational(rng, bound);
        p->y = sample_rational(rng, bound);
    }
    return q;
}

NamedValues named_values(const Quad<Rational>& q) {
    return {{"ax", q.a.x}, {"ay", q.a.y}, {"bx", q.b.x}, {"by", q.b.y},
            {"cx", q.c.x}, {"cy", q.c.y}, {"dx", q.d.x}, {"dy", q.d.y}};
}

void validate(const Quad<Rational>&) {}

std::array<bool, 6> lemma2_constraints(const Lemma2Config& cfg) {
    const auto& [a, b, c, d] = cfg.abcd;
    const auto& [p, q, r, s] = cfg.pqrs;
    return {is_perpendicular(line_through(p, q), line_through(a, b)),
            is_perpendicular(line_through(q, r), line_through(b, c)),
            is_perpendicular(line_through(r, s), line_through(c, d)),
            is_perpendicular(line_through(s, p), line_through(d, a)),
            is_perpendicular(line_through(p, r), line_through(b, d)),
            is_perpendicular(line_through(s, q), line_through(a, c))};
}

Lemma2Config lemma2_from_circumcenters(const Quad<Rational>& quad, bool circumcenters_first) {
    const Point<Rational> o_a = circumcenter(quad.b, quad.c, quad.d);
    const Point<Rational> o_b = circumcenter(quad.c, quad.d, quad.a);
    const Point<Rational> o_c = circumcenter(quad.d, quad.a, quad.b);
    const Point<Rational> o_d = circumcenter(quad.a, quad.b, quad.c);
    const Quad<Rational> centers{o_c, o_d, o_a, o_b};
    return circumcenters_first ? Lemma2Config{centers, quad} : Lemma2Config{quad, centers};
}

Lemma2Figure build_lemma2(const Lemma2Config& cfg, Claim claim) {
    const auto& [p, q, r, s] = cfg.pqrs;
    Lemma2Figure fig;
    fig.j = intersect_lines(line_through(p, q), line_through(r, s));
    fig.k = claim == Claim::stated ? intersect_lines(line_through(q, r), line_through(s, p)) : r;
    fig.newton = newton_line(cfg.abcd.a, cfg.abcd.b, cfg.abcd.c, cfg.abcd.d);
    return fig;
}

bool check_lemma2(const Lemma2Config& cfg, Claim claim) {
    const auto hypotheses = lemma2_constraints(cfg);
    const auto fig = build_lemma2(cfg, claim);
    for (bool h : hypotheses)
        if (!h)
            return false;
    return is_perpendicular(line_through(fig.j, fig.k), fig.newton);
}

bool check_lemma3(const Thm1Config& cfg, Claim claim) {
    const auto fig = build_lemma3(cfg.quad(), claim);
    return are_coaxial(fig.on_ac, fig.on_bd, fig.pmn);
}

// -- suite ------------------------------------------------------------------------------------

const char* theorem_name(TheoremId id) {
    switch (id) {
    case TheoremId::butterfly_chord: return "butterfly_chord";
    case TheoremId::thm0: return "thm0_cyclic";
    case TheoremId::thm1: return "thm1";
    case TheoremId::thm2: return "thm2";
    case TheoremId::lemma1: return "lemma1";
    case TheoremId::lemma2: return "lemma2";
    case TheoremId::lemma3: return "lemma3";
    }
    return "?";
}

TrialFn theorem_trial(TheoremId id, std::int64_t bound, Claim claim, SignPolicy policy) {
    auto gauge = [bound, policy](Rng& rng) { return sample_gauge(rng, bound, policy); };
    switch (id) {
    case TheoremId::butterfly_chord:
        return make_trial<ChordButterflyConfig>(
            [bound](Rng& rng) { return sample_chord(rng, bound); },
            [claim](const ChordButterflyConfig& cfg, TrialResult& out) {
                const auto fig = build_chord(cfg, claim);
                if (is_crossed(fig))
                    out.tags.push_back("crossed (C, F on the same side of AB)");
                return is_midpoint(fig.m, fig.g, fig.h);
            });
    case TheoremId::thm0:
        return make_trial<CyclicConfig>(
            [bound](Rng& rng) { return sample_cyclic(rng, bound); },
            [claim](const CyclicConfig& cfg, TrialResult&) { return check_thm0(cfg, claim); });
    case TheoremId::thm1:
        return make_trial<Thm1Config>(
            gauge, [claim](const Thm1Config& cfg, TrialResult&) { return check_thm1(cfg, claim); });
    case TheoremId::thm2:
        return make_trial<Thm2Config>(
            gauge, [claim](const Thm2Config& cfg, TrialResult&) { return check_thm2(cfg, claim); });
    case TheoremId::lemma1:
        return make_trial<Quad<Rational>>(
            [bound](Rng& rng) { return sample_quad(rng, bound); },
            [claim](const Quad<Rational>& q, TrialResult&) { return check_lemma1(q, claim); });
    case TheoremId::lemma2:
        return make_trial<Thm1Config>(gauge, [claim](const Thm1Config& cfg, TrialResult& out) {
            const Lemma2Config l2 = lemma2_from_circumcenters(cfg.quad());
            const auto hypotheses = lemma2_constraints(l2);
            for (std::size_t i = 0; i < hypotheses.size(); ++i)
                if (!hypotheses[i])
                    out.detail = "perpendicularity hypothesis " + std::to_string(i + 1) + " violated";
            return check_lemma2(l2, claim);
        });
    case TheoremId::lemma3:
        return make_trial<Thm1Config>(gauge, [claim](const Thm1Config& cfg, TrialResult& out) {
            const auto fig = build_lemma3(cfg.quad(), claim);
            if (is_concentric(fig.on_ac, fig.on_bd, fig.pmn))
                out.tags.push_back("concentric pencil");
            return are_coaxial(fig.on_ac, fig.on_bd, fig.pmn);
        });
    }
    throw std::invalid_argument("unknown theorem");
}

VerificationReport numeric_report(TheoremId id, const NumericOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const TrialFn fn = theorem_trial(id, options.bound, options.claim, options.sign_policy);
    const auto results = run_trials(fn, options.seed, options.trials, options.execution);
    VerificationReport report = summarize_trials(theorem_name(id), results, options.seed, options.skip_ceiling);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<VerificationReport> numeric_suite(const NumericOptions& options) {
    std::vector<VerificationReport> reports;
    for (TheoremId id : kAllTheorems)
        reports.push_back(numeric_report(id, options));
    return reports;
}

} // namespace bfly
