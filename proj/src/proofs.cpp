#include "bfly/proofs.hpp"

#include <chrono>
#include <stdexcept>

namespace bfly {

namespace {

class StepLog {
public:
    explicit StepLog(VerificationReport& report) : report_(report) {}

    void check(const std::string& name, StepKind kind, bool ok, const std::string& detail = {}) {
        report_.steps.push_back({report_.id + "." + name, kind, ok, ok ? std::string() : detail});
        if (!ok && report_.failure.empty())
            report_.failure = "SymbolicMismatch: " + report_.id + "." + name;
    }

    void formula(const std::string& name, const Point<RF>& built, const Point<RF>& closed) {
        std::string detail;
        const bool ok = built == closed;
        if (!ok)
            detail = "constructed (" + built.x.to_string() + ", " + built.y.to_string() + ")";
        check(name, StepKind::formula, ok, detail);
    }

    void formula(const std::string& name, const RF& built, const RF& closed) {
        check(name, StepKind::formula, built == closed, "constructed " + built.to_string());
    }

    void formula(const std::string& name, const Line<RF>& built, const Line<RF>& closed) {
        check(name, StepKind::formula, same_line(built, closed),
              "constructed " + built.u.to_string() + " x + " + built.v.to_string() + " y + " +
                  built.w.to_string());
    }

private:
    VerificationReport& report_;
};

template <class Body>
VerificationReport symbolic_report(const std::string& id, Body body) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.id = id;
    report.mode = Mode::symbolic;
    report.attempted = 1;
    try {
        StepLog log(report);
        body(log);
    } catch (const Degeneracy& e) {
        report.failure = std::string("symbolic construction degenerate: ") + e.what();
    }
    if (report.failure.empty())
        report.passed = 1;
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

bool is_origin_midpoint(const Point<RF>& q, const Point<RF>& r) {
    return is_zero(q.x + r.x) && is_zero(q.y + r.y);
}

} // namespace

VerificationReport prove_thm1(const ClosedForms& t) {
    return symbolic_report("thm1", [&](StepLog& log) {
        const auto fig = build_thm1(symbolic_gauge().quad());
        log.formula("O_a", fig.o_a, t.o_a);
        log.formula("O_b", fig.o_b, t.o_b);
        log.formula("O_c", fig.o_c, t.o_c);
        log.formula("O_d", fig.o_d, t.o_d);
        log.formula("M", fig.m, t.m);
        log.formula("N", fig.n, t.n);
        log.formula("perpendicular", fig.perp, slope_form(t.perp_slope));
        log.formula("line_AB", line_through(fig.a, fig.b), slope_form(t.ab_slope, t.ab_intercept));
        log.formula("line_CD", line_through(fig.c, fig.d), slope_form(t.cd_slope, t.cd_intercept));
        log.formula("Q", fig.q, t.q1);
        log.formula("R", fig.r, t.r1);
        log.check("P=(0,0)", StepKind::identity, is_zero(fig.p.x) && is_zero(fig.p.y));
        log.check("Q+R=0", StepKind::identity, is_origin_midpoint(fig.q, fig.r));
    });
}

VerificationReport prove_thm2(const ClosedForms& t) {
    return symbolic_report("thm2", [&](StepLog& log) {
        const auto quad = symbolic_gauge().quad();
        const auto fig = build_thm2(quad);
        log.formula("X", fig.x, t.x);
        log.formula("Y", fig.y, t.y);
        log.formula("Z", fig.z, t.z);
        log.formula("W_from_XYZ", parallelogram_fourth(t.x, t.y, t.z).point, Point<RF>{t.w_x, t.w_y});
        log.formula("W.x", fig.w.x, t.w_x);
        log.formula("W.y", fig.w.y, t.w_y);
        log.formula("perpendicular", fig.perp, slope_form(t.perp_pw_slope));
        log.formula("Q", fig.q, t.q2);
        log.formula("R", fig.r, t.r2);
        log.check("Q+R=0", StepKind::identity, is_origin_midpoint(fig.q, fig.r));
        const auto first = build_thm1(quad);
        log.check("perpendicular=thm1.perpendicular", StepKind::property, same_line(fig.perp, first.perp));
    });
}

VerificationReport prove_lemma3(const ClosedForms& t) {
    return symbolic_report("lemma3", [&](StepLog& log) {
        const auto fig = build_lemma3(symbolic_gauge().quad());
        log.formula("O_a", fig.o_a, t.o_a);
        log.formula("O_b", fig.o_b, t.o_b);
        log.formula("O_c", fig.o_c, t.o_c);
        log.formula("O_d", fig.o_d, t.o_d);
        const RF at_p = power_ratio(fig, fig.p);
        const RF at_m = power_ratio(fig, fig.m);
        const RF at_n = power_ratio(fig, fig.n);
        log.formula("power_ratio_P", at_p, t.power_ratio);
        log.formula("power_ratio_M", at_m, t.power_ratio);
        log.formula("power_ratio_N", at_n, t.power_ratio);
        // Signed products along the diagonals: PB.PD / PA.PC.
        const RF diagonal_ratio =
            dot(fig.b - fig.p, fig.d - fig.p) / dot(fig.a - fig.p, fig.c - fig.p);
        log.check("ratio_chain", StepKind::formula,
                  at_p == at_m && at_m == at_n && at_n == t.power_ratio && t.power_ratio == diagonal_ratio,
                  "diagonal ratio " + diagonal_ratio.to_string());
        log.check("coaxial", StepKind::identity, are_coaxial(fig.on_ac, fig.on_bd, fig.pmn));
    });
}

std::vector<VerificationReport> symbolic_suite(const ClosedForms& forms) {
    return {prove_thm1(forms), prove_thm2(forms), prove_lemma3(forms)};
}

std::vector<VerificationReport> run_suite(SuiteMode mode, const NumericOptions& options) {
    std::vector<VerificationReport> reports;
    if (mode != SuiteMode::symbolic)
        reports = numeric_suite(options);
    if (mode != SuiteMode::numeric)
        for (auto& r : symbolic_suite())
            reports.push_back(std::move(r));
    return reports;
}

std::vector<std::string> bridge_mismatches(
    const std::vector<std::pair<std::string, Point<RF>>>& symbolic,
    const std::vector<std::pair<std::string, Point<Rational>>>& numeric, const Assignment& at) {
    if (symbolic.size() != numeric.size())
        throw std::invalid_argument("bridge: figures have different point sets");
    std::vector<std::string> mismatches;
    for (std::size_t i = 0; i < symbolic.size(); ++i) {
        if (symbolic[i].first != numeric[i].first)
            throw std::invalid_argument("bridge: point order differs at " + symbolic[i].first);
        if (evaluate(symbolic[i].second, at) != numeric[i].second)
            mismatches.push_back(symbolic[i].first);
    }
    return mismatches;
}

} // namespace bfly
