#include "bfly/dsl.hpp"

#include <chrono>
#include <memory>

namespace bfly::dsl {

namespace {

template <Field T>
class Evaluator {
public:
    explicit Evaluator(const Environment<T>& env) : env_(env) {}

    Value<T> eval(const Expr& e) const {
        switch (e.kind) {
        case Expr::Kind::number:
            return T(Rational::parse(e.text));
        case Expr::Kind::identifier:
            return env_.at(e.text);
        case Expr::Kind::negate:
            return -scalar(e.args[0]);
        case Expr::Kind::binary: {
            const T x = scalar(e.args[0]);
            const T y = scalar(e.args[1]);
            switch (e.text[0]) {
            case '+': return x + y;
            case '-': return x - y;
            case '*': return x * y;
            default: return x / y;
            }
        }
        case Expr::Kind::point_literal:
            return Point<T>{scalar(e.args[0]), scalar(e.args[1])};
        case Expr::Kind::call:
            return call(e);
        }
        throw std::logic_error("unhandled expression");
    }

    T scalar(const Expr& e) const { return std::get<T>(eval(e)); }
    Point<T> point(const Expr& e) const { return std::get<Point<T>>(eval(e)); }
    Line<T> line(const Expr& e) const { return std::get<Line<T>>(eval(e)); }
    Circle<T> circle(const Expr& e) const { return std::get<Circle<T>>(eval(e)); }

    bool holds(const Assertion& a) const {
        const auto& x = a.args;
        switch (a.predicate) {
        case Predicate::midpoint: return is_midpoint(point(x[0]), point(x[1]), point(x[2]));
        case Predicate::perpendicular: return is_perpendicular(line(x[0]), line(x[1]));
        case Predicate::parallel: return is_parallel(line(x[0]), line(x[1]));
        case Predicate::collinear: return is_collinear(point(x[0]), point(x[1]), point(x[2]));
        case Predicate::concyclic:
            return is_concyclic(point(x[0]), point(x[1]), point(x[2]), point(x[3]));
        case Predicate::harmonic: {
            const auto p1 = point(x[0]), p2 = point(x[1]), p3 = point(x[2]), p4 = point(x[3]);
            // A non-collinear quadruple is not a harmonic range: false, not degenerate.
            if (p1 != p2 && (!is_collinear(p1, p2, p3) || !is_collinear(p1, p2, p4)))
                return false;
            return cross_ratio(p1, p2, p3, p4) == T(-1);
        }
        case Predicate::coaxial: return are_coaxial(circle(x[0]), circle(x[1]), circle(x[2]));
        case Predicate::on: {
            const auto p = point(x[0]);
            const auto target = eval(x[1]);
            if (const auto* l = std::get_if<Line<T>>(&target))
                return point_on(p, *l);
            return point_on(p, std::get<Circle<T>>(target));
        }
        }
        throw std::logic_error("unhandled predicate");
    }

private:
    Value<T> call(const Expr& e) const {
        const std::string& f = e.text;
        const auto& x = e.args;
        if (f == "midpoint") return midpoint(point(x[0]), point(x[1]));
        if (f == "circumcenter") return circumcenter(point(x[0]), point(x[1]), point(x[2]));
        if (f == "perp_bisector") return perp_bisector(point(x[0]), point(x[1]));
        if (f == "perp_through") return perp_through(point(x[0]), line(x[1]));
        if (f == "line") return line_through(point(x[0]), point(x[1]));
        if (f == "intersect") return intersect_lines(line(x[0]), line(x[1]));
        if (f == "second_intersection")
            return second_intersection(circle(x[0]), line(x[1]), point(x[2]));
        if (f == "circle_on_diameter") return circle_on_diameter(point(x[0]), point(x[1]));
        if (f == "circumcircle") return circumcircle(point(x[0]), point(x[1]), point(x[2]));
        if (f == "parallelogram_fourth")
            return parallelogram_fourth(point(x[0]), point(x[1]), point(x[2])).point;
        if (f == "newton_line") return newton_line(point(x[0]), point(x[1]), point(x[2]), point(x[3]));
        if (f == "on_unit_circle") return on_unit_circle(scalar(x[0]));
        if (f == "power") return power_of_point(point(x[0]), circle(x[1]));
        if (f == "cross_ratio") return cross_ratio(point(x[0]), point(x[1]), point(x[2]), point(x[3]));
        throw std::logic_error("unknown function " + f);
    }

    const Environment<T>& env_;
};

std::string describe(std::size_t index, const Assertion& a) {
    return "assertion " + std::to_string(index + 1) + " " + print(a);
}

} // namespace

template <Field T>
Environment<T> evaluate_definitions(const Construction& c, const std::map<std::string, T>& params) {
    Environment<T> env;
    std::vector<std::string> unbound;
    for (const auto& name : c.params()) {
        auto it = params.find(name);
        if (it == params.end())
            unbound.push_back(name);
        else
            env.emplace(name, it->second);
    }
    if (!unbound.empty()) {
        std::string names;
        for (const auto& n : unbound)
            names += (names.empty() ? "" : ", ") + n;
        throw std::invalid_argument("unbound parameters: " + names);
    }
    const Evaluator<T> ev(env);
    for (const auto& s : c.statements) {
        const auto* d = std::get_if<Definition>(&s);
        if (!d)
            continue;
        try {
            env.emplace(d->name, ev.eval(d->value));
        } catch (const Degeneracy& e) {
            throw DegenerateConfig("defining '" + d->name + "': " + e.what());
        }
    }
    return env;
}

template <Field T>
Value<T> evaluate_expr(const Expr& e, const Environment<T>& env) {
    return Evaluator<T>(env).eval(e);
}

template <Field T>
bool evaluate_assertion(const Assertion& a, const Environment<T>& env) {
    return Evaluator<T>(env).holds(a);
}

template Environment<Rational> evaluate_definitions(const Construction&, const std::map<std::string, Rational>&);
template Environment<RationalFunction> evaluate_definitions(const Construction&,
                                                            const std::map<std::string, RationalFunction>&);
template Value<Rational> evaluate_expr(const Expr&, const Environment<Rational>&);
template Value<RationalFunction> evaluate_expr(const Expr&, const Environment<RationalFunction>&);
template bool evaluate_assertion(const Assertion&, const Environment<Rational>&);
template bool evaluate_assertion(const Assertion&, const Environment<RationalFunction>&);

Instance evaluate_instance(const Construction& c, const std::map<std::string, Rational>& params) {
    Instance out;
    out.env = evaluate_definitions(c, params);
    for (const Assertion* a : c.assertions())
        out.holds.push_back(evaluate_assertion(*a, out.env));
    return out;
}

TrialFn construction_trial(const Construction& c, std::int64_t bound) {
    auto shared = std::make_shared<const Construction>(c);
    return [shared, bound](Rng& rng) {
        TrialResult result;
        std::map<std::string, Rational> params;
        for (const auto& name : shared->params()) {
            Rational v = sample_rational(rng, bound);
            result.values.emplace_back(name, v);
            params.emplace(name, std::move(v));
        }
        try {
            // Every assertion is evaluated before deciding, so a degenerate
            // object anywhere makes the whole trial a skip.
            const Instance inst = evaluate_instance(*shared, params);
            const auto assertions = shared->assertions();
            result.status = TrialStatus::pass;
            for (std::size_t i = 0; i < inst.holds.size(); ++i) {
                result.checks.push_back(inst.holds[i] ? 1 : 0);
                if (!inst.holds[i]) {
                    result.status = TrialStatus::fail;
                    result.detail += (result.detail.empty() ? "" : "; ") + describe(i, *assertions[i]);
                }
            }
        } catch (const Degeneracy& e) {
            result.status = TrialStatus::skip;
            result.checks.clear();
            result.detail = e.what();
        }
        return result;
    };
}

VerificationReport evaluate_numeric(const Construction& c, const std::string& id, const NumericOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const auto results =
        run_trials(construction_trial(c, options.bound), options.seed, options.trials, options.execution);
    VerificationReport report = summarize_trials(id, results, options.seed, options.skip_ceiling);

    const auto assertions = c.assertions();
    const std::size_t counted = static_cast<std::size_t>(report.attempted);
    for (std::size_t i = 0; i < assertions.size(); ++i) {
        std::uint64_t held = 0, evaluated = 0;
        for (std::size_t t = 0; t < counted; ++t) {
            if (results[t].status == TrialStatus::skip)
                continue;
            ++evaluated;
            held += results[t].checks[i];
        }
        report.steps.push_back({"assert " + print(*assertions[i]), StepKind::property, held == evaluated,
                                "held in " + std::to_string(held) + " of " + std::to_string(evaluated) +
                                    " evaluated trials"});
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

VerificationReport evaluate_symbolic(const Construction& c, const std::string& id) {
    const auto start = std::chrono::steady_clock::now();
    std::map<std::string, RationalFunction> params;
    for (const auto& name : c.params()) {
        Var v;
        if (!parse_var(name, v))
            throw std::invalid_argument("symbolic mode needs parameters among a, b, c, d, k; got '" + name + "'");
        params.emplace(name, RationalFunction::variable(v));
    }

    VerificationReport report;
    report.id = id;
    report.mode = Mode::symbolic;
    report.attempted = 1;
    try {
        const auto env = evaluate_definitions(c, params);
        const auto assertions = c.assertions();
        for (std::size_t i = 0; i < assertions.size(); ++i) {
            const bool ok = evaluate_assertion(*assertions[i], env);
            report.steps.push_back({"assert " + print(*assertions[i]), StepKind::identity, ok, ""});
            if (!ok && report.failure.empty())
                report.failure = "SymbolicMismatch: " + describe(i, *assertions[i]);
        }
        if (report.failure.empty())
            report.passed = 1;
    } catch (const Degeneracy& e) {
        report.skipped = 1;
        report.failure = std::string("generically degenerate construction: ") + e.what();
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace bfly::dsl
