// Acceptance run: one PASS/FAIL line per criterion. All checks are exact; the
// only tolerances are the wall-time budgets and the refutation rate below.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "bfly/cli.hpp"
#include "bfly/dsl.hpp"
#include "bfly/proofs.hpp"

using namespace bfly;

namespace {

constexpr double kSymbolicBudgetSeconds = 60.0;
constexpr double kNumericBudgetSeconds = 120.0;
constexpr double kSkipCeiling = 0.2;
constexpr double kRefutationRate = 0.99;
constexpr int kRefutationSeeds = 20;
constexpr std::uint64_t kRefutationTrials = 1000;
constexpr int kBridgeAssignments = 100;
constexpr int kPropertyConfigs = 500;
constexpr int kEquivalenceSeeds = 100;
constexpr std::uint64_t kEquivalenceTrialsPerSeed = 1000;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void report(int n, const std::string& title, const Outcome& o) {
    std::cout << (o.ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << title;
    if (!o.detail.empty())
        std::cout << " (" << o.detail << ")";
    std::cout << std::endl;
    failures += o.ok ? 0 : 1;
}

std::string fmt_seconds(double s) {
    std::ostringstream ss;
    ss.precision(3);
    ss << std::fixed << s << " s";
    return ss.str();
}

std::string read(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome formulas() {
    const auto start = Clock::now();
    const auto reports = symbolic_suite();
    const double t = since(start);
    std::size_t total = 0, ok = 0;
    std::string first_bad;
    for (const auto& r : reports)
        for (const auto& s : r.steps)
            if (s.kind == StepKind::formula) {
                ++total;
                ok += s.ok ? 1 : 0;
                if (!s.ok && first_bad.empty())
                    first_bad = s.name;
            }
    Outcome o;
    o.ok = total == 28 && ok == total && t < kSymbolicBudgetSeconds;
    o.detail = std::to_string(ok) + "/" + std::to_string(total) + " formula checks, " + fmt_seconds(t);
    if (!first_bad.empty())
        o.detail += ", first mismatch " + first_bad;
    return o;
}

Outcome theorem_identities() {
    const auto start = Clock::now();
    const auto reports = symbolic_suite();
    const double t = since(start);
    const std::vector<std::string> required = {"thm1.Q+R=0", "thm2.Q+R=0", "lemma3.power_ratio_P",
                                               "lemma3.power_ratio_M", "lemma3.power_ratio_N",
                                               "lemma3.ratio_chain"};
    Outcome o;
    std::size_t found = 0;
    for (const auto& r : reports) {
        o.ok = o.ok && r.ok();
        for (const auto& s : r.steps)
            if (std::find(required.begin(), required.end(), s.name) != required.end()) {
                ++found;
                o.ok = o.ok && s.ok;
            }
    }
    o.ok = o.ok && found == required.size() && t < kSymbolicBudgetSeconds;
    o.detail = std::to_string(found) + " identities, " + fmt_seconds(t);
    return o;
}

Outcome numeric() {
    NumericOptions opt;
    opt.seed = 42;
    opt.trials = 1000;
    opt.bound = 20;
    const auto start = Clock::now();
    const auto reports = numeric_suite(opt);
    const double t = since(start);
    Outcome o;
    double worst = 0;
    for (const auto& r : reports) {
        const bool good = !r.counterexample && r.failure.empty() && r.attempted == 1000 && r.skip_rate() < kSkipCeiling;
        if (!good)
            o.detail += r.id + " failed; ";
        o.ok = o.ok && good;
        worst = std::max(worst, r.skip_rate());
    }
    o.ok = o.ok && reports.size() == 7 && t < kNumericBudgetSeconds;
    std::ostringstream ss;
    ss << reports.size() << " results x 1000 trials, worst skip rate " << worst << ", " << fmt_seconds(t);
    o.detail += ss.str();
    return o;
}

Outcome bridge() {
    const auto quad = symbolic_gauge().quad();
    const auto sym1 = named_points(build_thm1(quad));
    const auto sym2 = named_points(build_thm2(quad));
    Rng rng(trial_seed(42, 0));
    int compared = 0, draws = 0;
    std::size_t points = 0;
    Outcome o;
    while (compared < kBridgeAssignments && draws < 10 * kBridgeAssignments) {
        ++draws;
        const auto g = sample_gauge(rng, 20, SignPolicy::opposite_signs);
        try {
            validate(g);
            const auto n1 = named_points(build_thm1(g.quad()));
            const auto n2 = named_points(build_thm2(g.quad()));
            const auto at = to_assignment(g);
            auto bad = bridge_mismatches(sym1, n1, at);
            for (auto& b : bridge_mismatches(sym2, n2, at))
                bad.push_back(b);
            if (!bad.empty()) {
                o.ok = false;
                o.detail = "mismatch at " + bad.front() + "; ";
            }
            points += n1.size() + n2.size();
            ++compared;
        } catch (const Degeneracy&) {
        }
    }
    o.ok = o.ok && compared == kBridgeAssignments;
    o.detail += std::to_string(compared) + " assignments, " + std::to_string(points) + " points compared";
    return o;
}

Outcome harmonic() {
    Rng rng(trial_seed(42, 1));
    int first = 0, second = 0, draws = 0;
    Outcome o;
    while ((first < kPropertyConfigs || second < kPropertyConfigs) && draws < 10 * kPropertyConfigs) {
        ++draws;
        const auto g = sample_gauge(rng, 20, SignPolicy::opposite_signs);
        try {
            validate(g);
            const auto quad = g.quad();
            const Point<Rational> f = intersect_lines(line_through(quad.a, quad.d), line_through(quad.b, quad.c));
            const Point<Rational> gg = intersect_lines(line_through(quad.a, quad.b), line_through(quad.c, quad.d));
            if (first < kPropertyConfigs) {
                try {
                    const auto fig = build_thm1(quad);
                    const Point<Rational> t = intersect_lines(line_through(f, fig.p), line_through(fig.a, fig.b));
                    const bool ok = pencil_cross_ratio(f, fig.p, gg, fig.a, fig.b) == Rational(-1) &&
                                    pencil_cross_ratio(f, fig.p, gg, fig.r, fig.q) == Rational(-1) &&
                                    cross_ratio(t, gg, fig.a, fig.b) == Rational(-1) &&
                                    is_parallel(line_through(fig.q, fig.r), line_through(f, gg));
                    o.ok = o.ok && ok;
                    ++first;
                } catch (const Degeneracy&) {
                }
            }
            if (second < kPropertyConfigs) {
                try {
                    const auto fig = build_thm2(quad);
                    o.ok = o.ok && is_perpendicular(line_through(fig.p, fig.w), line_through(f, gg));
                    ++second;
                } catch (const Degeneracy&) {
                }
            }
        } catch (const Degeneracy&) {
        }
    }
    o.ok = o.ok && first == kPropertyConfigs && second == kPropertyConfigs;
    o.detail = std::to_string(first) + " first-generalization and " + std::to_string(second) +
               " second-generalization configurations";
    return o;
}

// Runs trials in order until the first failure; true if one is found.
bool refuted(const TrialFn& fn, std::uint64_t seed) {
    for (std::uint64_t i = 0; i < kRefutationTrials; ++i) {
        Rng rng = trial_rng(seed, i);
        if (fn(rng).status == TrialStatus::fail)
            return true;
    }
    return false;
}

Outcome falsifiability() {
    std::vector<std::pair<std::string, TrialFn>> variants;
    for (TheoremId id : kAllTheorems)
        variants.emplace_back(theorem_name(id), theorem_trial(id, 20, Claim::perturbed, SignPolicy::opposite_signs));
    for (const char* f : {"perturbed_thm2.geo", "perturbed_midpoint.geo"})
        variants.emplace_back(f, dsl::construction_trial(
                                     dsl::parse(read(std::filesystem::path(BFLY_FIXTURE_DIR) / f)), 20));
    Outcome o;
    std::string worst;
    double worst_rate = 1.0;
    for (const auto& [name, fn] : variants) {
        int hits = 0;
        for (int s = 0; s < kRefutationSeeds; ++s)
            hits += refuted(fn, 1000 + static_cast<std::uint64_t>(s)) ? 1 : 0;
        const double rate = static_cast<double>(hits) / kRefutationSeeds;
        if (rate < worst_rate) {
            worst_rate = rate;
            worst = name;
        }
        o.ok = o.ok && rate >= kRefutationRate;
    }
    std::ostringstream ss;
    ss << variants.size() << " perturbed variants x " << kRefutationSeeds << " seeds, lowest refutation rate "
       << worst_rate;
    if (!worst.empty())
        ss << " (" << worst << ")";
    o.detail = ss.str();
    return o;
}

Outcome equivalence() {
    const std::vector<std::pair<const char*, TheoremId>> files = {
        {"butterfly_chord.geo", TheoremId::butterfly_chord}, {"thm0_cyclic.geo", TheoremId::thm0},
        {"thm1.geo", TheoremId::thm1},   {"thm2.geo", TheoremId::thm2},
        {"lemma1.geo", TheoremId::lemma1}, {"lemma2.geo", TheoremId::lemma2},
        {"lemma3.geo", TheoremId::lemma3}};
    Outcome o;
    std::size_t trials = 0, skips = 0;
    for (const auto& [file, id] : files) {
        const auto c = dsl::parse(read(std::filesystem::path(BFLY_GEO_DIR) / file));
        if (!dsl::same_structure(c, dsl::parse(dsl::print(c)))) {
            o.ok = false;
            o.detail += std::string(file) + " round trip differs; ";
        }
        const TrialFn from_file = dsl::construction_trial(c, 20);
        const TrialFn builtin = theorem_trial(id, 20, Claim::stated, SignPolicy::unconstrained);
        for (int s = 0; s < kEquivalenceSeeds; ++s) {
            const auto seed = static_cast<std::uint64_t>(s);
            const auto x = run_trials_serial(from_file, seed, kEquivalenceTrialsPerSeed);
            const auto y = run_trials_serial(builtin, seed, kEquivalenceTrialsPerSeed);
            for (std::size_t i = 0; i < x.size(); ++i) {
                ++trials;
                skips += x[i].status == TrialStatus::skip ? 1 : 0;
                if (x[i].status != y[i].status || x[i].values != y[i].values) {
                    if (o.ok)
                        o.detail += std::string(file) + " differs at seed " + std::to_string(s) + " trial " +
                                    std::to_string(i) + "; ";
                    o.ok = false;
                }
            }
        }
    }
    // The falsification fixture against the built-in perturbed claim.
    const auto bad = dsl::parse(read(std::filesystem::path(BFLY_FIXTURE_DIR) / "perturbed_thm2.geo"));
    const TrialFn from_file = dsl::construction_trial(bad, 20);
    const TrialFn builtin = theorem_trial(TheoremId::thm2, 20, Claim::perturbed, SignPolicy::unconstrained);
    for (int s = 0; s < kEquivalenceSeeds; ++s) {
        const auto x = run_trials_serial(from_file, static_cast<std::uint64_t>(s), kEquivalenceTrialsPerSeed);
        const auto y = run_trials_serial(builtin, static_cast<std::uint64_t>(s), kEquivalenceTrialsPerSeed);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i].status != y[i].status) {
                if (o.ok)
                    o.detail += "perturbed_thm2.geo differs at seed " + std::to_string(s) + "; ";
                o.ok = false;
            }
    }
    o.detail += std::to_string(files.size()) + " files, " + std::to_string(kEquivalenceSeeds) + " seeds x " +
                std::to_string(kEquivalenceTrialsPerSeed) + " trials, " + std::to_string(trials) +
                " verdicts compared, " + std::to_string(skips) + " shared skips";
    return o;
}

Outcome determinism() {
    auto stdout_of = [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return std::make_pair(code, out.str());
    };
    const auto a = stdout_of({"prove-paper", "--seed", "42"});
    const auto b = stdout_of({"prove-paper", "--seed", "42"});
    const std::string thm1 = (std::filesystem::path(BFLY_GEO_DIR) / "thm1.geo").string();
    const std::vector<std::string> render = {"render", thm1, "--set", "a=2,b=1,c=-3,d=-2,k=1"};
    const auto r1 = stdout_of(render);
    const auto r2 = stdout_of(render);
    Outcome o;
    o.ok = a.first == kExitOk && a == b && r1.first == kExitOk && r1 == r2 && !a.second.empty() &&
           r1.second.find("<svg") != std::string::npos;
    o.detail = "prove-paper " + std::to_string(a.second.size()) + " bytes, svg " +
               std::to_string(r1.second.size()) + " bytes";
    return o;
}

} // namespace

int main() {
    report(1, "symbolic reproduction of the closed forms", formulas());
    report(2, "symbolic proofs of the midpoint and power-ratio identities", theorem_identities());
    report(3, "numeric suite at seed 42", numeric());
    report(4, "symbolic/numeric bridge", bridge());
    report(5, "harmonic and parallel properties", harmonic());
    report(6, "perturbed claims are refuted", falsifiability());
    report(7, "construction files match the built-in checkers", equivalence());
    report(8, "determinism of reports and figures", determinism());
    std::cout << (failures == 0 ? "acceptance: PASS" : "acceptance: FAIL") << std::endl;
    return failures == 0 ? 0 : 1;
}
