#include "bfly/trials.hpp"

#include <map>
#include <sstream>

#include <omp.h>

namespace bfly {

std::vector<TrialResult> run_trials_serial(const TrialFn& fn, std::uint64_t seed, std::uint64_t trials) {
    std::vector<TrialResult> results(trials);
    for (std::uint64_t i = 0; i < trials; ++i) {
        Rng rng = trial_rng(seed, i);
        results[i] = fn(rng);
    }
    return results;
}

std::vector<TrialResult> run_trials_parallel(const TrialFn& fn, std::uint64_t seed, std::uint64_t trials) {
    std::vector<TrialResult> results(trials);
    const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < n; ++i) {
        Rng rng = trial_rng(seed, static_cast<std::uint64_t>(i));
        results[static_cast<std::size_t>(i)] = fn(rng);
    }
    return results;
}

std::vector<TrialResult> run_trials(const TrialFn& fn, std::uint64_t seed, std::uint64_t trials,
                                    Execution execution) {
    return execution == Execution::parallel ? run_trials_parallel(fn, seed, trials)
                                            : run_trials_serial(fn, seed, trials);
}

VerificationReport summarize_trials(const std::string& id, const std::vector<TrialResult>& results,
                                    std::uint64_t seed, double skip_ceiling) {
    VerificationReport report;
    report.id = id;
    report.mode = Mode::numeric;
    std::map<std::string, std::uint64_t> tag_counts;
    for (std::uint64_t i = 0; i < results.size(); ++i) {
        const TrialResult& r = results[i];
        ++report.attempted;
        for (const auto& tag : r.tags)
            ++tag_counts[tag];
        if (r.status == TrialStatus::pass) {
            ++report.passed;
        } else if (r.status == TrialStatus::skip) {
            ++report.skipped;
        } else {
            report.counterexample = Witness{seed, i, r.values, r.detail};
            break;
        }
    }
    for (const auto& [tag, count] : tag_counts)
        report.notes.push_back(tag + ": " + std::to_string(count));
    if (!report.counterexample && report.attempted > 0 && report.skip_rate() >= skip_ceiling) {
        std::ostringstream os;
        os << "skip rate " << report.skipped << "/" << report.attempted << " reaches ceiling "
           << skip_ceiling;
        report.failure = os.str();
    }
    return report;
}

} // namespace bfly
