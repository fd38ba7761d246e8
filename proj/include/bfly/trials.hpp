#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bfly/field.hpp"
#include "bfly/report.hpp"

namespace bfly {

enum class TrialStatus : std::uint8_t { pass, fail, skip };

struct TrialResult {
    TrialStatus status = TrialStatus::skip;
    NamedValues values;   // the sampled parameters
    std::string detail;   // skip reason or failing check
    std::vector<std::string> tags;  // e.g. "concentric"; counted into report notes
    std::vector<std::uint8_t> checks;  // per-assertion outcomes, when the trial has several
};

/// One randomized trial. Receives its own generator seeded from
/// (run seed, trial index); must not touch shared mutable state.
using TrialFn = std::function<TrialResult(Rng&)>;

enum class Execution { serial, parallel };

/// Serial reference loop.
std::vector<TrialResult> run_trials_serial(const TrialFn& fn, std::uint64_t seed, std::uint64_t trials);

/// OpenMP loop over trial indices; produces exactly the serial result.
std::vector<TrialResult> run_trials_parallel(const TrialFn& fn, std::uint64_t seed, std::uint64_t trials);

std::vector<TrialResult> run_trials(const TrialFn& fn, std::uint64_t seed, std::uint64_t trials,
                                    Execution execution);

inline constexpr double kDefaultSkipCeiling = 0.2;

/// Folds trial outcomes into a report. The first failing trial ends the run:
/// later trials are not counted.
VerificationReport summarize_trials(const std::string& id, const std::vector<TrialResult>& results,
                                    std::uint64_t seed, double skip_ceiling = kDefaultSkipCeiling);

} // namespace bfly
