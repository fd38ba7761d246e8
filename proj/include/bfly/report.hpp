#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bfly/rational.hpp"

namespace bfly {

enum class Mode { numeric, symbolic };

const char* to_string(Mode mode);

using NamedValues = std::vector<std::pair<std::string, Rational>>;

/// Everything needed to replay a failing trial.
struct Witness {
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
    NamedValues values;
    std::string detail;
};

enum class StepKind { formula, identity, property };

struct StepCheck {
    std::string name;
    StepKind kind = StepKind::formula;
    bool ok = false;
    std::string detail;
};

struct VerificationReport {
    std::string id;
    Mode mode = Mode::numeric;
    std::uint64_t attempted = 0;
    std::uint64_t passed = 0;
    std::uint64_t skipped = 0;
    std::optional<Witness> counterexample;
    std::vector<StepCheck> steps;
    std::vector<std::string> notes;
    std::string failure;  // set for symbolic mismatches and skip-ceiling violations
    double wall_seconds = 0.0;

    bool ok() const { return !counterexample && failure.empty(); }
    double skip_rate() const {
        return attempted == 0 ? 0.0 : static_cast<double>(skipped) / static_cast<double>(attempted);
    }
    std::size_t formula_checks() const;
};

/// Human-oriented block format; see docs/report-format.md. Wall time is not
/// part of it so output is reproducible.
std::string format_text(const VerificationReport& report);
std::string format_text(const std::vector<VerificationReport>& reports);

/// Flat "key = value" document, one key per line, keys prefixed by report id.
std::string format_kv(const std::vector<VerificationReport>& reports);

} // namespace bfly
