#pragma once

// Symbolic verification over Q(a, b, c, d, k): every construction is carried
// out on rational functions and compared with the closed forms, then the
// theorem's conclusion is decided as an exact identity.

#include <string>
#include <utility>
#include <vector>

#include "bfly/formulas.hpp"
#include "bfly/report.hpp"
#include "bfly/theorems.hpp"

namespace bfly {

VerificationReport prove_thm1(const ClosedForms& forms = closed_forms());
VerificationReport prove_thm2(const ClosedForms& forms = closed_forms());
VerificationReport prove_lemma3(const ClosedForms& forms = closed_forms());

std::vector<VerificationReport> symbolic_suite(const ClosedForms& forms = closed_forms());

enum class SuiteMode { numeric, symbolic, both };

std::vector<VerificationReport> run_suite(SuiteMode mode, const NumericOptions& options);

/// Names of the points whose symbolic value, evaluated at `at`, differs from
/// the numeric construction. Throws DenominatorVanishes when a symbolic
/// coordinate is undefined at `at`.
std::vector<std::string> bridge_mismatches(
    const std::vector<std::pair<std::string, Point<RF>>>& symbolic,
    const std::vector<std::pair<std::string, Point<Rational>>>& numeric, const Assignment& at);

} // namespace bfly
