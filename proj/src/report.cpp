#include "bfly/report.hpp"

#include <sstream>

namespace bfly {

const char* to_string(Mode mode) {
    return mode == Mode::numeric ? "numeric" : "symbolic";
}

namespace {

const char* kind_name(StepKind kind) {
    switch (kind) {
    case StepKind::formula: return "formula";
    case StepKind::identity: return "identity";
    case StepKind::property: return "property";
    }
    return "?";
}

std::string values_to_string(const NamedValues& values) {
    std::string out;
    for (const auto& [name, value] : values) {
        if (!out.empty())
            out += ' ';
        out += name + "=" + value.to_string();
    }
    return out;
}

} // namespace

std::size_t VerificationReport::formula_checks() const {
    std::size_t n = 0;
    for (const auto& s : steps)
        n += s.kind == StepKind::formula ? 1 : 0;
    return n;
}

std::string format_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "== " << r.id << " (" << to_string(r.mode) << ") ==\n";
    os << "  attempted: " << r.attempted << "  passed: " << r.passed << "  skipped: " << r.skipped << "\n";
    for (const auto& s : r.steps) {
        os << "  " << kind_name(s.kind) << " " << s.name << ": " << (s.ok ? "ok" : "MISMATCH");
        if (!s.detail.empty())
            os << " (" << s.detail << ")";
        os << "\n";
    }
    for (const auto& n : r.notes)
        os << "  note: " << n << "\n";
    if (r.counterexample) {
        const Witness& w = *r.counterexample;
        os << "  counterexample: seed=" << w.seed << " trial=" << w.trial << " "
           << values_to_string(w.values) << "\n";
        if (!w.detail.empty())
            os << "  failed: " << w.detail << "\n";
    }
    if (!r.failure.empty())
        os << "  failure: " << r.failure << "\n";
    os << "  verdict: " << (r.ok() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string format_text(const std::vector<VerificationReport>& reports) {
    std::string out;
    for (const auto& r : reports)
        out += format_text(r);
    return out;
}

std::string format_kv(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        const std::string p = r.id + "." + to_string(r.mode) + ".";
        os << p << "attempted = " << r.attempted << "\n";
        os << p << "passed = " << r.passed << "\n";
        os << p << "skipped = " << r.skipped << "\n";
        for (const auto& s : r.steps)
            os << p << "step." << s.name << " = " << (s.ok ? "ok" : "mismatch") << "\n";
        for (std::size_t i = 0; i < r.notes.size(); ++i)
            os << p << "note." << i << " = " << r.notes[i] << "\n";
        if (r.counterexample) {
            const Witness& w = *r.counterexample;
            os << p << "witness.seed = " << w.seed << "\n";
            os << p << "witness.trial = " << w.trial << "\n";
            for (const auto& [name, value] : w.values)
                os << p << "witness." << name << " = " << value.to_string() << "\n";
            if (!w.detail.empty())
                os << p << "witness.detail = " << w.detail << "\n";
        }
        if (!r.failure.empty())
            os << p << "failure = " << r.failure << "\n";
        os << p << "verdict = " << (r.ok() ? "pass" : "fail") << "\n";
    }
    return os.str();
}

} // namespace bfly
