#include "bfly/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "bfly/dsl.hpp"
#include "bfly/proofs.hpp"
#include "bfly/render.hpp"

namespace bfly {

namespace {

struct RunConfig {
    std::string mode;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::int64_t bound = 20;
    std::string format = "text";
    int threads = 0;
};

void add_run_flags(CLI::App* cmd, RunConfig& cfg, const std::string& default_mode) {
    cfg.mode = default_mode;
    cmd->add_option("--mode", cfg.mode, "numeric, symbolic or both")
        ->check(CLI::IsMember({"numeric", "symbolic", "both"}))
        ->capture_default_str();
    cmd->add_option("--trials", cfg.trials, "random configurations per result")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "64-bit run seed")->capture_default_str();
    cmd->add_option("--bound", cfg.bound, "numerator/denominator bound for sampled rationals")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--format", cfg.format, "report format")
        ->check(CLI::IsMember({"text", "kv"}))
        ->capture_default_str();
    cmd->add_option("--threads", cfg.threads, "OpenMP threads (0: runtime default)")->check(CLI::NonNegativeNumber);
}

NumericOptions numeric_options(const RunConfig& cfg) {
    NumericOptions o;
    o.seed = cfg.seed;
    o.trials = cfg.trials;
    o.bound = cfg.bound;
    return o;
}

std::string format(const std::vector<VerificationReport>& reports, const std::string& fmt) {
    return fmt == "kv" ? format_kv(reports) : format_text(reports);
}

bool read_file(const std::string& path, std::string& text, std::ostream& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << path << ": cannot open file\n";
        return false;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    return true;
}

/// Parses a file; prints the diagnostic and returns false on failure.
bool load(const std::string& path, dsl::Construction& out, std::ostream& err) {
    std::string text;
    if (!read_file(path, text, err))
        return false;
    try {
        out = dsl::parse(text);
        return true;
    } catch (const dsl::ParseError& e) {
        err << e.format(path) << "\n";
        return false;
    }
}

std::string replay_flags(const Witness& w) {
    std::string s;
    for (const auto& [name, value] : w.values)
        s += (s.empty() ? "" : ",") + name + "=" + value.to_string();
    return "--set " + s;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_verify(const std::vector<std::string>& files, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, dsl::Construction>> loaded;
    bool parse_failed = false;
    for (const auto& f : files) {
        dsl::Construction c;
        if (load(f, c, err))
            loaded.emplace_back(f, std::move(c));
        else
            parse_failed = true;
    }
    if (parse_failed)
        return kExitUsage;

    std::vector<VerificationReport> reports;
    for (const auto& [path, c] : loaded) {
        const std::string id = std::filesystem::path(path).stem().string();
        if (cfg.mode != "symbolic")
            reports.push_back(dsl::evaluate_numeric(c, id, numeric_options(cfg)));
        if (cfg.mode != "numeric") {
            try {
                reports.push_back(dsl::evaluate_symbolic(c, id));
            } catch (const std::invalid_argument& e) {
                err << path << ": " << e.what() << "\n";
                return kExitUsage;
            }
        }
    }
    out << format(reports, cfg.format);
    bool ok = true;
    for (const auto& r : reports) {
        if (r.counterexample && cfg.format == "text")
            out << "replay " << r.id << ": " << replay_flags(*r.counterexample) << "\n";
        ok = ok && r.ok();
    }
    err << "wall time: " << seconds_since(start) << " s\n";
    return ok ? kExitOk : kExitFailed;
}

int cmd_prove_paper(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    const SuiteMode mode = cfg.mode == "numeric"    ? SuiteMode::numeric
                           : cfg.mode == "symbolic" ? SuiteMode::symbolic
                                                    : SuiteMode::both;
    const auto reports = run_suite(mode, numeric_options(cfg));
    out << format(reports, cfg.format);

    std::size_t formulas = 0, formulas_ok = 0;
    std::string first_failure;
    for (const auto& r : reports) {
        for (const auto& s : r.steps)
            if (s.kind == StepKind::formula) {
                ++formulas;
                formulas_ok += s.ok ? 1 : 0;
            }
        if (!r.ok() && first_failure.empty())
            first_failure = !r.failure.empty() ? r.failure
                                               : r.id + ": counterexample at trial " +
                                                     std::to_string(r.counterexample->trial);
    }
    if (mode != SuiteMode::numeric)
        out << "formula checks: " << formulas_ok << "/" << formulas << "\n";
    out << "overall: " << (first_failure.empty() ? "PASS" : "FAIL") << "\n";
    err << "wall time: " << seconds_since(start) << " s\n";
    if (!first_failure.empty()) {
        err << first_failure << "\n";
        return kExitFailed;
    }
    return kExitOk;
}

/// "a=2,b=1/3" pairs, possibly spread over several --set flags.
bool parse_bindings(const std::vector<std::string>& sets, std::map<std::string, Rational>& out,
                    std::ostream& err) {
    for (const auto& set : sets) {
        std::stringstream ss(set);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0) {
                err << "--set: expected name=value, got '" << item << "'\n";
                return false;
            }
            try {
                out[item.substr(0, eq)] = Rational::parse(item.substr(eq + 1));
            } catch (const std::exception& e) {
                err << "--set: bad value in '" << item << "': " << e.what() << "\n";
                return false;
            }
        }
    }
    return true;
}

int cmd_render(const std::string& file, const std::vector<std::string>& sets, const std::string& output,
               int width, std::ostream& out, std::ostream& err) {
    dsl::Construction c;
    if (!load(file, c, err))
        return kExitUsage;
    std::map<std::string, Rational> bindings;
    if (!parse_bindings(sets, bindings, err))
        return kExitUsage;
    const auto params = c.params();
    std::string unbound, unknown;
    for (const auto& p : params)
        if (!bindings.count(p))
            unbound += (unbound.empty() ? "" : ", ") + p;
    for (const auto& [name, value] : bindings)
        if (std::find(params.begin(), params.end(), name) == params.end())
            unknown += (unknown.empty() ? "" : ", ") + name;
    if (!unbound.empty()) {
        err << file << ": unbound parameters: " << unbound << "\n";
        return kExitUsage;
    }
    if (!unknown.empty()) {
        err << file << ": unknown parameters: " << unknown << "\n";
        return kExitUsage;
    }

    std::string svg;
    try {
        const dsl::Instance inst = dsl::evaluate_instance(c, bindings);
        const auto assertions = c.assertions();
        for (std::size_t i = 0; i < inst.holds.size(); ++i)
            if (!inst.holds[i])
                err << "warning: assertion " << (i + 1) << " " << dsl::print(*assertions[i])
                    << " does not hold for this instance\n";
        const std::string title = std::filesystem::path(file).stem().string();
        svg = render::render_svg(render::scene_from(c, inst, title), width);
    } catch (const Degeneracy& e) {
        err << file << ": degenerate instance: " << e.what() << "\n";
        return kExitFailed;
    } catch (const render::EmptyScene& e) {
        err << file << ": " << e.what() << "\n";
        return kExitFailed;
    }

    if (output.empty() || output == "-") {
        out << svg;
    } else {
        std::ofstream f(output, std::ios::binary);
        if (!(f << svg)) {
            err << output << ": cannot write file\n";
            return kExitFailed;
        }
        out << "wrote " << output << "\n";
    }
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of Butterfly-type theorems", "bfly"};
    app.require_subcommand(1);

    RunConfig verify_cfg;
    std::vector<std::string> files;
    auto* verify = app.add_subcommand("verify", "check the assertions of .geo construction files");
    verify->add_option("files", files, ".geo files")->required()->check(CLI::ExistingFile);
    add_run_flags(verify, verify_cfg, "numeric");

    RunConfig prove_cfg;
    auto* prove = app.add_subcommand("prove-paper", "run the built-in numeric and symbolic suite");
    add_run_flags(prove, prove_cfg, "both");

    std::string render_file, output;
    std::vector<std::string> sets;
    int width = 640;
    auto* rend = app.add_subcommand("render", "draw one instance of a construction as SVG");
    rend->add_option("file", render_file, ".geo file")->required()->check(CLI::ExistingFile);
    rend->add_option("--set", sets, "parameter values, name=p/q[,name=p/q...]");
    rend->add_option("-o,--output", output, "output path (default: stdout)");
    rend->add_option("--width", width, "width in pixels")->check(CLI::Range(64, 16384))->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        if (const CLI::App* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
            err << "see 'bfly " << sub->get_name() << " --help'\n";
        else
            err << "see 'bfly --help'\n";
        return kExitUsage;
    }

    // CLI11 resolves help for subcommands through the same exceptions above.
    if (verify->parsed()) {
        if (verify_cfg.threads > 0)
            omp_set_num_threads(verify_cfg.threads);
        return cmd_verify(files, verify_cfg, out, err);
    }
    if (prove->parsed()) {
        if (prove_cfg.threads > 0)
            omp_set_num_threads(prove_cfg.threads);
        return cmd_prove_paper(prove_cfg, out, err);
    }
    return cmd_render(render_file, sets, output, width, out, err);
}

} // namespace bfly
