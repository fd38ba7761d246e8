// Serial reference loop vs the OpenMP loop for every built-in result.
//
//   bench_trials [trials] [seed]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "bfly/theorems.hpp"

namespace {

double time_run(const bfly::TrialFn& fn, std::uint64_t seed, std::uint64_t trials, bfly::Execution ex,
                std::vector<bfly::TrialResult>& results) {
    const auto start = std::chrono::steady_clock::now();
    results = bfly::run_trials(fn, seed, trials, ex);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool same(const std::vector<bfly::TrialResult>& x, const std::vector<bfly::TrialResult>& y) {
    if (x.size() != y.size())
        return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].status != y[i].status || x[i].values != y[i].values || x[i].detail != y[i].detail)
            return false;
    return true;
}

} // namespace

int main(int argc, char** argv) {
    const std::uint64_t trials = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2000;
    const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 42;
    std::printf("threads: %d, trials: %llu, seed: %llu\n", omp_get_max_threads(),
                static_cast<unsigned long long>(trials), static_cast<unsigned long long>(seed));
    std::printf("%-16s %10s %10s %8s %s\n", "result", "serial s", "omp s", "speedup", "identical");
    bool all_same = true;
    for (bfly::TheoremId id : bfly::kAllTheorems) {
        const auto fn = bfly::theorem_trial(id, 20, bfly::Claim::stated, bfly::SignPolicy::opposite_signs);
        std::vector<bfly::TrialResult> serial, parallel;
        const double ts = time_run(fn, seed, trials, bfly::Execution::serial, serial);
        const double tp = time_run(fn, seed, trials, bfly::Execution::parallel, parallel);
        const bool ok = same(serial, parallel);
        all_same = all_same && ok;
        std::printf("%-16s %10.3f %10.3f %8.2f %s\n", bfly::theorem_name(id), ts, tp, ts / tp, ok ? "yes" : "NO");
    }
    return all_same ? 0 : 1;
}
