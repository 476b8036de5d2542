// Acceptance suite: runs the numbered verification suites and prints one
// pass/fail line per check. With an argument it runs a single criterion
// ("01".."10" or the suite name); without arguments it runs all of them.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "grassflow/suites.hpp"

namespace {

struct Criterion {
    const char* index;
    const char* suite;
    double runtime_budget_seconds;  // 0: no stated budget
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {"01", "sphere_holonomy", 1.0},   {"02", "rotation_hamiltonian", 1.0},
        {"03", "circle_flow", 5.0},       {"04", "gradient_identity", 10.0},
        {"05", "hamiltonian_property", 0}, {"06", "cocycle", 0},
        {"07", "iso_shift", 0},           {"08", "integrality", 0},
        {"09", "tilde_identities", 0},    {"10", "conservation", 0},
    };
    return all;
}

bool run_criterion(const Criterion& c) {
    const auto started = std::chrono::steady_clock::now();
    std::vector<grassflow::Check> checks;
    std::string error;
    try {
        checks = grassflow::run_suite(c.suite);
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    bool pass = error.empty();
    for (const grassflow::Check& check : checks) {
        const char* rel = check.cmp == grassflow::Comparison::LessEq ? "<=" : ">=";
        std::printf("[%s] criterion %s (%s) %s: value=%.9g %s %.9g\n",
                    check.pass ? "PASS" : "FAIL", c.index, c.suite, check.name.c_str(),
                    check.value, rel, check.tolerance);
        pass = pass && check.pass;
    }
    if (!error.empty())
        std::printf("[FAIL] criterion %s (%s) aborted: %s\n", c.index, c.suite, error.c_str());
    if (c.runtime_budget_seconds > 0) {
        const bool in_budget = elapsed <= c.runtime_budget_seconds;
        std::printf("[%s] criterion %s (%s) runtime: value=%.3g <= %.3g s\n",
                    in_budget ? "PASS" : "FAIL", c.index, c.suite, elapsed,
                    c.runtime_budget_seconds);
        pass = pass && in_budget;
    }
    return pass;
}

}  // namespace

int main(int argc, char** argv) {
    bool all_pass = true;
    bool matched = false;
    for (const Criterion& c : criteria()) {
        if (argc > 1 && std::strcmp(argv[1], c.index) != 0 && std::strcmp(argv[1], c.suite) != 0)
            continue;
        matched = true;
        all_pass = run_criterion(c) && all_pass;
    }
    if (!matched) {
        std::fprintf(stderr, "unknown criterion: %s\n", argv[1]);
        return 2;
    }
    return all_pass ? 0 : 1;
}
