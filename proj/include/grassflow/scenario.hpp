#pragma once

#include <string>
#include <vector>

#include "grassflow/errors.hpp"
#include "grassflow/suites.hpp"

namespace grassflow {

// Exit codes of the scenario runner (and the CLI):
//   0 all checks pass, 1 check failure, 2 schema violation, 3 numerical failure
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailure = 1,
    kExitSchemaViolation = 2,
    kExitNumericalFailure = 3,
};

struct RunOutcome {
    int exit_code = kExitOk;
    std::string report_json;             // full report document
    std::vector<Check> checks;
    std::vector<std::string> artifacts;  // paths written under out_dir
    std::string error;                   // set when exit_code is 2 or 3
};

// Executes the scenario file and writes report.json plus any artifacts into
// out_dir. Never throws; failures are reported through exit_code/error.
RunOutcome run_scenario(const std::string& scenario_path, const std::string& out_dir);

// Catalog of loop generators, field potentials and diffeo families, sorted
// and stable across runs.
std::string list_generators();

}  // namespace grassflow
