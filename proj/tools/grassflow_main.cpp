#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "grassflow/scenario.hpp"

namespace {

int print_checks(const std::vector<grassflow::Check>& checks) {
    bool all_pass = true;
    for (const grassflow::Check& c : checks) {
        const char* rel = c.cmp == grassflow::Comparison::LessEq ? "<=" : ">=";
        std::printf("[%s] %s: value=%.9g %s %.9g\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                    c.value, rel, c.tolerance);
        all_pass = all_pass && c.pass;
    }
    return all_pass ? grassflow::kExitOk : grassflow::kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grassflow: discrete loops, symplectic forms, cocycles and filament flow"};
    app.require_subcommand(1);

    std::string scenario_path, out_dir = ".", suite = "all";

    CLI::App* run_cmd = app.add_subcommand("run", "execute a scenario file");
    run_cmd->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    run_cmd->add_option("--out-dir", out_dir, "directory for report and artifacts");

    CLI::App* list_cmd = app.add_subcommand("list", "list generators, fields and diffeo families");

    CLI::App* check_cmd = app.add_subcommand("check", "run a named verification suite");
    check_cmd->add_option("--suite", suite, "suite name or 'all'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return grassflow::kExitSchemaViolation;
    }

    try {
        if (run_cmd->parsed()) {
            const grassflow::RunOutcome outcome = grassflow::run_scenario(scenario_path, out_dir);
            if (!outcome.error.empty()) std::fprintf(stderr, "error: %s\n", outcome.error.c_str());
            std::fputs(outcome.report_json.c_str(), stdout);
            return outcome.exit_code;
        }
        if (list_cmd->parsed()) {
            std::fputs(grassflow::list_generators().c_str(), stdout);
            return grassflow::kExitOk;
        }
        if (check_cmd->parsed()) {
            int worst = grassflow::kExitOk;
            if (suite == "all") {
                for (const std::string& name : grassflow::suite_names()) {
                    std::printf("suite %s\n", name.c_str());
                    worst = std::max(worst, print_checks(grassflow::run_suite(name)));
                }
            } else {
                worst = print_checks(grassflow::run_suite(suite));
            }
            return worst;
        }
    } catch (const grassflow::SchemaError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return grassflow::kExitSchemaViolation;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return grassflow::kExitNumericalFailure;
    }
    return grassflow::kExitSchemaViolation;
}
