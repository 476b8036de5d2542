#include "grassflow/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <optional>

#include <nlohmann/json.hpp>

#include "grassflow/extension.hpp"
#include "grassflow/filament.hpp"
#include "grassflow/generators.hpp"
#include "grassflow/io.hpp"
#include "grassflow/sections.hpp"
#include "grassflow/tilde.hpp"

namespace grassflow {

using nlohmann::json;

namespace {

// recorded convention for the group 1-cocycle tests
constexpr const char* kCompositionOrder =
    "kappa(phi.psi)(X) = kappa(phi)(X) + kappa(psi)(phi^*X), phi^*X the pullback of X under phi";

double require_number(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number())
        throw SchemaError("missing or non-numeric field: " + key);
    return j[key].get<double>();
}

int require_int(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw SchemaError("missing or non-integer field: " + key);
    return j[key].get<int>();
}

std::string require_string(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_string())
        throw SchemaError("missing or non-string field: " + key);
    return j[key].get<std::string>();
}

double number_or(const json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw SchemaError("non-numeric field: " + key);
    return j[key].get<double>();
}

int int_or(const json& j, const std::string& key, int fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_integer()) throw SchemaError("non-integer field: " + key);
    return j[key].get<int>();
}

AmbientSpace parse_ambient(const json& j) {
    if (!j.is_object()) throw SchemaError("ambient must be an object");
    const std::string kind = require_string(j, "kind");
    if (kind == "euclidean") return AmbientSpace::euclidean();
    if (kind == "sphere") return AmbientSpace::sphere();
    if (kind == "torus") {
        Vec3 p{1, 1, 1};
        if (j.contains("periods")) {
            const auto& arr = j["periods"];
            if (!arr.is_array() || arr.size() != 3) throw SchemaError("periods must be [p1,p2,p3]");
            p = {arr[0].get<double>(), arr[1].get<double>(), arr[2].get<double>()};
        }
        return AmbientSpace::torus(p);
    }
    throw SchemaError("unknown ambient kind: " + kind);
}

DiscreteLoop parse_loop(const json& j, const AmbientSpace& space,
                        const std::filesystem::path& scenario_dir) {
    if (!j.is_object()) throw SchemaError("loop must be an object");
    if (j.contains("file")) {
        const auto path = scenario_dir / require_string(j, "file");
        auto loops = read_polylines(path.string(), space);
        if (loops.empty()) throw SchemaError("polyline file holds no loop");
        return loops.front();
    }
    const std::string gen = require_string(j, "generator");
    const int n = require_int(j, "n");
    if (gen == "circle") return make_circle(number_or(j, "radius", 1.0), n, {}, space);
    if (gen == "ellipse")
        return make_ellipse(require_number(j, "a"), require_number(j, "b"), n, space);
    if (gen == "trefoil") return make_trefoil(number_or(j, "scale", 0.7), n, space);
    if (gen == "torus_loop") {
        const int axis = require_int(j, "axis");
        if (axis < 0 || axis > 2) throw SchemaError("torus_loop axis must be 0, 1 or 2");
        return make_torus_loop(axis, require_number(j, "offset1"), require_number(j, "offset2"),
                               n, space);
    }
    if (gen == "wavy_y_loop") return make_wavy_y_loop(n, space);
    throw SchemaError("unknown loop generator: " + gen);
}

uint64_t require_seed(const json& scenario) {
    // defaulting is forbidden: deterministic reports need an explicit seed
    if (!scenario.contains("seed") || !scenario["seed"].is_number_integer())
        throw SchemaError("scenario task uses random sections and must declare an integer seed");
    return scenario["seed"].get<uint64_t>();
}

json check_to_json(const Check& c) {
    return json{{"name", c.name},
                {"value", c.value},
                {"tolerance", c.tolerance},
                {"comparison", c.cmp == Comparison::LessEq ? "leq" : "geq"},
                {"pass", c.pass}};
}

struct TaskOutput {
    std::vector<Check> checks;
    std::vector<std::string> artifacts;
    json extra = json::object();
};

TaskOutput task_flow(const json& scenario, const AmbientSpace& space, const DiscreteLoop& loop,
                     const std::filesystem::path& out_dir) {
    const json params = scenario.value("params", json::object());
    FlowConfig config;
    config.dt = require_number(params, "dt");
    config.steps = require_int(params, "steps");
    config.diagnostics_every = int_or(params, "diagnostics_every", 10);
    const std::string integ = params.value("integrator", std::string("rk4"));
    if (integ == "rk4")
        config.integrator = Integrator::RK4;
    else if (integ == "euler")
        config.integrator = Integrator::Euler;
    else
        throw SchemaError("integrator must be rk4 or euler");

    const double L0 = total_length(loop);
    const FlowResult result = run(loop, config);

    TaskOutput out;
    std::vector<DiscreteLoop> snapshots;
    snapshots.reserve(result.states.size());
    for (const FlowState& s : result.states) snapshots.push_back(s.loop);
    const auto traj = out_dir / "trajectory.txt";
    const auto diag = out_dir / "diagnostics.csv";
    write_polylines(traj.string(), snapshots);
    write_diagnostics_csv(diag.string(), result.diagnostics);
    out.artifacts = {traj.string(), diag.string()};

    const DiagnosticsRow& last = result.diagnostics.back();
    out.checks.push_back(make_check("relative_length_drift", std::abs(last.length - L0) / L0,
                                    number_or(params, "length_drift_tolerance", 1e-5)));
    out.checks.push_back(make_check("max_dual_length_drift", last.max_dual_length_drift,
                                    number_or(params, "dual_length_drift_tolerance", 1e-4)));
    out.extra["advisory_dt_ok"] = result.advisory_dt_ok;
    out.extra["initial_max_curvature"] = result.initial_max_curvature;
    (void)space;
    return out;
}

TaskOutput task_invariants(const json& scenario, const DiscreteLoop& loop) {
    const json params = scenario.value("params", json::object());
    const uint64_t seed = require_seed(scenario);
    const int trials = int_or(params, "trials", 20);

    TaskOutput out;
    out.checks.push_back(make_check("compatibility_residual",
                                    compatibility_residual(loop, trials, seed),
                                    number_or(params, "compatibility_tolerance", 1e-12)));
    const DifferentialForm vol = volume_form_of(loop.space());
    const std::string field = params.value("field", std::string("ez_cosx"));
    out.checks.push_back(make_check("contraction_residual",
                                    contraction_check(field_by_name(field), vol, loop, trials, seed),
                                    number_or(params, "contraction_tolerance", 1e-12)));
    out.checks.push_back(make_check("gradient_residual", gradient_residual(loop, trials, seed),
                                    number_or(params, "gradient_tolerance", 1e-3)));
    // J isometry and J^2 = -1 over random sections
    double j_resid = 0.0;
    SplitMix64 rng(seed ^ 0xabcdefULL);
    for (int k = 0; k < trials; ++k) {
        const NormalSection Y = white_section(loop, rng.next());
        const NormalSection JY = rotate_J(loop, Y);
        const NormalSection JJY = rotate_J(loop, JY);
        for (int i = 0; i < loop.size(); ++i) {
            j_resid = std::max(j_resid, std::abs(norm(JY[static_cast<size_t>(i)]) -
                                                 norm(Y[static_cast<size_t>(i)])));
            j_resid = std::max(j_resid, norm(JJY[static_cast<size_t>(i)] +
                                             Y[static_cast<size_t>(i)]));
        }
    }
    out.checks.push_back(
        make_check("rotation_J_residual", j_resid, number_or(params, "j_tolerance", 1e-12)));
    return out;
}

TaskOutput task_cocycle_table(const json& scenario, const DiscreteLoop& base,
                              const std::filesystem::path& out_dir) {
    const json params = scenario.value("params", json::object());
    if (!scenario.contains("fields") || !scenario["fields"].is_array() ||
        scenario["fields"].size() < 2)
        throw SchemaError("cocycle_table needs a fields array with at least two names");
    std::vector<std::string> names;
    for (const auto& f : scenario["fields"]) names.push_back(f.get<std::string>());

    std::string csv = "field_i,field_j,c_value\n";
    double antisym = 0.0;
    for (size_t i = 0; i < names.size(); ++i) {
        for (size_t j = 0; j < names.size(); ++j) {
            if (i == j) continue;
            const double c =
                cocycle_c(base, field_by_name(names[i]), field_by_name(names[j]));
            csv += names[i] + "," + names[j] + "," + format_double(c) + "\n";
            if (i < j)
                antisym = std::max(
                    antisym,
                    std::abs(c + cocycle_c(base, field_by_name(names[j]), field_by_name(names[i]))));
        }
    }
    TaskOutput out;
    const auto path = out_dir / "cocycle_table.csv";
    write_text_file(path.string(), csv);
    out.artifacts = {path.string()};
    out.checks.push_back(make_check("antisymmetry", antisym, 1e-15));
    if (names.size() >= 3)
        out.checks.push_back(make_check(
            "cyclic_identity",
            cocycle_identity_residual(base, field_by_name(names[0]), field_by_name(names[1]),
                                      field_by_name(names[2])),
            number_or(params, "identity_tolerance", 1e-8)));
    return out;
}

json holonomy_report(double raw, const std::string& filling_id, int resolution, double est_error) {
    const double mod1 = raw - std::floor(raw);
    return json{{"value_mod_1", mod1},
                {"raw_value", raw},
                {"filling_id", filling_id},
                {"resolution", resolution},
                {"estimated_error", est_error}};
}

TaskOutput task_holonomy(const json& scenario, const std::filesystem::path& out_dir) {
    const json params = scenario.value("params", json::object());
    const int res = int_or(params, "resolution", 64);
    const double x0 = number_or(params, "slice_x0", 0.2);
    const DifferentialForm vol = volume_form_of(AmbientSpace::torus());
    const SweepMap stat = make_static_slice_sweep(x0, res);
    const SweepMap wrapped = make_wrapped_slice_sweep(x0, res);
    const IntegralityResult r = integrality_gap(wrapped, stat, vol);

    SweepMap coarse_w = wrapped, coarse_s = stat;
    coarse_w.ns = coarse_w.nt = coarse_w.ntheta = std::max(8, res / 2);
    coarse_s.ns = coarse_s.nt = coarse_s.ntheta = std::max(8, res / 2);
    const double est = std::abs(integrality_gap(coarse_w, coarse_s, vol).difference - r.difference);

    TaskOutput out;
    const auto path = out_dir / "holonomy.json";
    write_text_file(path.string(),
                    holonomy_report(r.difference, "wrapped_slice_minus_static", res, est).dump(2) +
                        "\n");
    out.artifacts = {path.string()};
    out.checks.push_back(
        make_check("integer_difference", std::abs(r.nearest - 1.0), 0.0));
    out.checks.push_back(
        make_check("integrality_gap", r.gap, number_or(params, "gap_tolerance", 1e-4)));
    return out;
}

TaskOutput task_sphere_example(const json& scenario, const std::filesystem::path& out_dir) {
    const json params = scenario.value("params", json::object());
    const int res = int_or(params, "resolution", 512);
    const HolonomyValue north = sphere_holonomy(0.5 * kPi, CapFilling::North, res);
    const HolonomyValue south = sphere_holonomy(0.5 * kPi, CapFilling::South, res);
    const HolonomyValue coarse = sphere_holonomy(0.5 * kPi, CapFilling::North, std::max(8, res / 2));

    TaskOutput out;
    const auto path = out_dir / "holonomy.json";
    write_text_file(path.string(),
                    holonomy_report(north.raw, "equator_north_cap", res,
                                    std::abs(coarse.raw - north.raw))
                            .dump(2) +
                        "\n");
    out.artifacts = {path.string()};
    out.checks.push_back(make_check("value_mod_1", std::abs(north.mod1 - 0.5),
                                    number_or(params, "holonomy_tolerance", 1e-6)));
    const double diff = north.raw - south.raw;
    out.checks.push_back(make_check("north_vs_south_gap", std::abs(diff - std::lround(diff)),
                                    number_or(params, "gap_tolerance", 1e-6)));
    out.checks.push_back(make_check("rotation_hamiltonian_pole",
                                    std::abs(sphere_rotation_hamiltonian(0.0) - 0.5), 1e-8));
    out.extra["composition_order"] = kCompositionOrder;
    return out;
}

}  // namespace

RunOutcome run_scenario(const std::string& scenario_path, const std::string& out_dir) {
    RunOutcome outcome;
    const auto started = std::chrono::steady_clock::now();

    json scenario;
    json report;
    report["schema"] = 1;

    const char* threads_env = std::getenv("GRASSFLOW_THREADS");
    const int thread_cap = threads_env ? std::max(1, std::atoi(threads_env)) : 1;
    // execution is sequential; the cap is recorded and trivially honored
    report["threads"] = std::min(thread_cap, 1);

    try {
        try {
            scenario = json::parse(read_text_file(scenario_path));
        } catch (const json::exception& e) {
            throw SchemaError(std::string("scenario does not parse: ") + e.what());
        }
        if (!scenario.is_object()) throw SchemaError("scenario must be a JSON object");
        if (!scenario.contains("schema") || scenario["schema"] != 1)
            throw SchemaError("scenario must declare \"schema\": 1");
        const std::string task = require_string(scenario, "task");

        std::filesystem::create_directories(out_dir);
        const auto scenario_dir = std::filesystem::path(scenario_path).parent_path();

        TaskOutput result;
        if (task == "sphere_example") {
            result = task_sphere_example(scenario, out_dir);
        } else if (task == "holonomy") {
            result = task_holonomy(scenario, out_dir);
        } else {
            const AmbientSpace space = parse_ambient(
                scenario.contains("ambient") ? scenario["ambient"]
                                             : json{{"kind", "euclidean"}});
            if (!scenario.contains("loop")) throw SchemaError("task needs a loop");
            const DiscreteLoop loop = parse_loop(scenario["loop"], space, scenario_dir);
            if (task == "flow")
                result = task_flow(scenario, space, loop, out_dir);
            else if (task == "invariants")
                result = task_invariants(scenario, loop);
            else if (task == "cocycle_table")
                result = task_cocycle_table(scenario, loop, out_dir);
            else
                throw SchemaError("unknown task: " + task);
        }

        outcome.checks = result.checks;
        outcome.artifacts = result.artifacts;

        report["scenario"] = scenario;
        report["task"] = task;
        report["checks"] = json::array();
        bool all_pass = true;
        for (const Check& c : outcome.checks) {
            report["checks"].push_back(check_to_json(c));
            all_pass = all_pass && c.pass;
        }
        report["artifacts"] = outcome.artifacts;
        for (auto& [key, value] : result.extra.items()) report[key] = value;
        if (scenario.contains("seed")) report["seed"] = scenario["seed"];
        outcome.exit_code = all_pass ? kExitOk : kExitCheckFailure;
    } catch (const SchemaError& e) {
        outcome.exit_code = kExitSchemaViolation;
        outcome.error = e.what();
        report["error"] = outcome.error;
    } catch (const json::exception& e) {
        outcome.exit_code = kExitSchemaViolation;
        outcome.error = e.what();
        report["error"] = outcome.error;
    } catch (const std::exception& e) {
        outcome.exit_code = kExitNumericalFailure;
        outcome.error = e.what();
        report["error"] = outcome.error;
    }

    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);
    report["wall_clock_seconds"] = elapsed.count();
    report["timestamp"] = static_cast<long>(
        std::chrono::duration_cast<std::chrono::seconds>(
            std::chrono::system_clock::now().time_since_epoch())
            .count());
    report["exit_code"] = outcome.exit_code;
    outcome.report_json = report.dump(2) + "\n";

    if (outcome.exit_code != kExitSchemaViolation) {
        try {
            std::filesystem::create_directories(out_dir);
            write_text_file((std::filesystem::path(out_dir) / "report.json").string(),
                            outcome.report_json);
        } catch (const std::exception&) {
            // leave the report in memory if the directory is unwritable
        }
    }
    return outcome;
}

std::string list_generators() {
    std::string out;
    out += "loop generators:\n";
    out += "  circle        radius, n (counterclockwise in the xy-plane)\n";
    out += "  ellipse       a, b, n (xy-plane)\n";
    out += "  torus_loop    axis (0|1|2), offset1, offset2, n (straight winding loop)\n";
    out += "  trefoil       scale, n ((2,3) torus knot)\n";
    out += "  wavy_y_loop   n (y-winding torus probe with smooth wiggle)\n";
    out += "field potentials (unit torus, dA = i_X vol):\n";
    for (const NamedField& f : field_catalog()) out += "  " + f.name + "  " + f.description + "\n";
    out += "diffeo families (volume preserving):\n";
    for (const NamedDiffeo& d : diffeo_catalog())
        out += "  " + d.name + "  " + d.description + "\n";
    return out;
}

}  // namespace grassflow
