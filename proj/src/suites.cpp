#include "grassflow/suites.hpp"

#include <cmath>
#include <limits>

#include "grassflow/extension.hpp"
#include "grassflow/filament.hpp"
#include "grassflow/generators.hpp"
#include "grassflow/sections.hpp"
#include "grassflow/tilde.hpp"

namespace grassflow {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr uint64_t kSuiteSeed = 0x5eed0001u;
}  // namespace

Check make_check(std::string name, double value, double tolerance, Comparison cmp) {
    Check c;
    c.name = std::move(name);
    c.value = value;
    c.tolerance = tolerance;
    c.cmp = cmp;
    c.pass = std::isfinite(value) &&
             (cmp == Comparison::LessEq ? value <= tolerance : value >= tolerance);
    return c;
}

double convergence_order(const std::vector<double>& ns, const std::vector<double>& residuals) {
    // slope of log(residual) vs log(n), negated
    const size_t m = ns.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < m; ++i) {
        const double x = std::log(ns[i]);
        const double y = std::log(std::max(residuals[i], 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = m * sxx - sx * sx;
    return -(m * sxy - sx * sy) / denom;
}

namespace {

std::vector<Check> suite_sphere_holonomy() {
    std::vector<Check> out;
    const HolonomyValue north = sphere_holonomy(0.5 * kPi, CapFilling::North, 512);
    const HolonomyValue south = sphere_holonomy(0.5 * kPi, CapFilling::South, 512);
    out.push_back(make_check("equator_north_value", std::abs(north.raw - 0.5), 1e-6));
    const double diff = north.raw - south.raw;
    out.push_back(make_check("north_vs_south_integer", std::abs(std::lround(diff) - 1.0), 0.0));
    out.push_back(
        make_check("north_vs_south_gap", std::abs(diff - std::lround(diff)), 1e-6));
    return out;
}

std::vector<Check> suite_rotation_hamiltonian() {
    std::vector<Check> out;
    out.push_back(
        make_check("north_pole_value", std::abs(sphere_rotation_hamiltonian(0.0) - 0.5), 1e-8));
    out.push_back(
        make_check("south_pole_value", std::abs(sphere_rotation_hamiltonian(kPi) + 0.5), 1e-8));
    out.push_back(make_check("equator_value", std::abs(sphere_rotation_hamiltonian(0.5 * kPi)),
                             1e-10));
    out.push_back(
        make_check("sphere_integral", std::abs(sphere_rotation_hamiltonian_integral()), 1e-6));
    return out;
}

std::vector<Check> suite_circle_flow() {
    // R = 1, n = 256, RK4, dt = 1e-3, T = 0.1, exactly as pinned.
    std::vector<Check> out;
    const DiscreteLoop circle = make_circle(1.0, 256);
    const double L0 = total_length(circle);
    const Vec3 com0 = circle.center_of_mass();
    FlowConfig config;
    config.dt = 1e-3;
    config.steps = 100;
    config.integrator = Integrator::RK4;
    config.diagnostics_every = 100;
    double disp_err = kInf, rms = kInf, drift = kInf;
    try {
        const FlowResult result = run(circle, config);
        const DiscreteLoop& end = result.states.back().loop;
        const Vec3 disp = end.center_of_mass() - com0;
        disp_err = norm(disp - Vec3{0, 0, 0.1});
        const Vec3 com = end.center_of_mass();
        double acc = 0.0, racc = 0.0;
        for (int i = 0; i < end.size(); ++i) {
            const Vec3& v = end.vertex(i);
            racc += std::hypot(v.x - com.x, v.y - com.y);
        }
        const double rmean = racc / end.size();
        for (int i = 0; i < end.size(); ++i) {
            const Vec3& v = end.vertex(i);
            const double dr = std::hypot(v.x - com.x, v.y - com.y) - rmean;
            const double dz = v.z - com.z;
            acc += dr * dr + dz * dz;
        }
        rms = std::sqrt(acc / end.size());
        drift = std::abs(total_length(end) - L0) / L0;
    } catch (const Error&) {
        // the run aborted; the checks below stay at +inf and fail
    }
    std::vector<Check> checks;
    checks.push_back(make_check("center_displacement_error", disp_err, 1e-4));
    checks.push_back(make_check("best_fit_circle_rms", rms, 1e-4));
    checks.push_back(make_check("relative_length_drift", drift, 1e-6));
    return checks;
}

std::vector<Check> suite_gradient_identity() {
    std::vector<Check> out;
    const std::vector<double> sizes{64, 128, 256};
    const int trials = 6;
    struct Shape {
        const char* name;
        double a, b;
    };
    for (const Shape s : {Shape{"circle", 1.0, 1.0}, Shape{"ellipse", 1.2, 0.9}}) {
        std::vector<double> residuals;
        for (double n : sizes) {
            const DiscreteLoop loop = make_ellipse(s.a, s.b, static_cast<int>(n));
            residuals.push_back(gradient_residual(loop, trials, kSuiteSeed));
        }
        out.push_back(make_check(std::string(s.name) + "_order",
                                 convergence_order(sizes, residuals), 1.9, Comparison::GreaterEq));
        out.push_back(make_check(std::string(s.name) + "_residual_n256", residuals.back(), 1e-3));
    }
    return out;
}

std::vector<Check> suite_hamiltonian_property() {
    std::vector<Check> out;
    const AnalyticVectorField& X = field_by_name("ez_cosx");
    const std::vector<double> sizes{64, 128, 256, 512};
    std::vector<double> residuals;
    for (double n : sizes)
        residuals.push_back(
            hamiltonian_residual(make_wavy_y_loop(static_cast<int>(n)), X, 6, kSuiteSeed));
    out.push_back(
        make_check("probe_order", convergence_order(sizes, residuals), 1.9, Comparison::GreaterEq));
    // closed-form case: y-winding loop at x = 0.1, z = 0.5
    const DiscreteLoop yloop = make_torus_loop(1, 0.5, 0.1, 512);
    out.push_back(make_check("closed_form_agreement", hamiltonian_residual(yloop, X, 6, kSuiteSeed),
                             1e-5));
    return out;
}

std::vector<Check> suite_cocycle() {
    std::vector<Check> out;
    const AnalyticVectorField& X = field_by_name("ex_mcosz");
    const AnalyticVectorField& Y = field_by_name("ey_cosz");
    const DiscreteLoop base = make_torus_loop(2, 0.25, 0.5, 4096);

    const double c = cocycle_c(base, X, Y);
    out.push_back(make_check("antisymmetry", std::abs(c + cocycle_c(base, Y, X)), 1e-15));
    out.push_back(make_check("two_pi_squared_fixture", std::abs(c - 2.0 * kPi * kPi), 1e-4));

    const DiscreteLoop base1024 = make_torus_loop(2, 0.2, 0.3, 1024);
    out.push_back(make_check(
        "cyclic_identity",
        cocycle_identity_residual(base1024, X, field_by_name("ey_cosxz"), field_by_name("ez_cosx")),
        1e-8));

    std::vector<DiscreteLoop> probes;
    for (int k = 0; k < 5; ++k) probes.push_back(make_deformed_z_loop(4096, k, 0.03));
    const ConstancyResult constancy = cocycle_formula_constancy(base, X, Y, probes);
    out.push_back(make_check("constancy_spread", constancy.spread, 1e-5));
    out.push_back(make_check("constancy_value_vs_c", std::abs(constancy.value - c), 1e-4));
    return out;
}

std::vector<Check> suite_iso_shift() {
    std::vector<Check> out;
    const AnalyticVectorField& X = field_by_name("ex_mcosz");
    const AnalyticVectorField& Y = field_by_name("ey_cosxz");
    const double x0 = 0.2, x1 = 0.7, y0 = 0.3;
    const DiscreteLoop baseA = make_torus_loop(2, x0, y0, 4096);
    const DiscreteLoop baseB = make_torus_loop(2, x1, y0, 4096);
    Bordism strip;
    strip.grid_u = strip.grid_v = 128;
    strip.map = [x0, x1, y0](double u, double v) { return Vec3{x0 + u * (x1 - x0), y0, v}; };
    out.push_back(make_check("iso_identity", iso_check(baseA, baseB, strip, X, Y), 1e-4));

    // Stokes consistency for the moment fixture
    const AnalyticVectorField& Xm = field_by_name("ez_cosx");
    const double xm = 0.37;
    const DiscreteLoop mbase = make_torus_loop(1, 0.5, 0.0, 512);
    const DiscreteLoop mloop = make_torus_loop(1, 0.5, xm, 512);
    Bordism cylinder;
    cylinder.grid_u = cylinder.grid_v = 128;
    cylinder.map = [xm](double u, double v) { return Vec3{u * xm, v, 0.5}; };
    out.push_back(make_check("stokes_consistency",
                             std::abs(lambda0(cylinder, Xm) + moment(mloop, Xm, mbase)), 1e-4));
    return out;
}

std::vector<Check> suite_integrality() {
    std::vector<Check> out;
    const AmbientSpace torus = AmbientSpace::torus();
    const DifferentialForm vol = volume_form_of(torus);
    const SweepMap stat = make_static_slice_sweep(0.2, 64);
    const SweepMap wrapped = make_wrapped_slice_sweep(0.2, 64);
    const IntegralityResult plain = integrality_gap(wrapped, stat, vol);
    out.push_back(make_check("double_filling_integer", std::abs(plain.nearest - 1.0), 0.0));
    out.push_back(make_check("double_filling_gap", plain.gap, 1e-4));

    const SweepMap bumped = make_bumped_wrapped_slice_sweep(0.2, 0.05, 64);
    const IntegralityResult bump = integrality_gap(bumped, stat, vol);
    out.push_back(make_check("bumped_filling_integer", std::abs(bump.nearest - 1.0), 0.0));
    out.push_back(make_check("bumped_filling_gap", bump.gap, 1e-4));

    // subdivision additivity on a smooth Euclidean sweep
    const SweepMap whole = make_solid_torus_sweep(1.3, 0.42, 32);
    const DifferentialForm evol = volume_form_of(AmbientSpace::euclidean());
    SweepMap lower = whole, upper = whole;
    lower.ns = upper.ns = 16;
    lower.map = [&whole](double s, double t, double th) { return whole.map(0.5 * s, t, th); };
    upper.map = [&whole](double s, double t, double th) {
        return whole.map(0.5 + 0.5 * s, t, th);
    };
    const double split = chain_integral(lower, evol) + chain_integral(upper, evol);
    out.push_back(make_check("subdivision_additivity",
                             std::abs(chain_integral(whole, evol) - split), 1e-10));
    return out;
}

std::vector<Check> suite_tilde_identities() {
    std::vector<Check> out;
    const DiscreteLoop circle = make_circle(1.0, 256);
    SplitMix64 rng(kSuiteSeed);
    double antisym = 0.0;
    for (int k = 0; k < 50; ++k) {
        const NormalSection Y1 = white_section(circle, rng.next());
        const NormalSection Y2 = white_section(circle, rng.next());
        antisym = std::max(antisym,
                           std::abs(mw_symplectic(circle, Y1, Y2) + mw_symplectic(circle, Y2, Y1)));
        antisym = std::max(antisym, std::abs(mw_symplectic(circle, Y1, Y1)));
    }
    out.push_back(make_check("omega_antisymmetry", antisym, 1e-12));
    out.push_back(make_check("compatibility", compatibility_residual(circle, 100, kSuiteSeed),
                             1e-12));

    const DiscreteLoop wavy = make_wavy_y_loop(256);
    const DifferentialForm vol = volume_form_of(wavy.space());
    out.push_back(make_check(
        "contraction", contraction_check(field_by_name("ez_cosx"), vol, wavy, 20, kSuiteSeed),
        1e-12));

    const ClosedFormDiffeo shear = make_shear_y(0.25);
    const std::vector<double> sizes{64, 128, 256};
    std::vector<double> residuals;
    for (double n : sizes) {
        const DiscreteLoop probe = make_wavy_y_loop(static_cast<int>(n));
        residuals.push_back(pullback_check(shear, volume_form_of(probe.space()), probe, 6,
                                           kSuiteSeed));
    }
    out.push_back(make_check("pullback_order", convergence_order(sizes, residuals), 1.9,
                             Comparison::GreaterEq));
    return out;
}

std::vector<Check> suite_conservation() {
    std::vector<Check> out;
    const DiscreteLoop trefoil = make_trefoil(0.7, 256);
    const double L0 = total_length(trefoil);
    FlowConfig config;
    config.dt = 1e-3;
    config.steps = 500;
    config.diagnostics_every = 100;
    double drift = kInf, dual_drift = kInf;
    try {
        const FlowResult result = run(trefoil, config);
        drift = std::abs(result.diagnostics.back().length - L0) / L0;
        dual_drift = result.diagnostics.back().max_dual_length_drift;
    } catch (const Error&) {
    }
    out.push_back(make_check("relative_length_drift", drift, 1e-5));
    out.push_back(make_check("arc_density_drift", dual_drift, 1e-4));

    // cyclic relabeling commutes with step
    const int shift = 37;
    std::vector<Vec3> rotated(trefoil.vertices().size());
    for (int i = 0; i < trefoil.size(); ++i)
        rotated[static_cast<size_t>(i)] = trefoil.vertex(i + shift);
    const DiscreteLoop shifted(trefoil.space(), rotated);
    FlowConfig one = config;
    one.steps = 1;
    const DiscreteLoop stepped = step(FlowState{trefoil, 0.0}, one).loop;
    const DiscreteLoop stepped_shifted = step(FlowState{shifted, 0.0}, one).loop;
    double equivariance = 0.0;
    for (int i = 0; i < trefoil.size(); ++i)
        equivariance = std::max(
            equivariance, norm(stepped_shifted.vertex(i) - stepped.vertex(i + shift)));
    out.push_back(make_check("cyclic_relabeling_equivariance", equivariance, 1e-12));
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "sphere_holonomy",     "rotation_hamiltonian", "circle_flow",  "gradient_identity",
        "hamiltonian_property", "cocycle",              "iso_shift",    "integrality",
        "tilde_identities",    "conservation"};
    return names;
}

std::vector<Check> run_suite(const std::string& name) {
    if (name == "sphere_holonomy") return suite_sphere_holonomy();
    if (name == "rotation_hamiltonian") return suite_rotation_hamiltonian();
    if (name == "circle_flow") return suite_circle_flow();
    if (name == "gradient_identity") return suite_gradient_identity();
    if (name == "hamiltonian_property") return suite_hamiltonian_property();
    if (name == "cocycle") return suite_cocycle();
    if (name == "iso_shift") return suite_iso_shift();
    if (name == "integrality") return suite_integrality();
    if (name == "tilde_identities") return suite_tilde_identities();
    if (name == "conservation") return suite_conservation();
    throw SchemaError("unknown suite: " + name);
}

}  // namespace grassflow
