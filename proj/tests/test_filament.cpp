#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "grassflow/filament.hpp"
#include "grassflow/generators.hpp"
#include "grassflow/sections.hpp"
#include "grassflow/suites.hpp"
#include "grassflow/tilde.hpp"

using namespace grassflow;

namespace {

const Vec3 e3{0, 0, 1};

DiscreteLoop reversed(const DiscreteLoop& loop) {
    std::vector<Vec3> v(loop.vertices().rbegin(), loop.vertices().rend());
    return DiscreteLoop(loop.space(), std::move(v));
}

NormalSection radial_section(const DiscreteLoop& loop) {
    std::vector<Vec3> raw(static_cast<size_t>(loop.size()));
    for (int i = 0; i < loop.size(); ++i) {
        const Vec3& v = loop.vertex(i);
        raw[static_cast<size_t>(i)] = normalized({v.x, v.y, 0.0});
    }
    return project_normal(loop, raw);
}

}  // namespace

TEST_CASE("curvature binormal of circles") {
    for (double R : {1.0, 2.0}) {
        const int n = 256;
        const DiscreteLoop circle = make_circle(R, n);
        const NormalSection kb = curvature_binormal(circle);
        for (int i = 0; i < n; i += 19) {
            CHECK(norm(kb[static_cast<size_t>(i)] - e3 * (1.0 / R)) <
                  10.0 / (R * n * n));
        }
    }
}

TEST_CASE("curvature binormal of a planar convex loop is parallel to the plane normal") {
    const DiscreteLoop ellipse = make_ellipse(1.3, 0.8, 128);
    const NormalSection kb = curvature_binormal(ellipse);
    for (int i = 0; i < ellipse.size(); ++i) {
        const Vec3& v = kb[static_cast<size_t>(i)];
        CHECK(std::abs(v.x) < 1e-13);
        CHECK(std::abs(v.y) < 1e-13);
        CHECK(v.z > 0.0);
    }
}

TEST_CASE("orientation reversal negates the binormal and fixes the curvature vector") {
    // kb = J(tr II) is orientation-odd (the tangent flips, tr II does not);
    // the mean curvature vector is the orientation-invariant one
    const DiscreteLoop trefoil = make_trefoil(0.7, 128);
    const NormalSection kb = curvature_binormal(trefoil);
    const NormalSection kb_rev = curvature_binormal(reversed(trefoil));
    const NormalSection mc = mean_curvature(trefoil);
    const NormalSection mc_rev = mean_curvature(reversed(trefoil));
    const int n = trefoil.size();
    for (int i = 0; i < n; ++i) {
        CHECK(norm(kb_rev[static_cast<size_t>(i)] + kb[static_cast<size_t>(n - 1 - i)]) < 1e-12);
        CHECK(norm(mc_rev[static_cast<size_t>(i)] - mc[static_cast<size_t>(n - 1 - i)]) < 1e-12);
    }
}

TEST_CASE("cusp error on antiparallel edges") {
    const AmbientSpace eu = AmbientSpace::euclidean();
    const DiscreteLoop spike(eu, {{0, 0, 0}, {1, 0, 0}, {0.25, 0, 0}, {0.25, 1, 0}});
    CHECK_THROWS_AS(curvature_binormal(spike), CuspError);
}

TEST_CASE("mean curvature of circles") {
    const int n = 256;
    for (double R : {1.0, 3.0}) {
        const DiscreteLoop circle = make_circle(R, n);
        const NormalSection mc = mean_curvature(circle);
        const NormalSection r = radial_section(circle);
        for (int i = 0; i < n; i += 23) {
            const size_t k = static_cast<size_t>(i);
            CHECK(norm(mc[k] + r[k] * (1.0 / R)) < 10.0 / (R * n * n));
            CHECK(std::abs(norm(mc[k]) - 1.0 / R) < 10.0 / (R * n * n));
        }
    }
}

TEST_CASE("J(mean curvature) reproduces the curvature binormal exactly") {
    const DiscreteLoop trefoil = make_trefoil(0.7, 128);
    const NormalSection kb = curvature_binormal(trefoil);
    const NormalSection back = rotate_J(trefoil, mean_curvature(trefoil));
    for (size_t i = 0; i < kb.size(); ++i) CHECK(norm(back[i] - kb[i]) < 1e-13);
}

TEST_CASE("gradient residual on the circle with the radial section") {
    const DiscreteLoop circle = make_circle(1.0, 256);
    const NormalSection r = radial_section(circle);
    const NormalSection mc = mean_curvature(circle);
    const double eps = 1e-5 * total_length(circle) / circle.size();
    const double fd =
        (total_length(perturb(circle, r, eps)) - total_length(perturb(circle, r, -eps))) /
        (2.0 * eps);
    CHECK(fd == doctest::Approx(kTwoPi).epsilon(1e-4));
    CHECK(std::abs(fd + tilde_metric(circle, mc, r)) < 2e-3);

    // vertical motion preserves length to first order
    NormalSection vert;
    vert.values.assign(static_cast<size_t>(circle.size()), e3);
    const double fd_vert =
        (total_length(perturb(circle, vert, eps)) - total_length(perturb(circle, vert, -eps))) /
        (2.0 * eps);
    CHECK(std::abs(fd_vert) < 1e-8);
    CHECK(std::abs(tilde_metric(circle, mc, vert)) < 1e-12);
}

TEST_CASE("gradient residual converges at order >= 1.9") {
    std::vector<double> ns{64, 128, 256}, errs;
    for (double n : ns)
        errs.push_back(gradient_residual(make_ellipse(1.2, 0.9, static_cast<int>(n)), 6, 77));
    CHECK(convergence_order(ns, errs) >= 1.9);
    CHECK(errs.back() < 1e-3);
}

TEST_CASE("the flow velocity is Omega-Hamiltonian for the length up to O(h^2)") {
    std::vector<double> ns{64, 128, 256}, errs;
    for (double nd : ns) {
        const int n = static_cast<int>(nd);
        const DiscreteLoop loop = make_ellipse(1.2, 0.9, n);
        const NormalSection kb = curvature_binormal(loop);
        const double eps = 1e-5 * total_length(loop) / n;
        double worst = 0.0;
        for (uint64_t seed = 301; seed < 307; ++seed) {
            const NormalSection Y = smooth_section(loop, seed);
            const double fd =
                (total_length(perturb(loop, Y, eps)) - total_length(perturb(loop, Y, -eps))) /
                (2.0 * eps);
            worst = std::max(worst, std::abs(mw_symplectic(loop, kb, Y) - fd));
        }
        errs.push_back(worst);
    }
    CHECK(convergence_order(ns, errs) >= 1.9);
}

TEST_CASE("single flow step on a radius-2 circle") {
    const DiscreteLoop circle = make_circle(2.0, 256);
    FlowConfig config;
    config.dt = 1e-3;
    const FlowState next = step(FlowState{circle, 0.0}, config);
    const Vec3 disp = next.loop.center_of_mass() - circle.center_of_mass();
    CHECK(std::abs(disp.z - 5e-4) < 1e-7);  // speed 1/R = 0.5
    CHECK(std::abs(disp.x) < 1e-12);
    CHECK(std::abs(disp.y) < 1e-12);
    for (int i = 0; i < next.loop.size(); ++i) {
        const Vec3& v = next.loop.vertex(i);
        const double r0 = std::hypot(circle.vertex(i).x, circle.vertex(i).y);
        CHECK(std::abs(std::hypot(v.x, v.y) - r0) < 1e-9);
    }
    CHECK(next.time == doctest::Approx(1e-3));
}

TEST_CASE("zero steps returns the initial state") {
    const DiscreteLoop circle = make_circle(1.0, 64);
    FlowConfig config;
    config.steps = 0;
    const FlowResult result = run(circle, config);
    REQUIRE(result.states.size() == 1);
    CHECK(result.states[0].time == 0.0);
    CHECK(norm(result.states[0].loop.vertex(7) - circle.vertex(7)) == 0.0);
}

TEST_CASE("the dt advisory flags steps beyond the stability estimate") {
    const DiscreteLoop circle = make_circle(1.0, 256);
    FlowConfig config;
    config.dt = 2.5e-4;
    config.steps = 1;
    CHECK(run(circle, config).advisory_dt_ok);
    config.dt = 1e-3;  // transport scale fine, dispersive bound violated
    const FlowResult flagged = run(circle, config);
    CHECK_FALSE(flagged.advisory_dt_ok);
    CHECK(flagged.initial_max_curvature == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("index rotation commutes with a step") {
    const DiscreteLoop trefoil = make_trefoil(0.7, 128);
    const int shift = 41;
    std::vector<Vec3> rotated(static_cast<size_t>(trefoil.size()));
    for (int i = 0; i < trefoil.size(); ++i)
        rotated[static_cast<size_t>(i)] = trefoil.vertex(i + shift);
    FlowConfig config;
    config.dt = 5e-4;
    const DiscreteLoop a = step(FlowState{trefoil, 0.0}, config).loop;
    const DiscreteLoop b = step(FlowState{DiscreteLoop(trefoil.space(), rotated), 0.0}, config).loop;
    for (int i = 0; i < trefoil.size(); ++i)
        CHECK(norm(b.vertex(i) - a.vertex(i + shift)) < 1e-12);
}

TEST_CASE("circle translates rigidly under the flow at a stable step size") {
    // dt must satisfy the dispersive bound dt <~ 2.8 h^2 / 4; at n = 256 on
    // the unit circle that is 4.3e-4 (see advisory_max_dt)
    const int n = 256;
    const DiscreteLoop circle = make_circle(1.0, n);
    CHECK(advisory_max_dt(circle) == doctest::Approx(4.2e-4).epsilon(0.05));

    FlowConfig config;
    config.dt = 2.5e-4;
    config.steps = 400;  // T = 0.1
    config.diagnostics_every = 400;
    const FlowResult result = run(circle, config);
    const DiscreteLoop& end = result.states.back().loop;

    const Vec3 disp = end.center_of_mass() - circle.center_of_mass();
    // discrete speed is sec(pi/n): displacement 0.100007...
    CHECK(std::abs(disp.z - 0.1 / std::cos(kPi / n)) < 1e-9);
    CHECK(norm(disp - Vec3{0, 0, 0.1}) < 1e-4);

    const double drift =
        std::abs(result.diagnostics.back().length - total_length(circle)) / total_length(circle);
    CHECK(drift < 1e-6);

    double rms = 0.0;
    const Vec3 com = end.center_of_mass();
    for (int i = 0; i < n; ++i) {
        const Vec3& v = end.vertex(i);
        const double dr = std::hypot(v.x - com.x, v.y - com.y) - 1.0;
        rms += dr * dr + (v.z - com.z) * (v.z - com.z);
    }
    CHECK(std::sqrt(rms / n) < 1e-4);
}

TEST_CASE("conservation on a non-planar loop") {
    const DiscreteLoop trefoil = make_trefoil(0.7, 256);
    FlowConfig config;
    config.dt = 1e-3;
    config.steps = 100;
    config.diagnostics_every = 50;
    const FlowResult result = run(trefoil, config);
    const DiagnosticsRow& last = result.diagnostics.back();
    CHECK(std::abs(last.length - total_length(trefoil)) / total_length(trefoil) < 1e-7);
    CHECK(last.max_dual_length_drift < 1e-6);
}

TEST_CASE("Euler drift is first order in dt while RK4 stays at round-off") {
    const int n = 64;
    std::vector<double> euler_drift;
    for (double dt : {1.25e-3, 2.5e-3, 5e-3}) {
        const DiscreteLoop start = make_ellipse(1.2, 0.9, n);
        const double L0 = total_length(start);
        FlowConfig config;
        config.dt = dt;
        config.steps = static_cast<int>(std::lround(0.05 / dt));
        config.diagnostics_every = config.steps;
        config.integrator = Integrator::Euler;
        const FlowResult euler = run(start, config);
        euler_drift.push_back(std::abs(euler.diagnostics.back().length - L0) / L0);

        config.integrator = Integrator::RK4;
        const FlowResult rk4 = run(start, config);
        CHECK(std::abs(rk4.diagnostics.back().length - L0) / L0 < 1e-10);
    }
    CHECK(euler_drift[1] / euler_drift[0] == doctest::Approx(2.0).epsilon(0.1));
    CHECK(euler_drift[2] / euler_drift[1] == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("step propagates cusp errors and aborts on validity violations") {
    const AmbientSpace eu = AmbientSpace::euclidean();
    const DiscreteLoop spike(eu, {{0, 0, 0}, {1, 0, 0}, {0.25, 0, 0}, {0.25, 1, 0}});
    CHECK_THROWS_AS(step(FlowState{spike, 0.0}, FlowConfig{}), CuspError);

    // a torus loop displaced past the half-period edge bound in one step
    const DiscreteLoop wavy = make_wavy_y_loop(32);
    FlowConfig big;
    big.dt = 10.0;
    CHECK_THROWS_AS(step(FlowState{wavy, 0.0}, big), StepFailureError);
}
