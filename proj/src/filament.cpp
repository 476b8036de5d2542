#include "grassflow/filament.hpp"

#include <cmath>
#include <limits>

#include "grassflow/sections.hpp"
#include "grassflow/tilde.hpp"

namespace grassflow {

namespace {

std::vector<Vec3> velocity(const DiscreteLoop& loop) {
    const int n = loop.size();
    std::vector<Vec3> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Vec3& em = loop.edge(i - 1);
        const Vec3& ep = loop.edge(i);
        const double den = loop.edge_length(i - 1) * loop.edge_length(i) + dot(em, ep);
        if (den <= 1e-12) throw CuspError("antiparallel consecutive edges");
        v[static_cast<size_t>(i)] = cross(em, ep) * (2.0 / den) / dual_length(loop, i);
    }
    return v;
}

std::vector<Vec3> displaced(const std::vector<Vec3>& base, const std::vector<Vec3>& dir,
                            double scale) {
    std::vector<Vec3> out(base.size());
    for (size_t i = 0; i < base.size(); ++i) out[i] = base[i] + dir[i] * scale;
    return out;
}

}  // namespace

NormalSection curvature_binormal(const DiscreteLoop& loop) {
    return project_normal(loop, velocity(loop));
}

NormalSection mean_curvature(const DiscreteLoop& loop) {
    const NormalSection kb = curvature_binormal(loop);
    NormalSection out;
    out.values.resize(kb.size());
    for (int i = 0; i < loop.size(); ++i)
        out[static_cast<size_t>(i)] =
            -cross(discrete_tangent(loop, i), kb[static_cast<size_t>(i)]);
    return out;
}

double gradient_residual(const DiscreteLoop& loop, int trials, uint64_t seed) {
    const NormalSection mc = mean_curvature(loop);
    const double eps = 1e-5 * total_length(loop) / loop.size();
    double worst = 0.0;
    for (int k = 0; k < trials; ++k) {
        const NormalSection Y = smooth_section(loop, seed + static_cast<uint64_t>(k));
        const double fd =
            (total_length(perturb(loop, Y, eps)) - total_length(perturb(loop, Y, -eps))) /
            (2.0 * eps);
        worst = std::max(worst, std::abs(fd + tilde_metric(loop, mc, Y)));
    }
    return worst;
}

double advisory_max_dt(const DiscreteLoop& loop) {
    double hmin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < loop.size(); ++i) hmin = std::min(hmin, dual_length(loop, i));
    return 2.8 * hmin * hmin / 4.0;
}

FlowState step(const FlowState& state, const FlowConfig& config) {
    const DiscreteLoop& loop = state.loop;
    const AmbientSpace& space = loop.space();
    const std::vector<Vec3>& x0 = loop.vertices();
    const double dt = config.dt;

    try {
        if (config.integrator == Integrator::Euler) {
            const std::vector<Vec3> k1 = velocity(loop);
            return FlowState{DiscreteLoop(space, displaced(x0, k1, dt)), state.time + dt};
        }
        const std::vector<Vec3> k1 = velocity(loop);
        const std::vector<Vec3> k2 = velocity(DiscreteLoop(space, displaced(x0, k1, 0.5 * dt)));
        const std::vector<Vec3> k3 = velocity(DiscreteLoop(space, displaced(x0, k2, 0.5 * dt)));
        const std::vector<Vec3> k4 = velocity(DiscreteLoop(space, displaced(x0, k3, dt)));
        std::vector<Vec3> x1(x0.size());
        for (size_t i = 0; i < x0.size(); ++i)
            x1[i] = x0[i] + (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]) * (dt / 6.0);
        return FlowState{DiscreteLoop(space, std::move(x1)), state.time + dt};
    } catch (const CuspError&) {
        throw;
    } catch (const Error& e) {
        throw StepFailureError(std::string("flow step produced an invalid loop: ") + e.what());
    }
}

FlowResult run(const DiscreteLoop& initial, const FlowConfig& config) {
    FlowResult result;
    const NormalSection kb0 = curvature_binormal(initial);
    for (const Vec3& v : kb0.values)
        result.initial_max_curvature = std::max(result.initial_max_curvature, norm(v));
    result.advisory_dt_ok = config.dt * result.initial_max_curvature <= 0.1 &&
                            config.dt <= advisory_max_dt(initial);

    const std::vector<double> dual0 = dual_lengths(initial);
    const int cadence = std::max(1, config.diagnostics_every);

    FlowState state{initial, 0.0};
    auto record = [&](int step_index) {
        DiagnosticsRow row;
        row.step = step_index;
        row.time = state.time;
        row.length = total_length(state.loop);
        double drift = 0.0;
        for (int i = 0; i < state.loop.size(); ++i)
            drift = std::max(drift,
                             std::abs(dual_length(state.loop, i) - dual0[static_cast<size_t>(i)]));
        row.max_dual_length_drift = drift;
        row.center_of_mass = state.loop.center_of_mass();
        result.diagnostics.push_back(row);
        result.states.push_back(state);
    };

    record(0);
    for (int s = 1; s <= config.steps; ++s) {
        state = step(state, config);
        if (s % cadence == 0 || s == config.steps) record(s);
    }
    return result;
}

}  // namespace grassflow
