#pragma once

#include <vector>

#include "grassflow/loops.hpp"

namespace grassflow {

enum class Integrator { RK4, Euler };

struct FlowConfig {
    double dt = 1e-3;
    int steps = 0;
    Integrator integrator = Integrator::RK4;
    int diagnostics_every = 1;
};

struct FlowState {
    DiscreteLoop loop;
    double time = 0.0;
};

struct DiagnosticsRow {
    int step = 0;
    double time = 0.0;
    double length = 0.0;
    double max_dual_length_drift = 0.0;  // vs the initial loop
    Vec3 center_of_mass{};
};

struct FlowResult {
    std::vector<FlowState> states;  // sampled every diagnostics_every steps, plus the end
    std::vector<DiagnosticsRow> diagnostics;
    // start-of-run advisory: dt max|kappa| << 1 and dt below the dispersive
    // stability estimate of the explicit integrator
    bool advisory_dt_ok = true;
    double initial_max_curvature = 0.0;
};

// Per-vertex curvature binormal kappa b, the velocity of the filament flow.
// The turning of the edge pair, 2 (e_{i-1} x e_i) / (|e_{i-1}||e_i| +
// e_{i-1}.e_i), divided by the dual length to make it a pointwise vector
// (the circle of radius R gives (1/R) e3 up to O(1/n^2)). Exactly
// orthogonal to the central-difference tangent; projected anyway.
NormalSection curvature_binormal(const DiscreteLoop& loop);

// tr II = -J(kappa b): the inward curvature vector. J applied to it
// reproduces curvature_binormal exactly.
NormalSection mean_curvature(const DiscreteLoop& loop);

// max over random smooth sections of
// |FD_eps[total_length](loop; Y) + g~(mean_curvature, Y)|,
// eps = 1e-5 total_length / n, central differences.
double gradient_residual(const DiscreteLoop& loop, int trials, uint64_t seed);

// advisory stability estimate dt_max ~ 2.8 h^2 / 4 for the explicit RK4
// integration of the dispersive flow; h the smallest dual length
double advisory_max_dt(const DiscreteLoop& loop);

FlowState step(const FlowState& state, const FlowConfig& config);

FlowResult run(const DiscreteLoop& initial, const FlowConfig& config);

}  // namespace grassflow
