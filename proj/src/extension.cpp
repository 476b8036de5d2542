#include "grassflow/extension.hpp"

#include <cmath>

#include "grassflow/sections.hpp"

namespace grassflow {

namespace {

const VectorPotential& potential_of(const AnalyticVectorField& X) {
    if (!X.potential) throw PotentialMissingError("field carries no potential 1-form");
    return *X.potential;
}

double line_integral(const VectorPotential& A, const DiscreteLoop& loop) {
    double s = 0.0;
    for (int i = 0; i < loop.size(); ++i) s += dot(A.dual(loop.edge_midpoint(i)), loop.edge(i));
    return s;
}

}  // namespace

double moment(const DiscreteLoop& loop, const AnalyticVectorField& X, const DiscreteLoop& base) {
    const VectorPotential& A = potential_of(X);
    return line_integral(A, loop) - line_integral(A, base);
}

double hamiltonian_residual(const DiscreteLoop& loop, const AnalyticVectorField& X, int trials,
                            uint64_t seed) {
    const VectorPotential& A = potential_of(X);
    const NormalSection zeta = fundamental_section(X, loop);
    const double eps = 1e-5 * total_length(loop) / loop.size();
    double worst = 0.0;
    for (int k = 0; k < trials; ++k) {
        const NormalSection Y = smooth_section(loop, seed + static_cast<uint64_t>(k));
        const double fd = (line_integral(A, perturb(loop, Y, eps)) -
                           line_integral(A, perturb(loop, Y, -eps))) /
                          (2.0 * eps);
        const double omega = mw_symplectic(loop, zeta, Y);
        worst = std::max(worst, std::abs(fd - omega));
    }
    return worst;
}

double cocycle_c(const DiscreteLoop& base, const AnalyticVectorField& X,
                 const AnalyticVectorField& Y) {
    double s = 0.0;
    for (int i = 0; i < base.size(); ++i)
        s += det3(X.eval(base.vertex(i)), Y.eval(base.vertex(i)), discrete_tangent(base, i)) *
             dual_length(base, i);
    return -s;
}

double cocycle_identity_residual(const DiscreteLoop& base, const AnalyticVectorField& X,
                                 const AnalyticVectorField& Y, const AnalyticVectorField& Z) {
    const double s = cocycle_c(base, lie_bracket(X, Y), Z) +
                     cocycle_c(base, lie_bracket(Y, Z), X) +
                     cocycle_c(base, lie_bracket(Z, X), Y);
    return std::abs(s);
}

ConstancyResult cocycle_formula_constancy(const DiscreteLoop& base, const AnalyticVectorField& X,
                                          const AnalyticVectorField& Y,
                                          const std::vector<DiscreteLoop>& probes) {
    const AnalyticVectorField bracket = lie_bracket(X, Y);
    const VectorPotential& A = potential_of(bracket);

    ConstancyResult out;
    double lo = 0.0, hi = 0.0, sum = 0.0;
    bool first = true;
    for (const DiscreteLoop& probe : probes) {
        const double h_bracket = line_integral(A, probe) - line_integral(A, base);
        const double omega =
            mw_symplectic(probe, fundamental_section(X, probe), fundamental_section(Y, probe));
        const double value = h_bracket - omega;
        sum += value;
        if (first) {
            lo = hi = value;
            first = false;
        } else {
            lo = std::min(lo, value);
            hi = std::max(hi, value);
        }
    }
    if (probes.empty()) throw Error("constancy check needs at least one probe loop");
    out.spread = hi - lo;
    out.value = sum / static_cast<double>(probes.size());
    return out;
}

DiscreteLoop map_loop(const ClosedFormDiffeo& phi, const DiscreteLoop& loop) {
    std::vector<Vec3> v(static_cast<size_t>(loop.size()));
    for (int i = 0; i < loop.size(); ++i) v[static_cast<size_t>(i)] = phi.forward(loop.vertex(i));
    return DiscreteLoop(loop.space(), std::move(v));
}

double kappa(const ClosedFormDiffeo& phi, const AnalyticVectorField& X, const DiscreteLoop& base) {
    const VectorPotential& A = potential_of(X);
    return line_integral(A, map_loop(phi, base)) - line_integral(A, base);
}

namespace {

double distance_to_loop(const DiscreteLoop& loop, const Vec3& p) {
    double best = 1e300;
    for (int i = 0; i < loop.size(); ++i) {
        const Vec3 d = loop.space().min_image(p - loop.vertex(i));
        const Vec3& e = loop.edge(i);
        const double t = std::clamp(dot(d, e) / norm2(e), 0.0, 1.0);
        best = std::min(best, norm(d - e * t));
    }
    return best;
}

}  // namespace

double bordism_boundary_mismatch(const Bordism& B, const DiscreteLoop& from,
                                 const DiscreteLoop& to) {
    double worst = 0.0;
    const int probes = std::max(16, B.grid_v);
    for (int j = 0; j < probes; ++j) {
        const double v = (j + 0.5) / probes;
        worst = std::max(worst, distance_to_loop(from, B.map(0.0, v)));
        worst = std::max(worst, distance_to_loop(to, B.map(1.0, v)));
    }
    return worst;
}

double lambda0(const Bordism& B, const AnalyticVectorField& X) {
    const int nu = B.grid_u, nv = B.grid_v;
    if (nu < 2 || nv < 2) throw ResolutionError("bordism mesh too coarse");
    const double du = 1.0 / nu, dv = 1.0 / nv;
    double s = 0.0;
    for (int i = 0; i < nu; ++i) {
        const double uc = (i + 0.5) * du;
        for (int j = 0; j < nv; ++j) {
            const double vc = (j + 0.5) * dv;
            const Vec3 pu = (B.map(uc + 0.5 * du, vc) - B.map(uc - 0.5 * du, vc)) / du;
            const Vec3 pv = (B.map(uc, vc + 0.5 * dv) - B.map(uc, vc - 0.5 * dv)) / dv;
            s += det3(X.eval(B.map(uc, vc)), pu, pv) * du * dv;
        }
    }
    return -s;
}

double iso_check(const DiscreteLoop& base, const DiscreteLoop& base2, const Bordism& B,
                 const AnalyticVectorField& X, const AnalyticVectorField& Y) {
    // boundary traces must match the loops up to the polyline sagitta
    const double h = total_length(base) / base.size();
    if (bordism_boundary_mismatch(B, base, base2) > 1e-8 + 8.0 * h * h)
        throw Error("bordism boundary does not trace the given loops");
    const double c0 = cocycle_c(base, X, Y);
    const double c1 = cocycle_c(base2, X, Y);
    const AnalyticVectorField bracket = lie_bracket(X, Y);
    AnalyticVectorField negated;
    negated.eval = [bracket](const Vec3& p) { return -bracket.eval(p); };
    return std::abs(c1 - c0 - lambda0(B, negated));
}

}  // namespace grassflow
