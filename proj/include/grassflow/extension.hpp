#pragma once

#include <functional>
#include <vector>

#include "grassflow/loops.hpp"
#include "grassflow/tilde.hpp"

namespace grassflow {

// Surface [0,1] x S^1 -> M with boundary loops N' - N, sampled on a
// grid_u x grid_v mesh. u = 0 traces N, u = 1 traces N'; v runs once
// around the loops in their orientation.
struct Bordism {
    std::function<Vec3(double u, double v)> map;
    int grid_u = 128;
    int grid_v = 128;
};

// max distance of sampled boundary traces to the respective polylines
// (u = 0 against `from`, u = 1 against `to`)
double bordism_boundary_mismatch(const Bordism& B, const DiscreteLoop& from,
                                 const DiscreteLoop& to);

// mu(N)(X) = int_N A - int_base A, A the potential 1-form of X.
// Throws PotentialMissingError for fields without a certified potential.
double moment(const DiscreteLoop& loop, const AnalyticVectorField& X, const DiscreteLoop& base);

// max over random smooth sections Y of
// |FD_eps[moment(., X, base)](loop; Y) - Omega(zeta_X, Y)(loop)|.
double hamiltonian_residual(const DiscreteLoop& loop, const AnalyticVectorField& X, int trials,
                            uint64_t seed);

// c_base(X,Y) = -sum_i vol(X(v_i), Y(v_i), t_i) dual_length(i); equals
// -Omega(zeta_X, zeta_Y)(base) because tangential parts die in the
// determinant.
double cocycle_c(const DiscreteLoop& base, const AnalyticVectorField& X,
                 const AnalyticVectorField& Y);

// |c([X,Y],Z) + c([Y,Z],X) + c([Z,X],Y)| on the base loop
double cocycle_identity_residual(const DiscreteLoop& base, const AnalyticVectorField& X,
                                 const AnalyticVectorField& Y, const AnalyticVectorField& Z);

struct ConstancyResult {
    double spread = 0.0;  // max - min of the per-probe values
    double value = 0.0;   // mean per-probe value of h_[X,Y] - Omega(zeta_X, zeta_Y)
};

// Evaluates h_{[X,Y]}(N) - Omega(zeta_X, zeta_Y)(N) on each probe loop;
// the continuum value is N-independent and equals cocycle_c(base, X, Y).
ConstancyResult cocycle_formula_constancy(const DiscreteLoop& base, const AnalyticVectorField& X,
                                          const AnalyticVectorField& Y,
                                          const std::vector<DiscreteLoop>& probes);

// kappa(phi)(X) = int_{phi(base)} A - int_base A
double kappa(const ClosedFormDiffeo& phi, const AnalyticVectorField& X, const DiscreteLoop& base);

// vertex-wise image loop
DiscreteLoop map_loop(const ClosedFormDiffeo& phi, const DiscreteLoop& loop);

// lambda_0(X) = -int_B i_X vol, midpoint mesh quadrature with
// central-difference partials of the closed-form bordism map.
double lambda0(const Bordism& B, const AnalyticVectorField& X);

// residual of c'(X,Y) - c(X,Y) = lambda_0(-[X,Y]) across a homology shift
double iso_check(const DiscreteLoop& base, const DiscreteLoop& base2, const Bordism& B,
                 const AnalyticVectorField& X, const AnalyticVectorField& Y);

}  // namespace grassflow
