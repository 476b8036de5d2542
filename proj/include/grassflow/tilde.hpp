#pragma once

#include "grassflow/loops.hpp"

namespace grassflow {

// Line integral of a 1-form over the loop, midpoint rule per edge.
double tilde_function(const DifferentialForm& beta, const DiscreteLoop& loop);

// One-form on the Grassmannian from an ambient 2-form:
// sum_i beta(v_i)(Y_i, t_i) dual_length(i).
double tilde_oneform(const DifferentialForm& beta, const DiscreteLoop& loop,
                     const NormalSection& Y);

// Two-form on the Grassmannian from an ambient 3-form:
// sum_i alpha(v_i)(Y1_i, Y2_i, t_i) dual_length(i).
double tilde_twoform(const DifferentialForm& alpha, const DiscreteLoop& loop,
                     const NormalSection& Y1, const NormalSection& Y2);

// Marsden-Weinstein form Omega = tilde of the volume form:
// sum_i vol(Y1_i, Y2_i, t_i) dual_length(i).
double mw_symplectic(const DiscreteLoop& loop, const NormalSection& Y1, const NormalSection& Y2);

// Riemannian pairing sum_i <Y1_i, Y2_i> dual_length(i).
double tilde_metric(const DiscreteLoop& loop, const NormalSection& Y1, const NormalSection& Y2);

// max over random sections of |Omega(Y1,Y2) - g~(J Y1, Y2)|; round-off scale
// because vol(Y1,Y2,t) = <t x Y1, Y2> node-wise.
double compatibility_residual(const DiscreteLoop& loop, int trials, uint64_t seed);

// max residual of phi^* alpha~ = (phi^* alpha)~ over random smooth sections;
// pure discretization error, O(h^2) under refinement.
double pullback_check(const ClosedFormDiffeo& phi, const DifferentialForm& alpha,
                      const DiscreteLoop& loop, int trials, uint64_t seed);

// max residual of i_{zeta_X} alpha~ = (i_X alpha)~ over random sections;
// exact at the nodes up to round-off.
double contraction_check(const AnalyticVectorField& X, const DifferentialForm& alpha,
                         const DiscreteLoop& loop, int trials, uint64_t seed);

}  // namespace grassflow
