#pragma once

#include "grassflow/loops.hpp"
#include "grassflow/random.hpp"

namespace grassflow {

// Independent per-vertex draws in [-1,1)^3, projected. Right probe for
// node-wise algebraic identities.
NormalSection white_section(const DiscreteLoop& loop, uint64_t seed);

// Random combination of the first few Fourier modes along the vertex index,
// normalized to unit RMS, projected. Right probe for convergence-order
// statements, where the section must have a smooth continuum limit.
NormalSection smooth_section(const DiscreteLoop& loop, uint64_t seed, int modes = 3);

}  // namespace grassflow
