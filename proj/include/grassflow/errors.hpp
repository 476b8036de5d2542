#pragma once

#include <stdexcept>
#include <string>

namespace grassflow {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Loop validity: repeated vertices, edges beyond the torus lift bound.
struct DegenerateVertexError : Error {
    using Error::Error;
};
struct EdgeBoundError : Error {
    using Error::Error;
};

// Antiparallel consecutive edges in the curvature formula.
struct CuspError : Error {
    using Error::Error;
};

// A flow step produced an invalid loop.
struct StepFailureError : Error {
    using Error::Error;
};

// Form degree does not match the requested operation.
struct DegreeMismatchError : Error {
    using Error::Error;
};

// Moment-map style operation on a field without a certified potential.
struct PotentialMissingError : Error {
    using Error::Error;
};

// Quadrature resolution below the accepted minimum.
struct ResolutionError : Error {
    using Error::Error;
};

// Scenario file violates the schema.
struct SchemaError : Error {
    using Error::Error;
};

}  // namespace grassflow
