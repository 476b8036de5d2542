#pragma once

#include <functional>
#include <string>

#include "grassflow/ambient.hpp"

namespace grassflow {

// Closed-form family phi_t, t in [0,1], phi_0 = id, with its Eulerian
// velocity (d/dt phi_t at fixed argument) and tangent maps.
struct DiffeoPath {
    std::function<Vec3(double t, const Vec3&)> map;
    std::function<Vec3(double t, const Vec3&)> velocity;  // d/dt phi_t(p)
    std::function<Mat3(double t, const Vec3&)> tangent;   // Jacobian of phi_t in p
};

// Closed-form map from [0,1]^2 x S^1 (dim 3) or [0,1]^2 (dim 2) into the
// ambient space. Analytic partials are used when provided, otherwise
// central differences of the map.
struct SweepMap {
    int dim = 3;  // 3: (s,t,theta); 2: (s,t)
    std::function<Vec3(double s, double t, double theta)> map;
    std::function<Vec3(double s, double t, double theta)> d_s;      // optional
    std::function<Vec3(double s, double t, double theta)> d_t;      // optional
    std::function<Vec3(double s, double t, double theta)> d_theta;  // optional (dim 3)
    int ns = 32, nt = 32, ntheta = 32;
};

// (lambda_phi)_at(v1, v2) = -int_0^1 (phi_t^* i_{phidot_t} alpha)(v1,v2) dt,
// composite Simpson with `panels` panels.
double lambda_path_form(const DiffeoPath& path, const DifferentialForm& alpha, const Vec3& at,
                        const Vec3& v1, const Vec3& v2, int panels = 64);

// | d(lambda_phi) - (alpha - phi_1^* alpha) | on a coordinate cube of edge
// `scale` at `at`: boundary-face Stokes sum for the left side, cell-center
// evaluation for the right.
double lambda_exactness_residual(const DiffeoPath& path, const DifferentialForm& alpha,
                                 const Vec3& at, double scale, int panels = 64);

// Tensor-product midpoint quadrature of the pulled-back form over the sweep
// domain. dim 3 takes a 3-form, dim 2 a 2-form. Resolutions below 8 per
// used direction are rejected.
double chain_integral(const SweepMap& sweep, const DifferentialForm& alpha);

struct IntegralityResult {
    double difference = 0.0;  // chain_integral(A) - chain_integral(B)
    long nearest = 0;
    double gap = 0.0;  // distance of the difference to the nearest integer
};

IntegralityResult integrality_gap(const SweepMap& A, const SweepMap& B,
                                  const DifferentialForm& alpha);

enum class CapFilling { North, South };

struct HolonomyValue {
    double raw = 0.0;
    double mod1 = 0.0;  // in [0, 1)
};

// Integral of the mass-1 area form over the spherical cap bounded by the
// latitude circle at polar angle theta0, the boundary oriented in +phi.
// North: the cap containing the north pole, positively oriented
// ((1 - cos theta0)/2); South: the complementary cap with the orientation
// induced by the same boundary (-(1 + cos theta0)/2). North minus south
// recovers the full mass 1.
HolonomyValue sphere_holonomy(double theta0, CapFilling filling, int resolution = 512);

// Hamilton function of the period-1 rotation about the z-axis with the
// zero-integral normalization, recovered by quadrature of i_X omega along
// a meridian from the equator. Closed form: cos(theta)/2.
double sphere_rotation_hamiltonian(double theta, int panels = 256);

// int_{S^2} f omega for the function above, by the same quadrature
double sphere_rotation_hamiltonian_integral(int resolution = 256, int panels = 256);

// Action of a closed path of loops presented as the t-slices of `path`
// (a sweep degenerate in s): the chain integral of the straight-line cone
// F(s,t,theta) = G(0,theta) + s (G(t,theta) - G(0,theta)) in lifted
// coordinates. Requires the lift to close: G(1,.) = G(0,.) to 1e-8.
double loop_action(const SweepMap& path, const DifferentialForm& alpha);

}  // namespace grassflow
