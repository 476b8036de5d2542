#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "grassflow/errors.hpp"
#include "grassflow/geometry.hpp"

namespace grassflow {

enum class AmbientKind { Euclidean3, FlatTorus3, Sphere2 };

// Background manifold: Euclidean 3-space, a flat 3-torus with given periods,
// or the round 2-sphere carrying the area form of total mass 1.
struct AmbientSpace {
    AmbientKind kind = AmbientKind::Euclidean3;
    Vec3 periods{1.0, 1.0, 1.0};  // FlatTorus3 only

    static AmbientSpace euclidean() { return {AmbientKind::Euclidean3, {0, 0, 0}}; }
    static AmbientSpace torus(const Vec3& p = {1, 1, 1});
    static AmbientSpace sphere() { return {AmbientKind::Sphere2, {0, 0, 0}}; }

    bool three_dimensional() const { return kind != AmbientKind::Sphere2; }
    double min_period() const;

    // total volume of the fundamental domain (torus only)
    double volume() const { return periods.x * periods.y * periods.z; }

    // reduce a lifted point to the fundamental domain [0,p)^3
    Vec3 reduce(const Vec3& p) const;

    // minimal-image representative of a displacement
    Vec3 min_image(const Vec3& d) const;
};

// Closed-form alternating multilinear form of degree 0..3, evaluated
// pointwise. args carries exactly `degree` vectors.
struct DifferentialForm {
    int degree = 0;
    std::function<double(const Vec3& at, std::span<const Vec3> args)> eval;

    double operator()(const Vec3& at, std::initializer_list<Vec3> args) const {
        std::vector<Vec3> v(args);
        return eval(at, v);
    }
};

// 1-form represented through its metric-dual vector field. The jacobian of
// the dual is optional; it is only needed for curl-consistency checks.
struct VectorPotential {
    std::function<Vec3(const Vec3&)> dual;
    std::function<Mat3(const Vec3&)> dual_jacobian;  // may be empty

    double one_form(const Vec3& at, const Vec3& v) const { return dot(dual(at), v); }
};

// Closed-form vector field with exact first (and optionally second)
// derivatives. If `potential` is present it certifies dA = i_X vol, i.e.
// X = curl(dual of A).
struct AnalyticVectorField {
    std::function<Vec3(const Vec3&)> eval;
    std::function<Mat3(const Vec3&)> jacobian;                 // empty: fall back to differences
    std::function<std::array<Mat3, 3>(const Vec3&)> hessian;   // hessian(p)[c](i,j) = d_i d_j X^c
    std::optional<VectorPotential> potential;

    Vec3 operator()(const Vec3& p) const { return eval(p); }
};

// Jacobian of X at p: analytic when available, otherwise central differences.
Mat3 jacobian_of(const AnalyticVectorField& X, const Vec3& p, double h = 1e-6);

double divergence(const AnalyticVectorField& X, const Vec3& p);

// curl of the potential dual (requires dual_jacobian)
Vec3 potential_curl(const VectorPotential& A, const Vec3& p);

// Diffeomorphism given in closed form, with exact tangent map.
struct ClosedFormDiffeo {
    std::function<Vec3(const Vec3&)> forward;
    std::function<Vec3(const Vec3&)> inverse;
    std::function<Mat3(const Vec3&)> tangent;  // Jacobian of forward
    bool volume_preserving = false;
};

ClosedFormDiffeo compose(const ClosedFormDiffeo& f, const ClosedFormDiffeo& g);  // f after g
ClosedFormDiffeo inverse_diffeo(const ClosedFormDiffeo& phi);

// ---- operations ------------------------------------------------------

// vol(v1,v2,v3) at a point of a 3-dimensional ambient space. The scale is
// the oriented determinant, so the fundamental-domain integral is p1 p2 p3.
double volume_form(const AmbientSpace& space, const Vec3& v1, const Vec3& v2, const Vec3& v3,
                   const Vec3& at = {});

// [X,Y] = (DY)X - (DX)Y. Attaches the analytic jacobian when both inputs
// carry hessians, and the bracket potential i_X i_Y vol (dual Y x X) when
// both inputs carry potentials.
AnalyticVectorField lie_bracket(const AnalyticVectorField& X, const AnalyticVectorField& Y);

// Fixed-step classical RK4 integration of pdot = X(p) over time t.
Vec3 flow_point(const AnalyticVectorField& X, double t, const Vec3& p, int steps);

// (Tphi . X . phi^{-1}); jacobian by central differences of the composite.
AnalyticVectorField pushforward_field(const ClosedFormDiffeo& phi, const AnalyticVectorField& X);

// phi^* X = pushforward by phi^{-1}, evaluated without composing inverses:
// p -> Tphi(p)^{-1} X(phi(p)). Transports the potential dual by Tphi^T.
AnalyticVectorField pullback_field(const ClosedFormDiffeo& phi, const AnalyticVectorField& X);

// ---- form constructors ------------------------------------------------

DifferentialForm volume_form_of(const AmbientSpace& space);

// f * vol
DifferentialForm scaled_volume_form(const AmbientSpace& space, std::function<double(const Vec3&)> f);

// 1-form from its metric dual
DifferentialForm one_form(const VectorPotential& A);

// i_X alpha
DifferentialForm interior_product(const AnalyticVectorField& X, const DifferentialForm& alpha);

// phi^* alpha
DifferentialForm pullback_form(const ClosedFormDiffeo& phi, const DifferentialForm& alpha);

// mass-1 area form of the round sphere: det[p,u,v] / 4pi at |p| = 1
DifferentialForm sphere_area_form();

}  // namespace grassflow
