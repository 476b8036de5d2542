#pragma once

#include <string>
#include <vector>

#include "grassflow/loops.hpp"
#include "grassflow/prequant.hpp"

namespace grassflow {

// ---- loop generators ---------------------------------------------------

// counterclockwise circle of radius R in the xy-plane
DiscreteLoop make_circle(double radius, int n, const Vec3& center = {},
                         const AmbientSpace& space = AmbientSpace::euclidean());

// axis-aligned ellipse in the xy-plane
DiscreteLoop make_ellipse(double a, double b, int n,
                          const AmbientSpace& space = AmbientSpace::euclidean());

// (2,3) torus knot, a smooth non-planar loop
DiscreteLoop make_trefoil(double scale, int n,
                          const AmbientSpace& space = AmbientSpace::euclidean());

// straight loop winding once along `axis` (0,1,2) of the torus, the two
// transverse coordinates fixed at offsets
DiscreteLoop make_torus_loop(int axis, double offset1, double offset2, int n,
                             const AmbientSpace& space = AmbientSpace::torus());

// z-winding loop with small sinusoidal transverse deformation (probe family
// for constancy checks); k indexes the phase
DiscreteLoop make_deformed_z_loop(int n, int k, double amplitude,
                                  const AmbientSpace& space = AmbientSpace::torus());

// y-winding loop with smooth transverse wiggle, a generic torus probe
DiscreteLoop make_wavy_y_loop(int n, const AmbientSpace& space = AmbientSpace::torus());

// ---- exact divergence-free field catalog (unit torus) -------------------

struct NamedField {
    std::string name;
    std::string description;
    AnalyticVectorField field;
};

// Trigonometric fields with hand-coded jacobians, hessians and certified
// potentials. Sorted by name:
//   ex_mcosz : a = sin(2 pi z) e2, X = -2 pi cos(2 pi z) e1
//   ey_cosz  : a = sin(2 pi z) e1, X = +2 pi cos(2 pi z) e2
//   ey_cosxz : a = sin(2 pi z) cos(2 pi x) e1 / 2 pi,
//              X = cos(2 pi z) cos(2 pi x) e2
//   ez_cosx  : a = sin(2 pi x) e2, X = +2 pi cos(2 pi x) e3
//   ex_cosy  : a = sin(2 pi y) e3, X = +2 pi cos(2 pi y) e1
const std::vector<NamedField>& field_catalog();

const AnalyticVectorField& field_by_name(const std::string& name);

// ---- closed-form volume preserving diffeomorphisms ----------------------

struct NamedDiffeo {
    std::string name;
    std::string description;
    ClosedFormDiffeo diffeo;
};

ClosedFormDiffeo make_translation(const Vec3& c);
// (x, y + amp sin(2 pi x), z)
ClosedFormDiffeo make_shear_y(double amp);
// (x, y, z + amp sin(2 pi y))
ClosedFormDiffeo make_shear_z(double amp);
// rotation about the z-axis (Euclidean)
ClosedFormDiffeo make_rotation_z(double angle);

const std::vector<NamedDiffeo>& diffeo_catalog();

// ---- path and sweep fixtures --------------------------------------------

// translation path phi_t(p) = p + t c
DiffeoPath make_translation_path(const Vec3& c);
// y-shear path phi_t(x,y,z) = (x, y + t amp sin(2 pi x), z)
DiffeoPath make_shear_path(double amp);

// identity-chart sweep of the unit torus cell: (s, t, theta)
SweepMap make_unit_cell_sweep(int res);

// static (y,z)-slice sweep at x0: (x0, t, theta), degenerate in s
SweepMap make_static_slice_sweep(double x0, int res);

// (y,z)-slice dragged once around the x-period: (x0 + s, t, theta)
SweepMap make_wrapped_slice_sweep(double x0, int res);

// same, with an interior bump vanishing on the boundary (exercises the
// quadrature without changing the chain class)
SweepMap make_bumped_wrapped_slice_sweep(double x0, double amp, int res);

// solid torus in Euclidean space; chain integral of vol = 2 pi^2 r^2 R
SweepMap make_solid_torus_sweep(double R, double r, int res);

// closed path of z-loops whose (x,y) trace is a circle of radius rho;
// loop_action = pi rho^2 (signed trace area)
SweepMap make_circling_z_loop_path(double rho, int res);

// radial-shrink filling of the same closed path
SweepMap make_circling_z_loop_shrink_filling(double rho, int res);

}  // namespace grassflow
