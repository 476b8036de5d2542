#include "grassflow/generators.hpp"

#include <algorithm>
#include <cmath>

namespace grassflow {

namespace {

std::vector<Vec3> sampled(int n, const std::function<Vec3(double)>& gamma) {
    std::vector<Vec3> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = gamma(static_cast<double>(i) / n);
    return v;
}

}  // namespace

DiscreteLoop make_circle(double radius, int n, const Vec3& center, const AmbientSpace& space) {
    return DiscreteLoop(space, sampled(n, [radius, center](double s) {
                            const double a = kTwoPi * s;
                            return center + Vec3{radius * std::cos(a), radius * std::sin(a), 0.0};
                        }));
}

DiscreteLoop make_ellipse(double a, double b, int n, const AmbientSpace& space) {
    return DiscreteLoop(space, sampled(n, [a, b](double s) {
                            const double u = kTwoPi * s;
                            return Vec3{a * std::cos(u), b * std::sin(u), 0.0};
                        }));
}

DiscreteLoop make_trefoil(double scale, int n, const AmbientSpace& space) {
    return DiscreteLoop(space, sampled(n, [scale](double s) {
                            const double u = kTwoPi * s;
                            const double r = 2.0 + std::cos(3.0 * u);
                            return Vec3{r * std::cos(2.0 * u), r * std::sin(2.0 * u),
                                        std::sin(3.0 * u)} *
                                   scale;
                        }));
}

DiscreteLoop make_torus_loop(int axis, double offset1, double offset2, int n,
                             const AmbientSpace& space) {
    if (axis < 0 || axis > 2) throw Error("torus loop axis must be 0, 1 or 2");
    return DiscreteLoop(space, sampled(n, [axis, offset1, offset2, &space](double s) {
                            Vec3 p{};
                            p[axis] = s * space.periods[axis];
                            p[(axis + 1) % 3] = offset1;
                            p[(axis + 2) % 3] = offset2;
                            return p;
                        }));
}

DiscreteLoop make_deformed_z_loop(int n, int k, double amplitude, const AmbientSpace& space) {
    return DiscreteLoop(space, sampled(n, [k, amplitude](double s) {
                            return Vec3{0.25 + amplitude * std::sin(kTwoPi * s + 0.7 * k),
                                        0.5 + amplitude * std::cos(2.0 * kTwoPi * s + 0.3 * k), s};
                        }));
}

DiscreteLoop make_wavy_y_loop(int n, const AmbientSpace& space) {
    return DiscreteLoop(space, sampled(n, [](double s) {
                            return Vec3{0.15 + 0.1 * std::sin(kTwoPi * s), s,
                                        0.4 + 0.05 * std::cos(kTwoPi * s)};
                        }));
}

// ---- field catalog -------------------------------------------------------

namespace {

// X = c cos(2 pi q[axis_arg]) e_{axis_out}, potential dual
// d sin(2 pi q[axis_arg]) e_{axis_pot}
AnalyticVectorField cos_field(int arg, int out, double c, int pot, double d) {
    AnalyticVectorField X;
    X.eval = [arg, out, c](const Vec3& p) {
        Vec3 v{};
        v[out] = c * std::cos(kTwoPi * p[arg]);
        return v;
    };
    X.jacobian = [arg, out, c](const Vec3& p) {
        Mat3 J = Mat3::zero();
        J(out, arg) = -c * kTwoPi * std::sin(kTwoPi * p[arg]);
        return J;
    };
    X.hessian = [arg, out, c](const Vec3& p) {
        std::array<Mat3, 3> H{Mat3::zero(), Mat3::zero(), Mat3::zero()};
        H[static_cast<size_t>(out)](arg, arg) = -c * kTwoPi * kTwoPi * std::cos(kTwoPi * p[arg]);
        return H;
    };
    VectorPotential A;
    A.dual = [arg, pot, d](const Vec3& p) {
        Vec3 v{};
        v[pot] = d * std::sin(kTwoPi * p[arg]);
        return v;
    };
    A.dual_jacobian = [arg, pot, d](const Vec3& p) {
        Mat3 J = Mat3::zero();
        J(pot, arg) = d * kTwoPi * std::cos(kTwoPi * p[arg]);
        return J;
    };
    X.potential = A;
    return X;
}

// X = cos(2 pi z) cos(2 pi x) e2, potential dual sin(2 pi z) cos(2 pi x) e1 / 2 pi
AnalyticVectorField mixed_xz_field() {
    AnalyticVectorField X;
    X.eval = [](const Vec3& p) {
        return Vec3{0.0, std::cos(kTwoPi * p.z) * std::cos(kTwoPi * p.x), 0.0};
    };
    X.jacobian = [](const Vec3& p) {
        Mat3 J = Mat3::zero();
        J(1, 0) = -kTwoPi * std::sin(kTwoPi * p.x) * std::cos(kTwoPi * p.z);
        J(1, 2) = -kTwoPi * std::cos(kTwoPi * p.x) * std::sin(kTwoPi * p.z);
        return J;
    };
    X.hessian = [](const Vec3& p) {
        std::array<Mat3, 3> H{Mat3::zero(), Mat3::zero(), Mat3::zero()};
        const double w = kTwoPi;
        H[1](0, 0) = -w * w * std::cos(w * p.x) * std::cos(w * p.z);
        H[1](0, 2) = w * w * std::sin(w * p.x) * std::sin(w * p.z);
        H[1](2, 0) = H[1](0, 2);
        H[1](2, 2) = -w * w * std::cos(w * p.x) * std::cos(w * p.z);
        return H;
    };
    VectorPotential A;
    A.dual = [](const Vec3& p) {
        return Vec3{std::sin(kTwoPi * p.z) * std::cos(kTwoPi * p.x) / kTwoPi, 0.0, 0.0};
    };
    A.dual_jacobian = [](const Vec3& p) {
        Mat3 J = Mat3::zero();
        J(0, 0) = -std::sin(kTwoPi * p.z) * std::sin(kTwoPi * p.x);
        J(0, 2) = std::cos(kTwoPi * p.z) * std::cos(kTwoPi * p.x);
        return J;
    };
    X.potential = A;
    return X;
}

}  // namespace

const std::vector<NamedField>& field_catalog() {
    static const std::vector<NamedField> catalog = [] {
        std::vector<NamedField> v;
        v.push_back({"ex_cosy", "X = 2 pi cos(2 pi y) e1, A-dual = sin(2 pi y) e3",
                     cos_field(1, 0, kTwoPi, 2, 1.0)});
        v.push_back({"ex_mcosz", "X = -2 pi cos(2 pi z) e1, A-dual = sin(2 pi z) e2",
                     cos_field(2, 0, -kTwoPi, 1, 1.0)});
        v.push_back({"ey_cosxz", "X = cos(2 pi z) cos(2 pi x) e2, A-dual = sin(2 pi z) cos(2 pi x) e1 / 2 pi",
                     mixed_xz_field()});
        v.push_back({"ey_cosz", "X = 2 pi cos(2 pi z) e2, A-dual = sin(2 pi z) e1",
                     cos_field(2, 1, kTwoPi, 0, 1.0)});
        v.push_back({"ez_cosx", "X = 2 pi cos(2 pi x) e3, A-dual = sin(2 pi x) e2",
                     cos_field(0, 2, kTwoPi, 1, 1.0)});
        std::sort(v.begin(), v.end(),
                  [](const NamedField& a, const NamedField& b) { return a.name < b.name; });
        return v;
    }();
    return catalog;
}

const AnalyticVectorField& field_by_name(const std::string& name) {
    for (const NamedField& f : field_catalog())
        if (f.name == name) return f.field;
    throw SchemaError("unknown field: " + name);
}

// ---- diffeos ---------------------------------------------------------------

ClosedFormDiffeo make_translation(const Vec3& c) {
    ClosedFormDiffeo d;
    d.forward = [c](const Vec3& p) { return p + c; };
    d.inverse = [c](const Vec3& p) { return p - c; };
    d.tangent = [](const Vec3&) { return Mat3::identity(); };
    d.volume_preserving = true;
    return d;
}

ClosedFormDiffeo make_shear_y(double amp) {
    ClosedFormDiffeo d;
    d.forward = [amp](const Vec3& p) {
        return Vec3{p.x, p.y + amp * std::sin(kTwoPi * p.x), p.z};
    };
    d.inverse = [amp](const Vec3& p) {
        return Vec3{p.x, p.y - amp * std::sin(kTwoPi * p.x), p.z};
    };
    d.tangent = [amp](const Vec3& p) {
        Mat3 J = Mat3::identity();
        J(1, 0) = amp * kTwoPi * std::cos(kTwoPi * p.x);
        return J;
    };
    d.volume_preserving = true;
    return d;
}

ClosedFormDiffeo make_shear_z(double amp) {
    ClosedFormDiffeo d;
    d.forward = [amp](const Vec3& p) {
        return Vec3{p.x, p.y, p.z + amp * std::sin(kTwoPi * p.y)};
    };
    d.inverse = [amp](const Vec3& p) {
        return Vec3{p.x, p.y, p.z - amp * std::sin(kTwoPi * p.y)};
    };
    d.tangent = [amp](const Vec3& p) {
        Mat3 J = Mat3::identity();
        J(2, 1) = amp * kTwoPi * std::cos(kTwoPi * p.y);
        return J;
    };
    d.volume_preserving = true;
    return d;
}

ClosedFormDiffeo make_rotation_z(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    ClosedFormDiffeo d;
    d.forward = [c, s](const Vec3& p) { return Vec3{c * p.x - s * p.y, s * p.x + c * p.y, p.z}; };
    d.inverse = [c, s](const Vec3& p) { return Vec3{c * p.x + s * p.y, -s * p.x + c * p.y, p.z}; };
    d.tangent = [c, s](const Vec3&) {
        Mat3 J = Mat3::identity();
        J(0, 0) = c;
        J(0, 1) = -s;
        J(1, 0) = s;
        J(1, 1) = c;
        return J;
    };
    d.volume_preserving = true;
    return d;
}

const std::vector<NamedDiffeo>& diffeo_catalog() {
    static const std::vector<NamedDiffeo> catalog = [] {
        std::vector<NamedDiffeo> v;
        v.push_back({"rotation_z", "rotation about the z-axis by 0.7 (Euclidean)",
                     make_rotation_z(0.7)});
        v.push_back({"shear_y", "(x, y + 0.25 sin(2 pi x), z)", make_shear_y(0.25)});
        v.push_back({"shear_z", "(x, y, z + 0.2 sin(2 pi y))", make_shear_z(0.2)});
        v.push_back({"translation_x", "p -> p + 0.3 e1", make_translation({0.3, 0, 0})});
        std::sort(v.begin(), v.end(),
                  [](const NamedDiffeo& a, const NamedDiffeo& b) { return a.name < b.name; });
        return v;
    }();
    return catalog;
}

// ---- paths and sweeps ------------------------------------------------------

DiffeoPath make_translation_path(const Vec3& c) {
    DiffeoPath path;
    path.map = [c](double t, const Vec3& p) { return p + c * t; };
    path.velocity = [c](double, const Vec3&) { return c; };
    path.tangent = [](double, const Vec3&) { return Mat3::identity(); };
    return path;
}

DiffeoPath make_shear_path(double amp) {
    DiffeoPath path;
    path.map = [amp](double t, const Vec3& p) {
        return Vec3{p.x, p.y + t * amp * std::sin(kTwoPi * p.x), p.z};
    };
    path.velocity = [amp](double, const Vec3& p) {
        return Vec3{0.0, amp * std::sin(kTwoPi * p.x), 0.0};
    };
    path.tangent = [amp](double t, const Vec3& p) {
        Mat3 J = Mat3::identity();
        J(1, 0) = t * amp * kTwoPi * std::cos(kTwoPi * p.x);
        return J;
    };
    return path;
}

SweepMap make_unit_cell_sweep(int res) {
    SweepMap sw;
    sw.dim = 3;
    sw.ns = sw.nt = sw.ntheta = res;
    sw.map = [](double s, double t, double th) { return Vec3{s, t, th}; };
    return sw;
}

SweepMap make_static_slice_sweep(double x0, int res) {
    SweepMap sw;
    sw.dim = 3;
    sw.ns = sw.nt = sw.ntheta = res;
    sw.map = [x0](double, double t, double th) { return Vec3{x0, t, th}; };
    return sw;
}

SweepMap make_wrapped_slice_sweep(double x0, int res) {
    SweepMap sw;
    sw.dim = 3;
    sw.ns = sw.nt = sw.ntheta = res;
    sw.map = [x0](double s, double t, double th) { return Vec3{x0 + s, t, th}; };
    return sw;
}

SweepMap make_bumped_wrapped_slice_sweep(double x0, double amp, int res) {
    SweepMap sw;
    sw.dim = 3;
    sw.ns = sw.nt = sw.ntheta = res;
    sw.map = [x0, amp](double s, double t, double th) {
        const double bump = amp * std::sin(kPi * s);
        return Vec3{x0 + s + bump * std::sin(kTwoPi * t),
                    t + bump * std::sin(kTwoPi * th),
                    th + bump * std::cos(kTwoPi * t)};
    };
    return sw;
}

SweepMap make_solid_torus_sweep(double R, double r, int res) {
    SweepMap sw;
    sw.dim = 3;
    sw.ns = sw.nt = sw.ntheta = res;
    sw.map = [R, r](double s, double t, double th) {
        const double rad = R + s * r * std::cos(kTwoPi * th);
        return Vec3{rad * std::cos(kTwoPi * t), rad * std::sin(kTwoPi * t),
                    s * r * std::sin(kTwoPi * th)};
    };
    return sw;
}

SweepMap make_circling_z_loop_path(double rho, int res) {
    SweepMap sw;
    sw.dim = 3;
    sw.ns = sw.nt = sw.ntheta = res;
    sw.map = [rho](double, double t, double th) {
        return Vec3{0.5 + rho * std::cos(kTwoPi * t), 0.5 + rho * std::sin(kTwoPi * t), th};
    };
    return sw;
}

SweepMap make_circling_z_loop_shrink_filling(double rho, int res) {
    SweepMap sw;
    sw.dim = 3;
    sw.ns = sw.nt = sw.ntheta = res;
    sw.map = [rho](double s, double t, double th) {
        return Vec3{0.5 + s * rho * std::cos(kTwoPi * t), 0.5 + s * rho * std::sin(kTwoPi * t),
                    th};
    };
    return sw;
}

}  // namespace grassflow
