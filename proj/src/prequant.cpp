#include "grassflow/prequant.hpp"

#include <array>
#include <cmath>

namespace grassflow {

namespace {

// alpha(phi_t(p))(phidot, T v1, T v2) with the minus of the transgression
double lambda_integrand(const DiffeoPath& path, const DifferentialForm& alpha, double t,
                        const Vec3& p, const Vec3& v1, const Vec3& v2) {
    const Vec3 q = path.map(t, p);
    const Mat3 J = path.tangent(t, p);
    const std::array<Vec3, 3> args{path.velocity(t, p), J * v1, J * v2};
    return -alpha.eval(q, args);
}

Vec3 partial(const SweepMap& sw, int axis, double s, double t, double th, double h) {
    auto at = [&](double ds, double dt, double dth) { return sw.map(s + ds, t + dt, th + dth); };
    switch (axis) {
        case 0:
            if (sw.d_s) return sw.d_s(s, t, th);
            return (at(0.5 * h, 0, 0) - at(-0.5 * h, 0, 0)) / h;
        case 1:
            if (sw.d_t) return sw.d_t(s, t, th);
            return (at(0, 0.5 * h, 0) - at(0, -0.5 * h, 0)) / h;
        default:
            if (sw.d_theta) return sw.d_theta(s, t, th);
            return (at(0, 0, 0.5 * h) - at(0, 0, -0.5 * h)) / h;
    }
}

}  // namespace

double lambda_path_form(const DiffeoPath& path, const DifferentialForm& alpha, const Vec3& at,
                        const Vec3& v1, const Vec3& v2, int panels) {
    if (alpha.degree != 3) throw DegreeMismatchError("lambda_path_form needs a 3-form");
    if (panels < 1) throw ResolutionError("lambda_path_form needs at least one panel");
    // composite Simpson over t in [0,1]
    const int m = 2 * panels;
    const double h = 1.0 / m;
    double s = 0.0;
    for (int k = 0; k <= m; ++k) {
        const double w = (k == 0 || k == m) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
        s += w * lambda_integrand(path, alpha, k * h, at, v1, v2);
    }
    return s * h / 3.0;
}

double lambda_exactness_residual(const DiffeoPath& path, const DifferentialForm& alpha,
                                 const Vec3& at, double scale, int panels) {
    const Vec3 e[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    // d(lambda) (e1,e2,e3) ~ sum_k [lambda(face+_k) - lambda(face-_k)](e_{k+1}, e_{k+2}) / scale
    double lhs = 0.0;
    for (int k = 0; k < 3; ++k) {
        const Vec3& a = e[(k + 1) % 3];
        const Vec3& b = e[(k + 2) % 3];
        const Vec3 lo = at + (a + b) * (0.5 * scale);
        const Vec3 hi = lo + e[k] * scale;
        lhs += (lambda_path_form(path, alpha, hi, a, b, panels) -
                lambda_path_form(path, alpha, lo, a, b, panels)) /
               scale;
    }
    const Vec3 center = at + Vec3{0.5, 0.5, 0.5} * scale;
    const Mat3 J = path.tangent(1.0, center);
    const std::array<Vec3, 3> id{e[0], e[1], e[2]};
    const std::array<Vec3, 3> mapped{J * e[0], J * e[1], J * e[2]};
    const double rhs = alpha.eval(center, id) - alpha.eval(path.map(1.0, center), mapped);
    return std::abs(lhs - rhs);
}

double chain_integral(const SweepMap& sweep, const DifferentialForm& alpha) {
    if (sweep.dim != 2 && sweep.dim != 3) throw Error("sweep dimension must be 2 or 3");
    if (alpha.degree != sweep.dim)
        throw DegreeMismatchError("chain_integral: form degree must match the sweep dimension");
    const int ns = sweep.ns, nt = sweep.nt, nth = sweep.dim == 3 ? sweep.ntheta : 1;
    if (ns < 8 || nt < 8 || (sweep.dim == 3 && sweep.ntheta < 8))
        throw ResolutionError("chain_integral resolution below (8,8,8)");

    const double hs = 1.0 / ns, ht = 1.0 / nt, hth = 1.0 / nth;
    double total = 0.0;
    for (int i = 0; i < ns; ++i) {
        const double s = (i + 0.5) * hs;
        for (int j = 0; j < nt; ++j) {
            const double t = (j + 0.5) * ht;
            for (int k = 0; k < nth; ++k) {
                const double th = (k + 0.5) * hth;
                const Vec3 p = sweep.map(s, t, th);
                if (sweep.dim == 3) {
                    const std::array<Vec3, 3> args{partial(sweep, 0, s, t, th, hs),
                                                   partial(sweep, 1, s, t, th, ht),
                                                   partial(sweep, 2, s, t, th, hth)};
                    total += alpha.eval(p, args) * hs * ht * hth;
                } else {
                    const std::array<Vec3, 2> args{partial(sweep, 0, s, t, th, hs),
                                                   partial(sweep, 1, s, t, th, ht)};
                    total += alpha.eval(p, args) * hs * ht;
                }
            }
        }
    }
    return total;
}

IntegralityResult integrality_gap(const SweepMap& A, const SweepMap& B,
                                  const DifferentialForm& alpha) {
    IntegralityResult r;
    r.difference = chain_integral(A, alpha) - chain_integral(B, alpha);
    r.nearest = std::lround(r.difference);
    r.gap = std::abs(r.difference - static_cast<double>(r.nearest));
    return r;
}

namespace {

SweepMap cap_sweep(double theta0, CapFilling filling, int resolution) {
    SweepMap sw;
    sw.dim = 2;
    sw.ns = sw.nt = resolution;
    const bool north = filling == CapFilling::North;
    const double a = north ? 0.0 : kPi;          // polar angle at u = 0
    const double b = theta0;                     // boundary latitude at u = 1
    auto point = [a, b](double u, double v, double) {
        const double th = a + u * (b - a);
        const double ph = kTwoPi * v;
        return Vec3{std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)};
    };
    sw.map = point;
    sw.d_s = [a, b](double u, double v, double) {
        const double th = a + u * (b - a);
        const double ph = kTwoPi * v;
        return Vec3{std::cos(th) * std::cos(ph), std::cos(th) * std::sin(ph), -std::sin(th)} *
               (b - a);
    };
    sw.d_t = [a, b](double u, double v, double) {
        const double th = a + u * (b - a);
        const double ph = kTwoPi * v;
        return Vec3{-std::sin(th) * std::sin(ph), std::sin(th) * std::cos(ph), 0.0} * kTwoPi;
    };
    return sw;
}

}  // namespace

HolonomyValue sphere_holonomy(double theta0, CapFilling filling, int resolution) {
    if (theta0 <= 0.0 || theta0 >= kPi) throw Error("latitude must lie strictly between the poles");
    const double raw = chain_integral(cap_sweep(theta0, filling, resolution), sphere_area_form());
    HolonomyValue h;
    h.raw = raw;
    h.mod1 = raw - std::floor(raw);
    return h;
}

double sphere_rotation_hamiltonian(double theta, int panels) {
    // f(theta) = int_{pi/2}^{theta} (i_X omega)(meridian tangent) dtau,
    // X(p) = 2 pi e3 x p (period-1 rotation), omega the mass-1 area form
    const DifferentialForm omega = sphere_area_form();
    auto integrand = [&omega](double tau) {
        const Vec3 p{std::sin(tau), 0.0, std::cos(tau)};
        const Vec3 rot = cross(Vec3{0, 0, kTwoPi}, p);
        const Vec3 meridian{std::cos(tau), 0.0, -std::sin(tau)};
        const std::array<Vec3, 2> args{rot, meridian};
        return omega.eval(p, args);
    };
    const int m = 2 * panels;
    const double h = (theta - 0.5 * kPi) / m;
    if (h == 0.0) return 0.0;
    double s = 0.0;
    for (int k = 0; k <= m; ++k) {
        const double w = (k == 0 || k == m) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
        s += w * integrand(0.5 * kPi + k * h);
    }
    return s * h / 3.0;
}

double sphere_rotation_hamiltonian_integral(int resolution, int panels) {
    // midpoint in (theta, phi); the integrand is phi-independent
    const double h = kPi / resolution;
    double s = 0.0;
    for (int i = 0; i < resolution; ++i) {
        const double th = (i + 0.5) * h;
        s += sphere_rotation_hamiltonian(th, panels) * std::sin(th) * 0.5 * h;
    }
    return s;
}

double loop_action(const SweepMap& path, const DifferentialForm& alpha) {
    if (alpha.degree != 3) throw DegreeMismatchError("loop_action needs a 3-form");
    auto G = [&path](double t, double th) { return path.map(0.5, t, th); };
    // the path must close in lifted coordinates
    double defect = 0.0;
    const int probes = 16;
    for (int k = 0; k < probes; ++k) {
        const double th = (k + 0.5) / probes;
        defect = std::max(defect, norm(G(1.0, th) - G(0.0, th)));
    }
    if (defect > 1e-8) throw Error("loop_action: path of loops does not close in the lift");

    SweepMap cone;
    cone.dim = 3;
    cone.ns = path.ns;
    cone.nt = path.nt;
    cone.ntheta = path.ntheta;
    cone.map = [G](double s, double t, double th) {
        const Vec3 b = G(0.0, th);
        return b + (G(t, th) - b) * s;
    };
    return chain_integral(cone, alpha);
}

}  // namespace grassflow
