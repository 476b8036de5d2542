#include "grassflow/ambient.hpp"

#include <cmath>

namespace grassflow {

AmbientSpace AmbientSpace::torus(const Vec3& p) {
    if (p.x <= 0 || p.y <= 0 || p.z <= 0) throw Error("torus periods must be positive");
    return {AmbientKind::FlatTorus3, p};
}

double AmbientSpace::min_period() const {
    if (kind != AmbientKind::FlatTorus3) return 0.0;
    return std::min(periods.x, std::min(periods.y, periods.z));
}

Vec3 AmbientSpace::reduce(const Vec3& p) const {
    if (kind != AmbientKind::FlatTorus3) return p;
    Vec3 r = p;
    for (int c = 0; c < 3; ++c) {
        const double per = periods[c];
        r[c] -= per * std::floor(r[c] / per);
    }
    return r;
}

Vec3 AmbientSpace::min_image(const Vec3& d) const {
    if (kind != AmbientKind::FlatTorus3) return d;
    Vec3 r = d;
    for (int c = 0; c < 3; ++c) {
        const double per = periods[c];
        r[c] -= per * std::round(r[c] / per);
    }
    return r;
}

Mat3 jacobian_of(const AnalyticVectorField& X, const Vec3& p, double h) {
    if (X.jacobian) return X.jacobian(p);
    Mat3 J;
    for (int j = 0; j < 3; ++j) {
        Vec3 dp{};
        dp[j] = h;
        const Vec3 d = (X.eval(p + dp) - X.eval(p - dp)) / (2.0 * h);
        for (int i = 0; i < 3; ++i) J(i, j) = d[i];
    }
    return J;
}

double divergence(const AnalyticVectorField& X, const Vec3& p) {
    const Mat3 J = jacobian_of(X, p);
    return J(0, 0) + J(1, 1) + J(2, 2);
}

Vec3 potential_curl(const VectorPotential& A, const Vec3& p) {
    if (!A.dual_jacobian) throw PotentialMissingError("potential dual lacks jacobian data");
    const Mat3 J = A.dual_jacobian(p);
    return {J(2, 1) - J(1, 2), J(0, 2) - J(2, 0), J(1, 0) - J(0, 1)};
}

ClosedFormDiffeo compose(const ClosedFormDiffeo& f, const ClosedFormDiffeo& g) {
    ClosedFormDiffeo h;
    h.forward = [f, g](const Vec3& p) { return f.forward(g.forward(p)); };
    if (f.inverse && g.inverse)
        h.inverse = [f, g](const Vec3& p) { return g.inverse(f.inverse(p)); };
    if (f.tangent && g.tangent)
        h.tangent = [f, g](const Vec3& p) { return f.tangent(g.forward(p)) * g.tangent(p); };
    h.volume_preserving = f.volume_preserving && g.volume_preserving;
    return h;
}

ClosedFormDiffeo inverse_diffeo(const ClosedFormDiffeo& phi) {
    if (!phi.inverse || !phi.tangent) throw Error("diffeo lacks inverse or tangent data");
    ClosedFormDiffeo h;
    h.forward = phi.inverse;
    h.inverse = phi.forward;
    h.tangent = [phi](const Vec3& p) { return phi.tangent(phi.inverse(p)).inverse(); };
    h.volume_preserving = phi.volume_preserving;
    return h;
}

double volume_form(const AmbientSpace& space, const Vec3& v1, const Vec3& v2, const Vec3& v3,
                   const Vec3&) {
    if (!space.three_dimensional())
        throw DegreeMismatchError("volume_form needs a 3-dimensional ambient space");
    return det3(v1, v2, v3);
}

AnalyticVectorField lie_bracket(const AnalyticVectorField& X, const AnalyticVectorField& Y) {
    AnalyticVectorField Z;
    Z.eval = [X, Y](const Vec3& p) {
        return jacobian_of(Y, p) * X.eval(p) - jacobian_of(X, p) * Y.eval(p);
    };
    if (X.hessian && Y.hessian && X.jacobian && Y.jacobian) {
        // D[X,Y] = JY JX - JX JY + HY:X - HX:Y
        Z.jacobian = [X, Y](const Vec3& p) {
            const Mat3 JX = X.jacobian(p), JY = Y.jacobian(p);
            const auto HX = X.hessian(p);
            const auto HY = Y.hessian(p);
            const Vec3 xv = X.eval(p), yv = Y.eval(p);
            Mat3 D = JY * JX - JX * JY;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    D(i, j) += dot(HY[static_cast<size_t>(i)].rows[static_cast<size_t>(j)], xv) -
                               dot(HX[static_cast<size_t>(i)].rows[static_cast<size_t>(j)], yv);
            return D;
        };
    }
    if (X.potential && Y.potential) {
        // i_{[X,Y]} vol = d(i_X i_Y vol); the dual of i_X i_Y vol is Y x X
        VectorPotential A;
        A.dual = [X, Y](const Vec3& p) { return cross(Y.eval(p), X.eval(p)); };
        if (X.jacobian && Y.jacobian) {
            A.dual_jacobian = [X, Y](const Vec3& p) {
                const Mat3 JX = X.jacobian(p), JY = Y.jacobian(p);
                const Vec3 xv = X.eval(p), yv = Y.eval(p);
                Mat3 D;
                for (int j = 0; j < 3; ++j) {
                    Vec3 ej{};
                    ej[j] = 1.0;
                    const Vec3 col = cross(JY * ej, xv) + cross(yv, JX * ej);
                    for (int i = 0; i < 3; ++i) D(i, j) = col[i];
                }
                return D;
            };
        }
        Z.potential = A;
    }
    return Z;
}

Vec3 flow_point(const AnalyticVectorField& X, double t, const Vec3& p, int steps) {
    if (steps < 1) throw Error("flow_point needs steps >= 1");
    const double h = t / steps;
    Vec3 q = p;
    for (int s = 0; s < steps; ++s) {
        const Vec3 k1 = X.eval(q);
        const Vec3 k2 = X.eval(q + k1 * (h / 2));
        const Vec3 k3 = X.eval(q + k2 * (h / 2));
        const Vec3 k4 = X.eval(q + k3 * h);
        q += (k1 + 2.0 * k2 + 2.0 * k3 + k4) * (h / 6.0);
        if (!finite(q)) throw Error("flow_point: non-finite state");
    }
    return q;
}

AnalyticVectorField pushforward_field(const ClosedFormDiffeo& phi, const AnalyticVectorField& X) {
    if (!phi.inverse || !phi.tangent) throw Error("pushforward needs inverse and tangent data");
    AnalyticVectorField Y;
    Y.eval = [phi, X](const Vec3& p) {
        const Vec3 q = phi.inverse(p);
        return phi.tangent(q) * X.eval(q);
    };
    // tangent derivatives of phi are not carried; differences are accurate
    // enough for every consumer of this jacobian
    return Y;
}

AnalyticVectorField pullback_field(const ClosedFormDiffeo& phi, const AnalyticVectorField& X) {
    if (!phi.tangent) throw Error("pullback needs tangent data");
    AnalyticVectorField Y;
    Y.eval = [phi, X](const Vec3& p) { return phi.tangent(p).inverse() * X.eval(phi.forward(p)); };
    if (X.potential) {
        VectorPotential A;
        const VectorPotential XA = *X.potential;
        A.dual = [phi, XA](const Vec3& p) {
            return phi.tangent(p).transposed() * XA.dual(phi.forward(p));
        };
        Y.potential = A;
    }
    return Y;
}

DifferentialForm volume_form_of(const AmbientSpace& space) {
    if (!space.three_dimensional())
        throw DegreeMismatchError("volume form of a 2-dimensional space is the area form");
    DifferentialForm f;
    f.degree = 3;
    f.eval = [](const Vec3&, std::span<const Vec3> a) { return det3(a[0], a[1], a[2]); };
    return f;
}

DifferentialForm scaled_volume_form(const AmbientSpace& space, std::function<double(const Vec3&)> g) {
    DifferentialForm f = volume_form_of(space);
    f.eval = [g](const Vec3& p, std::span<const Vec3> a) { return g(p) * det3(a[0], a[1], a[2]); };
    return f;
}

DifferentialForm one_form(const VectorPotential& A) {
    DifferentialForm f;
    f.degree = 1;
    f.eval = [A](const Vec3& p, std::span<const Vec3> a) { return dot(A.dual(p), a[0]); };
    return f;
}

DifferentialForm interior_product(const AnalyticVectorField& X, const DifferentialForm& alpha) {
    if (alpha.degree < 1) throw DegreeMismatchError("interior product needs degree >= 1");
    DifferentialForm f;
    f.degree = alpha.degree - 1;
    f.eval = [X, alpha](const Vec3& p, std::span<const Vec3> a) {
        std::vector<Vec3> args;
        args.reserve(static_cast<size_t>(alpha.degree));
        args.push_back(X.eval(p));
        args.insert(args.end(), a.begin(), a.end());
        return alpha.eval(p, args);
    };
    return f;
}

DifferentialForm pullback_form(const ClosedFormDiffeo& phi, const DifferentialForm& alpha) {
    if (!phi.tangent) throw Error("pullback needs tangent data");
    DifferentialForm f;
    f.degree = alpha.degree;
    f.eval = [phi, alpha](const Vec3& p, std::span<const Vec3> a) {
        const Mat3 J = phi.tangent(p);
        std::vector<Vec3> args;
        args.reserve(a.size());
        for (const Vec3& v : a) args.push_back(J * v);
        return alpha.eval(phi.forward(p), args);
    };
    return f;
}

DifferentialForm sphere_area_form() {
    DifferentialForm f;
    f.degree = 2;
    f.eval = [](const Vec3& p, std::span<const Vec3> a) {
        return det3(p, a[0], a[1]) / (4.0 * kPi);
    };
    return f;
}

}  // namespace grassflow
