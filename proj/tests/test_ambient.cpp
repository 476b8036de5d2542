#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "grassflow/ambient.hpp"
#include "grassflow/generators.hpp"
#include "grassflow/random.hpp"

using namespace grassflow;

namespace {

const Vec3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};

AnalyticVectorField constant_field(const Vec3& c) {
    AnalyticVectorField X;
    X.eval = [c](const Vec3&) { return c; };
    X.jacobian = [](const Vec3&) { return Mat3::zero(); };
    X.hessian = [](const Vec3&) { return std::array<Mat3, 3>{}; };
    return X;
}

// X = x e2
AnalyticVectorField linear_x_e2() {
    AnalyticVectorField X;
    X.eval = [](const Vec3& p) { return Vec3{0.0, p.x, 0.0}; };
    X.jacobian = [](const Vec3&) {
        Mat3 J = Mat3::zero();
        J(1, 0) = 1.0;
        return J;
    };
    X.hessian = [](const Vec3&) { return std::array<Mat3, 3>{}; };
    return X;
}

// rigid rotation about the z-axis with period 1
AnalyticVectorField rotation_field() {
    AnalyticVectorField X;
    X.eval = [](const Vec3& p) { return cross(Vec3{0, 0, kTwoPi}, p); };
    X.jacobian = [](const Vec3&) {
        Mat3 J = Mat3::zero();
        J(0, 1) = -kTwoPi;
        J(1, 0) = kTwoPi;
        return J;
    };
    X.hessian = [](const Vec3&) { return std::array<Mat3, 3>{}; };
    return X;
}

Vec3 random_point(SplitMix64& rng) { return rng.vec3(); }

}  // namespace

TEST_CASE("volume form on the unit torus") {
    const AmbientSpace torus = AmbientSpace::torus();
    CHECK(volume_form(torus, e1, e2, e3) == 1.0);
    CHECK(volume_form(torus, e1, e1, e3) == 0.0);
    CHECK(volume_form(torus, e2, e1, e3) == -1.0);
    CHECK_THROWS_AS(volume_form(AmbientSpace::sphere(), e1, e2, e3), DegreeMismatchError);
}

TEST_CASE("volume form antisymmetry at random samples") {
    SplitMix64 rng(11);
    const AmbientSpace space = AmbientSpace::euclidean();
    for (int k = 0; k < 1000; ++k) {
        const Vec3 a = rng.vec3(), b = rng.vec3(), c = rng.vec3();
        // swapping the cross-product pair negates bit-exactly; the other
        // transpositions regroup the monomials and agree to round-off
        const double v = volume_form(space, a, b, c);
        CHECK(v == -volume_form(space, b, a, c));
        CHECK(std::abs(v + volume_form(space, a, c, b)) < 1e-15);
        CHECK(std::abs(v + volume_form(space, c, b, a)) < 1e-15);
    }
}

TEST_CASE("torus reduction and minimal image") {
    const AmbientSpace torus = AmbientSpace::torus({1, 2, 3});
    const Vec3 r = torus.reduce({1.25, -0.5, 7.0});
    CHECK(r.x == doctest::Approx(0.25));
    CHECK(r.y == doctest::Approx(1.5));
    CHECK(r.z == doctest::Approx(1.0));
    const Vec3 d = torus.min_image({0.9, 1.9, -2.9});
    CHECK(d.x == doctest::Approx(-0.1));
    CHECK(d.y == doctest::Approx(-0.1));
    CHECK(d.z == doctest::Approx(0.1));
}

TEST_CASE("lie bracket of constant fields vanishes") {
    const AnalyticVectorField Z = lie_bracket(constant_field(e1), constant_field(e2));
    SplitMix64 rng(3);
    for (int k = 0; k < 20; ++k) CHECK(norm(Z.eval(random_point(rng))) == 0.0);
}

TEST_CASE("lie bracket [e1, x e2] = e2") {
    const AnalyticVectorField Z = lie_bracket(constant_field(e1), linear_x_e2());
    SplitMix64 rng(4);
    for (int k = 0; k < 20; ++k) {
        const Vec3 v = Z.eval(random_point(rng));
        CHECK(norm(v - e2) < 1e-15);
    }
}

TEST_CASE("lie bracket antisymmetry at random points") {
    const AnalyticVectorField& X = field_by_name("ex_mcosz");
    const AnalyticVectorField& Y = field_by_name("ey_cosxz");
    const AnalyticVectorField XY = lie_bracket(X, Y);
    const AnalyticVectorField YX = lie_bracket(Y, X);
    SplitMix64 rng(5);
    for (int k = 0; k < 100; ++k) {
        const Vec3 p = random_point(rng);
        CHECK(norm(XY.eval(p) + YX.eval(p)) < 1e-12);
    }
}

TEST_CASE("jacobi identity with analytic derivatives") {
    const AnalyticVectorField& X = field_by_name("ex_mcosz");
    const AnalyticVectorField& Y = field_by_name("ey_cosxz");
    const AnalyticVectorField& Z = field_by_name("ez_cosx");
    const AnalyticVectorField j1 = lie_bracket(X, lie_bracket(Y, Z));
    const AnalyticVectorField j2 = lie_bracket(Y, lie_bracket(Z, X));
    const AnalyticVectorField j3 = lie_bracket(Z, lie_bracket(X, Y));
    SplitMix64 rng(6);
    for (int k = 0; k < 50; ++k) {
        const Vec3 p = random_point(rng);
        CHECK(norm(j1.eval(p) + j2.eval(p) + j3.eval(p)) < 1e-8);
    }
}

TEST_CASE("catalog fields: jacobians, divergence and potentials are consistent") {
    SplitMix64 rng(7);
    for (const NamedField& nf : field_catalog()) {
        const AnalyticVectorField& X = nf.field;
        REQUIRE(X.potential.has_value());
        for (int k = 0; k < 50; ++k) {
            const Vec3 p = random_point(rng);
            // analytic jacobian against central differences
            Mat3 fd;
            const double h = 1e-6;
            for (int j = 0; j < 3; ++j) {
                Vec3 dp{};
                dp[j] = h;
                const Vec3 d = (X.eval(p + dp) - X.eval(p - dp)) / (2 * h);
                for (int i = 0; i < 3; ++i) fd(i, j) = d[i];
            }
            CHECK(max_abs(X.jacobian(p) - fd) < 1e-6);
            CHECK(std::abs(divergence(X, p)) < 1e-10);
            CHECK(norm(potential_curl(*X.potential, p) - X.eval(p)) < 1e-10);
        }
    }
}

TEST_CASE("bracket of potential-carrying fields carries a consistent potential") {
    const AnalyticVectorField Z =
        lie_bracket(field_by_name("ex_mcosz"), field_by_name("ey_cosxz"));
    REQUIRE(Z.potential.has_value());
    SplitMix64 rng(8);
    for (int k = 0; k < 50; ++k) {
        const Vec3 p = random_point(rng);
        CHECK(norm(potential_curl(*Z.potential, p) - Z.eval(p)) < 1e-9);
        CHECK(std::abs(divergence(Z, p)) < 1e-9);
    }
}

TEST_CASE("flow of a constant field is a straight line") {
    const Vec3 p{0.3, -0.2, 0.7};
    const Vec3 q = flow_point(constant_field(e3), 0.25, p, 16);
    CHECK(norm(q - (p + e3 * 0.25)) < 1e-14);
}

TEST_CASE("flow of the rotation field closes after one period") {
    const Vec3 p{0.8, 0.1, 0.4};
    const Vec3 q = flow_point(rotation_field(), 1.0, p, 512);
    CHECK(norm(q - p) < 1e-8);
}

TEST_CASE("RK4 is exact on linear-in-time solutions, independent of step count") {
    const Vec3 p{0.1, 0.2, 0.3};
    const Vec3 a = flow_point(constant_field(e1), 0.7, p, 5);
    const Vec3 b = flow_point(constant_field(e1), 0.7, p, 10);
    CHECK(norm(a - b) < 1e-15);
    CHECK_THROWS_AS(flow_point(constant_field(e1), 1.0, p, 0), Error);
}

TEST_CASE("flow aborts on a non-finite state") {
    AnalyticVectorField blowup;
    blowup.eval = [](const Vec3& p) { return Vec3{p.x * p.x, 0, 0}; };
    CHECK_THROWS_AS(flow_point(blowup, 1.0, {1e3, 0, 0}, 8), Error);
}

TEST_CASE("pushforward by the identity and by translations") {
    ClosedFormDiffeo id;
    id.forward = [](const Vec3& p) { return p; };
    id.inverse = [](const Vec3& p) { return p; };
    id.tangent = [](const Vec3&) { return Mat3::identity(); };
    id.volume_preserving = true;

    const AnalyticVectorField& X = field_by_name("ez_cosx");
    const AnalyticVectorField Xid = pushforward_field(id, X);
    const AnalyticVectorField Xtr = pushforward_field(make_translation({0.2, 0.1, -0.3}),
                                                      constant_field(e2));
    SplitMix64 rng(9);
    for (int k = 0; k < 30; ++k) {
        const Vec3 p = random_point(rng);
        CHECK(norm(Xid.eval(p) - X.eval(p)) < 1e-14);
        CHECK(norm(Xtr.eval(p) - e2) < 1e-14);
    }
}

TEST_CASE("pushforward of e1 under a shear picks up the shear slope") {
    const double amp = 0.25;
    const ClosedFormDiffeo shear = make_shear_y(amp);
    const AnalyticVectorField Y = pushforward_field(shear, constant_field(e1));
    SplitMix64 rng(10);
    for (int k = 0; k < 30; ++k) {
        const Vec3 p = random_point(rng);
        const Vec3 expect = e1 + e2 * (amp * kTwoPi * std::cos(kTwoPi * p.x));
        CHECK(norm(Y.eval(p) - expect) < 1e-12);
    }
}

TEST_CASE("pushforward rejects diffeos without inverse or tangent data") {
    ClosedFormDiffeo forward_only;
    forward_only.forward = [](const Vec3& p) { return p; };
    CHECK_THROWS_AS(pushforward_field(forward_only, constant_field(e1)), Error);
}

TEST_CASE("pushforward respects composition") {
    const ClosedFormDiffeo phi = make_shear_y(0.2);
    const ClosedFormDiffeo psi = make_shear_z(0.15);
    const AnalyticVectorField& X = field_by_name("ex_cosy");
    const AnalyticVectorField lhs = pushforward_field(compose(phi, psi), X);
    const AnalyticVectorField rhs = pushforward_field(phi, pushforward_field(psi, X));
    SplitMix64 rng(12);
    for (int k = 0; k < 30; ++k) {
        const Vec3 p = random_point(rng);
        CHECK(norm(lhs.eval(p) - rhs.eval(p)) < 1e-8);
    }
}

TEST_CASE("catalog diffeos are volume preserving with exact inverses") {
    SplitMix64 rng(13);
    for (const NamedDiffeo& nd : diffeo_catalog()) {
        for (int k = 0; k < 250; ++k) {
            const Vec3 p = random_point(rng);
            CHECK(norm(nd.diffeo.inverse(nd.diffeo.forward(p)) - p) < 1e-10);
            if (nd.diffeo.volume_preserving)
                CHECK(std::abs(nd.diffeo.tangent(p).det() - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("pullback field inverts pushforward and transports the potential") {
    const ClosedFormDiffeo phi = make_shear_y(0.3);
    const AnalyticVectorField& X = field_by_name("ez_cosx");
    const AnalyticVectorField back = pullback_field(phi, pushforward_field(phi, X));
    SplitMix64 rng(14);
    for (int k = 0; k < 30; ++k) {
        const Vec3 p = random_point(rng);
        CHECK(norm(back.eval(p) - X.eval(p)) < 1e-10);
    }
    const AnalyticVectorField pulled = pullback_field(phi, X);
    REQUIRE(pulled.potential.has_value());
    // the transported dual evaluates the pulled-back one-form
    for (int k = 0; k < 30; ++k) {
        const Vec3 p = random_point(rng);
        const Vec3 v = rng.vec3();
        const double direct = dot(X.potential->dual(phi.forward(p)), phi.tangent(p) * v);
        CHECK(std::abs(dot(pulled.potential->dual(p), v) - direct) < 1e-12);
    }
}
