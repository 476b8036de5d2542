#include "grassflow/tilde.hpp"

#include <array>
#include <cmath>

#include "grassflow/sections.hpp"

namespace grassflow {

namespace {

void check_degree(const DifferentialForm& f, int want, const char* who) {
    if (f.degree != want) throw DegreeMismatchError(std::string(who) + ": wrong form degree");
}

void check_sizes(const DiscreteLoop& loop, const NormalSection& Y) {
    if (static_cast<int>(Y.size()) != loop.size())
        throw Error("section length does not match the loop");
}

}  // namespace

double tilde_function(const DifferentialForm& beta, const DiscreteLoop& loop) {
    check_degree(beta, 1, "tilde_function");
    double s = 0.0;
    for (int i = 0; i < loop.size(); ++i) {
        const std::array<Vec3, 1> args{loop.edge(i)};
        s += beta.eval(loop.edge_midpoint(i), args);
    }
    return s;
}

double tilde_oneform(const DifferentialForm& beta, const DiscreteLoop& loop,
                     const NormalSection& Y) {
    check_degree(beta, 2, "tilde_oneform");
    check_sizes(loop, Y);
    double s = 0.0;
    for (int i = 0; i < loop.size(); ++i) {
        const std::array<Vec3, 2> args{Y[static_cast<size_t>(i)], discrete_tangent(loop, i)};
        s += beta.eval(loop.vertex(i), args) * dual_length(loop, i);
    }
    return s;
}

double tilde_twoform(const DifferentialForm& alpha, const DiscreteLoop& loop,
                     const NormalSection& Y1, const NormalSection& Y2) {
    check_degree(alpha, 3, "tilde_twoform");
    check_sizes(loop, Y1);
    check_sizes(loop, Y2);
    double s = 0.0;
    for (int i = 0; i < loop.size(); ++i) {
        const std::array<Vec3, 3> args{Y1[static_cast<size_t>(i)], Y2[static_cast<size_t>(i)],
                                       discrete_tangent(loop, i)};
        s += alpha.eval(loop.vertex(i), args) * dual_length(loop, i);
    }
    return s;
}

double mw_symplectic(const DiscreteLoop& loop, const NormalSection& Y1, const NormalSection& Y2) {
    check_sizes(loop, Y1);
    check_sizes(loop, Y2);
    double s = 0.0;
    for (int i = 0; i < loop.size(); ++i)
        s += det3(Y1[static_cast<size_t>(i)], Y2[static_cast<size_t>(i)],
                  discrete_tangent(loop, i)) *
             dual_length(loop, i);
    return s;
}

double tilde_metric(const DiscreteLoop& loop, const NormalSection& Y1, const NormalSection& Y2) {
    check_sizes(loop, Y1);
    check_sizes(loop, Y2);
    double s = 0.0;
    for (int i = 0; i < loop.size(); ++i)
        s += dot(Y1[static_cast<size_t>(i)], Y2[static_cast<size_t>(i)]) * dual_length(loop, i);
    return s;
}

double compatibility_residual(const DiscreteLoop& loop, int trials, uint64_t seed) {
    double worst = 0.0;
    for (int k = 0; k < trials; ++k) {
        const NormalSection Y1 = white_section(loop, seed + 2 * static_cast<uint64_t>(k));
        const NormalSection Y2 = white_section(loop, seed + 2 * static_cast<uint64_t>(k) + 1);
        const NormalSection JY1 = rotate_J(loop, Y1);
        const double omega = mw_symplectic(loop, Y1, Y2);
        const double metric = tilde_metric(loop, JY1, Y2);
        const double scale = std::max(1.0, std::max(std::abs(omega), std::abs(metric)));
        worst = std::max(worst, std::abs(omega - metric) / scale);
    }
    return worst;
}

double pullback_check(const ClosedFormDiffeo& phi, const DifferentialForm& alpha,
                      const DiscreteLoop& loop, int trials, uint64_t seed) {
    check_degree(alpha, 3, "pullback_check");
    std::vector<Vec3> image(static_cast<size_t>(loop.size()));
    for (int i = 0; i < loop.size(); ++i)
        image[static_cast<size_t>(i)] = phi.forward(loop.vertex(i));
    const DiscreteLoop mapped(loop.space(), image);
    const DifferentialForm pulled = pullback_form(phi, alpha);

    double worst = 0.0;
    for (int k = 0; k < trials; ++k) {
        const NormalSection Y1 = smooth_section(loop, seed + 2 * static_cast<uint64_t>(k));
        const NormalSection Y2 = smooth_section(loop, seed + 2 * static_cast<uint64_t>(k) + 1);

        // transport the sections by the tangent map, then re-project
        std::vector<Vec3> w1(Y1.size()), w2(Y2.size());
        for (int i = 0; i < loop.size(); ++i) {
            const Mat3 J = phi.tangent(loop.vertex(i));
            w1[static_cast<size_t>(i)] = J * Y1[static_cast<size_t>(i)];
            w2[static_cast<size_t>(i)] = J * Y2[static_cast<size_t>(i)];
        }
        const double lhs = tilde_twoform(alpha, mapped, project_normal(mapped, w1),
                                         project_normal(mapped, w2));
        const double rhs = tilde_twoform(pulled, loop, Y1, Y2);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double contraction_check(const AnalyticVectorField& X, const DifferentialForm& alpha,
                         const DiscreteLoop& loop, int trials, uint64_t seed) {
    check_degree(alpha, 3, "contraction_check");
    const NormalSection zeta = fundamental_section(X, loop);
    const DifferentialForm ixa = interior_product(X, alpha);
    double worst = 0.0;
    for (int k = 0; k < trials; ++k) {
        const NormalSection Y = white_section(loop, seed + static_cast<uint64_t>(k));
        const double lhs = tilde_twoform(alpha, loop, zeta, Y);
        const double rhs = tilde_oneform(ixa, loop, Y);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

}  // namespace grassflow
