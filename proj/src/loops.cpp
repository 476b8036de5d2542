#include "grassflow/loops.hpp"

#include <cmath>
#include <utility>

namespace grassflow {

DiscreteLoop::DiscreteLoop(AmbientSpace space, std::vector<Vec3> vertices)
    : space_(space), vertices_(std::move(vertices)) {
    if (!space_.three_dimensional()) throw Error("loops live in a 3-dimensional ambient space");
    const int n = static_cast<int>(vertices_.size());
    if (n < 3) throw Error("a loop needs at least 3 vertices");

    const bool torus = space_.kind == AmbientKind::FlatTorus3;
    const double half_min = torus ? 0.5 * space_.min_period() : 0.0;

    edges_.resize(static_cast<size_t>(n));
    edge_lengths_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Vec3& a = vertices_[static_cast<size_t>(i)];
        const Vec3& b = vertices_[static_cast<size_t>((i + 1) % n)];
        if (!finite(a)) throw Error("non-finite vertex");
        Vec3 e = b - a;
        if (torus) {
            // interior edges must already be continuous lifts; only the
            // closing edge may pass through the period
            if (i + 1 < n) {
                for (int c = 0; c < 3; ++c)
                    if (std::abs(e[c]) > 0.5 * space_.periods[c])
                        throw EdgeBoundError("discontinuous lift: edge beyond half period");
            } else {
                e = space_.min_image(e);
            }
        }
        const double len = norm(e);
        if (len <= kMinEdge) throw DegenerateVertexError("edge shorter than the validity limit");
        if (torus && len >= half_min)
            throw EdgeBoundError("edge not shorter than half the smallest period");
        edges_[static_cast<size_t>(i)] = e;
        edge_lengths_[static_cast<size_t>(i)] = len;
    }
}

Vec3 DiscreteLoop::center_of_mass() const {
    Vec3 c{};
    for (const Vec3& v : vertices_) c += v;
    return c / static_cast<double>(size());
}

Vec3 discrete_tangent(const DiscreteLoop& loop, int i) {
    const Vec3 chord = loop.edge(i - 1) + loop.edge(i);  // v_{i+1} - v_{i-1} through the lift
    const double len = norm(chord);
    if (len <= DiscreteLoop::kMinEdge)
        throw DegenerateVertexError("degenerate vertex: v_{i+1} = v_{i-1}");
    return chord / len;
}

double dual_length(const DiscreteLoop& loop, int i) {
    return 0.5 * (loop.edge_length(i - 1) + loop.edge_length(i));
}

double total_length(const DiscreteLoop& loop) {
    double s = 0.0;
    for (int i = 0; i < loop.size(); ++i) s += loop.edge_length(i);
    return s;
}

NormalSection project_normal(const DiscreteLoop& loop, const std::vector<Vec3>& raw) {
    if (static_cast<int>(raw.size()) != loop.size())
        throw Error("section length does not match the loop");
    NormalSection out;
    out.values.resize(raw.size());
    for (int i = 0; i < loop.size(); ++i) {
        const Vec3 t = discrete_tangent(loop, i);
        const Vec3& y = raw[static_cast<size_t>(i)];
        out.values[static_cast<size_t>(i)] = y - t * dot(y, t);
    }
    return out;
}

NormalSection project_normal(const DiscreteLoop& loop, const NormalSection& raw) {
    return project_normal(loop, raw.values);
}

NormalSection fundamental_section(const AnalyticVectorField& X, const DiscreteLoop& loop) {
    std::vector<Vec3> raw(static_cast<size_t>(loop.size()));
    for (int i = 0; i < loop.size(); ++i) raw[static_cast<size_t>(i)] = X.eval(loop.vertex(i));
    return project_normal(loop, raw);
}

NormalSection rotate_J(const DiscreteLoop& loop, const NormalSection& Y, bool* projected) {
    if (static_cast<int>(Y.size()) != loop.size())
        throw Error("section length does not match the loop");
    if (projected) *projected = false;
    NormalSection out;
    out.values.resize(Y.size());
    for (int i = 0; i < loop.size(); ++i) {
        const Vec3 t = discrete_tangent(loop, i);
        Vec3 y = Y[static_cast<size_t>(i)];
        const double tail = dot(y, t);
        if (std::abs(tail) > 1e-10 * (1.0 + norm(y))) {
            y -= t * tail;
            if (projected) *projected = true;
        }
        out.values[static_cast<size_t>(i)] = cross(t, y);
    }
    return out;
}

DiscreteLoop perturb(const DiscreteLoop& loop, const NormalSection& Y, double eps) {
    if (static_cast<int>(Y.size()) != loop.size())
        throw Error("section length does not match the loop");
    std::vector<Vec3> v = loop.vertices();
    for (size_t i = 0; i < v.size(); ++i) v[i] += Y[i] * eps;
    return DiscreteLoop(loop.space(), std::move(v));
}

std::vector<double> dual_lengths(const DiscreteLoop& loop) {
    std::vector<double> d(static_cast<size_t>(loop.size()));
    for (int i = 0; i < loop.size(); ++i) d[static_cast<size_t>(i)] = dual_length(loop, i);
    return d;
}

}  // namespace grassflow
