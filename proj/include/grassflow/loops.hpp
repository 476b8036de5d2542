#pragma once

#include <vector>

#include "grassflow/ambient.hpp"

namespace grassflow {

// Per-vertex vectors orthogonal to the discrete tangent; a tangent vector
// to the Grassmannian at the loop.
struct NormalSection {
    std::vector<Vec3> values;

    size_t size() const { return values.size(); }
    const Vec3& operator[](size_t i) const { return values[i]; }
    Vec3& operator[](size_t i) { return values[i]; }
};

// Closed oriented polyline. Vertices are stored as unconstrained lifts; on
// the torus every edge is taken through the minimal image, and a continuous
// lift (edges below half the smallest period) is a hard validity condition.
class DiscreteLoop {
public:
    static constexpr double kMinEdge = 1e-12;

    DiscreteLoop(AmbientSpace space, std::vector<Vec3> vertices);

    int size() const { return static_cast<int>(vertices_.size()); }
    const AmbientSpace& space() const { return space_; }
    const std::vector<Vec3>& vertices() const { return vertices_; }
    const Vec3& vertex(int i) const { return vertices_[static_cast<size_t>(wrap(i))]; }

    // e_i = v_{i+1} - v_i (minimal image on the torus)
    const Vec3& edge(int i) const { return edges_[static_cast<size_t>(wrap(i))]; }
    double edge_length(int i) const { return edge_lengths_[static_cast<size_t>(wrap(i))]; }
    Vec3 edge_midpoint(int i) const {
        const int k = wrap(i);
        return vertices_[static_cast<size_t>(k)] + edges_[static_cast<size_t>(k)] * 0.5;
    }

    Vec3 center_of_mass() const;

    int wrap(int i) const {
        const int n = size();
        i %= n;
        return i < 0 ? i + n : i;
    }

private:
    AmbientSpace space_;
    std::vector<Vec3> vertices_;
    std::vector<Vec3> edges_;
    std::vector<double> edge_lengths_;
};

// normalize(v_{i+1} - v_{i-1}); degenerate-vertex error when the neighbors
// coincide.
Vec3 discrete_tangent(const DiscreteLoop& loop, int i);

// (|e_{i-1}| + |e_i|) / 2, the vertex quadrature weight
double dual_length(const DiscreteLoop& loop, int i);

// sum of edge lengths; the Hamiltonian of the filament flow
double total_length(const DiscreteLoop& loop);

// subtract the tangential component at each vertex; idempotent
NormalSection project_normal(const DiscreteLoop& loop, const std::vector<Vec3>& raw);
NormalSection project_normal(const DiscreteLoop& loop, const NormalSection& raw);

// zeta_X(N) = X|_N projected to the normal bundle
NormalSection fundamental_section(const AnalyticVectorField& X, const DiscreteLoop& loop);

// +90 degree rotation in the oriented normal plane: (J Y)_i = t_i x Y_i.
// Non-normal input is projected first; *projected reports whether that
// happened.
NormalSection rotate_J(const DiscreteLoop& loop, const NormalSection& Y, bool* projected = nullptr);

// vertices v_i + eps Y_i, revalidated
DiscreteLoop perturb(const DiscreteLoop& loop, const NormalSection& Y, double eps);

// per-vertex dual lengths, convenient for drift diagnostics
std::vector<double> dual_lengths(const DiscreteLoop& loop);

}  // namespace grassflow
