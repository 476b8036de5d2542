#include "grassflow/sections.hpp"

#include <cmath>

namespace grassflow {

NormalSection white_section(const DiscreteLoop& loop, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Vec3> raw(static_cast<size_t>(loop.size()));
    for (auto& v : raw) v = rng.vec3();
    return project_normal(loop, raw);
}

NormalSection smooth_section(const DiscreteLoop& loop, uint64_t seed, int modes) {
    SplitMix64 rng(seed);
    const int n = loop.size();
    std::vector<Vec3> raw(static_cast<size_t>(n));
    for (int k = 1; k <= modes; ++k) {
        const Vec3 a = rng.vec3(), b = rng.vec3();
        for (int i = 0; i < n; ++i) {
            const double s = kTwoPi * k * i / n;
            raw[static_cast<size_t>(i)] += a * std::cos(s) + b * std::sin(s);
        }
    }
    double ms = 0.0;
    for (const Vec3& v : raw) ms += norm2(v);
    ms = std::sqrt(ms / n);
    if (ms > 0)
        for (Vec3& v : raw) v = v / ms;
    return project_normal(loop, raw);
}

}  // namespace grassflow
