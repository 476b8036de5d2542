#pragma once

#include <cstdint>

#include "grassflow/geometry.hpp"

namespace grassflow {

// splitmix64: tiny deterministic generator, identical output on every
// platform (random sections must reproduce bit-for-bit given a seed).
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [-1, 1)
    double symmetric() {
        return 2.0 * (static_cast<double>(next() >> 11) * 0x1.0p-53) - 1.0;
    }

    Vec3 vec3() {
        double a = symmetric(), b = symmetric(), c = symmetric();
        return {a, b, c};
    }

private:
    uint64_t state_;
};

}  // namespace grassflow
