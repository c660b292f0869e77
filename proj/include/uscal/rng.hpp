#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace uscal {

/// Deterministic 64-bit generator (splitmix64). Every random quantity in the
/// toolkit flows from an explicit seed through this type, so identical seeds
/// reproduce identical outputs on a given build.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53 bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    /// Index in [0, n).
    std::uint64_t next_index(std::uint64_t n) {
        return next_u64() % n;
    }

    /// Standard normal via Box-Muller (cosine branch; two uniforms per draw).
    double next_gaussian() {
        const double u1 = 1.0 - next_double(); // (0, 1]
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t state_;
};

/// Derives an independent stream seed from a base seed and an index, so
/// per-trial streams do not depend on execution order.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
    Rng r(base ^ (0x632be59bd9b4e019ULL + index * 0x9e3779b97f4a7c15ULL));
    return r.next_u64();
}

} // namespace uscal
