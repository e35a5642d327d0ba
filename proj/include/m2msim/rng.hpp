// Seeded random streams with platform-stable draws.
//
// std::mt19937_64's raw output is specified by the standard, but the
// distribution adaptors are not; we map raw 64-bit words to doubles
// ourselves so that a given seed produces the same stream everywhere.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace m2msim {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives an independent stream seed from (base, point, run).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = base;
    std::uint64_t z = splitmix64(s) ^ (a * 0xd1342543de82ef95ULL);
    s ^= z;
    z = splitmix64(s) ^ (b * 0xaf251af3b0f025b5ULL);
    s ^= z;
    return splitmix64(s);
}

class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }

    // Uniform on (0, 1]; safe as a log() argument.
    double uniform01_open() { return 1.0 - uniform01(); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Box-Muller; two uniforms per draw, no cached state.
    double normal(double mean, double stddev) {
        const double u1 = uniform01_open();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Rayleigh amplitude with scale sigma.
    double rayleigh(double sigma) {
        return sigma * std::sqrt(-2.0 * std::log(uniform01_open()));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace m2msim
