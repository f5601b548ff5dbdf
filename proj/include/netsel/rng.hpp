#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace netsel {

// Deterministic RNG: mt19937_64 with explicit transforms, so the same seed
// yields the same draws on every platform (the standard pins the engine's
// output but not the library distributions).
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    // Derive an independent per-run stream from a master seed (splitmix64).
    static Rng for_run(uint64_t master_seed, uint64_t run) {
        uint64_t z = master_seed + 0x9e3779b97f4a7c15ULL * (run + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }

    bool bernoulli(double p) { return uniform01() < p; }

    double normal(double mean, double stddev) {
        // Box-Muller; spare value intentionally unused to keep draw counts
        // predictable.
        double u1 = uniform01();
        double u2 = uniform01();
        if (u1 < 1e-300) u1 = 1e-300;
        double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
        return mean + stddev * z;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

} // namespace netsel
