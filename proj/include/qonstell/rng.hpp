#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace qonstell {

// Deterministic random source. All draws are derived from raw mt19937_64
// output with fixed arithmetic, so identical seeds give identical streams
// on every platform (std::uniform_real_distribution makes no such promise).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0, 1) with 53-bit resolution
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [0, n); n must be > 0
    std::uint64_t uniform_index(std::uint64_t n) {
        // rejection-free Lemire reduction
        const unsigned __int128 m = static_cast<unsigned __int128>(gen_()) * n;
        return static_cast<std::uint64_t>(m >> 64);
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Box-Muller; one fresh pair per call, cosine branch only
    double normal(double mean = 0.0, double sigma = 1.0) {
        const double u1 = 1.0 - uniform(); // (0, 1]
        const double u2 = uniform();
        const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
        return mean + sigma * z;
    }

private:
    std::mt19937_64 gen_;
};

// Stable seed derivation for independent sub-streams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace qonstell
