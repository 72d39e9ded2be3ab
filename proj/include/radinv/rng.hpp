#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace radinv {

// Deterministic draws: the engine is std::mt19937_64, but every mapping from
// raw bits to values is pinned here so output never depends on the standard
// library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // standard normal via Box-Muller
    double normal() {
        const double u1 = static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;  // (0,1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    int sign() { return (eng_() & 1u) ? 1 : -1; }

private:
    std::mt19937_64 eng_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Per-mode sign that depends only on (seed, k, l), not on grid size or draw
// order, so coarse and fine grids share the same low-mode sign pattern.
inline int mode_sign(std::uint64_t seed, int k, int l) {
    const std::uint64_t x = splitmix64(seed ^ (0x100000001B3ull * static_cast<std::uint64_t>(k)) ^
                                       (0xC6A4A7935BD1E995ull * static_cast<std::uint64_t>(l)));
    return (x & 1u) ? 1 : -1;
}

}  // namespace radinv
