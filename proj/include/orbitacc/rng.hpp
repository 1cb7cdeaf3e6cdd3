#pragma once

#include <cstdint>
#include <random>

#include "orbitacc/point.hpp"

namespace orbitacc {

/// splitmix64 step; used to derive independent per-index streams so that
/// parallel sweeps stay deterministic regardless of scheduling.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic RNG wrapper. Doubles are produced by an explicit bit
/// mapping rather than std::uniform_real_distribution, so sequences are
/// reproducible bit-for-bit across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Stream for grid cell `index` under a base seed.
    static Rng indexed(std::uint64_t seed, std::uint64_t index) {
        return Rng(splitmix64(seed ^ splitmix64(index + 0x51ed270b7a14c8e3ULL)));
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Uniform over the open unit disc (rejection from the square).
    Complex unit_disc() {
        for (;;) {
            const double x = uniform(-1.0, 1.0);
            const double y = uniform(-1.0, 1.0);
            if (x * x + y * y < 1.0) return {x, y};
        }
    }

    /// Uniform over the open unit ball of C^2 (rejection from the 4-cube).
    CPoint2 ball_point() {
        for (;;) {
            const double a = uniform(-1.0, 1.0);
            const double b = uniform(-1.0, 1.0);
            const double c = uniform(-1.0, 1.0);
            const double d = uniform(-1.0, 1.0);
            if (a * a + b * b + c * c + d * d < 1.0)
                return {Complex{a, b}, Complex{c, d}};
        }
    }

    CPoint2 bidisc_point() { return {unit_disc(), unit_disc()}; }

    std::uint64_t raw() { return eng_(); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace orbitacc
