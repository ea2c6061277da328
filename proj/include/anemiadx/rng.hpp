#ifndef ANEMIADX_RNG_HPP
#define ANEMIADX_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace anemiadx {

// Seeded random source with a fixed value derivation so that identical seeds
// produce identical streams on every platform. std::mt19937_64 is specified
// bit-exactly by the standard; the distributions here avoid the
// implementation-defined std::uniform_real_distribution / normal_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform double in [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform double in [low, high).
    double uniform(double low, double high) {
        return low + (high - low) * uniform();
    }

    // Uniform integer in {0, ..., n-1}. Matches the floor(r*n) form used for
    // memory-row selection and categorical sampling.
    int uniform_index(int n) {
        return static_cast<int>(uniform() * static_cast<double>(n));
    }

    // Standard normal via Box-Muller; one draw consumes two uniforms.
    double gaussian() {
        double u1 = 1.0 - uniform(); // (0, 1], keeps the log finite
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    double gaussian(double mean, double stddev) {
        return mean + stddev * gaussian();
    }

private:
    static constexpr double kPi = 3.14159265358979323846;
    std::mt19937_64 engine_;
};

} // namespace anemiadx

#endif
