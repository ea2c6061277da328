#ifndef ANEMIADX_GA_HPP
#define ANEMIADX_GA_HPP

#include <cstdint>

#include "anemiadx/harmony.hpp"

namespace anemiadx {

// Plain generational GA over the same genome layout, standing in for the
// genetic-programming comparison method: tournament selection of size 2,
// single-point crossover, per-gene Gaussian mutation with sigma = 0.1 x
// dimension range (categorical genes redraw uniformly), elitism of 1.
struct GaParams {
    int population = 100;
    long generations = 2000;
    double crossover_rate = 0.9;
    double mutation_rate = 0.05;
    std::uint64_t seed = 0;

    void validate(const Bounds& bounds) const;
};

// Trace rows carry one entry per generation; the hmcr/par columns are 0.
HsResult run_ga_baseline(const Bounds& bounds, const GaParams& params,
                         const CostFn& cost);

} // namespace anemiadx

#endif
