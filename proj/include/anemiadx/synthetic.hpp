#ifndef ANEMIADX_SYNTHETIC_HPP
#define ANEMIADX_SYNTHETIC_HPP

#include <array>
#include <cstdint>

#include "anemiadx/cbc.hpp"

namespace anemiadx {

struct IndexDistribution {
    double mean = 0.0;
    double stddev = 0.0;
};

// Per-index mean and sample standard deviation (n-1) over the five class III
// rows of the reference examples for one label.
using ClassDistributions = std::array<IndexDistribution, 6>;

const ClassDistributions& ida_distributions();
const ClassDistributions& btt_distributions();

// Deterministic stand-in for the unavailable clinical dataset: class
// conditional draws from independent per-index Gaussians, truncated to
// strictly positive values by redrawing. Emits n_ida IDA samples followed by
// n_btt beta-TT samples, all tagged class III. No covariance is modelled;
// with five reference rows per class there is not enough data to estimate
// one.
Cohort generate_synthetic_cohort(std::size_t n_ida, std::size_t n_btt,
                                 std::uint64_t seed);

} // namespace anemiadx

#endif
