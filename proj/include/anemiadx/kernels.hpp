#ifndef ANEMIADX_KERNELS_HPP
#define ANEMIADX_KERNELS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "anemiadx/poly_tree.hpp"

namespace anemiadx {

// Row-major n x 4 matrix of (scaled) model inputs, one row per sample in
// slot order RBC, Hb, HCT, MCV.
struct SampleMatrix {
    std::vector<double> values;
    std::size_t rows = 0;

    std::array<double, 4> row(std::size_t i) const {
        const double* p = values.data() + 4 * i;
        return {p[0], p[1], p[2], p[3]};
    }
};

// Execution policy for the per-sample kernels. Each sample's output is
// computed independently and reductions happen serially over the output
// buffer afterwards, so Serial and Parallel produce bit-identical results;
// the choice is purely a performance one. Auto switches to OpenMP above
// kParallelCutover rows.
enum class ExecMode { Serial, Parallel, Auto };

inline constexpr std::size_t kParallelCutover = 512;

// out[i] = eval_tree(genome, inputs.row(i)). Serial reference implementation.
void tree_outputs_serial(const TreeGenome& genome, const SampleMatrix& inputs,
                         std::span<double> out);

// OpenMP parallel-for over samples; identical outputs to the serial kernel.
void tree_outputs_parallel(const TreeGenome& genome, const SampleMatrix& inputs,
                           std::span<double> out);

void tree_outputs(const TreeGenome& genome, const SampleMatrix& inputs,
                  std::span<double> out, ExecMode mode);

// Mean and population variance (divide by n) of `outputs` over the rows
// selected by `mask`. Two-pass serial reduction.
struct MeanVar {
    double mean = 0.0;
    double variance = 0.0;
};

MeanVar masked_mean_var(std::span<const double> outputs,
                        std::span<const unsigned char> mask, unsigned char group);

} // namespace anemiadx

#endif
