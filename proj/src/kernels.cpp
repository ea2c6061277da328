#include "anemiadx/kernels.hpp"

namespace anemiadx {

void tree_outputs_serial(const TreeGenome& genome, const SampleMatrix& inputs,
                         std::span<double> out) {
    for (std::size_t i = 0; i < inputs.rows; ++i) {
        out[i] = eval_tree(genome, inputs.row(i));
    }
}

void tree_outputs_parallel(const TreeGenome& genome, const SampleMatrix& inputs,
                           std::span<double> out) {
    decode_scheme(genome.scheme_id); // validate here; nothing may throw inside the loop
    const long n = static_cast<long>(inputs.rows);
    double* o = out.data();
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        o[i] = eval_tree(genome, inputs.row(static_cast<std::size_t>(i)));
    }
}

void tree_outputs(const TreeGenome& genome, const SampleMatrix& inputs,
                  std::span<double> out, ExecMode mode) {
    bool parallel = mode == ExecMode::Parallel ||
                    (mode == ExecMode::Auto && inputs.rows >= kParallelCutover);
    if (parallel) {
        tree_outputs_parallel(genome, inputs, out);
    } else {
        tree_outputs_serial(genome, inputs, out);
    }
}

MeanVar masked_mean_var(std::span<const double> outputs,
                        std::span<const unsigned char> mask, unsigned char group) {
    double sum = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        if (mask[i] == group) {
            sum += outputs[i];
            ++n;
        }
    }
    MeanVar mv;
    mv.mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        if (mask[i] == group) {
            double d = outputs[i] - mv.mean;
            ss += d * d;
        }
    }
    mv.variance = ss / static_cast<double>(n);
    return mv;
}

} // namespace anemiadx
