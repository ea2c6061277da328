#ifndef ANEMIADX_DISCRIMINATOR_HPP
#define ANEMIADX_DISCRIMINATOR_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "anemiadx/cbc.hpp"
#include "anemiadx/ga.hpp"
#include "anemiadx/harmony.hpp"
#include "anemiadx/kernels.hpp"
#include "anemiadx/poly_tree.hpp"

namespace anemiadx {

inline constexpr std::array<IndexId, 4> kDefaultSelectedIndices = {
    IndexId::Rbc, IndexId::Hb, IndexId::Hct, IndexId::Mcv};

// Per-index training min/max used to map raw inputs to [0,1]. Prediction
// scales linearly with the stored statistics and does not clamp, so inputs
// outside the training range land outside [0,1].
struct ScalingStats {
    std::array<double, 4> min{};
    std::array<double, 4> max{};

    double scale(std::size_t slot, double value) const {
        return (value - min[slot]) / (max[slot] - min[slot]);
    }

    bool operator==(const ScalingStats&) const = default;
};

// Throws NumericError when an index is constant over the cohort.
ScalingStats compute_scaling(const Cohort& cohort,
                             const std::array<IndexId, 4>& selected);

// Scaled inputs plus the class partition, built once per training run so the
// optimizer's cost function only evaluates trees.
struct TrainingView {
    SampleMatrix inputs;
    std::vector<unsigned char> is_ida; // 1 for IDA rows, 0 for beta-TT
    std::size_t n_ida = 0;
    std::size_t n_btt = 0;
};

// Requires every sample labelled IDA or BTT with at least one of each.
TrainingView build_training_view(const Cohort& cohort, const ScalingStats& scaling,
                                 const std::array<IndexId, 4>& selected);

// Mean and population variance of the tree output per class.
struct ClassStats {
    double ida_mean = 0.0;
    double btt_mean = 0.0;
    double ida_var = 0.0;
    double btt_var = 0.0;
};

ClassStats class_stats(std::span<const double> outputs,
                       const std::vector<unsigned char>& is_ida);

// |mean gap| / (1 + product of class variances); 0 when anything in the
// outputs is non-finite (the poisoning rule).
double fitness_value(const ClassStats& stats);

double tree_fitness(const TreeGenome& genome, const TrainingView& view,
                    ExecMode mode);

// Convenience form matching the operation contract: scales the cohort and
// evaluates in one go.
double tree_fitness(const TreeGenome& genome, const Cohort& train,
                    const ScalingStats& scaling,
                    const std::array<IndexId, 4>& selected,
                    ExecMode mode = ExecMode::Auto);

struct Calibration {
    double threshold = 0.0;
    bool ida_above = false;
};

// Midpoint threshold between the class means, oriented toward the IDA side.
// Throws NumericError when the means coincide (constant discriminator).
Calibration calibrate(const TreeGenome& genome, const TrainingView& view,
                      ExecMode mode);

enum class OptimizerKind { Hs, Dhs, Ga };

struct TrainSettings {
    OptimizerKind optimizer = OptimizerKind::Dhs;
    HsParams hs;       // bw may be left empty to get bw_default on every
                       // coefficient dimension
    GaParams ga;
    double coefficient_low = -10.0;
    double coefficient_high = 10.0;
    double bw_default = 0.5;
    std::array<IndexId, 4> selected = kDefaultSelectedIndices;
    ExecMode exec = ExecMode::Auto;
};

Bounds genome_bounds(const TrainSettings& settings);

struct TrainedModel {
    TreeGenome genome;
    ScalingStats scaling;
    double threshold = 0.0;
    bool ida_above = false;
    std::array<IndexId, 4> selected = kDefaultSelectedIndices;
    // provenance
    std::uint64_t seed = 0;
    long improvisations = 0;
    int hms = 0;
    bool dynamic = false;
    double final_fitness = 0.0;

    bool operator==(const TrainedModel&) const = default;
};

struct TrainResult {
    TrainedModel model;
    Trace trace;
};

// Scales the cohort, maximizes the class-statistics fitness with the chosen
// optimizer, calibrates the decision threshold, and packages provenance.
// Deterministic per seed.
TrainResult train_model(const Cohort& train, const TrainSettings& settings);

// Scale, evaluate, threshold. Ties at the threshold predict IDA. Throws
// NumericError on a non-finite tree output.
Label predict(const TrainedModel& model, const CbcSample& sample);

std::vector<Label> predict_batch(const TrainedModel& model, const Cohort& cohort,
                                 ExecMode mode = ExecMode::Auto);

} // namespace anemiadx

#endif
