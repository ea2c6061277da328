#include "anemiadx/discriminator.hpp"

#include <cmath>
#include <stdexcept>

#include "anemiadx/errors.hpp"

namespace anemiadx {

ScalingStats compute_scaling(const Cohort& cohort,
                             const std::array<IndexId, 4>& selected) {
    if (cohort.empty()) {
        throw DataError("empty cohort");
    }
    ScalingStats s;
    for (std::size_t slot = 0; slot < 4; ++slot) {
        double lo = cohort.samples.front().value(selected[slot]);
        double hi = lo;
        for (const CbcSample& sample : cohort.samples) {
            double v = sample.value(selected[slot]);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (!(lo < hi)) {
            throw NumericError("degenerate scaling: index " +
                               std::string(index_name(selected[slot])) +
                               " is constant over the training cohort");
        }
        s.min[slot] = lo;
        s.max[slot] = hi;
    }
    return s;
}

TrainingView build_training_view(const Cohort& cohort, const ScalingStats& scaling,
                                 const std::array<IndexId, 4>& selected) {
    TrainingView view;
    view.inputs.rows = cohort.size();
    view.inputs.values.reserve(cohort.size() * 4);
    view.is_ida.reserve(cohort.size());
    for (const CbcSample& s : cohort.samples) {
        if (!s.label) {
            throw DataError("unlabelled sample in training cohort");
        }
        if (*s.label == Label::Normal) {
            throw DataError("NORMAL sample in training cohort: exclude class I "
                            "samples before training");
        }
        bool ida = *s.label == Label::Ida;
        view.is_ida.push_back(ida ? 1 : 0);
        if (ida) {
            ++view.n_ida;
        } else {
            ++view.n_btt;
        }
        for (std::size_t slot = 0; slot < 4; ++slot) {
            view.inputs.values.push_back(scaling.scale(slot, s.value(selected[slot])));
        }
    }
    if (view.n_ida == 0 || view.n_btt == 0) {
        throw DataError("training cohort must contain both IDA and BTT samples");
    }
    return view;
}

ClassStats class_stats(std::span<const double> outputs,
                       const std::vector<unsigned char>& is_ida) {
    MeanVar ida = masked_mean_var(outputs, is_ida, 1);
    MeanVar btt = masked_mean_var(outputs, is_ida, 0);
    return ClassStats{ida.mean, btt.mean, ida.variance, btt.variance};
}

double fitness_value(const ClassStats& stats) {
    double f = std::abs(stats.ida_mean - stats.btt_mean) /
               (1.0 + stats.ida_var * stats.btt_var);
    return std::isfinite(f) ? f : 0.0;
}

double tree_fitness(const TreeGenome& genome, const TrainingView& view,
                    ExecMode mode) {
    std::vector<double> outputs(view.inputs.rows);
    tree_outputs(genome, view.inputs, outputs, mode);
    for (double v : outputs) {
        if (!std::isfinite(v)) return 0.0;
    }
    return fitness_value(class_stats(outputs, view.is_ida));
}

double tree_fitness(const TreeGenome& genome, const Cohort& train,
                    const ScalingStats& scaling,
                    const std::array<IndexId, 4>& selected, ExecMode mode) {
    TrainingView view = build_training_view(train, scaling, selected);
    return tree_fitness(genome, view, mode);
}

Calibration calibrate(const TreeGenome& genome, const TrainingView& view,
                      ExecMode mode) {
    std::vector<double> outputs(view.inputs.rows);
    tree_outputs(genome, view.inputs, outputs, mode);
    for (double v : outputs) {
        if (!std::isfinite(v)) {
            throw NumericError("degenerate evaluation while calibrating");
        }
    }
    ClassStats stats = class_stats(outputs, view.is_ida);
    if (stats.ida_mean == stats.btt_mean) {
        throw NumericError("degenerate model: class means coincide, no threshold exists");
    }
    Calibration c;
    c.threshold = (stats.ida_mean + stats.btt_mean) / 2.0;
    c.ida_above = stats.ida_mean > stats.btt_mean;
    return c;
}

Bounds genome_bounds(const TrainSettings& settings) {
    if (!(settings.coefficient_low < settings.coefficient_high)) {
        throw std::invalid_argument("coefficient bounds must be ordered");
    }
    Bounds bounds;
    bounds.reserve(kCoefficientCount + 1);
    for (int j = 0; j < kCoefficientCount; ++j) {
        bounds.push_back(Dim::continuous(settings.coefficient_low,
                                         settings.coefficient_high));
    }
    bounds.push_back(Dim::categorical(kSchemeCount));
    return bounds;
}

TrainResult train_model(const Cohort& train, const TrainSettings& settings) {
    ScalingStats scaling = compute_scaling(train, settings.selected);
    TrainingView view = build_training_view(train, scaling, settings.selected);
    Bounds bounds = genome_bounds(settings);

    ExecMode mode = settings.exec;
    CostFn cost = [&view, mode](const Genome& genome) {
        return tree_fitness(genome_from_vector(genome), view, mode);
    };

    HsResult result;
    TrainedModel model;
    if (settings.optimizer == OptimizerKind::Ga) {
        result = run_ga_baseline(bounds, settings.ga, cost);
        model.seed = settings.ga.seed;
        model.improvisations = settings.ga.generations;
        model.hms = settings.ga.population;
        model.dynamic = false;
    } else {
        HsParams hs = settings.hs;
        hs.dynamic = settings.optimizer == OptimizerKind::Dhs;
        if (hs.bw.empty()) {
            hs.bw = uniform_bandwidth(bounds, settings.bw_default);
        }
        result = run_harmony_search(bounds, hs, cost);
        model.seed = hs.seed;
        model.improvisations = hs.ni;
        model.hms = hs.hms;
        model.dynamic = hs.dynamic;
    }

    model.genome = genome_from_vector(result.best_genome);
    model.scaling = scaling;
    model.selected = settings.selected;
    model.final_fitness = result.best_fitness;
    Calibration cal = calibrate(model.genome, view, mode);
    model.threshold = cal.threshold;
    model.ida_above = cal.ida_above;
    return TrainResult{std::move(model), std::move(result.trace)};
}

namespace {

double model_output(const TrainedModel& model, const CbcSample& sample) {
    std::array<double, 4> inputs{};
    for (std::size_t slot = 0; slot < 4; ++slot) {
        inputs[slot] = model.scaling.scale(slot, sample.value(model.selected[slot]));
    }
    return eval_tree(model.genome, inputs);
}

Label label_for_output(const TrainedModel& model, double output) {
    // Outputs exactly on the threshold go to IDA regardless of orientation.
    bool ida = model.ida_above ? output >= model.threshold : output <= model.threshold;
    return ida ? Label::Ida : Label::Btt;
}

} // namespace

Label predict(const TrainedModel& model, const CbcSample& sample) {
    double out = model_output(model, sample);
    if (!std::isfinite(out)) {
        throw NumericError("degenerate evaluation");
    }
    return label_for_output(model, out);
}

std::vector<Label> predict_batch(const TrainedModel& model, const Cohort& cohort,
                                 ExecMode mode) {
    SampleMatrix inputs;
    inputs.rows = cohort.size();
    inputs.values.reserve(cohort.size() * 4);
    for (const CbcSample& s : cohort.samples) {
        for (std::size_t slot = 0; slot < 4; ++slot) {
            inputs.values.push_back(model.scaling.scale(slot, s.value(model.selected[slot])));
        }
    }
    std::vector<double> outputs(inputs.rows);
    tree_outputs(model.genome, inputs, outputs, mode);
    std::vector<Label> labels;
    labels.reserve(inputs.rows);
    for (double out : outputs) {
        if (!std::isfinite(out)) {
            throw NumericError("degenerate evaluation");
        }
        labels.push_back(label_for_output(model, out));
    }
    return labels;
}

} // namespace anemiadx
