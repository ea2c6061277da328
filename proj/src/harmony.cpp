#include "anemiadx/harmony.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "anemiadx/csv_io.hpp"

namespace anemiadx {

Dim Dim::continuous(double low, double high) {
    Dim d;
    d.kind = Kind::Continuous;
    d.low = low;
    d.high = high;
    return d;
}

Dim Dim::categorical(int arity) {
    Dim d;
    d.kind = Kind::Categorical;
    d.arity = arity;
    return d;
}

namespace {

void validate_bounds(const Bounds& bounds) {
    if (bounds.empty()) {
        throw std::invalid_argument("bounds must have at least one dimension");
    }
    for (std::size_t j = 0; j < bounds.size(); ++j) {
        const Dim& d = bounds[j];
        if (d.kind == Dim::Kind::Continuous) {
            if (!(d.low < d.high)) {
                throw std::invalid_argument("dimension " + std::to_string(j) +
                                            ": low bound must be below high bound");
            }
        } else if (d.arity < 2) {
            throw std::invalid_argument("dimension " + std::to_string(j) +
                                        ": categorical arity must be at least 2");
        }
    }
}

bool rate_in_open_unit(double r) { return r > 0.0 && r < 1.0; }

double clamp_rate(double r, RateBounds b) {
    return std::min(b.high, std::max(b.low, r));
}

} // namespace

void HsParams::validate(const Bounds& bounds) const {
    validate_bounds(bounds);
    if (hms < 2) throw std::invalid_argument("hms must be at least 2");
    if (ni < 1) throw std::invalid_argument("ni must be at least 1");
    if (!rate_in_open_unit(hmcr0)) throw std::invalid_argument("hmcr0 must be in (0,1)");
    if (!rate_in_open_unit(par0)) throw std::invalid_argument("par0 must be in (0,1)");
    if (bw.size() != bounds.size()) {
        throw std::invalid_argument("bw must have one entry per dimension");
    }
    for (std::size_t j = 0; j < bounds.size(); ++j) {
        if (bounds[j].kind == Dim::Kind::Continuous && !(bw[j] > 0.0)) {
            throw std::invalid_argument("bw must be positive for continuous dimension " +
                                        std::to_string(j));
        }
    }
    if (!(hmcr_bounds.low <= hmcr_bounds.high) || !(par_bounds.low <= par_bounds.high)) {
        throw std::invalid_argument("rate clamp intervals must be ordered");
    }
}

std::vector<double> uniform_bandwidth(const Bounds& bounds, double bw) {
    return std::vector<double>(bounds.size(), bw);
}

HarmonyMemory::HarmonyMemory(std::vector<MemoryRow> rows) : rows_(std::move(rows)) {
    if (rows_.size() < 2) {
        throw std::invalid_argument("harmony memory needs at least 2 rows");
    }
    std::stable_sort(rows_.begin(), rows_.end(),
                     [](const MemoryRow& a, const MemoryRow& b) {
                         return a.fitness > b.fitness;
                     });
}

bool HarmonyMemory::try_replace_worst(Genome genome, double fitness) {
    if (!(fitness > rows_.back().fitness)) {
        return false;
    }
    rows_.pop_back();
    // First position with strictly smaller fitness; equal-fitness rows keep
    // their seniority, so insertion is deterministic.
    auto pos = std::upper_bound(rows_.begin(), rows_.end(), fitness,
                                [](double f, const MemoryRow& r) { return f > r.fitness; });
    rows_.insert(pos, MemoryRow{std::move(genome), fitness});
    return true;
}

bool HarmonyMemory::is_sorted() const {
    for (std::size_t i = 1; i < rows_.size(); ++i) {
        if (rows_[i - 1].fitness < rows_[i].fitness) return false;
    }
    return true;
}

void DhsState::push_fitness(bool memory_considered, double fitness) {
    auto& ring = memory_considered ? memory_fitness : random_fitness;
    if (ring.size() == kWindow) ring.pop_front();
    ring.push_back(fitness);
}

void DhsState::push_pitch_success(bool improved) {
    if (pitch_success.size() == kWindow) pitch_success.pop_front();
    pitch_success.push_back(improved);
}

double adapt_hmcr(DhsState& state, double hmcr, RateBounds clamp) {
    if (state.memory_fitness.size() != DhsState::kWindow ||
        state.random_fitness.size() != DhsState::kWindow) {
        throw std::logic_error("adapt_hmcr requires both fitness windows full");
    }
    double lo = state.memory_fitness.front();
    double hi = lo;
    for (double v : state.memory_fitness) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    for (double v : state.random_fitness) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    double delta = 0.0; // alpha - beta; stays 0 when all 20 values coincide
    if (hi > lo) {
        double alpha = 0.0;
        double beta = 0.0;
        for (double v : state.memory_fitness) alpha += (v - lo) / (hi - lo);
        for (double v : state.random_fitness) beta += (v - lo) / (hi - lo);
        alpha /= static_cast<double>(DhsState::kWindow);
        beta /= static_cast<double>(DhsState::kWindow);
        delta = alpha - beta;
    }
    state.memory_fitness.clear();
    state.random_fitness.clear();
    return clamp_rate(hmcr + (1.0 - hmcr) * delta, clamp);
}

double adapt_par(DhsState& state, double par, RateBounds clamp) {
    if (state.pitch_success.size() != DhsState::kWindow) {
        throw std::logic_error("adapt_par requires a full pitch window");
    }
    int successes = 0;
    for (bool b : state.pitch_success) {
        if (b) ++successes;
    }
    state.pitch_success.clear();
    double e = 100.0 * static_cast<double>(successes) /
               static_cast<double>(DhsState::kWindow);
    return clamp_rate(par + e * (1.0 - par) / 100.0, clamp);
}

void write_trace_csv(const Trace& trace, std::ostream& out) {
    out << "iteration,best_fitness,hmcr,par\n";
    for (const TraceRow& row : trace) {
        out << row.iteration << ',' << format_double(row.best_fitness) << ','
            << format_double(row.hmcr) << ',' << format_double(row.par) << '\n';
    }
}

std::string trace_to_csv(const Trace& trace) {
    std::ostringstream out;
    write_trace_csv(trace, out);
    return out.str();
}

Genome random_genome(const Bounds& bounds, Rng& rng) {
    Genome g(bounds.size());
    for (std::size_t j = 0; j < bounds.size(); ++j) {
        const Dim& d = bounds[j];
        if (d.kind == Dim::Kind::Continuous) {
            g[j] = d.low + (d.high - d.low) * rng.uniform();
        } else {
            g[j] = static_cast<double>(rng.uniform_index(d.arity));
        }
    }
    return g;
}

Improvised improvise(const HarmonyMemory& memory, const Bounds& bounds,
                     const HsParams& params, double hmcr, double par, Rng& rng) {
    const std::size_t n = bounds.size();
    Improvised out;
    out.genome.resize(n);
    out.from_memory.assign(n, 0);

    std::size_t copied = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (rng.uniform() < hmcr) {
            std::size_t a = static_cast<std::size_t>(
                rng.uniform_index(static_cast<int>(memory.size())));
            out.genome[j] = memory.row(a).genome[j];
            out.from_memory[j] = 1;
            ++copied;
        } else {
            const Dim& d = bounds[j];
            if (d.kind == Dim::Kind::Continuous) {
                out.genome[j] = d.low + (d.high - d.low) * rng.uniform();
            } else {
                out.genome[j] = static_cast<double>(rng.uniform_index(d.arity));
            }
        }
    }
    out.memory_considered = 2 * copied > n;
    out.pre_pitch = out.genome;

    for (std::size_t j = 0; j < n; ++j) {
        if (!out.from_memory[j]) continue;
        if (!(rng.uniform() < par)) continue;
        out.pitched = true;
        const Dim& d = bounds[j];
        if (d.kind == Dim::Kind::Continuous) {
            double r = params.symmetric_pitch ? rng.uniform(-1.0, 1.0) : rng.uniform();
            out.genome[j] += params.bw[j] * r;
        } else {
            int step = rng.uniform() < 0.5 ? -1 : 1;
            int v = static_cast<int>(out.genome[j]);
            out.genome[j] = static_cast<double>(((v + step) % d.arity + d.arity) % d.arity);
        }
    }
    return out;
}

HarmonySearch::HarmonySearch(Bounds bounds, HsParams params, CostFn cost)
    : bounds_(std::move(bounds)),
      params_(std::move(params)),
      cost_(std::move(cost)),
      rng_(params_.seed),
      hmcr_(params_.hmcr0),
      par_(params_.par0) {
    params_.validate(bounds_);
}

double HarmonySearch::evaluate(const Genome& genome) {
    double f = cost_(genome);
    return std::isfinite(f) ? f : 0.0;
}

void HarmonySearch::initialize() {
    std::vector<MemoryRow> rows;
    rows.reserve(static_cast<std::size_t>(params_.hms));
    for (int i = 0; i < params_.hms; ++i) {
        Genome g = random_genome(bounds_, rng_);
        double f = evaluate(g);
        rows.push_back(MemoryRow{std::move(g), f});
    }
    memory_ = std::make_unique<HarmonyMemory>(std::move(rows));
    best_genome_ = memory_->best().genome;
    best_fitness_ = memory_->best().fitness;
}

void HarmonySearch::step() {
    if (!memory_) {
        throw std::logic_error("step() before initialize()");
    }
    ++iteration_;

    Improvised imp = improvise(*memory_, bounds_, params_, hmcr_, par_, rng_);
    double f = evaluate(imp.genome);

    if (f > best_fitness_) {
        best_fitness_ = f;
        best_genome_ = imp.genome;
    }
    memory_->try_replace_worst(std::move(imp.genome), f);

    if (params_.dynamic) {
        dhs_.push_fitness(imp.memory_considered, f);
        if (imp.pitched) {
            double pre = evaluate(imp.pre_pitch);
            dhs_.push_pitch_success(f > pre);
            if (dhs_.pitch_success.size() == DhsState::kWindow) {
                par_ = adapt_par(dhs_, par_, params_.par_bounds);
            }
        }
        if (iteration_ % 10 == 0 &&
            dhs_.memory_fitness.size() == DhsState::kWindow &&
            dhs_.random_fitness.size() == DhsState::kWindow) {
            hmcr_ = adapt_hmcr(dhs_, hmcr_, params_.hmcr_bounds);
        }
    }

    trace_.push_back(TraceRow{iteration_, best_fitness_, hmcr_, par_});
}

void HarmonySearch::run() {
    initialize();
    while (iteration_ < params_.ni) {
        step();
    }
}

HsResult run_harmony_search(const Bounds& bounds, const HsParams& params,
                            const CostFn& cost) {
    HarmonySearch hs(bounds, params, cost);
    hs.run();
    return HsResult{hs.best_genome(), hs.best_fitness(), hs.trace()};
}

} // namespace anemiadx
