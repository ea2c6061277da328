#ifndef ANEMIADX_HARMONY_HPP
#define ANEMIADX_HARMONY_HPP

#include <cstdint>
#include <deque>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "anemiadx/rng.hpp"

namespace anemiadx {

// One genome dimension: a bounded continuous value or a categorical value
// stored as an exact small integer in double form.
struct Dim {
    enum class Kind { Continuous, Categorical };
    Kind kind = Kind::Continuous;
    double low = 0.0;   // continuous only
    double high = 1.0;  // continuous only
    int arity = 0;      // categorical only

    static Dim continuous(double low, double high);
    static Dim categorical(int arity);
};

using Bounds = std::vector<Dim>;
using Genome = std::vector<double>;

// Fitness to maximize. A non-finite return poisons the genome: its fitness
// is recorded as 0.
using CostFn = std::function<double(const Genome&)>;

struct RateBounds {
    double low = 0.0;
    double high = 1.0;
};

struct HsParams {
    int hms = 100;            // harmony memory size
    long ni = 8000;           // number of improvisations
    double hmcr0 = 0.9;       // initial memory consideration rate, in (0,1)
    double par0 = 0.3;        // initial pitch adjustment rate, in (0,1)
    std::vector<double> bw;   // per-dimension bandwidth; categorical entries ignored
    bool dynamic = false;     // enable HMCR/PAR adaptation
    std::uint64_t seed = 0;
    RateBounds hmcr_bounds{0.5, 0.99};
    RateBounds par_bounds{0.01, 0.99};
    // Pitch offset is BW*r with r in [0,1) when false (the literal adjustment
    // rule); r in [-1,1) when true.
    bool symmetric_pitch = false;

    void validate(const Bounds& bounds) const;
};

// Uniform bandwidth helper: bw for every continuous dimension, ignored slots
// for categorical ones.
std::vector<double> uniform_bandwidth(const Bounds& bounds, double bw);

struct MemoryRow {
    Genome genome;
    double fitness = 0.0;
};

// Fitness-sorted population, best first; the last row is always the worst.
// Size is fixed after construction.
class HarmonyMemory {
public:
    explicit HarmonyMemory(std::vector<MemoryRow> rows);

    std::size_t size() const { return rows_.size(); }
    const MemoryRow& row(std::size_t i) const { return rows_[i]; }
    const MemoryRow& best() const { return rows_.front(); }
    const MemoryRow& worst() const { return rows_.back(); }

    // Replaces the worst row when the candidate's fitness strictly exceeds
    // it (ties are rejected) and restores the sort. Returns whether the
    // candidate was accepted.
    bool try_replace_worst(Genome genome, double fitness);

    bool is_sorted() const;

private:
    std::vector<MemoryRow> rows_;
};

// Sliding windows feeding the dynamic HMCR/PAR updates. Each ring keeps the
// last kWindow entries; adaptation consumes a full ring and clears it.
struct DhsState {
    static constexpr std::size_t kWindow = 10;

    std::deque<double> memory_fitness; // improvisations with most dims copied
    std::deque<double> random_fitness; // improvisations with most dims resampled
    std::deque<bool> pitch_success;    // pitch adjustment beat the pre-pitch genome

    void push_fitness(bool memory_considered, double fitness);
    void push_pitch_success(bool improved);
};

// HMCR' = HMCR + (1-HMCR)*(alpha-beta) where alpha/beta are the means of the
// min-max normalized memory/random fitness windows (normalized over the
// pooled 20 values; alpha-beta is 0 when all values coincide). Requires both
// rings full; clears them. Result clamped to `clamp`.
double adapt_hmcr(DhsState& state, double hmcr, RateBounds clamp);

// PAR' = PAR + E*(1-PAR)/100 with E the success percentage of the last
// kWindow pitch adjustments. Requires a full window; clears it. Clamped.
double adapt_par(DhsState& state, double par, RateBounds clamp);

struct TraceRow {
    long iteration = 0;
    double best_fitness = 0.0;
    double hmcr = 0.0;
    double par = 0.0;
};

using Trace = std::vector<TraceRow>;

// Plot-ready CSV with columns iteration,best_fitness,hmcr,par.
void write_trace_csv(const Trace& trace, std::ostream& out);
std::string trace_to_csv(const Trace& trace);

// First iteration whose best fitness reaches `fraction` of the final best.
// Meaningful for positive final fitness; otherwise returns the last
// iteration.
long iterations_to_fraction_of_final(const Trace& trace, double fraction);

// One improvised candidate plus the bookkeeping the dynamic variant needs.
struct Improvised {
    Genome genome;
    Genome pre_pitch;                    // candidate before pitch adjustment
    std::vector<unsigned char> from_memory; // per-dimension copy flag
    bool memory_considered = false;      // strict majority of dims copied
    bool pitched = false;                // at least one dimension adjusted
};

// Builds one candidate from the memory with rates hmcr/par. Per dimension:
// with probability hmcr copy from a uniformly chosen row, otherwise resample
// uniformly; copied continuous values gain BW*r with probability par, the
// categorical dimension steps +-1 modulo its arity. Rates may be 0 or 1 here
// even though configured initial rates must be strictly inside (0,1).
Improvised improvise(const HarmonyMemory& memory, const Bounds& bounds,
                     const HsParams& params, double hmcr, double par, Rng& rng);

// Uniform sample of a full genome (the initialization rule).
Genome random_genome(const Bounds& bounds, Rng& rng);

// The engine. initialize() fills and sorts the memory; each step() improvises
// one candidate, applies the replacement rule, runs the dynamic adaptations
// when enabled, and appends a trace row carrying the post-step rates.
class HarmonySearch {
public:
    HarmonySearch(Bounds bounds, HsParams params, CostFn cost);

    void initialize();
    void step();
    void run(); // initialize + ni steps

    bool initialized() const { return memory_ != nullptr; }
    long iteration() const { return iteration_; }
    const HarmonyMemory& memory() const { return *memory_; }
    const Trace& trace() const { return trace_; }
    const Genome& best_genome() const { return best_genome_; }
    double best_fitness() const { return best_fitness_; }
    double hmcr() const { return hmcr_; }
    double par() const { return par_; }

private:
    double evaluate(const Genome& genome);

    Bounds bounds_;
    HsParams params_;
    CostFn cost_;
    Rng rng_;
    std::unique_ptr<HarmonyMemory> memory_;
    DhsState dhs_;
    Trace trace_;
    Genome best_genome_;
    double best_fitness_ = 0.0;
    double hmcr_ = 0.0;
    double par_ = 0.0;
    long iteration_ = 0;
};

struct HsResult {
    Genome best_genome;
    double best_fitness = 0.0;
    Trace trace;
};

HsResult run_harmony_search(const Bounds& bounds, const HsParams& params,
                            const CostFn& cost);

} // namespace anemiadx

#endif
