#include "anemiadx/ga.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace anemiadx {

void GaParams::validate(const Bounds& bounds) const {
    if (bounds.empty()) {
        throw std::invalid_argument("bounds must have at least one dimension");
    }
    if (population < 2) throw std::invalid_argument("population must be at least 2");
    if (generations < 1) throw std::invalid_argument("generations must be at least 1");
    if (crossover_rate < 0.0 || crossover_rate > 1.0) {
        throw std::invalid_argument("crossover rate must be in [0,1]");
    }
    if (mutation_rate < 0.0 || mutation_rate > 1.0) {
        throw std::invalid_argument("mutation rate must be in [0,1]");
    }
}

namespace {

struct Individual {
    Genome genome;
    double fitness = 0.0;
};

double sanitize(double f) { return std::isfinite(f) ? f : 0.0; }

void mutate(Genome& g, const Bounds& bounds, double rate, Rng& rng) {
    for (std::size_t j = 0; j < bounds.size(); ++j) {
        if (!(rng.uniform() < rate)) continue;
        const Dim& d = bounds[j];
        if (d.kind == Dim::Kind::Continuous) {
            double sigma = 0.1 * (d.high - d.low);
            g[j] = std::clamp(g[j] + rng.gaussian(0.0, sigma), d.low, d.high);
        } else {
            g[j] = static_cast<double>(rng.uniform_index(d.arity));
        }
    }
}

} // namespace

HsResult run_ga_baseline(const Bounds& bounds, const GaParams& params,
                         const CostFn& cost) {
    params.validate(bounds);
    Rng rng(params.seed);
    const std::size_t pop_size = static_cast<std::size_t>(params.population);
    const std::size_t n = bounds.size();

    std::vector<Individual> pop(pop_size);
    for (Individual& ind : pop) {
        ind.genome = random_genome(bounds, rng);
        ind.fitness = sanitize(cost(ind.genome));
    }

    auto elite_index = [&pop]() {
        std::size_t best = 0;
        for (std::size_t i = 1; i < pop.size(); ++i) {
            if (pop[i].fitness > pop[best].fitness) best = i;
        }
        return best;
    };

    // Size-2 tournament; the first draw wins ties.
    auto select = [&]() -> const Individual& {
        std::size_t a = static_cast<std::size_t>(rng.uniform_index(params.population));
        std::size_t b = static_cast<std::size_t>(rng.uniform_index(params.population));
        return pop[b].fitness > pop[a].fitness ? pop[b] : pop[a];
    };

    Individual best = pop[elite_index()];
    Trace trace;
    trace.reserve(static_cast<std::size_t>(params.generations));

    for (long gen = 1; gen <= params.generations; ++gen) {
        std::vector<Individual> next;
        next.reserve(pop_size);
        next.push_back(pop[elite_index()]); // elitism of 1, carried unchanged

        while (next.size() < pop_size) {
            Genome child1 = select().genome;
            Genome child2 = select().genome;
            if (rng.uniform() < params.crossover_rate) {
                // Cut point between genes, 1..n-1.
                std::size_t point = 1 + static_cast<std::size_t>(
                                            rng.uniform_index(static_cast<int>(n - 1)));
                for (std::size_t j = point; j < n; ++j) {
                    std::swap(child1[j], child2[j]);
                }
            }
            mutate(child1, bounds, params.mutation_rate, rng);
            next.push_back(Individual{std::move(child1), 0.0});
            if (next.size() < pop_size) {
                mutate(child2, bounds, params.mutation_rate, rng);
                next.push_back(Individual{std::move(child2), 0.0});
            }
        }
        for (std::size_t i = 1; i < next.size(); ++i) {
            next[i].fitness = sanitize(cost(next[i].genome));
        }
        pop = std::move(next);

        const Individual& gen_best = pop[elite_index()];
        if (gen_best.fitness > best.fitness) best = gen_best;
        trace.push_back(TraceRow{gen, best.fitness, 0.0, 0.0});
    }

    return HsResult{best.genome, best.fitness, std::move(trace)};
}

} // namespace anemiadx
